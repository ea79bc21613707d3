// Copyright 2026 The signedva Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "signedva/oracle.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "union_find.h"

namespace signedva {

namespace {

constexpr double kMaxUnprunedColorings = 1e8;

struct EarlierNeighbor {
  Vertex vertex;
  int sign;
};

std::vector<std::vector<EarlierNeighbor>> earlier_neighbors(
    const SignedGraph& g) {
  std::vector<std::vector<EarlierNeighbor>> out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const auto [lo, hi] = std::minmax(e.u, e.v);
    out[hi].push_back({lo, e.sign});
  }
  return out;
}

class PrunedSearch {
 public:
  PrunedSearch(const SignedGraph& g, const ColorDomain& domain,
               bool fix_first_sign, std::int64_t& checked)
      : earlier_(earlier_neighbors(g)),
        values_(domain.values()),
        fix_first_sign_(fix_first_sign),
        colors_(g.vertex_count(), 0),
        forest_(g.vertex_count()),
        checked_(checked) {}

  bool run() { return extend(0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool extend(Vertex v) {
    if (v == static_cast<Vertex>(colors_.size())) return true;
    for (int color : values_) {
      if (v == 0 && fix_first_sign_ && color < 0) continue;
      ++checked_;
      const int mark = forest_.mark();
      bool acyclic = true;
      for (const EarlierNeighbor& w : earlier_[v]) {
        if (edge_in_class(color, colors_[w.vertex], w.sign) &&
            !forest_.unite(v, w.vertex)) {
          acyclic = false;
          break;
        }
      }
      if (acyclic) {
        colors_[v] = color;
        if (extend(v + 1)) return true;
      }
      forest_.rollback(mark);
    }
    return false;
  }

  std::vector<std::vector<EarlierNeighbor>> earlier_;
  std::vector<int> values_;
  bool fix_first_sign_;
  std::vector<int> colors_;
  internal::RollbackUnionFind forest_;
  std::int64_t& checked_;
};

// Odometer over every coloring; each one goes through the full checker.
std::optional<std::vector<int>> exhaustive_search(const SignedGraph& g,
                                                  const ColorDomain& domain,
                                                  bool fix_first_sign,
                                                  std::int64_t& checked) {
  const int n = g.vertex_count();
  const auto& values = domain.values();
  const int base = static_cast<int>(values.size());
  double total = 1;
  for (int v = 0; v < n; ++v) total *= base;
  if (total > kMaxUnprunedColorings) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "unpruned search over " + std::to_string(base) + "^" +
                    std::to_string(n) + " colorings is too large");
  }
  std::vector<int> digit(n, 0);
  std::vector<int> colors(n);
  while (true) {
    bool skip = false;
    for (int v = 0; v < n; ++v) colors[v] = values[digit[v]];
    if (fix_first_sign && n > 0 && colors[0] < 0) skip = true;
    if (!skip) {
      ++checked;
      if (is_signed_tree_coloring(g, Coloring(domain, colors))) return colors;
    }
    int pos = n - 1;
    while (pos >= 0 && ++digit[pos] == base) digit[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace

OracleResult oracle_va(const SignedGraph& g, int n_max,
                       const OracleOptions& options) {
  if (g.vertex_count() > kOracleMaxVertices) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "oracle accepts at most " + std::to_string(kOracleMaxVertices) +
                    " vertices, got " + std::to_string(g.vertex_count()));
  }
  if (n_max < 1 || n_max > kOracleMaxColors) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "n_max must lie in 1.." + std::to_string(kOracleMaxColors));
  }
  OracleResult result;
  for (int n = 1; n <= n_max; ++n) {
    const ColorDomain domain(n);
    std::optional<std::vector<int>> found;
    if (options.prune) {
      PrunedSearch search(g, domain, options.fix_first_sign,
                          result.colorings_checked);
      if (search.run()) found = search.colors();
    } else {
      found = exhaustive_search(g, domain, options.fix_first_sign,
                                result.colorings_checked);
    }
    if (found) {
      result.va = n;
      result.witness = Coloring(domain, std::move(*found));
      return result;
    }
  }
  throw Error(ErrorCode::kExhausted,
              "no signed tree-coloring with n <= " + std::to_string(n_max));
}

int oracle_va_unsigned(int vertex_count, std::span<const UnsignedEdge> edges,
                       int k_max) {
  if (vertex_count > kOracleMaxVertices) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "oracle accepts at most " + std::to_string(kOracleMaxVertices) +
                    " vertices");
  }
  if (k_max < 1) {
    throw Error(ErrorCode::kOracleCapExceeded, "k_max must be positive");
  }
  if (vertex_count == 0) return 1;
  const SignedGraph g = SignedGraph::all_positive(vertex_count, edges);
  std::vector<std::vector<Vertex>> earlier(vertex_count);
  for (const Edge& e : g.edges()) {
    const auto [lo, hi] = std::minmax(e.u, e.v);
    earlier[hi].push_back(lo);
  }
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> part(vertex_count, -1);
    internal::RollbackUnionFind forest(vertex_count);
    // Parts are interchangeable: vertex v opens at most one new part.
    std::function<bool(Vertex, int)> extend = [&](Vertex v, int used) {
      if (v == vertex_count) return true;
      for (int p = 0; p < std::min(k, used + 1); ++p) {
        const int mark = forest.mark();
        bool acyclic = true;
        for (Vertex w : earlier[v]) {
          if (part[w] == p && !forest.unite(v, w)) {
            acyclic = false;
            break;
          }
        }
        if (acyclic) {
          part[v] = p;
          if (extend(v + 1, std::max(used, p + 1))) return true;
          part[v] = -1;
        }
        forest.rollback(mark);
      }
      return false;
    };
    if (extend(0, 0)) return k;
  }
  throw Error(ErrorCode::kExhausted,
              "no partition into " + std::to_string(k_max) + " forests");
}

}  // namespace signedva
