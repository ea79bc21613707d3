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

#include "signedva/coloring.h"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "union_find.h"

namespace signedva {

bool canonical_less(int a, int b) {
  const int abs_a = std::abs(a);
  const int abs_b = std::abs(b);
  if (abs_a != abs_b) return abs_a < abs_b;
  return a > b;
}

void sort_canonical(std::vector<int>& values) {
  std::sort(values.begin(), values.end(), canonical_less);
}

ColorDomain::ColorDomain(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidColoring,
                "color domain size must be positive, got " + std::to_string(n));
  }
  if (has_zero()) values_.push_back(0);
  for (int k = 1; k <= max_class(); ++k) {
    values_.push_back(k);
    values_.push_back(-k);
  }
}

ColorDomain ColorDomain::smallest_containing(std::span<const int> values) {
  int k = 0;
  bool zero = false;
  for (int v : values) {
    k = std::max(k, std::abs(v));
    zero = zero || v == 0;
  }
  if (k == 0) return ColorDomain(1);
  return ColorDomain(zero ? 2 * k + 1 : 2 * k);
}

bool ColorDomain::contains(int value) const {
  if (value == 0) return has_zero();
  return std::abs(value) <= max_class();
}

Coloring::Coloring(ColorDomain domain, std::vector<int> colors)
    : domain_(std::move(domain)), colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (!domain_.contains(colors_[v])) {
      throw Error(ErrorCode::kInvalidColoring,
                  "color " + std::to_string(colors_[v]) + " of vertex " +
                      std::to_string(v) + " is outside M_" +
                      std::to_string(domain_.n()));
    }
  }
}

Coloring::Coloring(std::vector<int> colors)
    : domain_(ColorDomain::smallest_containing(colors)),
      colors_(std::move(colors)) {}

namespace {

void require_total(const SignedGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidColoring,
                "coloring has " + std::to_string(c.size()) +
                    " entries for a graph with " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

ClassSubgraph class_subgraph(const SignedGraph& g, const Coloring& c, int i) {
  require_total(g, c);
  const int cls = std::abs(i);
  if (!c.domain().contains(cls)) {
    throw Error(ErrorCode::kInvalidClass,
                "class " + std::to_string(i) + " is not representable in M_" +
                    std::to_string(c.domain().n()));
  }
  ClassSubgraph out;
  out.class_value = cls;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::abs(c[v]) == cls) out.vertices.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (std::abs(c[e.u]) == cls && edge_in_class(c[e.u], c[e.v], e.sign)) {
      out.edges.emplace_back(e.u, e.v);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> find_cycle(
    std::span<const Vertex> vertices, std::span<const UnsignedEdge> edges) {
  std::unordered_map<Vertex, int> local;
  for (Vertex v : vertices) local.emplace(v, static_cast<int>(local.size()));
  const int n = static_cast<int>(local.size());
  auto index = [&](Vertex v) {
    const auto it = local.find(v);
    if (it == local.end()) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge endpoint " + std::to_string(v) + " not in vertex set");
    }
    return it->second;
  };

  internal::RollbackUnionFind uf(n);
  std::vector<std::vector<int>> forest(n);
  std::vector<Vertex> host(n);
  for (const auto& [v, i] : local) host[i] = v;

  for (const auto& [hu, hv] : edges) {
    const int u = index(hu);
    const int v = index(hv);
    if (uf.unite(u, v)) {
      forest[u].push_back(v);
      forest[v].push_back(u);
      continue;
    }
    // Close the cycle with the tree path v -> u.
    std::vector<int> parent(n, -1);
    std::queue<int> queue;
    parent[u] = u;
    queue.push(u);
    while (!queue.empty() && parent[v] == -1) {
      const int x = queue.front();
      queue.pop();
      for (int y : forest[x]) {
        if (parent[y] == -1) {
          parent[y] = x;
          queue.push(y);
        }
      }
    }
    std::vector<Vertex> cycle;
    for (int x = v; x != u; x = parent[x]) cycle.push_back(host[x]);
    cycle.push_back(host[u]);
    return cycle;
  }
  return std::nullopt;
}

bool is_forest(std::span<const Vertex> vertices,
               std::span<const UnsignedEdge> edges) {
  return !find_cycle(vertices, edges).has_value();
}

bool is_signed_tree_coloring(const SignedGraph& g, const Coloring& c) {
  require_total(g, c);
  // Class subgraphs are vertex-disjoint, so one union-find over all of them
  // detects a cycle in any class.
  internal::RollbackUnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (edge_in_class(c[e.u], c[e.v], e.sign) && !uf.unite(e.u, e.v)) {
      return false;
    }
  }
  return true;
}

bool is_proper_signed_coloring(const SignedGraph& g, const Coloring& c) {
  require_total(g, c);
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return edge_in_class(c[e.u], c[e.v], e.sign);
  });
}

bool va_upper_check(const SignedGraph& g, const Coloring& c, int n) {
  if (c.size() != g.vertex_count()) return false;
  const ColorDomain domain(n);
  const auto colors = c.colors();
  if (!std::all_of(colors.begin(), colors.end(),
                   [&](int x) { return domain.contains(x); })) {
    return false;
  }
  return is_signed_tree_coloring(g, c);
}

std::vector<ClassReport> class_reports(const SignedGraph& g,
                                       const Coloring& c) {
  require_total(g, c);
  std::set<int> used;
  for (int x : c.colors()) used.insert(std::abs(x));
  std::vector<ClassReport> out;
  for (int cls : used) {
    ClassReport report{class_subgraph(g, c, cls), std::nullopt};
    report.cycle = find_cycle(report.subgraph.vertices, report.subgraph.edges);
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace signedva
