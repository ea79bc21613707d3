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

#include "signedva/list_coloring.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "signedva/switching.h"
#include "union_find.h"

namespace signedva {

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists) {
  lists_.reserve(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    lists_.emplace_back();
    set(static_cast<Vertex>(v), std::move(lists[v]));
  }
}

ListAssignment ListAssignment::uniform(int vertex_count,
                                       std::span<const int> values) {
  return ListAssignment(std::vector<std::vector<int>>(
      vertex_count, std::vector<int>(values.begin(), values.end())));
}

void ListAssignment::set(Vertex v, std::vector<int> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidLists,
                "empty list at vertex " + std::to_string(v));
  }
  sort_canonical(values);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  lists_.at(v) = std::move(values);
}

void ListAssignment::remove(Vertex v, int value) {
  auto& list = lists_.at(v);
  list.erase(std::remove(list.begin(), list.end(), value), list.end());
}

bool ListAssignment::contains(Vertex v, int value) const {
  const auto& list = lists_.at(v);
  return std::find(list.begin(), list.end(), value) != list.end();
}

namespace {

std::string vertex_name(Vertex v) { return std::to_string(v); }

// Colors instances of a host near-triangulation given as (vertex mask, outer
// cycle) pairs. Sub-instances share at most their pinned pair, so one list
// assignment and one color vector are mutated in place.
class NearTriangulationColorer {
 public:
  struct Task {
    std::vector<char> alive;
    std::vector<Vertex> outer;
  };

  NearTriangulationColorer(const SignedGraph& g, const RotationSystem& r,
                           ListAssignment& lists,
                           std::vector<std::optional<int>>& colors,
                           const SubinstanceObserver& observer)
      : g_(g), r_(r), lists_(lists), colors_(colors), observer_(observer) {}

  void push(Task task) { stack_.push_back(std::move(task)); }

  void run() {
    while (!stack_.empty()) {
      Task task = std::move(stack_.back());
      stack_.pop_back();
      solve(std::move(task));
    }
  }

  std::vector<Vertex> restricted_rotation(Vertex v,
                                          const std::vector<char>& alive) const {
    std::vector<Vertex> out;
    for (Vertex w : r_.rotation[v]) {
      if (alive[w]) out.push_back(w);
    }
    return out;
  }

 private:
  void solve(Task task) {
    while (true) {
      if (observer_) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
          if (task.alive[v]) members.push_back(v);
        }
        observer_(members, task.outer);
      }
      pin(task.outer[0]);
      pin(task.outer[1]);
      if (task.outer.size() == 2) {
        const auto count = std::count(task.alive.begin(), task.alive.end(), 1);
        if (count != 2) {
          throw Error(ErrorCode::kDefect,
                      "outer cycle collapsed to an edge with " +
                          std::to_string(count) + " vertices left");
        }
        return;
      }
      if (const auto chord = find_chord(task.outer, g_)) {
        task = split(std::move(task), chord->first, chord->second);
      } else {
        remove_ear(task);
      }
    }
  }

  void pin(Vertex v) {
    if (colors_[v]) lists_.pin(v, *colors_[v]);
    if (lists_.size_of(v) != 1) {
      throw Error(ErrorCode::kDefect,
                  "pinned vertex " + vertex_name(v) + " has " +
                      std::to_string(lists_.size_of(v)) + " colors");
    }
    colors_[v] = lists_[v][0];
  }

  // Queues the side without v_1 v_2 and returns the side with it.
  Task split(Task task, int i, int j) {
    const auto& outer = task.outer;
    const int n = static_cast<int>(outer.size());
    const Vertex vi = outer[i];
    const Vertex vj = outer[j];

    // Strict side of the path v_{i+1} .. v_{j-1}.
    std::vector<char> strict(g_.vertex_count(), 0);
    std::vector<Vertex> stack{outer[i + 1]};
    strict[outer[i + 1]] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g_.neighbors(v)) {
        const Vertex w = nb.vertex;
        if (!task.alive[w] || strict[w] || w == vi || w == vj) continue;
        strict[w] = 1;
        stack.push_back(w);
      }
    }
    for (int k = 0; k < n; ++k) {
      if ((k <= i || k >= j) && strict[outer[k]]) {
        throw Error(ErrorCode::kNotNearTriangulation,
                    "chord " + vertex_name(vi) + "-" + vertex_name(vj) +
                        " does not separate the instance");
      }
    }

    Task inside{std::vector<char>(g_.vertex_count(), 0), {}};
    Task outside{task.alive, {}};
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (strict[v]) {
        inside.alive[v] = 1;
        outside.alive[v] = 0;
      }
    }
    inside.alive[vi] = 1;
    inside.alive[vj] = 1;

    if (i == 0) {
      inside.outer.assign(outer.begin(), outer.begin() + j + 1);
      outside.outer.push_back(outer[0]);
      outside.outer.insert(outside.outer.end(), outer.begin() + j, outer.end());
      push(std::move(outside));
      return inside;
    }
    outside.outer.assign(outer.begin(), outer.begin() + i + 1);
    outside.outer.insert(outside.outer.end(), outer.begin() + j, outer.end());
    inside.outer.push_back(vj);
    inside.outer.insert(inside.outer.end(), outer.begin() + i,
                        outer.begin() + j);
    push(std::move(inside));
    return outside;
  }

  void remove_ear(Task& task) {
    auto& outer = task.outer;
    const Vertex vn = outer.back();
    const Vertex v1 = outer.front();
    const auto around = ear_neighbors(vn, restricted_rotation(vn, task.alive),
                                      outer);
    const int forbidden = *colors_[v1] * g_.sign(v1, vn);
    const auto candidates = lists_[vn];
    const auto pick = std::find_if(candidates.begin(), candidates.end(),
                                   [&](int x) { return x != forbidden; });
    if (pick == candidates.end()) {
      throw Error(ErrorCode::kDefect,
                  "no admissible color left at vertex " + vertex_name(vn));
    }
    const int gamma = *pick;
    colors_[vn] = gamma;

    for (std::size_t k = 1; k + 1 < around.size(); ++k) {
      const Vertex u = around[k];
      lists_.remove(u, gamma * g_.sign(vn, u));
      if (lists_.size_of(u) < 2) {
        throw Error(ErrorCode::kDefect,
                    "list of vertex " + vertex_name(u) +
                        " dropped below two colors");
      }
    }
    task.alive[vn] = 0;
    outer.pop_back();
    outer.insert(outer.end(), around.rbegin() + 1, around.rend() - 1);
  }

  const SignedGraph& g_;
  const RotationSystem& r_;
  ListAssignment& lists_;
  std::vector<std::optional<int>>& colors_;
  const SubinstanceObserver& observer_;
  std::vector<Task> stack_;
};

void require_near_triangulation(const NearTriangulation& nt) {
  const auto result = validate_near_triangulation(nt.graph, nt.embedding);
  if (!result) {
    throw Error(ErrorCode::kNotNearTriangulation, result.reason,
                result.offending_face);
  }
}

void require_list_count(const SignedGraph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidLists,
                "list assignment covers " +
                    std::to_string(lists.vertex_count()) + " vertices, graph has " +
                    std::to_string(g.vertex_count()));
  }
}

void require_list_size(const ListAssignment& lists, Vertex v, int at_least,
                       std::string_view role) {
  if (lists.size_of(v) < at_least) {
    throw Error(ErrorCode::kInvalidLists,
                std::string(role) + " vertex " + vertex_name(v) + " needs " +
                    std::to_string(at_least) + " colors, has " +
                    std::to_string(lists.size_of(v)));
  }
}

// Final certificate: every vertex colored from its list, classes acyclic.
Coloring certify(const SignedGraph& g, const ListAssignment& original,
                 const std::vector<std::optional<int>>& colors) {
  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!colors[v]) {
      throw Error(ErrorCode::kDefect, "vertex " + vertex_name(v) + " left uncolored");
    }
    if (!original.contains(v, *colors[v])) {
      throw Error(ErrorCode::kDefect,
                  "vertex " + vertex_name(v) + " colored outside its list");
    }
    out[v] = *colors[v];
  }
  Coloring c(std::move(out));
  if (!is_signed_tree_coloring(g, c)) {
    throw Error(ErrorCode::kDefect, "constructed coloring has a cyclic class");
  }
  return c;
}

}  // namespace

Coloring tree_color_near_triangulation(const NearTriangulation& nt,
                                       const ListAssignment& lists,
                                       const ListColoringOptions& options) {
  const SignedGraph& g = nt.graph;
  require_balanced(g);
  require_near_triangulation(nt);
  require_list_count(g, lists);

  const auto& outer = nt.embedding.outer_face;
  std::vector<char> on_outer(g.vertex_count(), 0);
  for (Vertex v : outer) on_outer[v] = 1;
  for (std::size_t k = 0; k < outer.size(); ++k) {
    if (k < 2 && lists.size_of(outer[k]) != 1) {
      throw Error(ErrorCode::kInvalidLists,
                  "pinned outer vertex " + vertex_name(outer[k]) +
                      " needs a single color");
    }
    if (k >= 2) require_list_size(lists, outer[k], 2, "outer");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!on_outer[v]) require_list_size(lists, v, 3, "interior");
  }

  ListAssignment working = lists;
  std::vector<std::optional<int>> colors(g.vertex_count());
  NearTriangulationColorer colorer(g, nt.embedding, working, colors,
                                   options.on_subinstance);
  colorer.push({std::vector<char>(g.vertex_count(), 1), outer});
  colorer.run();
  return certify(g, lists, colors);
}

bool triangle_precolor_ok(std::array<int, 3> signs, std::array<int, 3> colors) {
  const Edge edges[] = {{0, 1, signs[0]}, {1, 2, signs[1]}, {2, 0, signs[2]}};
  const SignedGraph triangle(3, edges);
  return is_signed_tree_coloring(
      triangle, Coloring(std::vector<int>(colors.begin(), colors.end())));
}

Coloring tree_color_triangle_rooted(const NearTriangulation& nt,
                                    std::array<Vertex, 3> triangle,
                                    std::array<int, 3> precolor,
                                    const ListAssignment& lists) {
  const SignedGraph& g = nt.graph;
  require_balanced(g);
  require_near_triangulation(nt);
  require_list_count(g, lists);
  const auto [x, y, z] = triangle;
  for (Vertex v : triangle) g.check_vertex(v);
  if (x == y || y == z || x == z || !g.has_edge(x, y) || !g.has_edge(y, z) ||
      !g.has_edge(z, x)) {
    throw Error(ErrorCode::kNotNearTriangulation,
                "vertices do not form a triangle of the graph",
                {x, y, z});
  }
  if (!triangle_precolor_ok({g.sign(x, y), g.sign(y, z), g.sign(z, x)},
                            precolor)) {
    throw Error(ErrorCode::kPrecolorInvalid,
                "the precolored triangle is a cycle of one class", {x, y, z});
  }
  std::vector<char> in_triangle(g.vertex_count(), 0);
  for (Vertex v : triangle) in_triangle[v] = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_triangle[v]) require_list_size(lists, v, 3, "non-triangle");
  }

  ListAssignment working = lists;
  working.pin(x, precolor[0]);
  working.pin(y, precolor[1]);
  working.pin(z, precolor[2]);
  std::vector<std::optional<int>> colors(g.vertex_count());
  colors[x] = precolor[0];
  colors[y] = precolor[1];
  colors[z] = precolor[2];

  const SubinstanceObserver no_observer;
  NearTriangulationColorer colorer(g, nt.embedding, working, colors,
                                   no_observer);

  // Each component off the triangle, together with the triangle, is a
  // near-triangulation with the triangle as its outer face.
  std::vector<char> seen = in_triangle;
  const std::vector<Vertex> face{x, y, z};
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<char> alive = in_triangle;
    std::vector<Vertex> stack{s};
    std::vector<Vertex> members{x, y, z};
    seen[s] = alive[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = alive[nb.vertex] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
    const PlaneSubgraph part = restrict_embedding(g, nt.embedding, members, face);
    const auto valid = validate_near_triangulation(part.graph.graph, part.embedding);
    if (!valid) {
      throw Error(ErrorCode::kNotNearTriangulation,
                  "the triangle must bound a triangulated region on each side "
                  "(make it the outer face or pass a triangulation): " +
                      valid.reason);
    }

    const int gamma = precolor[2];
    const auto around =
        ear_neighbors(z, colorer.restricted_rotation(z, alive), face);
    for (std::size_t k = 1; k + 1 < around.size(); ++k) {
      working.remove(around[k], gamma * g.sign(z, around[k]));
    }
    alive[z] = 0;
    std::vector<Vertex> outer{x, y};
    outer.insert(outer.end(), around.rbegin() + 1, around.rend() - 1);
    colorer.push({std::move(alive), std::move(outer)});
    colorer.run();
  }
  ListAssignment allowed = lists;
  allowed.pin(x, precolor[0]);
  allowed.pin(y, precolor[1]);
  allowed.pin(z, precolor[2]);
  return certify(g, allowed, colors);
}

SignedGraph canonical_wagner_graph() {
  SignedGraph w(kWagnerOrder);
  for (int k = 0; k < kWagnerOrder; ++k) w.add_edge(k, (k + 1) % kWagnerOrder, kPositive);
  for (int k = 0; k < kWagnerOrder / 2; ++k) w.add_edge(k, k + 4, kPositive);
  return w;
}

bool is_wagner_edge(int a, int b) {
  const int d = ((b - a) % kWagnerOrder + kWagnerOrder) % kWagnerOrder;
  return d == 1 || d == 7 || d == 4;
}

std::optional<WagnerLabeling> find_wagner_labeling(const SignedGraph& g) {
  if (g.vertex_count() != kWagnerOrder || g.edge_count() != 12) {
    return std::nullopt;
  }
  for (Vertex v = 0; v < kWagnerOrder; ++v) {
    if (g.degree(v) != 3) return std::nullopt;
  }
  WagnerLabeling map{};
  std::array<char, kWagnerOrder> used{};
  // Labels are assigned in order 0..7; every pair is checked once both ends
  // are mapped, so a complete assignment is an isomorphism.
  std::function<bool(int)> extend = [&](int label) {
    if (label == kWagnerOrder) return true;
    for (Vertex v = 0; v < kWagnerOrder; ++v) {
      if (used[v]) continue;
      bool consistent = true;
      for (int prior = 0; prior < label && consistent; ++prior) {
        consistent = is_wagner_edge(prior, label) == g.has_edge(map[prior], v);
      }
      if (!consistent) continue;
      used[v] = 1;
      map[label] = v;
      if (extend(label + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

Coloring tree_color_wagner(const SignedGraph& w, const WagnerPin& pin,
                           const ListAssignment& lists,
                           std::optional<WagnerLabeling> labeling) {
  if (!labeling) {
    labeling.emplace();
    std::iota(labeling->begin(), labeling->end(), 0);
  }
  const WagnerLabeling& map = *labeling;
  bool wagner = w.vertex_count() == kWagnerOrder && w.edge_count() == 12;
  for (int a = 0; a < kWagnerOrder && wagner; ++a) {
    if (map[a] < 0 || map[a] >= w.vertex_count()) {
      wagner = false;
      break;
    }
    for (int b = a + 1; b < kWagnerOrder && wagner; ++b) {
      wagner = is_wagner_edge(a, b) == w.has_edge(map[a], map[b]);
    }
  }
  if (!wagner) {
    throw Error(ErrorCode::kNotWagner,
                "graph is not the Wagner graph under the given labeling");
  }
  const auto in_range = [](int k) { return k >= 0 && k < kWagnerOrder; };
  if (!in_range(pin.first) || !in_range(pin.second) ||
      !is_wagner_edge(pin.first, pin.second)) {
    throw Error(ErrorCode::kBadPin,
                "pinned labels " + std::to_string(pin.first) + "," +
                    std::to_string(pin.second) + " are not a Wagner edge");
  }
  require_list_count(w, lists);

  // Greedy order: walk the 8-cycle away from a pinned cycle edge, or sweep
  // the remaining labels for a pinned diagonal.
  std::vector<int> order;
  const int d = ((pin.second - pin.first) % kWagnerOrder + kWagnerOrder) % kWagnerOrder;
  if (d == 1 || d == 7) {
    const int step = d == 1 ? 1 : kWagnerOrder - 1;
    for (int m = 1; m <= 6; ++m) order.push_back((pin.second + m * step) % kWagnerOrder);
  } else {
    for (int m = 1; m < kWagnerOrder; ++m) {
      const int label = (pin.first + m) % kWagnerOrder;
      if (label != pin.second) order.push_back(label);
    }
  }
  for (int label : order) {
    if (lists.size_of(map[label]) < 3) {
      throw Error(ErrorCode::kListTooSmall,
                  "vertex " + vertex_name(map[label]) +
                      " needs at least 3 colors");
    }
  }

  std::vector<int> colors(kWagnerOrder, 0);
  std::vector<char> colored(kWagnerOrder, 0);
  internal::RollbackUnionFind forest(kWagnerOrder);
  // Adds v's class edges to already colored vertices; false on a cycle.
  const auto attach = [&](Vertex v, int color) {
    for (const Neighbor& nb : w.neighbors(v)) {
      if (colored[nb.vertex] &&
          edge_in_class(color, colors[nb.vertex], w.edge(nb.edge).sign) &&
          !forest.unite(v, nb.vertex)) {
        return false;
      }
    }
    return true;
  };
  const Vertex first = map[pin.first];
  const Vertex second = map[pin.second];
  colors[first] = pin.alpha;
  colored[first] = 1;
  colors[second] = pin.beta;
  attach(second, pin.beta);
  colored[second] = 1;

  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) return true;
    const Vertex v = map[order[k]];
    for (int color : lists[v]) {
      const int mark = forest.mark();
      if (attach(v, color)) {
        colors[v] = color;
        colored[v] = 1;
        if (extend(k + 1)) return true;
        colored[v] = 0;
      }
      forest.rollback(mark);
    }
    return false;
  };
  if (!extend(0)) {
    throw Error(ErrorCode::kDefect, "Wagner coloring search failed");
  }
  Coloring c(colors);
  if (!is_signed_tree_coloring(w, c)) {
    throw Error(ErrorCode::kDefect, "Wagner coloring has a cyclic class");
  }
  return c;
}

LabeledColoring combine_colorings(const LabeledColoring& a,
                                  const LabeledColoring& b) {
  for (const LabeledColoring* part : {&a, &b}) {
    const int n = part->graph.graph.vertex_count();
    if (static_cast<int>(part->graph.labels.size()) != n ||
        static_cast<int>(part->colors.size()) != n) {
      throw Error(ErrorCode::kInvalidColoring,
                  "labels and colors must cover every vertex");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> shared;  // (local in a, local in b)
  for (Vertex la = 0; la < static_cast<int>(a.graph.labels.size()); ++la) {
    if (const auto lb = b.graph.local_of(a.graph.labels[la])) {
      shared.emplace_back(la, *lb);
    }
  }
  if (shared.size() != 2 && shared.size() != 3) {
    throw Error(ErrorCode::kSharedCliqueMismatch,
                "graphs share " + std::to_string(shared.size()) +
                    " vertices; expected a K2 or K3");
  }
  for (std::size_t p = 0; p < shared.size(); ++p) {
    for (std::size_t q = p + 1; q < shared.size(); ++q) {
      const auto ea = a.graph.graph.find_edge(shared[p].first, shared[q].first);
      const auto eb = b.graph.graph.find_edge(shared[p].second, shared[q].second);
      if (!ea || !eb ||
          a.graph.graph.edge(*ea).sign != b.graph.graph.edge(*eb).sign) {
        throw Error(ErrorCode::kSharedCliqueMismatch,
                    "shared vertices " +
                        vertex_name(a.graph.labels[shared[p].first]) + "," +
                        vertex_name(a.graph.labels[shared[q].first]) +
                        " are not joined by an equally signed edge in both");
      }
    }
  }
  for (const auto& [la, lb] : shared) {
    if (a.colors[la] != b.colors[lb]) {
      throw Error(ErrorCode::kColoringsDisagree,
                  "vertex " + vertex_name(a.graph.labels[la]) + " colored " +
                      std::to_string(a.colors[la]) + " and " +
                      std::to_string(b.colors[lb]));
    }
  }
  for (const LabeledColoring* part : {&a, &b}) {
    require_balanced(part->graph.graph);
    if (!is_signed_tree_coloring(part->graph.graph, Coloring(part->colors))) {
      throw Error(ErrorCode::kInvalidColoring,
                  "an input coloring is not a signed tree-coloring");
    }
  }

  LabeledColoring out;
  out.graph.labels = a.graph.labels;
  out.colors = a.colors;
  std::vector<Vertex> local_b(b.graph.labels.size(), -1);
  for (const auto& [la, lb] : shared) local_b[lb] = la;
  for (Vertex lb = 0; lb < static_cast<int>(b.graph.labels.size()); ++lb) {
    if (local_b[lb] >= 0) continue;
    local_b[lb] = static_cast<Vertex>(out.graph.labels.size());
    out.graph.labels.push_back(b.graph.labels[lb]);
    out.colors.push_back(b.colors[lb]);
  }
  out.graph.graph = SignedGraph(static_cast<int>(out.graph.labels.size()));
  for (const Edge& e : a.graph.graph.edges()) out.graph.graph.add_edge(e.u, e.v, e.sign);
  for (const Edge& e : b.graph.graph.edges()) {
    const Vertex u = local_b[e.u];
    const Vertex v = local_b[e.v];
    if (!out.graph.graph.has_edge(u, v)) out.graph.graph.add_edge(u, v, e.sign);
  }
  if (!is_signed_tree_coloring(out.graph.graph, Coloring(out.colors))) {
    throw Error(ErrorCode::kDefect, "combined coloring has a cyclic class");
  }
  return out;
}

}  // namespace signedva
