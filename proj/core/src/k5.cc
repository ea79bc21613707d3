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

#include "signedva/k5.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "signedva/switching.h"

namespace signedva {

namespace {

// Components of g - removed, or a single component when nothing separates.
std::vector<std::vector<Vertex>> components_without(
    const SignedGraph& g, const std::vector<char>& removed) {
  std::vector<char> seen = removed;
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
  }
  return out;
}

struct Separation {
  std::vector<Vertex> separator;
  std::vector<std::vector<Vertex>> components;
};

std::optional<Separation> find_clique_separator(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  const auto try_set = [&](std::vector<Vertex> s) -> std::optional<Separation> {
    for (Vertex v : s) removed[v] = 1;
    auto comps = components_without(g, removed);
    for (Vertex v : s) removed[v] = 0;
    if (comps.size() < 2) return std::nullopt;
    return Separation{std::move(s), std::move(comps)};
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      if (auto sep = try_set({u, v})) return sep;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        if (auto sep = try_set({u, v, w})) return sep;
      }
    }
  }
  return std::nullopt;
}

DecompositionLeaf classify_atom(const SignedGraph& g,
                                std::vector<Vertex> vertices) {
  const LabeledGraph atom = induced_subgraph(g, vertices);
  DecompositionLeaf leaf;
  leaf.vertices = vertices;
  if (const auto map = find_wagner_labeling(atom.graph)) {
    leaf.kind = LeafKind::kWagner;
    WagnerLabeling host{};
    for (int k = 0; k < kWagnerOrder; ++k) host[k] = atom.labels[(*map)[k]];
    leaf.wagner_map = host;
    return leaf;
  }
  std::string why = "atom on vertices {";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    why += (i ? "," : "") + std::to_string(vertices[i]);
  }
  why += "} ";
  RotationSystem local;
  try {
    local = planar_embed(atom.graph);
  } catch (const Error&) {
    throw Error(ErrorCode::kNotDecomposable,
                why + "is neither planar nor the Wagner graph", vertices);
  }
  if (!is_triangulation(atom.graph, local)) {
    throw Error(ErrorCode::kNotDecomposable,
                why + "is planar but not a triangulation", vertices);
  }
  RotationSystem host;
  for (const auto& rot : local.rotation) {
    host.rotation.emplace_back();
    for (Vertex w : rot) host.rotation.back().push_back(atom.labels[w]);
  }
  for (Vertex w : local.outer_face) host.outer_face.push_back(atom.labels[w]);
  leaf.kind = LeafKind::kTriangulation;
  leaf.rotation = std::move(host);
  return leaf;
}

bool contains_all(const std::vector<Vertex>& sorted_set,
                  const std::vector<Vertex>& items) {
  return std::all_of(items.begin(), items.end(), [&](Vertex v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
  });
}

class Decomposer {
 public:
  explicit Decomposer(const SignedGraph& g) : g_(g) {}

  // Appends the leaves of the piece induced on `vertices` (sorted host ids)
  // and returns their indices.
  std::vector<int> run(const std::vector<Vertex>& vertices) {
    const LabeledGraph piece = induced_subgraph(g_, vertices);
    const auto separation = find_clique_separator(piece.graph);
    if (!separation) {
      tree_.leaves.push_back(classify_atom(g_, vertices));
      sorted_.push_back(vertices);
      return {static_cast<int>(tree_.leaves.size()) - 1};
    }
    std::vector<Vertex> separator;
    for (Vertex v : separation->separator) separator.push_back(piece.labels[v]);

    std::vector<Vertex> first = separator;
    std::vector<Vertex> second = separator;
    for (std::size_t c = 0; c < separation->components.size(); ++c) {
      for (Vertex v : separation->components[c]) {
        (c == 0 ? first : second).push_back(piece.labels[v]);
      }
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());

    std::vector<int> left = run(first);
    const std::vector<int> right = run(second);
    const auto holder = [&](const std::vector<int>& leaves) {
      for (int leaf : leaves) {
        if (contains_all(sorted_[leaf], separator)) return leaf;
      }
      throw Error(ErrorCode::kNotDecomposable,
                  "separator clique is not contained in a single leaf",
                  separator);
    };
    tree_.joins.push_back({holder(left), holder(right), separator});
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }

  DecompositionTree take() { return std::move(tree_); }

 private:
  const SignedGraph& g_;
  DecompositionTree tree_;
  std::vector<std::vector<Vertex>> sorted_;
};

// Host -> local translation of a leaf's rotation.
RotationSystem local_rotation(const DecompositionLeaf& leaf,
                              const LabeledGraph& sub) {
  std::vector<Vertex> local_of(*std::max_element(sub.labels.begin(),
                                                 sub.labels.end()) + 1, -1);
  for (std::size_t i = 0; i < sub.labels.size(); ++i) {
    local_of[sub.labels[i]] = static_cast<Vertex>(i);
  }
  const auto translate = [&](Vertex host) {
    if (host < 0 || host >= static_cast<int>(local_of.size()) ||
        local_of[host] < 0) {
      throw Error(ErrorCode::kNotDecomposable,
                  "leaf rotation mentions vertex " + std::to_string(host) +
                      " outside the leaf");
    }
    return local_of[host];
  };
  RotationSystem out;
  for (const auto& rot : leaf.rotation->rotation) {
    out.rotation.emplace_back();
    for (Vertex w : rot) out.rotation.back().push_back(translate(w));
  }
  for (Vertex w : leaf.rotation->outer_face) out.outer_face.push_back(translate(w));
  return out;
}

}  // namespace

DecompositionTree decompose(const SignedGraph& g) {
  if (g.vertex_count() < 3) {
    throw Error(ErrorCode::kNotDecomposable,
                "decomposition needs at least 3 vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::kNotDecomposable, "graph is not connected");
  }
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  Decomposer decomposer(g);
  decomposer.run(all);
  return decomposer.take();
}

ValidationResult validate_decomposition(const DecompositionTree& tree,
                                        const SignedGraph& g) {
  const auto fail = [](std::string reason) {
    return ValidationResult{false, std::move(reason), {}};
  };
  if (tree.leaves.empty()) return fail("decomposition has no leaves");
  if (tree.joins.size() + 1 != tree.leaves.size()) {
    return fail("joins must form a tree over the leaves");
  }
  std::vector<std::vector<Vertex>> sorted;
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<char> edge_covered(g.edge_count(), 0);
  for (std::size_t l = 0; l < tree.leaves.size(); ++l) {
    const DecompositionLeaf& leaf = tree.leaves[l];
    const std::string name = "leaf " + std::to_string(l);
    std::vector<Vertex> s = leaf.vertices;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return fail(name + " repeats a vertex");
    }
    for (Vertex v : s) {
      if (v < 0 || v >= g.vertex_count()) return fail(name + " has unknown vertex");
      covered[v] = 1;
    }
    const LabeledGraph sub = induced_subgraph(g, leaf.vertices);
    for (const Edge& e : sub.graph.edges()) {
      edge_covered[*g.find_edge(sub.labels[e.u], sub.labels[e.v])] = 1;
    }
    if (leaf.kind == LeafKind::kTriangulation) {
      if (!leaf.rotation) return fail(name + " lacks a rotation");
      RotationSystem local;
      try {
        local = local_rotation(leaf, sub);
      } catch (const Error& e) {
        return fail(name + ": " + e.what());
      }
      if (!is_triangulation(sub.graph, local)) {
        return fail(name + " is not a triangulation under its rotation");
      }
    } else {
      if (!leaf.wagner_map || leaf.vertices.size() != kWagnerOrder) {
        return fail(name + " lacks a Wagner labeling");
      }
      for (int a = 0; a < kWagnerOrder; ++a) {
        for (int b = a + 1; b < kWagnerOrder; ++b) {
          if (is_wagner_edge(a, b) !=
              g.has_edge((*leaf.wagner_map)[a], (*leaf.wagner_map)[b])) {
            return fail(name + " does not match the Wagner labeling");
          }
        }
      }
      std::vector<Vertex> mapped(leaf.wagner_map->begin(), leaf.wagner_map->end());
      std::sort(mapped.begin(), mapped.end());
      if (mapped != s) return fail(name + " Wagner labeling uses other vertices");
    }
    sorted.push_back(std::move(s));
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    return fail("some vertex is in no leaf");
  }
  if (std::find(edge_covered.begin(), edge_covered.end(), 0) != edge_covered.end()) {
    return fail("some edge is in no leaf");
  }

  std::vector<std::vector<int>> adjacent(tree.leaves.size());
  for (const DecompositionJoin& join : tree.joins) {
    const int n = static_cast<int>(tree.leaves.size());
    if (join.first_leaf < 0 || join.first_leaf >= n || join.second_leaf < 0 ||
        join.second_leaf >= n || join.first_leaf == join.second_leaf) {
      return fail("join references an invalid leaf");
    }
    if (join.shared.size() != 2 && join.shared.size() != 3) {
      return fail("join clique must be a K2 or K3");
    }
    for (std::size_t p = 0; p < join.shared.size(); ++p) {
      for (std::size_t q = p + 1; q < join.shared.size(); ++q) {
        if (!g.has_edge(join.shared[p], join.shared[q])) {
          return fail("join vertices are not a clique");
        }
      }
    }
    if (!contains_all(sorted[join.first_leaf], join.shared) ||
        !contains_all(sorted[join.second_leaf], join.shared)) {
      return fail("join clique is not in both leaves");
    }
    adjacent[join.first_leaf].push_back(join.second_leaf);
    adjacent[join.second_leaf].push_back(join.first_leaf);
  }
  std::vector<char> reached(tree.leaves.size(), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    const int l = stack.back();
    stack.pop_back();
    for (int m : adjacent[l]) {
      if (!reached[m]) {
        reached[m] = 1;
        stack.push_back(m);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
    return fail("joins do not connect all leaves");
  }
  return {};
}

namespace {

// Colors one leaf, with the shared clique (if any) fixed to `colors`.
LabeledColoring color_leaf(const SignedGraph& g, const DecompositionLeaf& leaf,
                           const std::vector<Vertex>& shared,
                           const std::vector<std::optional<int>>& colors,
                           const ListAssignment& lists) {
  LabeledGraph sub = induced_subgraph(g, leaf.vertices);
  std::vector<std::vector<int>> local_lists;
  for (Vertex host : sub.labels) {
    const auto list = lists[host];
    local_lists.emplace_back(list.begin(), list.end());
  }
  ListAssignment local(std::move(local_lists));
  const auto local_id = [&](Vertex host) { return *sub.local_of(host); };

  std::optional<Coloring> c;
  if (leaf.kind == LeafKind::kWagner) {
    WagnerLabeling map{};
    for (int k = 0; k < kWagnerOrder; ++k) map[k] = local_id((*leaf.wagner_map)[k]);
    WagnerPin pin{0, 1, local[map[0]][0], local[map[1]][0]};
    if (shared.size() == 3) {
      throw Error(ErrorCode::kDefect, "a Wagner leaf cannot share a triangle");
    }
    if (shared.size() == 2) {
      const auto label_of = [&](Vertex host) {
        return static_cast<int>(
            std::find(map.begin(), map.end(), local_id(host)) - map.begin());
      };
      pin = {label_of(shared[0]), label_of(shared[1]), *colors[shared[0]],
             *colors[shared[1]]};
    }
    c.emplace(tree_color_wagner(sub.graph, pin, local, map));
  } else {
    NearTriangulation nt{sub.graph, local_rotation(leaf, sub)};
    if (shared.size() == 3) {
      const std::array<Vertex, 3> t{local_id(shared[0]), local_id(shared[1]),
                                    local_id(shared[2])};
      const std::array<int, 3> precolor{*colors[shared[0]], *colors[shared[1]],
                                        *colors[shared[2]]};
      if (!triangle_precolor_ok({nt.graph.sign(t[0], t[1]),
                                 nt.graph.sign(t[1], t[2]),
                                 nt.graph.sign(t[2], t[0])},
                                precolor)) {
        throw Error(ErrorCode::kDefect,
                    "shared triangle arrived with a cyclic precoloring", shared);
      }
      c.emplace(tree_color_triangle_rooted(nt, t, precolor, local));
    } else {
      if (shared.size() == 2) {
        const Vertex x = local_id(shared[0]);
        const Vertex y = local_id(shared[1]);
        Vertex third = -1;
        for (const Face& f : trace_faces(nt.graph, nt.embedding)) {
          if (std::find(f.begin(), f.end(), x) != f.end() &&
              std::find(f.begin(), f.end(), y) != f.end()) {
            for (Vertex w : f) {
              if (w != x && w != y) third = w;
            }
            break;
          }
        }
        if (third < 0) {
          throw Error(ErrorCode::kDefect, "shared edge lies on no face", shared);
        }
        nt.embedding.outer_face = {x, y, third};
        local.pin(x, *colors[shared[0]]);
        local.pin(y, *colors[shared[1]]);
      } else {
        const auto& outer = nt.embedding.outer_face;
        local.pin(outer[0], local[outer[0]][0]);
        local.pin(outer[1], local[outer[1]][0]);
      }
      c.emplace(tree_color_near_triangulation(nt, local));
    }
  }
  const auto span = c->colors();
  return {std::move(sub), std::vector<int>(span.begin(), span.end())};
}

}  // namespace

Coloring tree_color_k5_free(const SignedGraph& g, const ListAssignment& lists,
                            const DecompositionTree* tree) {
  require_balanced(g);
  if (lists.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidLists, "list assignment size mismatch");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lists.size_of(v) < 3) {
      throw Error(ErrorCode::kListTooSmall,
                  "vertex " + std::to_string(v) + " needs at least 3 colors");
    }
  }
  if (g.vertex_count() <= 2) {
    // At most one edge: any choice is a tree-coloring.
    std::vector<int> colors;
    for (Vertex v = 0; v < g.vertex_count(); ++v) colors.push_back(lists[v][0]);
    return Coloring(std::move(colors));
  }

  DecompositionTree computed;
  if (tree == nullptr) {
    computed = decompose(g);
    tree = &computed;
  } else if (const auto valid = validate_decomposition(*tree, g); !valid) {
    throw Error(ErrorCode::kNotDecomposable,
                "supplied decomposition is invalid: " + valid.reason);
  }

  // Depth-first walk over the join tree from leaf 0.
  std::vector<std::vector<int>> joins_of(tree->leaves.size());
  for (int j = 0; j < static_cast<int>(tree->joins.size()); ++j) {
    joins_of[tree->joins[j].first_leaf].push_back(j);
    joins_of[tree->joins[j].second_leaf].push_back(j);
  }
  std::vector<std::optional<int>> colors(g.vertex_count());
  std::vector<char> done(tree->leaves.size(), 0);
  std::optional<LabeledColoring> colored;

  const auto absorb = [&](int leaf, const std::vector<Vertex>& shared) {
    LabeledColoring part = color_leaf(g, tree->leaves[leaf], shared, colors, lists);
    for (std::size_t i = 0; i < part.graph.labels.size(); ++i) {
      colors[part.graph.labels[i]] = part.colors[i];
    }
    colored = colored ? combine_colorings(*colored, part) : std::move(part);
    done[leaf] = 1;
  };
  absorb(0, {});
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int leaf = stack.back();
    stack.pop_back();
    for (auto it = joins_of[leaf].rbegin(); it != joins_of[leaf].rend(); ++it) {
      const DecompositionJoin& join = tree->joins[*it];
      const int next = join.first_leaf == leaf ? join.second_leaf : join.first_leaf;
      if (done[next]) continue;
      absorb(next, join.shared);
      stack.push_back(next);
    }
  }

  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!colors[v]) {
      throw Error(ErrorCode::kDefect, "vertex " + std::to_string(v) + " not colored");
    }
    out[v] = *colors[v];
  }
  Coloring c(std::move(out));
  if (!is_signed_tree_coloring(g, c)) {
    throw Error(ErrorCode::kDefect, "pipeline coloring has a cyclic class");
  }
  return c;
}

Coloring va_signed_upper3(const SignedGraph& g, const DecompositionTree* tree) {
  const ColorDomain m3(3);
  Coloring c = tree_color_k5_free(
      g, ListAssignment::uniform(g.vertex_count(), m3.values()), tree);
  if (!va_upper_check(g, c, 3)) {
    throw Error(ErrorCode::kDefect, "coloring does not certify va <= 3");
  }
  return c;
}

}  // namespace signedva
