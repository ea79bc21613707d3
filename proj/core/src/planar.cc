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

#include "signedva/planar.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace signedva {

namespace {

std::string describe(std::span<const Vertex> face) {
  std::string out = "[";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(face[i]);
  }
  return out + "]";
}

// position[v][k] pairs (neighbor, index in rotation[v]) sorted by neighbor.
using PositionIndex = std::vector<std::vector<std::pair<Vertex, int>>>;

PositionIndex index_rotation(const SignedGraph& g, const RotationSystem& r) {
  if (static_cast<int>(r.rotation.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kMalformedRotation,
                "rotation lists " + std::to_string(r.rotation.size()) +
                    " vertices, graph has " +
                    std::to_string(g.vertex_count()));
  }
  PositionIndex index(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = r.rotation[v];
    std::vector<Vertex> expected;
    for (const Neighbor& n : g.neighbors(v)) expected.push_back(n.vertex);
    std::vector<Vertex> given(rot.begin(), rot.end());
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given) {
      throw Error(ErrorCode::kMalformedRotation,
                  "rotation at vertex " + std::to_string(v) +
                      " is not a permutation of its neighbors");
    }
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
      index[v].emplace_back(rot[k], k);
    }
    std::sort(index[v].begin(), index[v].end());
  }
  return index;
}

int position_of(const PositionIndex& index, Vertex v, Vertex neighbor) {
  const auto& entries = index[v];
  const auto it = std::lower_bound(entries.begin(), entries.end(),
                                   std::make_pair(neighbor, -1));
  return it->second;
}

}  // namespace

std::vector<Face> trace_faces(const SignedGraph& g, const RotationSystem& r) {
  const PositionIndex index = index_rotation(g, r);
  std::vector<std::vector<char>> used(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    used[v].assign(r.rotation[v].size(), 0);
  }

  std::vector<Face> faces;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    for (int k = 0; k < static_cast<int>(r.rotation[start].size()); ++k) {
      if (used[start][k]) continue;
      Face face;
      Vertex u = start;
      int slot = k;
      while (!used[u][slot]) {
        used[u][slot] = 1;
        face.push_back(u);
        const Vertex v = r.rotation[u][slot];
        const int back = position_of(index, v, u);
        slot = (back + 1) % static_cast<int>(r.rotation[v].size());
        u = v;
      }
      if (u != start || slot != k) {
        throw Error(ErrorCode::kMalformedRotation,
                    "face traversal did not close at vertex " +
                        std::to_string(start));
      }
      faces.push_back(std::move(face));
    }
  }

  // Euler's formula per component that has at least one edge.
  const auto components = connected_components(g);
  std::vector<int> component_of(g.vertex_count());
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    for (Vertex v : components[c]) component_of[v] = c;
  }
  std::vector<long> euler(components.size(), 0);
  std::vector<char> has_edges(components.size(), 0);
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    euler[c] = static_cast<long>(components[c].size());
  }
  for (const Edge& e : g.edges()) {
    euler[component_of[e.u]] -= 1;
    has_edges[component_of[e.u]] = 1;
  }
  for (const Face& f : faces) euler[component_of[f.front()]] += 1;
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    if (has_edges[c] && euler[c] != 2) {
      throw Error(ErrorCode::kMalformedRotation,
                  "rotation system is not planar: V - E + F = " +
                      std::to_string(euler[c]) + " on the component of vertex " +
                      std::to_string(components[c].front()));
    }
  }
  return faces;
}

bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (b[shift] != a[0]) continue;
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < n; ++i) {
      forward = forward && b[(shift + i) % n] == a[i];
      backward = backward && b[(shift + n - i) % n] == a[i];
    }
    if (forward || backward) return true;
  }
  return false;
}

RotationSystem with_outer_face(const SignedGraph& g, RotationSystem r,
                               std::span<const Vertex> face) {
  const auto faces = trace_faces(g, r);
  const bool found = std::any_of(faces.begin(), faces.end(), [&](const Face& f) {
    return same_cycle(f, face);
  });
  if (!found) {
    throw Error(ErrorCode::kNotNearTriangulation,
                describe(face) + " is not a face of the embedding",
                std::vector<Vertex>(face.begin(), face.end()));
  }
  r.outer_face.assign(face.begin(), face.end());
  return r;
}

ValidationResult validate_near_triangulation(const SignedGraph& g,
                                             const RotationSystem& r) {
  std::vector<Face> faces;
  try {
    faces = trace_faces(g, r);
  } catch (const Error& e) {
    return {false, e.what(), {}};
  }
  if (g.vertex_count() < 3) {
    return {false, "a near-triangulation needs at least 3 vertices", {}};
  }
  if (!is_connected(g)) return {false, "graph is not connected", {}};

  const auto& outer = r.outer_face;
  std::vector<Vertex> sorted(outer.begin(), outer.end());
  std::sort(sorted.begin(), sorted.end());
  if (outer.size() < 3 ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return {false, "outer face " + describe(outer) + " is not a simple cycle",
            outer};
  }
  bool outer_seen = false;
  for (const Face& f : faces) {
    if (!outer_seen && same_cycle(f, outer)) {
      outer_seen = true;
      continue;
    }
    if (f.size() != 3) {
      return {false,
              "inner face " + describe(f) + " has length " +
                  std::to_string(f.size()),
              f};
    }
  }
  if (!outer_seen) {
    return {false, "outer face " + describe(outer) + " is not a traced face",
            outer};
  }
  return {};
}

bool is_triangulation(const SignedGraph& g, const RotationSystem& r) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  try {
    const auto faces = trace_faces(g, r);
    return std::all_of(faces.begin(), faces.end(),
                       [](const Face& f) { return f.size() == 3; });
  } catch (const Error&) {
    return false;
  }
}

std::optional<std::pair<int, int>> find_chord(std::span<const Vertex> outer,
                                              const SignedGraph& g) {
  const int n = static_cast<int>(outer.size());
  for (int gap = 2; gap <= n - 2; ++gap) {
    for (int i = 0; i + gap < n; ++i) {
      if (g.has_edge(outer[i], outer[i + gap])) {
        return std::make_pair(i, i + gap);
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> ear_neighbors(Vertex vn,
                                  std::span<const Vertex> rotation_of_vn,
                                  std::span<const Vertex> outer) {
  const int n = static_cast<int>(outer.size());
  if (n < 3 || outer.back() != vn) {
    throw Error(ErrorCode::kNotOnOuterFace,
                "vertex " + std::to_string(vn) +
                    " is not the last vertex of outer cycle " +
                    describe(outer));
  }
  const Vertex first = outer.front();
  const Vertex prev = outer[n - 2];
  const int deg = static_cast<int>(rotation_of_vn.size());
  const auto locate = [&](Vertex x) {
    const auto it = std::find(rotation_of_vn.begin(), rotation_of_vn.end(), x);
    if (it == rotation_of_vn.end()) {
      throw Error(ErrorCode::kNotNearTriangulation,
                  "outer neighbor " + std::to_string(x) +
                      " missing from the rotation at " + std::to_string(vn));
    }
    return static_cast<int>(it - rotation_of_vn.begin());
  };
  const int p_first = locate(first);
  const int p_prev = locate(prev);
  const int gap = ((p_prev - p_first) % deg + deg) % deg;

  std::vector<Vertex> out;
  out.reserve(deg);
  if (gap == deg - 1) {
    for (int k = 0; k < deg; ++k) out.push_back(rotation_of_vn[(p_first + k) % deg]);
  } else if (gap == 1) {
    for (int k = 0; k < deg; ++k) {
      out.push_back(rotation_of_vn[(p_first - k + deg) % deg]);
    }
  } else {
    throw Error(ErrorCode::kNotNearTriangulation,
                "vertex " + std::to_string(vn) +
                    " has neighbors on both sides of its outer angle");
  }
  return out;
}

std::vector<Vertex> ear_neighbors(Vertex vn, const RotationSystem& r) {
  if (vn < 0 || vn >= static_cast<int>(r.rotation.size())) {
    throw Error(ErrorCode::kUnknownVertex, "vertex " + std::to_string(vn));
  }
  return ear_neighbors(vn, r.rotation[vn], r.outer_face);
}

RotationSystem planar_embed(const SignedGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  BoostGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    boost::put(edge_index, *it, next++);
  }

  std::vector<std::vector<BoostEdge>> storage(g.vertex_count());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          storage.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) throw Error(ErrorCode::kNonPlanar, "graph is not planar");

  RotationSystem r;
  r.rotation.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const BoostEdge& e : storage[v]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      r.rotation[v].push_back(s == v ? t : s);
    }
  }
  const auto faces = trace_faces(g, r);
  if (!faces.empty()) r.outer_face = faces.front();
  return r;
}

PlaneSubgraph restrict_embedding(const SignedGraph& g, const RotationSystem& r,
                                 std::span<const Vertex> vertices,
                                 std::span<const Vertex> outer) {
  PlaneSubgraph out{induced_subgraph(g, vertices), {}};
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  out.embedding.rotation.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : r.rotation.at(vertices[i])) {
      if (local[w] >= 0) out.embedding.rotation[i].push_back(local[w]);
    }
  }
  for (Vertex v : outer) {
    if (local.at(v) < 0) {
      throw Error(ErrorCode::kUnknownVertex,
                  "outer vertex " + std::to_string(v) + " outside the subset");
    }
    out.embedding.outer_face.push_back(local[v]);
  }
  return out;
}

}  // namespace signedva
