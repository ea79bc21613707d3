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

#include "signedva/generators.h"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "signedva/list_coloring.h"
#include "signedva/switching.h"

namespace signedva {

namespace {

using Triangle = std::array<Vertex, 3>;

// Oriented faces with a dart -> face index, kept in sync under splits and
// flips.
class FaceMesh {
 public:
  FaceMesh() {
    add({0, 1, 2});
    add({0, 2, 1});
  }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const Triangle& face(int f) const { return faces_[f]; }

  void split(int f, Vertex p) {
    const Triangle t = faces_[f];
    erase_darts(f);
    faces_[f] = {t[0], t[1], p};
    index_darts(f);
    add({t[1], t[2], p});
    add({t[2], t[0], p});
  }

  // Flips the diagonal u v; false when the flip would create a parallel edge.
  bool flip(Vertex u, Vertex v) {
    const auto f1 = dart_face_.find({u, v});
    const auto f2 = dart_face_.find({v, u});
    if (f1 == dart_face_.end() || f2 == dart_face_.end()) return false;
    const int first = f1->second;
    const int second = f2->second;
    const Vertex a = third(faces_[first], u, v);
    const Vertex b = third(faces_[second], u, v);
    if (a == b || dart_face_.count({a, b})) return false;
    erase_darts(first);
    erase_darts(second);
    faces_[first] = {a, u, b};
    faces_[second] = {b, v, a};
    index_darts(first);
    index_darts(second);
    return true;
  }

  std::vector<UnsignedEdge> edges() const {
    std::vector<UnsignedEdge> out;
    for (const auto& [dart, face] : dart_face_) {
      if (dart.first < dart.second) out.push_back(dart);
    }
    return out;
  }

  // rotation[b] gets successor(a) = c for every face (a, b, c).
  RotationSystem rotation(int vertex_count) const {
    std::vector<std::map<Vertex, Vertex>> successor(vertex_count);
    for (const Triangle& t : faces_) {
      for (int k = 0; k < 3; ++k) {
        successor[t[(k + 1) % 3]][t[k]] = t[(k + 2) % 3];
      }
    }
    RotationSystem r;
    r.rotation.resize(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (successor[v].empty()) continue;
      const Vertex start = successor[v].begin()->first;
      Vertex w = start;
      do {
        r.rotation[v].push_back(w);
        w = successor[v].at(w);
      } while (w != start);
    }
    r.outer_face.assign(faces_.front().begin(), faces_.front().end());
    return r;
  }

 private:
  static Vertex third(const Triangle& t, Vertex u, Vertex v) {
    for (Vertex w : t) {
      if (w != u && w != v) return w;
    }
    return -1;
  }

  void add(const Triangle& t) {
    faces_.push_back(t);
    index_darts(face_count() - 1);
  }
  void index_darts(int f) {
    const Triangle& t = faces_[f];
    for (int k = 0; k < 3; ++k) dart_face_[{t[k], t[(k + 1) % 3]}] = f;
  }
  void erase_darts(int f) {
    const Triangle& t = faces_[f];
    for (int k = 0; k < 3; ++k) dart_face_.erase({t[k], t[(k + 1) % 3]});
  }

  std::vector<Triangle> faces_;
  std::map<std::pair<Vertex, Vertex>, int> dart_face_;
};

}  // namespace

GeneratedTriangulation generate_triangulation(int vertex_count, int flips,
                                              std::uint64_t seed) {
  if (vertex_count < 3) {
    throw Error(ErrorCode::kInvalidGraph,
                "a triangulation needs at least 3 vertices");
  }
  std::mt19937_64 rng(seed);
  FaceMesh mesh;
  for (Vertex p = 3; p < vertex_count; ++p) {
    std::uniform_int_distribution<int> pick(0, mesh.face_count() - 1);
    mesh.split(pick(rng), p);
  }
  if (vertex_count >= 5) {
    for (int i = 0; i < flips; ++i) {
      const auto edges = mesh.edges();
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const auto [u, v] = edges[pick(rng)];
      mesh.flip(u, v);
    }
  }
  GeneratedTriangulation out;
  out.vertex_count = vertex_count;
  out.edges = mesh.edges();
  out.embedding = mesh.rotation(vertex_count);
  return out;
}

SignedGraph generate_balanced(int vertex_count,
                              std::span<const UnsignedEdge> edges,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> theta(vertex_count);
  for (int& t : theta) t = coin(rng) ? 1 : -1;
  return signature_from_potential(vertex_count, edges, theta);
}

SignedGraph random_signed_graph(int vertex_count, int edge_count,
                                std::uint64_t seed) {
  std::vector<UnsignedEdge> pairs;
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = u + 1; v < vertex_count; ++v) pairs.emplace_back(u, v);
  }
  if (edge_count < 0 || edge_count > static_cast<int>(pairs.size())) {
    throw Error(ErrorCode::kInvalidGraph,
                "cannot place " + std::to_string(edge_count) + " edges on " +
                    std::to_string(vertex_count) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(0.5);
  SignedGraph g(vertex_count);
  for (int i = 0; i < edge_count; ++i) {
    g.add_edge(pairs[i].first, pairs[i].second, coin(rng) ? kPositive : kNegative);
  }
  return g;
}

CliqueSumInstance generate_clique_sum(const CliqueSumOptions& options,
                                      std::uint64_t seed) {
  if (options.leaves < 1 || options.max_leaf_vertices < 4) {
    throw Error(ErrorCode::kInvalidGraph,
                "clique sums need at least one leaf of up to >= 4 vertices");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution wagner_coin(options.wagner_probability);
  std::bernoulli_distribution triangle_coin(options.triangle_join_probability);
  std::uniform_int_distribution<int> leaf_size(4, options.max_leaf_vertices);

  CliqueSumInstance out;
  std::set<UnsignedEdge> edges;
  std::vector<Triangle> host_faces;  // facial triangles of triangulation leaves
  const auto add_edge = [&](Vertex u, Vertex v) {
    edges.insert(std::minmax(u, v));
  };

  for (int leaf = 0; leaf < options.leaves; ++leaf) {
    const bool wagner = wagner_coin(rng);
    // Local edges and local facial triangles of the new leaf.
    std::vector<UnsignedEdge> local_edges;
    std::vector<Triangle> local_faces;
    int local_count = 0;
    if (wagner) {
      local_count = kWagnerOrder;
      local_edges = canonical_wagner_graph().unsigned_edges();
    } else {
      local_count = leaf_size(rng);
      const auto t = generate_triangulation(local_count, local_count, rng());
      local_edges = t.edges;
      for (const Face& f : trace_faces(
               SignedGraph::all_positive(local_count, t.edges), t.embedding)) {
        local_faces.push_back({f[0], f[1], f[2]});
      }
    }

    std::vector<Vertex> to_host(local_count, -1);
    if (leaf > 0) {
      const bool by_triangle = !wagner && !host_faces.empty() && triangle_coin(rng);
      if (by_triangle) {
        std::uniform_int_distribution<std::size_t> pick_host(0, host_faces.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_local(0, local_faces.size() - 1);
        const Triangle& h = host_faces[pick_host(rng)];
        const Triangle& l = local_faces[pick_local(rng)];
        for (int k = 0; k < 3; ++k) to_host[l[k]] = h[k];
        ++out.k3_joins;
      } else {
        const std::vector<UnsignedEdge> host_edges(edges.begin(), edges.end());
        std::uniform_int_distribution<std::size_t> pick_host(0, host_edges.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_local(0, local_edges.size() - 1);
        auto [hx, hy] = host_edges[pick_host(rng)];
        const auto [lx, ly] = local_edges[pick_local(rng)];
        if (std::bernoulli_distribution(0.5)(rng)) std::swap(hx, hy);
        to_host[lx] = hx;
        to_host[ly] = hy;
        ++out.k2_joins;
      }
    }
    for (Vertex v = 0; v < local_count; ++v) {
      if (to_host[v] < 0) to_host[v] = out.vertex_count++;
    }
    for (const auto& [u, v] : local_edges) add_edge(to_host[u], to_host[v]);
    for (const Triangle& f : local_faces) {
      host_faces.push_back({to_host[f[0]], to_host[f[1]], to_host[f[2]]});
    }
    (wagner ? out.wagner_leaves : out.triangulation_leaves) += 1;
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace signedva
