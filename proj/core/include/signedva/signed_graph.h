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

#ifndef SIGNEDVA_SIGNED_GRAPH_H_
#define SIGNEDVA_SIGNED_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signedva/error.h"

namespace signedva {

// Edge signs are stored as plain ints restricted to {+1, -1} so that the
// arithmetic `sign * color` needs no conversion.
inline constexpr int kPositive = 1;
inline constexpr int kNegative = -1;

struct Edge {
  Vertex u;
  Vertex v;
  int sign;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using UnsignedEdge = std::pair<Vertex, Vertex>;

struct Neighbor {
  Vertex vertex;
  int edge;  // index into SignedGraph::edges()
};

// Simple undirected graph on vertices 0..vertex_count-1 with a sign on every
// edge. Loops, parallel edges and signs outside {+1,-1} are rejected.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int vertex_count);
  SignedGraph(int vertex_count, std::span<const Edge> edges);

  // All edges get sign +1.
  static SignedGraph all_positive(int vertex_count,
                                  std::span<const UnsignedEdge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Returns the index of the new edge.
  int add_edge(Vertex u, Vertex v, int sign);

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
  }

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<int> find_edge(Vertex u, Vertex v) const;
  // Throws kInvalidGraph when uv is not an edge.
  int sign(Vertex u, Vertex v) const;
  void set_sign(int edge_index, int sign);

  std::vector<UnsignedEdge> unsigned_edges() const;

  void check_vertex(Vertex v) const;

  // Same vertex count and the same signed edge set, regardless of the
  // order edges were inserted in.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, int> index_;
};

// A graph together with the ids its vertices carry in some larger graph.
// labels[local] is the host id of local vertex `local`.
struct LabeledGraph {
  SignedGraph graph;
  std::vector<Vertex> labels;

  // Local id of a host vertex, if present.
  std::optional<Vertex> local_of(Vertex host) const;
};

// Subgraph induced on `vertices`; local ids follow the order given.
LabeledGraph induced_subgraph(const SignedGraph& g,
                              std::span<const Vertex> vertices);

// Vertices grouped by connected component, each sorted, components ordered
// by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

}  // namespace signedva

#endif  // SIGNEDVA_SIGNED_GRAPH_H_
