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

#ifndef SIGNEDVA_GENERATORS_H_
#define SIGNEDVA_GENERATORS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "signedva/planar.h"
#include "signedva/signed_graph.h"

namespace signedva {

struct GeneratedTriangulation {
  int vertex_count = 0;
  std::vector<UnsignedEdge> edges;
  RotationSystem embedding;
};

// Apollonian growth from K3 (each new vertex goes into a uniformly random
// face and joins its three corners) followed by `flips` attempted random
// diagonal flips that keep the graph simple. Deterministic in `seed`.
GeneratedTriangulation generate_triangulation(int vertex_count, int flips,
                                              std::uint64_t seed);

// Signature from a uniformly random potential; always balanced.
SignedGraph generate_balanced(int vertex_count,
                              std::span<const UnsignedEdge> edges,
                              std::uint64_t seed);

// `edge_count` distinct random edges with random signs.
SignedGraph random_signed_graph(int vertex_count, int edge_count,
                                std::uint64_t seed);

struct CliqueSumInstance {
  int vertex_count = 0;
  std::vector<UnsignedEdge> edges;
  int triangulation_leaves = 0;
  int wagner_leaves = 0;
  int k2_joins = 0;
  int k3_joins = 0;
};

struct CliqueSumOptions {
  int leaves = 4;
  int max_leaf_vertices = 8;  // for triangulation leaves, >= 4
  double wagner_probability = 0.3;
  double triangle_join_probability = 0.5;
};

// Random tree of triangulation and Wagner leaves glued along edges or (for
// triangulation pairs) facial triangles. Deterministic in `seed`.
CliqueSumInstance generate_clique_sum(const CliqueSumOptions& options,
                                      std::uint64_t seed);

}  // namespace signedva

#endif  // SIGNEDVA_GENERATORS_H_
