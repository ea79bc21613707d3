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

#ifndef SIGNEDVA_SWITCHING_H_
#define SIGNEDVA_SWITCHING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "signedva/signed_graph.h"

namespace signedva {

// Vertex potential theta: V -> {+1, -1}. A signature is balanced exactly when
// sign(uv) = theta(u) * theta(v) for some potential.
using Potential = std::vector<int>;

SignedGraph switch_vertex(const SignedGraph& g, Vertex u);

// Negates every edge with exactly one endpoint in `s`. Duplicates in `s`
// count once.
SignedGraph switch_set(const SignedGraph& g, std::span<const Vertex> s);

struct BalanceResult {
  bool balanced = false;
  // Set when balanced; theta(root) = +1 for the smallest vertex of each
  // component.
  Potential theta;
  // Set when unbalanced: a cycle with an odd number of negative edges, as a
  // vertex sequence (the closing edge joins the last vertex to the first).
  std::vector<Vertex> negative_cycle;
};

// Propagates a potential along a BFS spanning forest, then checks the
// non-tree edges. The witness is the fundamental cycle of the first violating
// non-tree edge in BFS order.
BalanceResult check_balance(const SignedGraph& g);

inline bool is_balanced(const SignedGraph& g) {
  return check_balance(g).balanced;
}

// Throws kNotBalanced carrying the negative cycle as witness.
void require_balanced(const SignedGraph& g);

SignedGraph signature_from_potential(int vertex_count,
                                     std::span<const UnsignedEdge> edges,
                                     std::span<const int> theta);

// `count` graphs switching-equivalent to g; each switches a random vertex
// subset. Deterministic in `seed`.
std::vector<SignedGraph> switching_orbit_sample(const SignedGraph& g,
                                                int count,
                                                std::uint64_t seed);

}  // namespace signedva

#endif  // SIGNEDVA_SWITCHING_H_
