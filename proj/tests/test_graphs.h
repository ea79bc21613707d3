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

#ifndef SIGNEDVA_TESTS_TEST_GRAPHS_H_
#define SIGNEDVA_TESTS_TEST_GRAPHS_H_

#include <vector>

#include "signedva/planar.h"
#include "signedva/signed_graph.h"

namespace signedva::testing {

// Triangle on 0,1,2 with signs of 01, 12, 20.
inline SignedGraph triangle(int s01 = 1, int s12 = 1, int s20 = 1) {
  SignedGraph g(3);
  g.add_edge(0, 1, s01);
  g.add_edge(1, 2, s12);
  g.add_edge(2, 0, s20);
  return g;
}

inline SignedGraph complete(int n) {
  SignedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, kPositive);
  }
  return g;
}

inline SignedGraph cycle(int n) {
  SignedGraph g(n);
  for (int k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n, kPositive);
  return g;
}

// Octahedron: 0 and 5 are poles, 1-2-3-4 the equator. Outer face 0,1,2.
inline SignedGraph octahedron() {
  SignedGraph g(6);
  for (int k = 1; k <= 4; ++k) {
    g.add_edge(0, k, kPositive);
    g.add_edge(5, k, kPositive);
    g.add_edge(k, k % 4 + 1, kPositive);
  }
  return g;
}

inline RotationSystem octahedron_embedding() {
  RotationSystem r;
  r.rotation = {{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3},
                {0, 2, 5, 4}, {0, 3, 5, 1}, {1, 4, 3, 2}};
  r.outer_face = {0, 1, 2};
  return r;
}

// K4 drawn with 3 in the middle of triangle 0,1,2.
inline RotationSystem k4_embedding() {
  RotationSystem r;
  r.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  r.outer_face = {0, 1, 2};
  return r;
}

}  // namespace signedva::testing

#endif  // SIGNEDVA_TESTS_TEST_GRAPHS_H_
