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

#ifndef SIGNEDVA_PLANAR_H_
#define SIGNEDVA_PLANAR_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "signedva/signed_graph.h"

namespace signedva {

// Combinatorial embedding: rotation[v] lists v's neighbors in cyclic order.
// A face is traced by following dart u->v with v->w, where w is the
// successor of u in rotation[v]. outer_face is one of the traced faces, given
// as a cyclic vertex sequence in either orientation.
struct RotationSystem {
  std::vector<std::vector<Vertex>> rotation;
  std::vector<Vertex> outer_face;

  friend bool operator==(const RotationSystem&,
                         const RotationSystem&) = default;
};

using Face = std::vector<Vertex>;

// All faces, each directed edge used exactly once. Throws kMalformedRotation
// when a rotation is not a permutation of the neighborhood or the embedding
// breaks Euler's formula on some component.
std::vector<Face> trace_faces(const SignedGraph& g, const RotationSystem& r);

// Same cyclic sequence up to rotation and reversal.
bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b);

// Returns r with the outer face set to `face`; throws kNotNearTriangulation
// if `face` is not a face of r.
RotationSystem with_outer_face(const SignedGraph& g, RotationSystem r,
                               std::span<const Vertex> face);

struct ValidationResult {
  bool ok = true;
  std::string reason;
  Face offending_face;

  explicit operator bool() const { return ok; }
};

// Every face other than the outer one is a triangle and the outer face is a
// simple cycle.
ValidationResult validate_near_triangulation(const SignedGraph& g,
                                             const RotationSystem& r);

// Every face, the outer one included, is a triangle.
bool is_triangulation(const SignedGraph& g, const RotationSystem& r);

struct NearTriangulation {
  SignedGraph graph;
  // embedding.outer_face is v_1 .. v_n; v_1 and v_2 are the pinned pair.
  RotationSystem embedding;
};

// Positions (i, j), 0-based with i < j, of an edge joining two outer
// vertices that are not consecutive on the outer cycle. Ties are broken by the
// smallest (j - i, i).
std::optional<std::pair<int, int>> find_chord(std::span<const Vertex> outer,
                                              const SignedGraph& g);

// Neighbors of the last outer vertex v_n in rotation order, starting at v_1
// (outer.front()) and ending at v_{n-1}; the interior neighbors u_1 .. u_t sit
// in between. `rotation_of_vn` may be the restriction of a larger rotation to
// the current instance. Throws kNotOnOuterFace when v_n is not the last
// outer vertex and kNotNearTriangulation when v_n has neighbors on both arcs
// between v_1 and v_{n-1} (a chord at v_n).
std::vector<Vertex> ear_neighbors(Vertex vn,
                                  std::span<const Vertex> rotation_of_vn,
                                  std::span<const Vertex> outer);
std::vector<Vertex> ear_neighbors(Vertex vn, const RotationSystem& r);

// Planar embedding of g with outer_face set to the first traced face.
// Throws kNonPlanar.
RotationSystem planar_embed(const SignedGraph& g);

// Embedding restricted to the subgraph induced on `vertices` (local ids as in
// induced_subgraph), with `outer` (host ids) translated into the outer face.
struct PlaneSubgraph {
  LabeledGraph graph;
  RotationSystem embedding;
};
PlaneSubgraph restrict_embedding(const SignedGraph& g, const RotationSystem& r,
                                 std::span<const Vertex> vertices,
                                 std::span<const Vertex> outer);

}  // namespace signedva

#endif  // SIGNEDVA_PLANAR_H_
