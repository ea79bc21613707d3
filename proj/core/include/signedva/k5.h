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

#ifndef SIGNEDVA_K5_H_
#define SIGNEDVA_K5_H_

#include <optional>
#include <vector>

#include "signedva/coloring.h"
#include "signedva/list_coloring.h"
#include "signedva/planar.h"
#include "signedva/signed_graph.h"

namespace signedva {

enum class LeafKind { kTriangulation, kWagner };

struct DecompositionLeaf {
  // Host vertex ids; the leaf is the subgraph they induce.
  std::vector<Vertex> vertices;
  LeafKind kind = LeafKind::kTriangulation;
  // Triangulation leaves: rotation[k] is the cyclic neighbor order of
  // vertices[k], in host ids; outer_face likewise.
  std::optional<RotationSystem> rotation;
  // Wagner leaves: wagner_map[label] is the host vertex with that
  // canonical label.
  std::optional<WagnerLabeling> wagner_map;

  friend bool operator==(const DecompositionLeaf&,
                         const DecompositionLeaf&) = default;
};

struct DecompositionJoin {
  int first_leaf = 0;
  int second_leaf = 0;
  std::vector<Vertex> shared;  // a K2 or K3, host ids

  friend bool operator==(const DecompositionJoin&,
                         const DecompositionJoin&) = default;
};

// Leaves glued pairwise along the joins; the joins form a spanning tree on
// the leaves.
struct DecompositionTree {
  std::vector<DecompositionLeaf> leaves;
  std::vector<DecompositionJoin> joins;

  friend bool operator==(const DecompositionTree&,
                         const DecompositionTree&) = default;
};

// Splits g along clique separators of size 2, then 3, until every piece is a
// triangulation or a Wagner graph. Separators are searched exhaustively in
// lexicographic order. Throws kNotDecomposable when some piece is neither,
// which is how inputs that are not edge-maximal K5-minor-free show up.
DecompositionTree decompose(const SignedGraph& g);

// Checks that the leaves cover g, the joins are K2/K3 cliques in both leaves
// and form a tree, and every leaf has the structure its kind claims.
ValidationResult validate_decomposition(const DecompositionTree& tree,
                                        const SignedGraph& g);

// List tree-coloring of a balanced graph built from clique-sums of
// triangulations and Wagner graphs. Every list needs three colors. The first
// leaf gets its pinned pair from the first list values; each later leaf is
// colored with its shared clique fixed, then merged into the colored part.
//
// Throws kNotBalanced, kListTooSmall, kNotDecomposable, kDefect.
Coloring tree_color_k5_free(const SignedGraph& g, const ListAssignment& lists,
                            const DecompositionTree* tree = nullptr);

// tree_color_k5_free with L(v) = {-1, 0, 1}: a certificate that the signed
// vertex arboricity is at most 3.
Coloring va_signed_upper3(const SignedGraph& g,
                          const DecompositionTree* tree = nullptr);

}  // namespace signedva

#endif  // SIGNEDVA_K5_H_
