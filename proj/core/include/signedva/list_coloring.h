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

#ifndef SIGNEDVA_LIST_COLORING_H_
#define SIGNEDVA_LIST_COLORING_H_

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "signedva/coloring.h"
#include "signedva/planar.h"
#include "signedva/signed_graph.h"

namespace signedva {

// Candidate colors per vertex. Each list is kept deduplicated and in
// canonical color order; values need not come from a single domain.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<int>> lists);

  // Every vertex gets the same list.
  static ListAssignment uniform(int vertex_count, std::span<const int> values);

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  std::span<const int> operator[](Vertex v) const { return lists_.at(v); }
  int size_of(Vertex v) const { return static_cast<int>(lists_.at(v).size()); }

  void set(Vertex v, std::vector<int> values);
  void pin(Vertex v, int value) { set(v, {value}); }
  // No-op when the value is absent.
  void remove(Vertex v, int value);
  bool contains(Vertex v, int value) const;

  friend bool operator==(const ListAssignment&,
                         const ListAssignment&) = default;

 private:
  std::vector<std::vector<int>> lists_;
};

// Observer for the sub-instances the near-triangulation recursion visits:
// the vertex set (host ids) and its outer cycle, pinned pair first.
using SubinstanceObserver = std::function<void(std::span<const Vertex> vertices,
                                               std::span<const Vertex> outer)>;

struct ListColoringOptions {
  SubinstanceObserver on_subinstance;
};

// List tree-coloring of a balanced near-triangulation. The outer face
// v_1 .. v_n comes from nt.embedding.outer_face; L(v_1) and L(v_2) must be
// singletons, other outer lists need two colors and interior lists three.
//
// Chords split the instance in two; the side holding v_1 v_2 is colored
// first and the chord ends are pinned for the other side. Without a chord
// v_n is colored with the first color avoiding alpha * sign(v_1 v_n), that
// color is struck from its interior neighbors' lists (as gamma * sign), and
// the rest is colored recursively.
//
// Throws kNotBalanced, kNotNearTriangulation, kInvalidLists; kDefect if the
// result fails the tree-coloring check.
Coloring tree_color_near_triangulation(const NearTriangulation& nt,
                                       const ListAssignment& lists,
                                       const ListColoringOptions& options = {});

// True iff the bare triangle xyz colored (alpha, beta, gamma) has acyclic
// class subgraphs. Signs are (xy, yz, zx).
bool triangle_precolor_ok(std::array<int, 3> signs, std::array<int, 3> colors);

// Extends a precoloring of a triangle xyz of a balanced near-triangulation.
// Vertices off the triangle need lists of size >= 3. The triangle has to be
// the outer face, or the graph a triangulation.
//
// Throws kNotBalanced, kPrecolorInvalid, kInvalidLists,
// kNotNearTriangulation.
Coloring tree_color_triangle_rooted(const NearTriangulation& nt,
                                    std::array<Vertex, 3> triangle,
                                    std::array<int, 3> precolor,
                                    const ListAssignment& lists);

// Canonical Wagner graph: cycle 0..7 plus the diagonals k, k+4.
inline constexpr int kWagnerOrder = 8;
using WagnerLabeling = std::array<Vertex, kWagnerOrder>;

SignedGraph canonical_wagner_graph();
bool is_wagner_edge(int a, int b);

// labeling[k] is the vertex playing canonical label k, if any exists.
std::optional<WagnerLabeling> find_wagner_labeling(const SignedGraph& g);

struct WagnerPin {
  int first;   // canonical label of v_i
  int second;  // canonical label of v_j
  int alpha;
  int beta;
};

// List coloring of a signed Wagner graph with the edge
// v_i v_j pinned; no balance assumption. Backtracks over list choices in the
// greedy order that walks away from the pinned edge. `labeling` defaults to
// the identity.
//
// Throws kNotWagner, kBadPin, kListTooSmall.
Coloring tree_color_wagner(const SignedGraph& w, const WagnerPin& pin,
                           const ListAssignment& lists,
                           std::optional<WagnerLabeling> labeling = {});

// A colored graph whose vertices carry ids of a common host graph.
struct LabeledColoring {
  LabeledGraph graph;
  std::vector<int> colors;  // indexed by local vertex
};

// Union of two balanced colored graphs that intersect in a K2 or K3 with
// equal signs and equal colors. The result keeps a's local order and appends
// b's remaining vertices.
//
// Throws kSharedCliqueMismatch, kColoringsDisagree, kNotBalanced,
// kInvalidColoring, kDefect.
LabeledColoring combine_colorings(const LabeledColoring& a,
                                  const LabeledColoring& b);

}  // namespace signedva

#endif  // SIGNEDVA_LIST_COLORING_H_
