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

#ifndef SIGNEDVA_COLORING_H_
#define SIGNEDVA_COLORING_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "signedva/signed_graph.h"

namespace signedva {

// Canonical color order: 0 first, then ascending absolute value with the
// positive value before the negative one (0, 1, -1, 2, -2, ...). Every place
// that picks "the first" color uses this order.
bool canonical_less(int a, int b);
void sort_canonical(std::vector<int>& values);

// The signed color set of size n: {0, ±1, ..., ±k} for n = 2k+1 and
// {±1, ..., ±k} for n = 2k.
class ColorDomain {
 public:
  explicit ColorDomain(int n);

  // Smallest domain containing every value.
  static ColorDomain smallest_containing(std::span<const int> values);

  int n() const { return n_; }
  int max_class() const { return n_ / 2; }
  bool has_zero() const { return n_ % 2 == 1; }
  bool contains(int value) const;
  // Values in canonical order.
  const std::vector<int>& values() const& { return values_; }
  std::vector<int> values() && { return std::move(values_); }

  friend bool operator==(const ColorDomain& a, const ColorDomain& b) {
    return a.n_ == b.n_;
  }

 private:
  int n_;
  std::vector<int> values_;
};

// A total vertex coloring whose values all lie in `domain`.
class Coloring {
 public:
  Coloring(ColorDomain domain, std::vector<int> colors);
  // Uses the smallest domain that holds the colors.
  explicit Coloring(std::vector<int> colors);

  const ColorDomain& domain() const { return domain_; }
  std::span<const int> colors() const { return colors_; }
  int operator[](Vertex v) const { return colors_.at(v); }
  int size() const { return static_cast<int>(colors_.size()); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  ColorDomain domain_;
  std::vector<int> colors_;
};

// Vertices colored i or -i, plus the edges uv with c(u) = sign(uv) * c(v)
// among them. Classes are indexed by the non-negative representative.
struct ClassSubgraph {
  int class_value = 0;
  std::vector<Vertex> vertices;
  std::vector<UnsignedEdge> edges;
};

// An edge uv lies in the class subgraph of |c(u)| exactly when
// c(u) == sign(uv) * c(v). That is also the proper-coloring conflict rule.
inline bool edge_in_class(int color_u, int color_v, int sign) {
  return color_u == sign * color_v;
}

// `i` is normalised to |i|; throws kInvalidClass when |i| is not a class of
// c's domain. Throws kInvalidColoring when c does not cover g.
ClassSubgraph class_subgraph(const SignedGraph& g, const Coloring& c, int i);

bool is_forest(std::span<const Vertex> vertices,
               std::span<const UnsignedEdge> edges);

// A cycle of the graph as a closed vertex walk without the repeated end,
// or nullopt if the graph is a forest.
std::optional<std::vector<Vertex>> find_cycle(
    std::span<const Vertex> vertices, std::span<const UnsignedEdge> edges);

bool is_signed_tree_coloring(const SignedGraph& g, const Coloring& c);
bool is_proper_signed_coloring(const SignedGraph& g, const Coloring& c);

// True iff every color of c lies in the size-n domain and c is a signed
// tree-coloring: a certificate that the signed vertex arboricity is <= n.
bool va_upper_check(const SignedGraph& g, const Coloring& c, int n);

struct ClassReport {
  ClassSubgraph subgraph;
  std::optional<std::vector<Vertex>> cycle;
};

// One entry per class value used by c, ascending.
std::vector<ClassReport> class_reports(const SignedGraph& g,
                                       const Coloring& c);

}  // namespace signedva

#endif  // SIGNEDVA_COLORING_H_
