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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "signedva/coloring.h"
#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/k5.h"
#include "signedva/oracle.h"
#include "signedva/switching.h"
#include "test_graphs.h"

namespace signedva {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kDefect;
}

// Disjoint union of graphs with the listed vertex identifications:
// glue[k] = (vertex of the new piece, existing host vertex).
class Builder {
 public:
  // Returns the host ids of the piece's vertices.
  std::vector<Vertex> add(const SignedGraph& piece,
                          const std::vector<std::pair<Vertex, Vertex>>& glue) {
    std::vector<Vertex> host(piece.vertex_count(), -1);
    for (auto [local, h] : glue) host[local] = h;
    for (Vertex& h : host) {
      if (h < 0) h = n_++;
    }
    for (const Edge& e : piece.edges()) edges_.insert(std::minmax(host[e.u], host[e.v]));
    return host;
  }

  std::vector<UnsignedEdge> edges() const { return {edges_.begin(), edges_.end()}; }
  int vertex_count() const { return n_; }

 private:
  int n_ = 0;
  std::set<UnsignedEdge> edges_;
};

TEST(DecomposeTest, WagnerAlone) {
  const DecompositionTree t = decompose(canonical_wagner_graph());
  ASSERT_EQ(t.leaves.size(), 1u);
  EXPECT_EQ(t.leaves[0].kind, LeafKind::kWagner);
  EXPECT_TRUE(t.leaves[0].wagner_map.has_value());
  EXPECT_TRUE(t.joins.empty());
}

TEST(DecomposeTest, OctahedronAlone) {
  const DecompositionTree t = decompose(testing::octahedron());
  ASSERT_EQ(t.leaves.size(), 1u);
  EXPECT_EQ(t.leaves[0].kind, LeafKind::kTriangulation);
  EXPECT_TRUE(t.joins.empty());
}

TEST(DecomposeTest, TwoK4sOnAnEdge) {
  Builder b;
  b.add(testing::complete(4), {});
  b.add(testing::complete(4), {{0, 0}, {1, 1}});
  SignedGraph g = SignedGraph::all_positive(b.vertex_count(), b.edges());
  g.set_sign(0, kNegative);
  const DecompositionTree t = decompose(g);
  ASSERT_EQ(t.leaves.size(), 2u);
  EXPECT_EQ(t.leaves[0].kind, LeafKind::kTriangulation);
  EXPECT_EQ(t.leaves[1].kind, LeafKind::kTriangulation);
  ASSERT_EQ(t.joins.size(), 1u);
  EXPECT_EQ(t.joins[0].shared, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(validate_decomposition(t, g).ok);
}

TEST(DecomposeTest, K5IsNotDecomposable) {
  EXPECT_EQ(code_of([] { decompose(testing::complete(5)); }),
            ErrorCode::kNotDecomposable);
  EXPECT_EQ(code_of([] { decompose(testing::cycle(5)); }),
            ErrorCode::kNotDecomposable);
  EXPECT_EQ(code_of([] { decompose(SignedGraph(4)); }),
            ErrorCode::kNotDecomposable);
}

TEST(DecomposeTest, ValidationCatchesTampering) {
  const SignedGraph g = testing::octahedron();
  DecompositionTree t = decompose(g);
  t.leaves[0].vertices.pop_back();
  EXPECT_FALSE(validate_decomposition(t, g).ok);
}

TEST(K5PipelineTest, SingleTriangulationMatchesNearTriangulationColoring) {
  const SignedGraph g = testing::octahedron();
  const ListAssignment lists = ListAssignment::uniform(6, ColorDomain(3).values());
  const DecompositionTree t = decompose(g);
  const Coloring c = tree_color_k5_free(g, lists, &t);
  ListAssignment pinned = lists;
  const RotationSystem& r = *t.leaves[0].rotation;
  pinned.pin(r.outer_face[0], lists[r.outer_face[0]].front());
  pinned.pin(r.outer_face[1], lists[r.outer_face[1]].front());
  EXPECT_EQ(c, tree_color_near_triangulation({g, r}, pinned));
}

TEST(K5PipelineTest, WagnerPlusK4OnAnEdge) {
  Builder b;
  b.add(canonical_wagner_graph(), {});
  b.add(testing::complete(4), {{0, 0}, {1, 1}});
  const SignedGraph g = generate_balanced(b.vertex_count(), b.edges(), 5);
  const Coloring c = tree_color_k5_free(
      g, ListAssignment::uniform(g.vertex_count(), ColorDomain(3).values()));
  EXPECT_TRUE(va_upper_check(g, c, 3));
}

TEST(K5PipelineTest, ChainOfThreeK4s) {
  Builder b;
  b.add(testing::complete(4), {});
  b.add(testing::complete(4), {{0, 2}, {1, 3}});
  b.add(testing::complete(4), {{0, 4}, {1, 5}});
  const SignedGraph g = generate_balanced(b.vertex_count(), b.edges(), 9);
  const DecompositionTree t = decompose(g);
  EXPECT_EQ(t.leaves.size(), 3u);
  const Coloring c = va_signed_upper3(g, &t);
  EXPECT_TRUE(va_upper_check(g, c, 3));
}

TEST(K5PipelineTest, K3JoinUsesTriangleRootedColoring) {
  Builder b;
  b.add(testing::octahedron(), {});
  b.add(testing::complete(4), {{0, 0}, {1, 1}, {2, 2}});
  const SignedGraph g = generate_balanced(b.vertex_count(), b.edges(), 3);
  const DecompositionTree t = decompose(g);
  ASSERT_EQ(t.joins.size(), 1u);
  EXPECT_EQ(t.joins[0].shared.size(), 3u);
  EXPECT_TRUE(va_upper_check(g, va_signed_upper3(g, &t), 3));
}

TEST(K5PipelineTest, Examples) {
  const SignedGraph oct = generate_balanced(
      6, testing::octahedron().unsigned_edges(), 17);
  EXPECT_TRUE(va_upper_check(oct, va_signed_upper3(oct), 3));
  const SignedGraph w = canonical_wagner_graph();
  EXPECT_TRUE(va_upper_check(w, va_signed_upper3(w), 3));
  EXPECT_EQ(code_of([] { va_signed_upper3(testing::triangle(1, 1, -1)); }),
            ErrorCode::kNotBalanced);
}

TEST(K5PipelineTest, ListsMustHaveThreeColors) {
  ListAssignment lists = ListAssignment::uniform(6, ColorDomain(3).values());
  lists.set(2, {0, 1});
  EXPECT_EQ(code_of([&] { tree_color_k5_free(testing::octahedron(), lists); }),
            ErrorCode::kListTooSmall);
}

TEST(K5PipelineTest, TinyGraphs) {
  SignedGraph edge(2);
  edge.add_edge(0, 1, kNegative);
  EXPECT_TRUE(va_upper_check(edge, va_signed_upper3(edge), 3));
  EXPECT_TRUE(va_upper_check(SignedGraph(1), va_signed_upper3(SignedGraph(1)), 3));
}

class CliqueSumProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CliqueSumProperties, DecomposesAndColors) {
  std::mt19937_64 rng(GetParam());
  CliqueSumOptions options;
  options.leaves = 1 + static_cast<int>(rng() % 5);
  options.max_leaf_vertices = 4 + static_cast<int>(rng() % 6);
  const CliqueSumInstance inst = generate_clique_sum(options, rng());
  const SignedGraph g = generate_balanced(inst.vertex_count, inst.edges, rng());
  const DecompositionTree t = decompose(g);
  const ValidationResult v = validate_decomposition(t, g);
  ASSERT_TRUE(v.ok) << v.reason;
  // Leaves reconstruct the graph: every edge lies in some leaf.
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const DecompositionLeaf& leaf : t.leaves) {
      const auto& vs = leaf.vertices;
      covered = covered || (std::find(vs.begin(), vs.end(), e.u) != vs.end() &&
                            std::find(vs.begin(), vs.end(), e.v) != vs.end());
    }
    EXPECT_TRUE(covered);
  }
  const int wagner = static_cast<int>(
      std::count_if(t.leaves.begin(), t.leaves.end(), [](const auto& l) {
        return l.kind == LeafKind::kWagner;
      }));
  EXPECT_EQ(wagner, inst.wagner_leaves);
  EXPECT_TRUE(va_upper_check(g, va_signed_upper3(g, &t), 3));

  // All-positive inputs certify the unsigned bound.
  if (inst.vertex_count <= 10) {
    EXPECT_LE(oracle_va_unsigned(inst.vertex_count, inst.edges, 3), 3);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CliqueSumProperties,
                         ::testing::Range<std::uint64_t>(0, 80));

}  // namespace
}  // namespace signedva
