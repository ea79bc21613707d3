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

#include <gtest/gtest.h>

#include "signedva/coloring.h"
#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/oracle.h"
#include "signedva/planar.h"
#include "signedva/switching.h"
#include "test_graphs.h"

namespace signedva {
namespace {

OracleOptions unpruned() {
  OracleOptions o;
  o.prune = false;
  o.fix_first_sign = false;
  return o;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kDefect;
}

TEST(OracleTest, Examples) {
  EXPECT_EQ(oracle_va(SignedGraph(1), 3).va, 1);
  EXPECT_EQ(oracle_va(testing::triangle(), 3).va, 2);
  EXPECT_EQ(oracle_va(testing::triangle(1, -1, -1), 3).va, 2);
  EXPECT_EQ(oracle_va(testing::complete(5), 4).va, 3);
}

TEST(OracleTest, UnprunedAgrees) {
  for (const SignedGraph& g :
       {testing::triangle(), testing::triangle(1, -1, -1), testing::complete(5),
        testing::octahedron()}) {
    const OracleResult a = oracle_va(g, 4);
    const OracleResult b = oracle_va(g, 4, unpruned());
    EXPECT_EQ(a.va, b.va);
    EXPECT_TRUE(va_upper_check(g, b.witness, b.va));
    EXPECT_GT(b.colorings_checked, 0);
  }
}

TEST(OracleTest, WitnessCertifiesValue) {
  const OracleResult r = oracle_va(testing::complete(6), 6);
  EXPECT_EQ(r.va, 3);
  EXPECT_TRUE(va_upper_check(testing::complete(6), r.witness, 3));
}

TEST(OracleTest, CapsAndExhaustion) {
  EXPECT_EQ(code_of([] { oracle_va(SignedGraph(13), 2); }),
            ErrorCode::kOracleCapExceeded);
  EXPECT_EQ(code_of([] { oracle_va(SignedGraph(2), 0); }),
            ErrorCode::kOracleCapExceeded);
  EXPECT_EQ(code_of([] { oracle_va(testing::triangle(), 1); }),
            ErrorCode::kExhausted);
}

TEST(OracleUnsignedTest, Examples) {
  const std::vector<UnsignedEdge> path{{0, 1}, {1, 2}, {1, 3}};
  EXPECT_EQ(oracle_va_unsigned(4, path, 3), 1);
  EXPECT_EQ(oracle_va_unsigned(3, testing::triangle().unsigned_edges(), 3), 2);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(oracle_va_unsigned(n, testing::complete(n).unsigned_edges(), n),
              (n + 1) / 2);
  }
  EXPECT_EQ(code_of([] {
              oracle_va_unsigned(5, testing::complete(5).unsigned_edges(), 2);
            }),
            ErrorCode::kExhausted);
}

TEST(GenerateTriangulationTest, Examples) {
  const GeneratedTriangulation k3 = generate_triangulation(3, 0, 1);
  EXPECT_EQ(k3.edges.size(), 3u);
  const GeneratedTriangulation k4 = generate_triangulation(4, 0, 1);
  EXPECT_EQ(SignedGraph::all_positive(4, k4.edges), testing::complete(4));
  EXPECT_THROW(generate_triangulation(2, 0, 1), Error);
}

TEST(GenerateTriangulationTest, Deterministic) {
  const auto a = generate_triangulation(12, 20, 99);
  const auto b = generate_triangulation(12, 20, 99);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.embedding, b.embedding);
}

TEST(GenerateBalancedTest, Examples) {
  const auto edges = testing::triangle().unsigned_edges();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(is_balanced(generate_balanced(3, edges, seed)));
  }
  EXPECT_EQ(generate_balanced(3, edges, 4), generate_balanced(3, edges, 4));
}

class OracleProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleProperties, TriangulationsHaveVaAtMostThree) {
  std::mt19937_64 rng(GetParam());
  const int n = std::uniform_int_distribution<int>(3, 10)(rng);
  const GeneratedTriangulation t = generate_triangulation(n, 2 * n, rng());
  const SignedGraph g = generate_balanced(n, t.edges, rng());
  EXPECT_TRUE(is_triangulation(g, t.embedding));
  EXPECT_EQ(g.edge_count(), 3 * n - 6);
  EXPECT_LE(oracle_va(g, 3).va, 3);
}

TEST_P(OracleProperties, AllPositiveMatchesUnsigned) {
  std::mt19937_64 rng(GetParam() + 500);
  const int n = std::uniform_int_distribution<int>(1, 8)(rng);
  const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
  const auto edges = random_signed_graph(n, m, rng()).unsigned_edges();
  EXPECT_EQ(oracle_va(SignedGraph::all_positive(n, edges), n).va,
            oracle_va_unsigned(n, edges, n));
}

TEST_P(OracleProperties, MonotoneUnderDeletion) {
  std::mt19937_64 rng(GetParam() + 900);
  const int n = std::uniform_int_distribution<int>(2, 8)(rng);
  const int m = std::uniform_int_distribution<int>(1, n * (n - 1) / 2)(rng);
  const SignedGraph g = random_signed_graph(n, m, rng());
  const int va = oracle_va(g, 6).va;
  // Delete one edge.
  const int drop = static_cast<int>(rng() % g.edge_count());
  SignedGraph fewer(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e != drop) fewer.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).sign);
  }
  EXPECT_LE(oracle_va(fewer, 6).va, va);
  // Delete one vertex.
  std::vector<Vertex> keep;
  for (Vertex v = 1; v < n; ++v) keep.push_back(v);
  EXPECT_LE(oracle_va(induced_subgraph(g, keep).graph, 6).va, va);
}

TEST_P(OracleProperties, PrunedAndUnprunedAgree) {
  std::mt19937_64 rng(GetParam() + 1300);
  const int n = std::uniform_int_distribution<int>(1, 6)(rng);
  const int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
  const SignedGraph g = random_signed_graph(n, m, rng());
  EXPECT_EQ(oracle_va(g, 4).va, oracle_va(g, 4, unpruned()).va);
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleProperties,
                         ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
}  // namespace signedva
