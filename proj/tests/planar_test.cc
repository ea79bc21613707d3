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

#include <numeric>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/planar.h"
#include "test_graphs.h"

namespace signedva {
namespace {

using ::testing::ElementsAre;

std::size_t total_length(const std::vector<Face>& faces) {
  return std::accumulate(faces.begin(), faces.end(), std::size_t{0},
                         [](std::size_t s, const Face& f) { return s + f.size(); });
}

RotationSystem cycle_embedding(int n) {
  RotationSystem r;
  for (int k = 0; k < n; ++k) r.rotation.push_back({(k + n - 1) % n, (k + 1) % n});
  for (int k = 0; k < n; ++k) r.outer_face.push_back(k);
  return r;
}

// W5: hub 0, rim 1..5.
SignedGraph wheel5() {
  SignedGraph g(6);
  for (int k = 1; k <= 5; ++k) {
    g.add_edge(0, k, kPositive);
    g.add_edge(k, k % 5 + 1, kPositive);
  }
  return g;
}

TEST(TraceFacesTest, Triangle) {
  const auto faces = trace_faces(testing::triangle(), cycle_embedding(3));
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 3u);
  EXPECT_EQ(faces[1].size(), 3u);
}

TEST(TraceFacesTest, FourCycle) {
  const auto faces = trace_faces(testing::cycle(4), cycle_embedding(4));
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 4u);
}

TEST(TraceFacesTest, K4HasFourTriangles) {
  const auto faces = trace_faces(testing::complete(4), testing::k4_embedding());
  ASSERT_EQ(faces.size(), 4u);
  for (const Face& f : faces) EXPECT_EQ(f.size(), 3u);
}

TEST(TraceFacesTest, MalformedRotations) {
  RotationSystem bad = testing::k4_embedding();
  bad.rotation[0] = {1, 2};
  EXPECT_THROW(trace_faces(testing::complete(4), bad), Error);
  // A permutation that is not planar: swapping two entries breaks Euler.
  RotationSystem twisted = testing::k4_embedding();
  twisted.rotation[3] = {0, 2, 1};
  twisted.rotation[0] = {1, 2, 3};
  EXPECT_THROW(trace_faces(testing::complete(4), twisted), Error);
}

TEST(ValidateNearTriangulationTest, Examples) {
  const SignedGraph k4 = testing::complete(4);
  RotationSystem r = testing::k4_embedding();
  for (const Face& f : trace_faces(k4, r)) {
    EXPECT_TRUE(validate_near_triangulation(k4, with_outer_face(k4, r, f)).ok);
  }
  SignedGraph c4 = testing::cycle(4);
  EXPECT_FALSE(validate_near_triangulation(c4, cycle_embedding(4)).ok);
  EXPECT_TRUE(validate_near_triangulation(testing::octahedron(),
                                          testing::octahedron_embedding())
                  .ok);
}

TEST(ValidateNearTriangulationTest, WheelWithRimOuterFace) {
  const SignedGraph w = wheel5();
  RotationSystem r = planar_embed(w);
  r = with_outer_face(w, r, std::vector<Vertex>{1, 2, 3, 4, 5});
  EXPECT_TRUE(validate_near_triangulation(w, r).ok);
  EXPECT_FALSE(is_triangulation(w, r));
}

TEST(IsTriangulationTest, Examples) {
  EXPECT_TRUE(is_triangulation(testing::complete(4), testing::k4_embedding()));
  EXPECT_TRUE(is_triangulation(testing::triangle(), cycle_embedding(3)));
  EXPECT_FALSE(is_triangulation(testing::cycle(4), cycle_embedding(4)));
}

TEST(WithOuterFaceTest, RejectsNonFaces) {
  EXPECT_THROW(with_outer_face(testing::octahedron(),
                               testing::octahedron_embedding(),
                               std::vector<Vertex>{1, 2, 3}),
               Error);
}

TEST(FindChordTest, Examples) {
  SignedGraph c4 = testing::cycle(4);
  c4.add_edge(0, 2, kPositive);
  const auto chord = find_chord(std::vector<Vertex>{0, 1, 2, 3}, c4);
  ASSERT_TRUE(chord.has_value());
  // Zero-based positions of v_1 and v_3.
  EXPECT_EQ(*chord, std::make_pair(0, 2));
  EXPECT_FALSE(find_chord(std::vector<Vertex>{0, 1, 2}, testing::triangle()));
  EXPECT_FALSE(find_chord(std::vector<Vertex>{1, 2, 3, 4, 5}, wheel5()));
}

TEST(FindChordTest, TieBreakMinimizesGapThenStart) {
  // Hexagon 0..5 with chords 1-4 and 2-4 and 0-2: (0,2) has the least gap.
  SignedGraph g = testing::cycle(6);
  g.add_edge(1, 4, kPositive);
  g.add_edge(2, 4, kPositive);
  g.add_edge(0, 2, kPositive);
  EXPECT_EQ(find_chord(std::vector<Vertex>{0, 1, 2, 3, 4, 5}, g),
            std::make_pair(0, 2));
}

TEST(EarNeighborsTest, Fan) {
  // Outer cycle 0,1,2,3 (v_n = 3) with interior vertex 4 joined to 0, 2, 3
  // and 1.
  SignedGraph g(5);
  for (int v = 0; v < 4; ++v) {
    g.add_edge(v, (v + 1) % 4, kPositive);
    g.add_edge(4, v, kPositive);
  }
  RotationSystem r = planar_embed(g);
  r = with_outer_face(g, r, std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_THAT(ear_neighbors(3, r), ElementsAre(0, 4, 2));
}

TEST(EarNeighborsTest, TriangleHasNoInteriorNeighbors) {
  RotationSystem r = cycle_embedding(3);
  EXPECT_THAT(ear_neighbors(2, r), ElementsAre(0, 1));
}

TEST(EarNeighborsTest, OctahedronOuterVertex) {
  EXPECT_THAT(ear_neighbors(2, testing::octahedron_embedding()),
              ElementsAre(0, 3, 5, 1));
}

TEST(EarNeighborsTest, RequiresOuterVertex) {
  EXPECT_THROW(ear_neighbors(5, testing::octahedron_embedding()), Error);
}

TEST(PlanarEmbedTest, Examples) {
  const SignedGraph k4 = testing::complete(4);
  EXPECT_EQ(trace_faces(k4, planar_embed(k4)).size(), 4u);
  try {
    planar_embed(testing::complete(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPlanar);
  }
  const SignedGraph c4 = testing::cycle(4);
  EXPECT_EQ(trace_faces(c4, planar_embed(c4)).size(), 2u);
}

TEST(PlanarEmbedTest, OuterFaceIsATracedFace) {
  const SignedGraph o = testing::octahedron();
  const RotationSystem r = planar_embed(o);
  bool found = false;
  for (const Face& f : trace_faces(o, r)) found = found || same_cycle(f, r.outer_face);
  EXPECT_TRUE(found);
  EXPECT_TRUE(is_triangulation(o, r));
}

TEST(RestrictEmbeddingTest, InducedPlaneSubgraph) {
  const SignedGraph o = testing::octahedron();
  const std::vector<Vertex> keep{0, 1, 2, 3, 4};
  const PlaneSubgraph sub = restrict_embedding(o, testing::octahedron_embedding(),
                                               keep, std::vector<Vertex>{1, 2, 3, 4});
  EXPECT_EQ(sub.graph.graph.vertex_count(), 5);
  EXPECT_TRUE(validate_near_triangulation(sub.graph.graph, sub.embedding).ok);
}

class GeneratedEmbeddings : public ::testing::TestWithParam<int> {};

TEST_P(GeneratedEmbeddings, FaceLengthsSumToTwiceEdges) {
  const int n = GetParam();
  const GeneratedTriangulation t = generate_triangulation(n, 3 * n, 100 + n);
  const SignedGraph g = SignedGraph::all_positive(n, t.edges);
  const auto faces = trace_faces(g, t.embedding);
  EXPECT_EQ(total_length(faces), 2u * g.edge_count());
  EXPECT_EQ(n - g.edge_count() + static_cast<int>(faces.size()), 2);
  const RotationSystem boost = planar_embed(g);
  EXPECT_EQ(total_length(trace_faces(g, boost)), 2u * g.edge_count());
  EXPECT_TRUE(is_triangulation(g, boost));
}

TEST_P(GeneratedEmbeddings, NoChordMeansNoEdgeAcrossOuterCycle) {
  const int n = GetParam();
  const GeneratedTriangulation t = generate_triangulation(n, n, 7 * n);
  SignedGraph g = SignedGraph::all_positive(n, t.edges);
  // Delete a vertex adjacent to the outer face and re-check on the remainder:
  // the outer cycle of a triangulation never has a chord.
  const auto& outer = t.embedding.outer_face;
  EXPECT_FALSE(find_chord(outer, g).has_value());
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t j = i + 2; j < outer.size(); ++j) {
      if (i == 0 && j + 1 == outer.size()) continue;
      EXPECT_FALSE(g.has_edge(outer[i], outer[j]));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, GeneratedEmbeddings, ::testing::Range(3, 20));

}  // namespace
}  // namespace signedva
