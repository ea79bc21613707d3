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

#include <gtest/gtest.h>

#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/json_io.h"
#include "signedva/k5.h"
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

TEST(GraphJsonTest, ParsesSpecFormat) {
  const GraphDocument doc = parse_graph(
      R"({"vertex_count": 3, "edges": [[0, 1, 1], [1, 2, -1], [2, 0, -1]]})");
  EXPECT_EQ(doc.graph, testing::triangle(1, -1, -1));
  EXPECT_FALSE(doc.rotation.has_value());
  EXPECT_FALSE(doc.outer_face.has_value());
}

TEST(GraphJsonTest, RoundTripsWithEmbedding) {
  const RotationSystem r = testing::octahedron_embedding();
  const std::string text = graph_to_json(testing::octahedron(), &r);
  const GraphDocument doc = parse_graph(text);
  EXPECT_EQ(doc.graph, testing::octahedron());
  EXPECT_EQ(doc.embedding(), r);
  EXPECT_EQ(parse_graph(graph_to_json(doc)), doc);
}

TEST(GraphJsonTest, EmbeddingDefaultsToPlanarEmbed) {
  const GraphDocument doc = parse_graph(graph_to_json(testing::complete(4)));
  EXPECT_TRUE(is_triangulation(doc.graph, doc.embedding()));
}

TEST(GraphJsonTest, MalformedInputsAreParseErrors) {
  for (const char* text :
       {"{", "[]", R"({"edges": []})", R"({"vertex_count": 2})",
        R"({"vertex_count": 2, "edges": [[0, 1]]})",
        R"({"vertex_count": 2, "edges": [[0, 1, 2]]})",
        R"({"vertex_count": 2, "edges": [[0, 0, 1]]})",
        R"({"vertex_count": 2, "edges": [[0, 5, 1]]})",
        R"({"vertex_count": "two", "edges": []})"}) {
    EXPECT_EQ(code_of([&] { parse_graph(text); }), ErrorCode::kParse) << text;
  }
}

TEST(ColoringJsonTest, RoundTrip) {
  const Coloring c(ColorDomain(3), {0, 1, -1, 1});
  EXPECT_EQ(parse_coloring(coloring_to_json(c)), c);
  EXPECT_EQ(code_of([] { parse_coloring(R"({"n": 2, "colors": [0]})"); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_coloring(R"({"colors": [0]})"); }),
            ErrorCode::kParse);
}

TEST(ListsJsonTest, RoundTrip) {
  const ListAssignment l({{1}, {0, 1, -1}, {2, -2}});
  EXPECT_EQ(parse_lists(lists_to_json(l), 3), l);
  EXPECT_EQ(code_of([] { parse_lists(R"({"0": [1]})", 2); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_lists(R"({"0": [1], "x": [1]})", 2); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_lists(R"({"0": [1], "1": []})", 2); }),
            ErrorCode::kParse);
}

TEST(DecompositionJsonTest, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CliqueSumOptions options;
    options.leaves = 4;
    const CliqueSumInstance inst = generate_clique_sum(options, seed);
    const SignedGraph g =
        SignedGraph::all_positive(inst.vertex_count, inst.edges);
    const DecompositionTree t = decompose(g);
    const DecompositionTree back = parse_decomposition(decomposition_to_json(t));
    EXPECT_EQ(back, t);
    EXPECT_TRUE(validate_decomposition(back, g).ok);
  }
  EXPECT_EQ(code_of([] {
              parse_decomposition(
                  R"({"leaves": [{"vertices": [0], "kind": "torus"}], "joins": []})");
            }),
            ErrorCode::kParse);
}

}  // namespace
}  // namespace signedva
