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

#ifndef SIGNEDVA_JSON_IO_H_
#define SIGNEDVA_JSON_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signedva/coloring.h"
#include "signedva/k5.h"
#include "signedva/list_coloring.h"
#include "signedva/planar.h"
#include "signedva/signed_graph.h"

// File formats. All parsers throw Error(kParse) on malformed input.
//
//   graph:       {"vertex_count": n, "edges": [[u, v, sign], ...],
//                 "rotation": [[...], ...], "outer_face": [...]}
//                (rotation and outer_face optional)
//   coloring:    {"n": n, "colors": [c_0, c_1, ...]}
//   lists:       {"0": [..], "1": [..], ...}   one key per vertex
//   decomposition:
//                {"leaves": [{"vertices": [...], "kind": "triangulation" |
//                             "wagner", "rotation": [[...]],
//                             "outer_face": [...], "wagner_map": [...]}],
//                 "joins": [{"leaves": [a, b], "shared": [...]}]}
namespace signedva {

struct GraphDocument {
  SignedGraph graph;
  std::optional<std::vector<std::vector<Vertex>>> rotation;
  std::optional<std::vector<Vertex>> outer_face;

  // The stored embedding with its outer face, falling back to the first
  // traced face when none is stored. Computes one with planar_embed when the
  // document has no rotation.
  RotationSystem embedding() const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_graph(std::string_view text);
std::string graph_to_json(const GraphDocument& doc);
std::string graph_to_json(const SignedGraph& g,
                          const RotationSystem* embedding = nullptr);

Coloring parse_coloring(std::string_view text);
std::string coloring_to_json(const Coloring& c);

ListAssignment parse_lists(std::string_view text, int vertex_count);
std::string lists_to_json(const ListAssignment& lists);

DecompositionTree parse_decomposition(std::string_view text);
std::string decomposition_to_json(const DecompositionTree& tree);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace signedva

#endif  // SIGNEDVA_JSON_IO_H_
