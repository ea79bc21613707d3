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

#include "signedva/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace signedva {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get_as(const json& node, const std::string& what) {
  try {
    return node.get<T>();
  } catch (const json::exception&) {
    parse_error("field '" + what + "' has the wrong type");
  }
}

const json& require(const json& object, const std::string& key) {
  if (!object.is_object() || !object.contains(key)) {
    parse_error("missing field '" + key + "'");
  }
  return object.at(key);
}

std::vector<Vertex> vertex_list(const json& node, const std::string& what) {
  return get_as<std::vector<Vertex>>(node, what);
}

json rotation_json(const RotationSystem& r) {
  return json{{"rotation", r.rotation}, {"outer_face", r.outer_face}};
}

}  // namespace

RotationSystem GraphDocument::embedding() const {
  RotationSystem r;
  if (rotation) {
    r.rotation = *rotation;
    const auto faces = trace_faces(graph, r);
    if (outer_face) {
      r = with_outer_face(graph, std::move(r), *outer_face);
    } else if (!faces.empty()) {
      r.outer_face = faces.front();
    }
    return r;
  }
  r = planar_embed(graph);
  if (outer_face) r = with_outer_face(graph, std::move(r), *outer_face);
  return r;
}

GraphDocument parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  const int n = get_as<int>(require(doc, "vertex_count"), "vertex_count");
  const json& edges = require(doc, "edges");
  if (!edges.is_array()) parse_error("field 'edges' must be an array");
  GraphDocument out;
  try {
    out.graph = SignedGraph(n);
    for (const json& e : edges) {
      const auto triple = get_as<std::vector<int>>(e, "edges[]");
      if (triple.size() != 3) parse_error("each edge must be [u, v, sign]");
      out.graph.add_edge(triple[0], triple[1], triple[2]);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    parse_error(e.what());
  }
  if (doc.contains("rotation")) {
    out.rotation =
        get_as<std::vector<std::vector<Vertex>>>(doc.at("rotation"), "rotation");
  }
  if (doc.contains("outer_face")) {
    out.outer_face = vertex_list(doc.at("outer_face"), "outer_face");
  }
  return out;
}

std::string graph_to_json(const GraphDocument& doc) {
  json out;
  out["vertex_count"] = doc.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v, e.sign});
  out["edges"] = std::move(edges);
  if (doc.rotation) out["rotation"] = *doc.rotation;
  if (doc.outer_face) out["outer_face"] = *doc.outer_face;
  return out.dump();
}

std::string graph_to_json(const SignedGraph& g,
                          const RotationSystem* embedding) {
  GraphDocument doc{g, std::nullopt, std::nullopt};
  if (embedding) {
    doc.rotation = embedding->rotation;
    doc.outer_face = embedding->outer_face;
  }
  return graph_to_json(doc);
}

Coloring parse_coloring(std::string_view text) {
  const json doc = parse_json(text);
  const int n = get_as<int>(require(doc, "n"), "n");
  auto colors = get_as<std::vector<int>>(require(doc, "colors"), "colors");
  try {
    return Coloring(ColorDomain(n), std::move(colors));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

std::string coloring_to_json(const Coloring& c) {
  const auto colors = c.colors();
  return json{{"n", c.domain().n()},
              {"colors", std::vector<int>(colors.begin(), colors.end())}}
      .dump();
}

ListAssignment parse_lists(std::string_view text, int vertex_count) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("lists must be an object keyed by vertex");
  std::vector<std::vector<int>> lists(vertex_count);
  std::vector<char> seen(vertex_count, 0);
  for (const auto& [key, value] : doc.items()) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= vertex_count) parse_error("bad list key '" + key + "'");
    lists[v] = get_as<std::vector<int>>(value, "lists[" + key + "]");
    seen[v] = 1;
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (!seen[v] || lists[v].empty()) {
      parse_error("vertex " + std::to_string(v) + " has no list");
    }
  }
  return ListAssignment(std::move(lists));
}

std::string lists_to_json(const ListAssignment& lists) {
  json out = json::object();
  for (int v = 0; v < lists.vertex_count(); ++v) {
    const auto list = lists[v];
    out[std::to_string(v)] = std::vector<int>(list.begin(), list.end());
  }
  return out.dump();
}

DecompositionTree parse_decomposition(std::string_view text) {
  const json doc = parse_json(text);
  DecompositionTree tree;
  const json& leaves = require(doc, "leaves");
  const json& joins = require(doc, "joins");
  if (!leaves.is_array() || !joins.is_array()) {
    parse_error("'leaves' and 'joins' must be arrays");
  }
  for (const json& node : leaves) {
    DecompositionLeaf leaf;
    leaf.vertices = vertex_list(require(node, "vertices"), "vertices");
    const auto kind = get_as<std::string>(require(node, "kind"), "kind");
    if (kind == "triangulation") {
      leaf.kind = LeafKind::kTriangulation;
    } else if (kind == "wagner") {
      leaf.kind = LeafKind::kWagner;
    } else {
      parse_error("unknown leaf kind '" + kind + "'");
    }
    if (node.contains("rotation")) {
      RotationSystem r;
      r.rotation = get_as<std::vector<std::vector<Vertex>>>(node.at("rotation"),
                                                            "rotation");
      if (node.contains("outer_face")) {
        r.outer_face = vertex_list(node.at("outer_face"), "outer_face");
      }
      leaf.rotation = std::move(r);
    }
    if (node.contains("wagner_map")) {
      const auto map = vertex_list(node.at("wagner_map"), "wagner_map");
      if (map.size() != kWagnerOrder) parse_error("wagner_map needs 8 entries");
      WagnerLabeling labeling{};
      std::copy(map.begin(), map.end(), labeling.begin());
      leaf.wagner_map = labeling;
    }
    tree.leaves.push_back(std::move(leaf));
  }
  for (const json& node : joins) {
    const auto pair = vertex_list(require(node, "leaves"), "leaves");
    if (pair.size() != 2) parse_error("a join names exactly two leaves");
    tree.joins.push_back(
        {pair[0], pair[1], vertex_list(require(node, "shared"), "shared")});
  }
  return tree;
}

std::string decomposition_to_json(const DecompositionTree& tree) {
  json leaves = json::array();
  for (const DecompositionLeaf& leaf : tree.leaves) {
    json node{{"vertices", leaf.vertices},
              {"kind", leaf.kind == LeafKind::kWagner ? "wagner" : "triangulation"}};
    if (leaf.rotation) node.update(rotation_json(*leaf.rotation));
    if (leaf.wagner_map) {
      node["wagner_map"] = std::vector<Vertex>(leaf.wagner_map->begin(),
                                               leaf.wagner_map->end());
    }
    leaves.push_back(std::move(node));
  }
  json joins = json::array();
  for (const DecompositionJoin& join : tree.joins) {
    joins.push_back({{"leaves", {join.first_leaf, join.second_leaf}},
                     {"shared", join.shared}});
  }
  return json{{"leaves", std::move(leaves)}, {"joins", std::move(joins)}}.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace signedva
