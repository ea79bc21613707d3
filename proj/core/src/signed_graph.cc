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

#include "signedva/signed_graph.h"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace signedva {

SignedGraph::SignedGraph(int vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  }
  adjacency_.resize(vertex_count);
}

SignedGraph::SignedGraph(int vertex_count, std::span<const Edge> edges)
    : SignedGraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v, e.sign);
}

SignedGraph SignedGraph::all_positive(int vertex_count,
                                      std::span<const UnsignedEdge> edges) {
  SignedGraph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v, kPositive);
  return g;
}

std::uint64_t SignedGraph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void SignedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::kUnknownVertex,
                "vertex " + std::to_string(v) + " not in 0.." +
                    std::to_string(vertex_count() - 1));
  }
}

int SignedGraph::add_edge(Vertex u, Vertex v, int sign) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidGraph,
                "self-loop at vertex " + std::to_string(u));
  }
  if (sign != kPositive && sign != kNegative) {
    throw Error(ErrorCode::kInvalidGraph,
                "edge sign must be +1 or -1, got " + std::to_string(sign));
  }
  const auto [it, inserted] = index_.emplace(key(u, v), edge_count());
  if (!inserted) {
    throw Error(ErrorCode::kInvalidGraph, "parallel edge " +
                                              std::to_string(u) + "-" +
                                              std::to_string(v));
  }
  const int id = edge_count();
  edges_.push_back({u, v, sign});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool SignedGraph::has_edge(Vertex u, Vertex v) const {
  return find_edge(u, v).has_value();
}

std::optional<int> SignedGraph::find_edge(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= vertex_count() ||
      v >= vertex_count()) {
    return std::nullopt;
  }
  const auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SignedGraph::sign(Vertex u, Vertex v) const {
  const auto id = find_edge(u, v);
  if (!id) {
    throw Error(ErrorCode::kInvalidGraph, "no edge " + std::to_string(u) +
                                              "-" + std::to_string(v));
  }
  return edges_[*id].sign;
}

void SignedGraph::set_sign(int edge_index, int sign) {
  if (sign != kPositive && sign != kNegative) {
    throw Error(ErrorCode::kInvalidGraph, "edge sign must be +1 or -1");
  }
  edges_.at(edge_index).sign = sign;
}

std::vector<UnsignedEdge> SignedGraph::unsigned_edges() const {
  std::vector<UnsignedEdge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  for (const Edge& e : a.edges()) {
    const auto id = b.find_edge(e.u, e.v);
    if (!id || b.edge(*id).sign != e.sign) return false;
  }
  return true;
}

std::optional<Vertex> LabeledGraph::local_of(Vertex host) const {
  const auto it = std::find(labels.begin(), labels.end(), host);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

LabeledGraph induced_subgraph(const SignedGraph& g,
                              std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  LabeledGraph out{SignedGraph(static_cast<int>(vertices.size())), {}};
  out.labels.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    if (local[vertices[i]] != -1) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate vertex in subset");
    }
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      out.graph.add_edge(local[e.u], local[e.v], e.sign);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (const Neighbor& n : g.neighbors(v)) {
        if (comp[n.vertex] == -1) {
          comp[n.vertex] = id;
          stack.push_back(n.vertex);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const SignedGraph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace signedva
