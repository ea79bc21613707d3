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

#include "signedva/switching.h"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

namespace signedva {

SignedGraph switch_vertex(const SignedGraph& g, Vertex u) {
  g.check_vertex(u);
  SignedGraph out = g;
  for (const Neighbor& n : g.neighbors(u)) {
    out.set_sign(n.edge, -g.edge(n.edge).sign);
  }
  return out;
}

SignedGraph switch_set(const SignedGraph& g, std::span<const Vertex> s) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    in_set[v] = 1;
  }
  SignedGraph out = g;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (in_set[e.u] != in_set[e.v]) out.set_sign(id, -e.sign);
  }
  return out;
}

BalanceResult check_balance(const SignedGraph& g) {
  const int n = g.vertex_count();
  Potential theta(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<Vertex> order;
  std::vector<char> tree_edge(g.edge_count(), 0);
  order.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (theta[root] != 0) continue;
    theta[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      order.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (theta[nb.vertex] != 0) continue;
        theta[nb.vertex] = theta[v] * g.edge(nb.edge).sign;
        parent[nb.vertex] = v;
        depth[nb.vertex] = depth[v] + 1;
        tree_edge[nb.edge] = 1;
        queue.push(nb.vertex);
      }
    }
  }

  for (Vertex v : order) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (tree_edge[nb.edge]) continue;
      if (g.edge(nb.edge).sign == theta[v] * theta[nb.vertex]) continue;
      // Tree path v .. lca .. w, closed by the edge w v.
      Vertex a = v;
      Vertex b = nb.vertex;
      std::vector<Vertex> left;
      std::vector<Vertex> right;
      while (depth[a] > depth[b]) {
        left.push_back(a);
        a = parent[a];
      }
      while (depth[b] > depth[a]) {
        right.push_back(b);
        b = parent[b];
      }
      while (a != b) {
        left.push_back(a);
        right.push_back(b);
        a = parent[a];
        b = parent[b];
      }
      left.push_back(a);
      left.insert(left.end(), right.rbegin(), right.rend());
      return {false, {}, std::move(left)};
    }
  }
  return {true, std::move(theta), {}};
}

void require_balanced(const SignedGraph& g) {
  BalanceResult result = check_balance(g);
  if (!result.balanced) {
    throw Error(ErrorCode::kNotBalanced,
                "signature is not balanced: found a cycle with an odd number "
                "of negative edges",
                std::move(result.negative_cycle));
  }
}

SignedGraph signature_from_potential(int vertex_count,
                                     std::span<const UnsignedEdge> edges,
                                     std::span<const int> theta) {
  if (static_cast<int>(theta.size()) != vertex_count) {
    throw Error(ErrorCode::kInvalidGraph,
                "potential has " + std::to_string(theta.size()) +
                    " entries for " + std::to_string(vertex_count) +
                    " vertices");
  }
  for (int t : theta) {
    if (t != 1 && t != -1) {
      throw Error(ErrorCode::kInvalidGraph, "potential values must be +-1");
    }
  }
  SignedGraph g(vertex_count);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    g.add_edge(u, v, theta[u] * theta[v]);
  }
  return g;
}

std::vector<SignedGraph> switching_orbit_sample(const SignedGraph& g,
                                                int count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<SignedGraph> out;
  out.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (coin(rng)) s.push_back(v);
    }
    out.push_back(switch_set(g, s));
  }
  return out;
}

}  // namespace signedva
