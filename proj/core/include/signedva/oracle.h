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

#ifndef SIGNEDVA_ORACLE_H_
#define SIGNEDVA_ORACLE_H_

#include <cstdint>
#include <span>

#include "signedva/coloring.h"
#include "signedva/signed_graph.h"

namespace signedva {

inline constexpr int kOracleMaxVertices = 12;
inline constexpr int kOracleMaxColors = 24;

struct OracleOptions {
  // Abandon partial colorings that already close a class cycle.
  bool prune = true;
  // Restrict vertex 0 to non-negative colors (global negation symmetry).
  bool fix_first_sign = true;
};

struct OracleResult {
  int va = 0;
  Coloring witness{std::vector<int>{}};
  // Search nodes visited when pruning; complete colorings tested otherwise.
  std::int64_t colorings_checked = 0;
};

// Least n <= n_max admitting a signed tree-n-coloring, by exhaustive search.
// Without pruning every coloring in M_n^V is tested with
// is_signed_tree_coloring, which makes the unpruned mode an independent
// cross-check of the incremental search.
//
// Throws kOracleCapExceeded (more than kOracleMaxVertices vertices, n_max
// out of range) and kExhausted (no n <= n_max works).
OracleResult oracle_va(const SignedGraph& g, int n_max,
                       const OracleOptions& options = {});

// Least k <= k_max such that the vertices split into k sets inducing forests.
int oracle_va_unsigned(int vertex_count, std::span<const UnsignedEdge> edges,
                       int k_max);

}  // namespace signedva

#endif  // SIGNEDVA_ORACLE_H_
