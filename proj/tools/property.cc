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

#include "property.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"
#include "signedva/coloring.h"
#include "signedva/error.h"
#include "signedva/generators.h"
#include "signedva/json_io.h"
#include "signedva/k5.h"
#include "signedva/list_coloring.h"
#include "signedva/oracle.h"
#include "signedva/switching.h"

namespace signedva::tools {

namespace {

using nlohmann::json;

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int pick(std::mt19937_64& rng, const std::vector<int>& values) {
  return values[uniform(rng, 0, static_cast<int>(values.size()) - 1)];
}

json graph_json(const SignedGraph& g, const RotationSystem* r = nullptr) {
  return json::parse(graph_to_json(g, r));
}

bool respects_lists(const Coloring& c, const ListAssignment& lists) {
  for (int v = 0; v < lists.vertex_count(); ++v) {
    if (!lists.contains(v, c[v])) return false;
  }
  return true;
}

int max_edges(int n) { return n * (n - 1) / 2; }

// Oracle value, or 0 when the graph is not tree-n_max-colorable.
int oracle_or_zero(const SignedGraph& g, int n_max) {
  try {
    return oracle_va(g, n_max).va;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExhausted) throw;
    return 0;
  }
}

void run_switching(std::mt19937_64& rng, InstanceOutcome& out, json& dump) {
  constexpr int kNMax = 4;
  // Dense enough that most instances contain cycles.
  const int n = uniform(rng, 3, 8);
  const int m = uniform(rng, std::min(n, max_edges(n)), std::min(14, max_edges(n)));
  const SignedGraph g = random_signed_graph(n, m, rng());
  dump["graph"] = graph_json(g);
  const int base = oracle_or_zero(g, kNMax);
  std::ostringstream summary;
  summary << "n=" << n << " m=" << m << " va=" << base;
  out.passed = true;
  int k = 0;
  for (const SignedGraph& h : switching_orbit_sample(g, 3, rng())) {
    const int va = oracle_or_zero(h, kNMax);
    if (va != base) {
      out.passed = false;
      out.failure = "switching " + std::to_string(k) + " has va " +
                    std::to_string(va) + ", original " + std::to_string(base);
      dump["switched"] = graph_json(h);
      break;
    }
    ++k;
  }
  out.summary = summary.str();
}

void run_all_positive(std::mt19937_64& rng, InstanceOutcome& out,
                      json& dump) {
  const int n = uniform(rng, 1, 8);
  const int m = uniform(rng, 0, max_edges(n));
  const SignedGraph random = random_signed_graph(n, m, rng());
  const auto edges = random.unsigned_edges();
  const SignedGraph g = SignedGraph::all_positive(n, edges);
  dump["graph"] = graph_json(g);
  const int signed_va = oracle_va(g, n).va;
  const int unsigned_va = oracle_va_unsigned(n, edges, n);
  out.summary = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                " va=" + std::to_string(signed_va);
  out.passed = signed_va == unsigned_va;
  if (!out.passed) {
    out.failure = "signed va " + std::to_string(signed_va) +
                  " but unsigned va " + std::to_string(unsigned_va);
  }
}

void run_triangulation(std::mt19937_64& rng, InstanceOutcome& out,
                       json& dump) {
  const int n = uniform(rng, 4, 14);
  const GeneratedTriangulation tri = generate_triangulation(n, 2 * n, rng());
  const SignedGraph g = generate_balanced(n, tri.edges, rng());
  dump["graph"] = graph_json(g, &tri.embedding);
  const std::vector<int> m3 = ColorDomain(3).values();
  ListAssignment lists = ListAssignment::uniform(n, m3);
  const auto& outer = tri.embedding.outer_face;
  lists.pin(outer[0], pick(rng, m3));
  lists.pin(outer[1], pick(rng, m3));
  dump["lists"] = json::parse(lists_to_json(lists));
  const Coloring c = tree_color_near_triangulation({g, tri.embedding}, lists);
  out.summary = "n=" + std::to_string(n) + " m=" +
                std::to_string(g.edge_count());
  out.passed = is_signed_tree_coloring(g, c) && respects_lists(c, lists) &&
               va_upper_check(g, c, 3);
  if (!out.passed) out.failure = "coloring rejected by the checker";
}

void run_k5(std::mt19937_64& rng, InstanceOutcome& out, json& dump) {
  CliqueSumOptions options;
  options.leaves = uniform(rng, 1, 5);
  options.max_leaf_vertices = uniform(rng, 4, 9);
  const CliqueSumInstance inst = generate_clique_sum(options, rng());
  const SignedGraph g = generate_balanced(inst.vertex_count, inst.edges, rng());
  dump["graph"] = graph_json(g);
  const DecompositionTree tree = decompose(g);
  std::ostringstream summary;
  summary << "n=" << inst.vertex_count << " m=" << inst.edges.size()
          << " leaves=" << tree.leaves.size() << " wagner="
          << inst.wagner_leaves << " k3_joins=" << inst.k3_joins;
  out.summary = summary.str();
  if (const ValidationResult v = validate_decomposition(tree, g); !v) {
    out.failure = "decomposition invalid: " + v.reason;
    return;
  }
  const Coloring c = va_signed_upper3(g, &tree);
  out.passed = is_signed_tree_coloring(g, c) && va_upper_check(g, c, 3);
  if (!out.passed) out.failure = "coloring rejected by the checker";
}

void run_wagner(std::mt19937_64& rng, InstanceOutcome& out, json& dump) {
  SignedGraph w = canonical_wagner_graph();
  for (int e = 0; e < w.edge_count(); ++e) {
    w.set_sign(e, uniform(rng, 0, 1) ? kPositive : kNegative);
  }
  dump["graph"] = graph_json(w);
  const Edge& pinned = w.edge(uniform(rng, 0, w.edge_count() - 1));
  const bool flip = uniform(rng, 0, 1) == 1;
  std::vector<int> palette = ColorDomain(5).values();
  WagnerPin pin{flip ? pinned.v : pinned.u, flip ? pinned.u : pinned.v,
                pick(rng, palette), pick(rng, palette)};
  std::vector<std::vector<int>> raw(kWagnerOrder);
  for (int v = 0; v < kWagnerOrder; ++v) {
    std::shuffle(palette.begin(), palette.end(), rng);
    raw[v].assign(palette.begin(), palette.begin() + 3);
  }
  raw[pin.first] = {pin.alpha};
  raw[pin.second] = {pin.beta};
  const ListAssignment lists(std::move(raw));
  dump["lists"] = json::parse(lists_to_json(lists));
  dump["pin"] = {pin.first, pin.second, pin.alpha, pin.beta};
  std::ostringstream summary;
  summary << "pin=(" << pin.first << "," << pin.second << ") colors=("
          << pin.alpha << "," << pin.beta << ")";
  out.summary = summary.str();
  const Coloring c = tree_color_wagner(w, pin, lists);
  out.passed = is_signed_tree_coloring(w, c) && respects_lists(c, lists) &&
               c[pin.first] == pin.alpha && c[pin.second] == pin.beta;
  if (!out.passed) out.failure = "coloring rejected by the checker";
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kSwitching, Suite::kAllPositive, Suite::kTriangulation,
                  Suite::kK5, Suite::kWagner}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kSwitching: return "switching";
    case Suite::kAllPositive: return "allpositive";
    case Suite::kTriangulation: return "triangulation";
    case Suite::kK5: return "k5";
    case Suite::kWagner: return "wagner";
  }
  return "unknown";
}

InstanceOutcome run_instance(Suite suite, std::uint64_t seed) {
  InstanceOutcome out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  json dump{{"suite", suite_name(suite)}, {"seed", seed}};
  try {
    switch (suite) {
      case Suite::kSwitching: run_switching(rng, out, dump); break;
      case Suite::kAllPositive: run_all_positive(rng, out, dump); break;
      case Suite::kTriangulation: run_triangulation(rng, out, dump); break;
      case Suite::kK5: run_k5(rng, out, dump); break;
      case Suite::kWagner: run_wagner(rng, out, dump); break;
    }
  } catch (const std::exception& e) {
    out.passed = false;
    out.failure = e.what();
  }
  if (!out.passed) {
    dump["failure"] = out.failure;
    out.dump = dump.dump(2);
  }
  return out;
}

std::vector<std::uint64_t> instance_seeds(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> seeds(std::max(count, 0));
  for (auto& s : seeds) s = rng();
  return seeds;
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(
      instances.begin(), instances.end(),
      [](const InstanceOutcome& o) { return o.passed; }));
}

SuiteReport run_suite(Suite suite, int count, std::uint64_t seed,
                      int threads) {
  SuiteReport report;
  report.suite = suite;
  report.seed = seed;
  const auto seeds = instance_seeds(seed, count);
  report.instances.resize(seeds.size());
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < seeds.size(); k = next++) {
      report.instances[k] = run_instance(suite, seeds[k]);
    }
  };
  const int workers = std::clamp(threads, 1, std::max(1, count));
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace signedva::tools
