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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "property.h"
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

std::string join(const std::vector<int>& values) {
  std::ostringstream s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s << ' ';
    s << values[k];
  }
  return s.str();
}

void emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty()) {
    out << contents << '\n';
  } else {
    write_file(path, contents + "\n");
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kExitUsage;
    case ErrorCode::kNotBalanced: return kExitNotBalanced;
    case ErrorCode::kNotDecomposable: return kExitNotDecomposable;
    case ErrorCode::kOracleCapExceeded: return kExitOracleCap;
    case ErrorCode::kNotNearTriangulation: return kExitNotNearTriangulation;
    case ErrorCode::kDefect: return kExitDefect;
    default: return kExitDomain;
  }
}

struct Options {
  std::vector<std::string> command;
  bool json_report = false;
  std::string output;

  std::string graph_file;
  std::string coloring_file;
  std::string lists_file;
  int colors = 3;
  std::vector<Vertex> outer;
  std::string mode = "triangulation";
  std::vector<int> pin;
  int n_max = 0;
  bool no_prune = false;

  std::string suite;
  int count = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string dump_dir = "property-failures";

  std::vector<Vertex> switch_set;

  std::string kind = "triangulation";
  int vertices = 8;
  int edges = 10;
  int flips = -1;
  int leaves = 4;
  std::string signature = "balanced";
};

json command_json(const Options& o) { return o.command; }

int cmd_check(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_graph(read_file(o.graph_file));
  const Coloring c = parse_coloring(read_file(o.coloring_file));
  if (static_cast<int>(c.size()) != doc.graph.vertex_count()) {
    throw Error(ErrorCode::kParse, "coloring has " + std::to_string(c.size()) +
                                       " colors for " +
                                       std::to_string(doc.graph.vertex_count()) +
                                       " vertices");
  }
  const bool ok = is_signed_tree_coloring(doc.graph, c);
  const auto reports = class_reports(doc.graph, c);
  if (o.json_report) {
    json classes = json::array();
    for (const ClassReport& r : reports) {
      json entry{{"class", r.subgraph.class_value},
                 {"vertices", r.subgraph.vertices.size()},
                 {"edges", r.subgraph.edges.size()}};
      if (r.cycle) entry["cycle"] = *r.cycle;
      classes.push_back(std::move(entry));
    }
    out << json{{"command", command_json(o)},
                {"tree_coloring", ok},
                {"classes", classes}}
               .dump(2)
        << '\n';
  } else {
    for (const ClassReport& r : reports) {
      out << "class " << r.subgraph.class_value << ": "
          << r.subgraph.vertices.size() << " vertices, "
          << r.subgraph.edges.size() << " edges";
      if (r.cycle) out << ", cycle: " << join(*r.cycle);
      out << '\n';
    }
    out << (ok ? "signed tree-coloring" : "not a signed tree-coloring") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = parse_graph(read_file(o.graph_file));
  const SignedGraph& g = doc.graph;
  const int n = g.vertex_count();
  ListAssignment lists =
      o.lists_file.empty()
          ? ListAssignment::uniform(n, ColorDomain(o.colors).values())
          : parse_lists(read_file(o.lists_file), n);
  std::vector<Vertex> pinned;
  std::optional<Coloring> c;
  if (o.mode == "triangulation") {
    RotationSystem r = doc.embedding();
    if (!o.outer.empty()) r = with_outer_face(g, std::move(r), o.outer);
    if (o.lists_file.empty() && r.outer_face.size() >= 2) {
      for (int k = 0; k < 2; ++k) {
        lists.pin(r.outer_face[k], lists[r.outer_face[k]].front());
      }
    }
    c = tree_color_near_triangulation({g, r}, lists);
  } else if (o.mode == "k5") {
    c = tree_color_k5_free(g, lists);
  } else if (o.mode == "wagner") {
    const auto labeling = find_wagner_labeling(g);
    if (!labeling) throw Error(ErrorCode::kNotWagner, "graph is not Wagner");
    std::map<Vertex, int> label_of;
    for (int k = 0; k < kWagnerOrder; ++k) label_of[(*labeling)[k]] = k;
    WagnerPin pin{};
    if (o.pin.empty()) {
      pin = {0, 1, lists[(*labeling)[0]].front(), lists[(*labeling)[1]].front()};
    } else {
      for (int k = 0; k < 2; ++k) g.check_vertex(o.pin[k]);
      pin = {label_of.at(o.pin[0]), label_of.at(o.pin[1]), o.pin[2], o.pin[3]};
    }
    pinned = {(*labeling)[pin.first], (*labeling)[pin.second]};
    c = tree_color_wagner(g, pin, lists, labeling);
  } else {
    throw Error(ErrorCode::kParse, "unknown mode '" + o.mode + "'");
  }

  bool ok = is_signed_tree_coloring(g, *c);
  for (Vertex v = 0; ok && v < n; ++v) {
    const bool is_pinned =
        std::find(pinned.begin(), pinned.end(), v) != pinned.end();
    ok = is_pinned || lists.contains(v, (*c)[v]);
  }
  const std::string text = coloring_to_json(*c);
  if (!ok || !(parse_coloring(text) == *c)) {
    err << "error: produced coloring failed verification\n";
    return kExitDefect;
  }
  emit(o.output, text, out);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_graph(read_file(o.graph_file));
  const int n_max =
      o.n_max > 0 ? o.n_max
                  : std::clamp(doc.graph.vertex_count(), 1, kOracleMaxColors);
  OracleOptions options;
  options.prune = !o.no_prune;
  OracleResult result;
  try {
    result = oracle_va(doc.graph, n_max, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExhausted) throw;
    if (o.json_report) {
      out << json{{"command", command_json(o)}, {"va", nullptr},
                  {"n_max", n_max}}
                 .dump(2)
          << '\n';
    } else {
      out << "va > " << n_max << '\n';
    }
    return kExitFailed;
  }
  const auto colors = result.witness.colors();
  if (o.json_report) {
    out << json{{"command", command_json(o)},
                {"va", result.va},
                {"witness", json::parse(coloring_to_json(result.witness))},
                {"colorings_checked", result.colorings_checked}}
               .dump(2)
        << '\n';
  } else {
    out << "va = " << result.va << '\n'
        << "witness: " << join({colors.begin(), colors.end()}) << '\n'
        << "colorings_checked: " << result.colorings_checked << '\n';
  }
  return kExitOk;
}

int cmd_property(const Options& o, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw Error(ErrorCode::kParse, "unknown suite '" + o.suite + "'");
  const SuiteReport report = run_suite(*suite, o.count, o.seed, o.threads);
  if (report.failed() > 0) {
    std::filesystem::create_directories(o.dump_dir);
    for (const InstanceOutcome& i : report.instances) {
      if (i.passed) continue;
      const auto path = std::filesystem::path(o.dump_dir) /
                        (std::string(suite_name(*suite)) + "-" +
                         std::to_string(i.seed) + ".json");
      write_file(path.string(), i.dump + "\n");
      err << "dumped " << path.string() << '\n';
    }
  }
  if (o.json_report) {
    json instances = json::array();
    for (const InstanceOutcome& i : report.instances) {
      json entry{{"seed", i.seed}, {"passed", i.passed}, {"summary", i.summary}};
      if (!i.passed) entry["failure"] = i.failure;
      instances.push_back(std::move(entry));
    }
    out << json{{"command", command_json(o)},
                {"suite", suite_name(*suite)},
                {"seed", o.seed},
                {"count", report.instances.size()},
                {"passed", report.passed()},
                {"failed", report.failed()},
                {"seconds", report.seconds},
                {"instances", instances}}
               .dump(2)
        << '\n';
  } else {
    for (const InstanceOutcome& i : report.instances) {
      if (!i.passed) {
        out << "FAIL seed=" << i.seed << ' ' << i.summary << ": " << i.failure
            << '\n';
      }
    }
    out << "suite=" << suite_name(*suite) << " seed=" << o.seed
        << " count=" << report.instances.size()
        << " passed=" << report.passed() << " failed=" << report.failed()
        << " seconds=" << report.seconds << '\n';
  }
  return report.failed() == 0 ? kExitOk : kExitFailed;
}

int cmd_switch(const Options& o, std::ostream& out) {
  GraphDocument doc = parse_graph(read_file(o.graph_file));
  doc.graph = switch_set(doc.graph, o.switch_set);
  emit(o.output, graph_to_json(doc), out);
  return kExitOk;
}

int cmd_balance(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_graph(read_file(o.graph_file));
  const BalanceResult b = check_balance(doc.graph);
  if (o.json_report) {
    json report{{"command", command_json(o)}, {"balanced", b.balanced}};
    if (b.balanced) {
      report["theta"] = b.theta;
    } else {
      report["negative_cycle"] = b.negative_cycle;
    }
    out << report.dump(2) << '\n';
  } else if (b.balanced) {
    out << "balanced\ntheta: " << join(b.theta) << '\n';
  } else {
    out << "not balanced\nnegative cycle: " << join(b.negative_cycle) << '\n';
  }
  return b.balanced ? kExitOk : kExitFailed;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_graph(read_file(o.graph_file));
  const DecompositionTree tree = decompose(doc.graph);
  const std::string text = decomposition_to_json(tree);
  if (!(parse_decomposition(text) == tree)) {
    throw Error(ErrorCode::kDefect, "decomposition does not round-trip");
  }
  emit(o.output, text, out);
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  GraphDocument doc;
  std::vector<UnsignedEdge> edges;
  int n = 0;
  if (o.kind == "triangulation") {
    const int flips = o.flips >= 0 ? o.flips : 2 * o.vertices;
    GeneratedTriangulation t = generate_triangulation(o.vertices, flips, rng());
    n = t.vertex_count;
    edges = std::move(t.edges);
    doc.rotation = t.embedding.rotation;
    doc.outer_face = t.embedding.outer_face;
  } else if (o.kind == "clique-sum") {
    CliqueSumOptions options;
    options.leaves = o.leaves;
    const CliqueSumInstance inst = generate_clique_sum(options, rng());
    n = inst.vertex_count;
    edges = inst.edges;
  } else if (o.kind == "random") {
    n = o.vertices;
    edges = random_signed_graph(n, o.edges, rng()).unsigned_edges();
  } else {
    throw Error(ErrorCode::kParse, "unknown kind '" + o.kind + "'");
  }
  if (o.signature == "balanced") {
    doc.graph = generate_balanced(n, edges, rng());
  } else if (o.signature == "positive") {
    doc.graph = SignedGraph::all_positive(n, edges);
  } else if (o.signature == "random") {
    doc.graph = SignedGraph::all_positive(n, edges);
    for (int e = 0; e < doc.graph.edge_count(); ++e) {
      doc.graph.set_sign(e, (rng() & 1) ? kPositive : kNegative);
    }
  } else {
    throw Error(ErrorCode::kParse, "unknown signature '" + o.signature + "'");
  }
  const std::string text = graph_to_json(doc);
  emit(o.output, text, out);
  if (!o.output.empty()) {
    out << "wrote " << o.output << " (seed " << o.seed << ")\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  o.command = args;
  CLI::App app{"Signed tree-colorings of signed graphs", "signedva"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "signedva 0.1.0");

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json_report, "Print the report as JSON");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the result to a file");
  };

  CLI::App* check = app.add_subcommand("check", "Verify a signed tree-coloring");
  check->add_option("graph", o.graph_file)->required();
  check->add_option("coloring", o.coloring_file)->required();
  add_json(check);

  CLI::App* color = app.add_subcommand("color", "Construct a tree-coloring");
  color->add_option("graph", o.graph_file)->required();
  auto* lists_opt = color->add_option("--lists", o.lists_file, "List file");
  color->add_option("--n", o.colors, "Use M_n lists")->excludes(lists_opt);
  color->add_option("--outer", o.outer, "Outer face, comma separated")
      ->delimiter(',');
  color->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"triangulation", "k5", "wagner"}));
  color->add_option("--pin", o.pin, "Wagner pin u,v,alpha,beta")
      ->delimiter(',')
      ->expected(4);
  add_output(color);

  CLI::App* oracle = app.add_subcommand("oracle", "Exact va by search");
  oracle->add_option("graph", o.graph_file)->required();
  oracle->add_option("--n-max", o.n_max, "Largest n to try");
  oracle->add_flag("--no-prune", o.no_prune, "Test complete colorings only");
  add_json(oracle);

  CLI::App* property = app.add_subcommand("property", "Run a property suite");
  property->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember(
          {"switching", "allpositive", "triangulation", "k5", "wagner"}));
  property->add_option("--count", o.count)->check(CLI::NonNegativeNumber);
  property->add_option("--seed", o.seed);
  property->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  property->add_option("--dump-dir", o.dump_dir);
  add_json(property);

  CLI::App* sw = app.add_subcommand("switch", "Switch a vertex set");
  sw->add_option("graph", o.graph_file)->required();
  sw->add_option("--vertices", o.switch_set)->delimiter(',')->required();
  add_output(sw);

  CLI::App* balance = app.add_subcommand("balance", "Test balance");
  balance->add_option("graph", o.graph_file)->required();
  add_json(balance);

  CLI::App* dec = app.add_subcommand("decompose", "Clique-sum decomposition");
  dec->add_option("graph", o.graph_file)->required();
  add_output(dec);

  CLI::App* gen = app.add_subcommand("generate", "Generate an instance");
  gen->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"triangulation", "clique-sum", "random"}));
  gen->add_option("--vertices", o.vertices);
  gen->add_option("--edges", o.edges);
  gen->add_option("--flips", o.flips);
  gen->add_option("--leaves", o.leaves);
  gen->add_option("--seed", o.seed);
  gen->add_option("--signature", o.signature)
      ->check(CLI::IsMember({"balanced", "positive", "random"}));
  add_output(gen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "signedva 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (color->parsed()) return cmd_color(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (property->parsed()) return cmd_property(o, out, err);
    if (sw->parsed()) return cmd_switch(o, out);
    if (balance->parsed()) return cmd_balance(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotBalanced) {
      err << "not balanced\nnegative cycle: " << join(e.witness()) << '\n';
    } else {
      err << "error: " << e.what() << '\n';
      if (!e.witness().empty()) err << "witness: " << join(e.witness()) << '\n';
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace signedva::tools
