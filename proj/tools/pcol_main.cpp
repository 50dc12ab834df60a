// Copyright 2026 The pcol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: colour, verify, oracle, audit, batch,
// petersen-map, generate.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcol/colouring.hpp"
#include "pcol/corpus.hpp"
#include "pcol/error.hpp"
#include "pcol/io.hpp"
#include "pcol/oracle.hpp"
#include "pcol/petersen.hpp"
#include "pcol/pipeline.hpp"
#include "pcol/report.hpp"

namespace {

using nlohmann::json;
using namespace pcol;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

MultiGraph load_graph(const std::string& path) {
  MultiGraph g = parse_graph_text(read_file(path));
  require_valid_input(g);
  return g;
}

int cmd_colour(const std::string& path, bool as_json, bool with_oracle, bool force) {
  const MultiGraph g = load_graph(path);
  PipelineOptions opts;
  opts.force_construction = force;
  const PipelineResult r = colour_graph(g, opts);
  std::optional<OracleComparison> oracle;
  if (with_oracle) oracle = OracleComparison{4, min_medium_exact(g, 4).count};
  if (as_json) {
    std::cout << report_json(path, g, r, oracle).dump(2) << "\n";
  } else {
    std::cout << report_text(path, g, r, oracle);
  }
  return r.violations.empty() ? kOk : kViolation;
}

int cmd_verify(const std::string& graph_path, const std::string& colouring_path,
               bool as_json) {
  const MultiGraph g = load_graph(graph_path);
  const EdgeColouring c = parse_colouring(g, read_file(colouring_path));
  require_proper(g, c);
  const ClassCounts k = count_classes(g, c);
  const bool normal = k.medium == 0;
  const bool strong = k.rich == g.edge_count();
  if (as_json) {
    json out = {{"graph", graph_path},
                {"palette", c.palette},
                {"counts", {{"poor", k.poor}, {"medium", k.medium}, {"rich", k.rich}}},
                {"normal", normal},
                {"strong", strong},
                {"within_bound", 5 * k.medium <= 4 * g.vertex_count()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "proper " << c.palette << "-edge-colouring\n"
              << "poor " << k.poor << ", medium " << k.medium << ", rich " << k.rich << "\n"
              << "normal " << (normal ? "yes" : "no") << ", strong " << (strong ? "yes" : "no")
              << "\n";
  }
  return kOk;
}

int cmd_oracle(const std::string& path, int k, bool exists_mode, bool no_symmetry,
               bool as_json) {
  const MultiGraph g = load_graph(path);
  SearchOptions opts;
  opts.symmetry_breaking = !no_symmetry;
  if (exists_mode) {
    const auto c = exists_normal(g, k, opts);
    if (as_json) {
      json out = {{"graph", path}, {"k", k}, {"normal", c.has_value()}, {"colouring", nullptr}};
      if (c) {
        out["colouring"] = colouring_json(g, *c);
        out["strong"] = count_classes(g, *c).rich == g.edge_count();
      }
      std::cout << out.dump(2) << "\n";
    } else if (c) {
      const ClassCounts cc = count_classes(g, *c);
      std::cout << "normal " << k << "-edge-colouring found (poor " << cc.poor << ", rich "
                << cc.rich << (cc.rich == g.edge_count() ? ", strong" : "") << ")\n"
                << format_colouring(g, *c);
    } else {
      std::cout << "no normal " << k << "-edge-colouring\n";
    }
    return kOk;
  }
  const MinMediumResult r = min_medium_exact(g, k, opts);
  if (as_json) {
    std::cout << json{{"graph", path},
                      {"k", k},
                      {"min_medium", r.count},
                      {"nodes", r.nodes},
                      {"witness", colouring_json(g, r.witness)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "minimum medium edges over proper " << k << "-edge-colourings: " << r.count
              << "\n"
              << format_colouring(g, r.witness);
  }
  return kOk;
}

int cmd_audit(const std::string& path, bool as_json, bool force) {
  const MultiGraph g = load_graph(path);
  PipelineOptions opts;
  opts.force_construction = force;
  const PipelineResult r = colour_graph(g, opts);
  if (as_json) {
    std::cout << json{{"graph", path},
                      {"branch", to_string(r.branch)},
                      {"audit", r.level ? audit_json(r.level->audit) : json(nullptr)},
                      {"violations", r.violations}}
                     .dump(2)
              << "\n";
  } else if (!r.level) {
    std::cout << "no construction ran (" << to_string(r.branch)
              << "); rerun with --force-construction to audit one\n";
  } else {
    const AuditReport& a = r.level->audit;
    std::cout << "components " << a.components.size() << ", medium " << a.medium
              << ", final charge " << a.final_total / 10 << "." << a.final_total % 10
              << " on " << a.vertices << " vertices\n";
    for (const ComponentCharge& c : a.components) {
      std::cout << "  " << to_string(c.shape) << " of " << c.cycles.size() << " cycle(s), "
                << c.vertices << " vertices, charge " << c.charge / 10 << "." << c.charge % 10
                << (c.strict ? " (strict)" : "") << "\n";
    }
    for (const std::string& w : a.warnings) std::cout << "warning: " << w << "\n";
  }
  for (const std::string& v : r.violations) std::cerr << "VIOLATION: " << v << "\n";
  if (!as_json) std::cout << (r.violations.empty() ? "audit passed\n" : "audit FAILED\n");
  return r.violations.empty() ? kOk : kViolation;
}

int cmd_batch(const std::string& path, bool with_oracle, int oracle_max_n, bool as_json,
              bool force) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  const auto lines = graph6_lines(in);
  PipelineOptions opts;
  opts.force_construction = force;

  long graphs = 0, constructed = 0, petersen = 0, violations = 0, oracle_runs = 0,
       oracle_mismatch = 0, conjecture_failures = 0;
  int worst_medium = 0, worst_n = 1;
  json rows = json::array();
  for (size_t i = 0; i < lines.size(); ++i) {
    const MultiGraph g = parse_graph6(lines[i]);
    require_valid_input(g);
    const PipelineResult r = colour_graph(g, opts);
    ++graphs;
    constructed += r.branch == Branch::kConstructed ? 1 : 0;
    petersen += r.is_petersen ? 1 : 0;
    const int n = g.vertex_count();
    if (static_cast<long>(r.counts.medium) * worst_n > static_cast<long>(worst_medium) * n) {
      worst_medium = r.counts.medium;
      worst_n = n;
    }
    std::optional<int> min_medium;
    bool conjecture = true;
    if (with_oracle && n <= oracle_max_n) {
      ++oracle_runs;
      min_medium = min_medium_exact(g, 4).count;
      if (*min_medium > r.counts.medium) ++oracle_mismatch;
      const ConjectureReport cr = verify_conjecture_on(g);
      conjecture = cr.holds && cr.round_trip && cr.image_consistent;
      if (!conjecture) ++conjecture_failures;
    }
    for (const std::string& v : r.violations) {
      std::cerr << "graph " << i + 1 << " (" << lines[i] << "): " << v << "\n";
    }
    violations += r.violations.empty() ? 0 : 1;
    if (as_json) {
      rows.push_back({{"graph", lines[i]},
                      {"order", n},
                      {"branch", to_string(r.branch)},
                      {"medium", r.counts.medium},
                      {"strict", r.strict_holds},
                      {"petersen", r.is_petersen},
                      {"violations", r.violations},
                      {"min_medium", min_medium ? json(*min_medium) : json(nullptr)},
                      {"conjecture", with_oracle && n <= oracle_max_n ? json(conjecture)
                                                                       : json(nullptr)}});
    }
  }
  const bool bad = violations > 0 || oracle_mismatch > 0 || conjecture_failures > 0;
  if (as_json) {
    std::cout << json{{"graphs", graphs},
                      {"constructed", constructed},
                      {"petersen", petersen},
                      {"max_medium_ratio", {worst_medium, worst_n}},
                      {"graphs_with_violations", violations},
                      {"oracle_runs", oracle_runs},
                      {"oracle_above_pipeline", oracle_mismatch},
                      {"conjecture_failures", conjecture_failures},
                      {"results", rows}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "graphs " << graphs << ", constructed " << constructed << ", Petersen "
              << petersen << "\n"
              << "max medium/n " << worst_medium << "/" << worst_n << "\n"
              << "graphs with violations " << violations << "\n";
    if (with_oracle) {
      std::cout << "oracle runs " << oracle_runs << ", oracle above pipeline "
                << oracle_mismatch << ", conjecture failures " << conjecture_failures << "\n";
    }
  }
  return bad ? kViolation : kOk;
}

int cmd_petersen_map(const std::string& graph_path, const std::string& colouring_path,
                     bool as_json) {
  const MultiGraph g = load_graph(graph_path);
  const EdgeColouring f = parse_colouring(g, read_file(colouring_path));
  const PetersenColouring pc = normal_to_petersen(g, f);
  const PetersenImageReport rep = classify_petersen_colouring(pc);
  const bool three = try_3_edge_colouring(g).has_value();
  const bool consistent = rep.kind == PetersenImage::kSurjective || three;
  const KneserPetersen& kp = kneser_petersen();
  auto subset = [&](VertexId w) {
    return "{" + std::to_string(kp.subset[w][0]) + "," + std::to_string(kp.subset[w][1]) + "}";
  };
  if (as_json) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& pe = kp.graph.edge(pc.image[e]);
      edges.push_back({{"edge", {g.edge(e).u, g.edge(e).v}},
                       {"image", {kp.subset[pe.u], kp.subset[pe.v]}},
                       {"label", kp.label[pc.image[e]]}});
    }
    std::cout << json{{"graph", graph_path},
                      {"map", edges},
                      {"classification", to_string(rep.kind)},
                      {"image_size", rep.image.size()},
                      {"three_edge_colourable", three}}
                     .dump(2)
              << "\n";
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& pe = kp.graph.edge(pc.image[e]);
      std::cout << g.edge(e).u << " " << g.edge(e).v << " -> " << subset(pe.u) << " "
                << subset(pe.v) << " (label " << kp.label[pc.image[e]] << ")\n";
    }
    std::cout << "classification " << to_string(rep.kind) << " (" << rep.image.size()
              << " distinct Petersen edges)\n";
    std::cout << "3-edge-colourable " << (three ? "yes" : "no") << "\n";
  }
  // Exit 1 only for a non-surjective image on a graph with no 3-edge-colouring.
  return consistent ? kOk : kViolation;
}

int cmd_generate(int n, bool all) {
  const auto graphs = all ? connected_cubic_graphs(n) : bridgeless_cubic_graphs(n);
  for (const MultiGraph& g : graphs) std::cout << to_graph6(g) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-colourings of cubic graphs with few medium edges"};
  app.require_subcommand(1);

  std::string graph, colouring;
  bool as_json = false, with_oracle = false, force = false;
  int k = 4, n = 10, oracle_max_n = 12;
  bool min_mode = false, exists_mode = false, no_symmetry = false, all = false;

  auto* colour = app.add_subcommand("colour", "colour a graph and check the 4n/5 bound");
  colour->add_option("graph", graph, "graph6 or edge-list file")->required();
  colour->add_flag("--json", as_json);
  colour->add_flag("--oracle", with_oracle, "also run the exact 4-colour minimum");
  colour->add_flag("--force-construction", force, "skip the 3-edge-colouring shortcut");

  auto* verify = app.add_subcommand("verify", "classify the edges of a given colouring");
  verify->add_option("graph", graph)->required();
  verify->add_option("colouring", colouring, "lines \"u v colour\"")->required();
  verify->add_flag("--json", as_json);

  auto* oracle = app.add_subcommand("oracle", "exact searches over all colourings");
  oracle->add_option("graph", graph)->required();
  oracle->add_option("--k", k, "palette size, 3..6")->required();
  auto* min_flag = oracle->add_flag("--min-medium", min_mode);
  auto* ex_flag = oracle->add_flag("--exists-normal", exists_mode);
  min_flag->excludes(ex_flag);
  oracle->add_flag("--no-symmetry", no_symmetry, "disable colour-symmetry breaking");
  oracle->add_flag("--json", as_json);

  auto* aud = app.add_subcommand("audit", "run the pipeline and the charge audit");
  aud->add_option("graph", graph)->required();
  aud->add_flag("--json", as_json);
  aud->add_flag("--force-construction", force);

  auto* batch = app.add_subcommand("batch", "run the pipeline on every line of a graph6 file");
  batch->add_option("graphs", graph)->required();
  batch->add_flag("--oracle", with_oracle, "cross-check with the exact searches");
  batch->add_option("--oracle-max-n", oracle_max_n, "largest order sent to the oracle");
  batch->add_flag("--json", as_json);
  batch->add_flag("--force-construction", force);

  auto* pmap = app.add_subcommand("petersen-map", "Petersen colouring from a normal colouring");
  pmap->add_option("graph", graph)->required();
  pmap->add_option("colouring", colouring)->required();
  pmap->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("generate", "list connected bridgeless cubic graphs");
  gen->add_option("--n", n, "even order, at least 4")->required();
  gen->add_flag("--all", all, "include graphs with bridges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*colour) return cmd_colour(graph, as_json, with_oracle, force);
    if (*verify) return cmd_verify(graph, colouring, as_json);
    if (*oracle) return cmd_oracle(graph, k, exists_mode, no_symmetry, as_json);
    if (*aud) return cmd_audit(graph, as_json, force);
    if (*batch) return cmd_batch(graph, with_oracle, oracle_max_n, as_json, force);
    if (*pmap) return cmd_petersen_map(graph, colouring, as_json);
    if (*gen) return cmd_generate(n, all);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kViolation;
  }
  return kInputError;
}
