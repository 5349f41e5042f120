// Copyright 2026 The domlab Authors
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

// Command-line front end: sampling, exact solving, moment formulas,
// calibration, single mappings, and the batch experiments.
//
// Exit status: 0 on success, 1 when an asserted property fails, 2 on bad
// input.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "domlab/dom_solver.h"
#include "domlab/errors.h"
#include "domlab/experiment.h"
#include "domlab/graph.h"
#include "domlab/moments.h"
#include "domlab/report_io.h"
#include "domlab/symmetry_map.h"

namespace {

using namespace domlab;

constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

struct Options {
  int n = 0;
  std::optional<int> k;
  std::optional<double> p;
  double delta = 0.5;
  double c = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out;
  std::string format = "structured";
  std::string graph_path;
  std::string h_list;
  std::string direction = "auto";
  std::size_t limit = 2;
  int n_max = 6;
  std::vector<double> ps{0.0, 0.2, 0.4, 0.5, 0.7, 1.0};
  int threads = 1;
  bool random_h = false;
  bool random_witness = false;
  bool timing = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

// Prints to stdout, or writes to `path` when given.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

int resolve_k(const Options& o) {
  return o.k ? *o.k : static_cast<int>(std::lround(std::log(static_cast<double>(o.n))));
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) s.insert(std::stoi(item));
  }
  return s;
}

ExperimentConfig experiment_config(const Options& o) {
  ExperimentConfig config;
  config.params = ModelParams{o.n, o.k.value_or(0), o.p.value_or(0.0), o.delta, o.c};
  config.k_rule = o.k ? KRule::kExplicit : KRule::kRoundLnN;
  config.calibrate = !o.p.has_value();
  config.trials = o.trials;
  config.master_seed = o.seed;
  config.h_selection = o.random_h ? HSelection::kRandomNc : HSelection::kFirstNc;
  config.randomized_witness = o.random_witness;
  config.threads = o.threads;
  config.record_timing = o.timing;
  return config;
}

int cmd_gen(const Options& o) {
  double p = o.p ? *o.p : calibrate_p(o.n, resolve_k(o), o.delta);
  RngStream rng(o.seed, o.stream);
  emit(o.out, to_text(generate_gnp(o.n, p, rng)));
  return 0;
}

int cmd_solve(const Options& o) {
  const Graph g = read_graph_file(o.graph_path);
  const int k = o.k.value_or(1);
  const SolveCounts counts = count_k_sets(g, k);
  const InstanceClass cls = classify_instance(g, k);
  const std::vector<VertexSet> sets = find_dominating_sets(g, k, o.limit);
  if (o.format == "csv") {
    std::ostringstream out;
    out << "n,k,dominating,near,total_examined,class\n"
        << g.order() << ',' << k << ',' << counts.dominating << ',' << counts.near
        << ',' << counts.total_examined << ',' << to_string(cls.tag) << '\n';
    emit(o.out, out.str());
    return 0;
  }
  nlohmann::json j = {{"n", g.order()}, {"k", k}, {"counts", to_json(counts)},
                      {"classification", to_json(cls)}};
  for (const VertexSet& s : sets) j["dominating_sets"].push_back(s.members());
  emit(o.out, j.dump(2) + "\n");
  return 0;
}

int cmd_moments(const Options& o) {
  ModelParams params{o.n, resolve_k(o), 0.0, o.delta, o.c};
  params.p = o.p ? *o.p : calibrate_p(params.n, params.k, params.delta);
  const MomentReport report = moment_report(params);
  if (o.format == "csv") {
    emit(o.out, to_key_value(report));
  } else {
    emit(o.out, to_json(report).dump(2) + "\n");
  }
  return 0;
}

int cmd_calibrate(const Options& o) {
  const int k = resolve_k(o);
  const double p = calibrate_p(o.n, k, o.delta);
  const LogReal mean = expected_x(ModelParams{o.n, k, p, o.delta, o.c});
  nlohmann::json j = {{"n", o.n}, {"k", k}, {"delta", o.delta}, {"p", p},
                      {"e_x", to_json(mean)}};
  if (o.n >= 3) j["asymptotic_p"] = asymptotic_p(o.n);
  if (o.format == "csv") {
    std::ostringstream out;
    out << "n,k,delta,p,e_x\n" << o.n << ',' << k << ',' << o.delta << ','
        << std::setprecision(17) << p << ',' << mean.to_double() << '\n';
    emit(o.out, out.str());
  } else {
    emit(o.out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_map(const Options& o) {
  const Graph g = read_graph_file(o.graph_path);
  const int k = o.k.value_or(1);
  const VertexSet h = o.h_list.empty()
                          ? VertexSet::Prefix(std::min(subgraph_order(g.order(), o.c), g.order()))
                          : parse_vertex_list(o.h_list);
  const InstanceClass cls = classify_instance(g, k);
  std::optional<Direction> direction;
  if (o.direction != "auto") {
    direction = parse_direction(o.direction);
    if (!direction) throw DomainError("unknown direction " + o.direction);
  }
  nlohmann::json j = {{"classification", to_json(cls)}, {"h_vertices", h.members()}};

  std::optional<Quad> quad;
  VertexSet target;
  if (cls.tag == InstanceTag::kUniqueDom &&
      direction.value_or(Direction::kForward) == Direction::kForward) {
    direction = Direction::kForward;
    target = *cls.solution;
    if (!target.intersects(h)) quad = find_forward_witness(g, target, h);
  } else if (cls.tag == InstanceTag::kNoDomWithNear &&
             direction.value_or(Direction::kReverse) == Direction::kReverse) {
    direction = Direction::kReverse;
    if (auto near = find_near_witness(g, k, h)) {
      target = near->set;
      quad = find_reverse_witness(g, near->set, near->vertex, h);
    }
  }
  if (!quad) {
    j["certificate"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  MappingResult mapped = apply_mapping(g, *quad, *direction, h, target);
  const MappingCertificate cert =
      verify_certificate(g, mapped.graph, mapped.certificate, k);
  j["certificate"] = to_json(cert);
  std::cout << j.dump(2) << "\n";
  if (!o.out.empty()) write_graph_file(mapped.graph, o.out);
  const bool ok = cert.degree_preserved && cert.edge_count_preserved &&
                  cert.h_unchanged && cert.locally_sound;
  return ok ? 0 : kExitAssertion;
}

int cmd_audit(const Options& o) {
  const AuditReport report = run_formula_audit(o.n_max, o.ps, o.threads);
  if (o.out.empty()) {
    std::cout << (o.format == "csv" ? audit_csv(report) : to_json(report).dump(2) + "\n");
  } else {
    write_text(o.out + ".csv", audit_csv(report));
    write_text(o.out + ".json", to_json(report).dump(2) + "\n");
  }
  return report.passed() ? 0 : kExitAssertion;
}

int cmd_sandwich(const Options& o) {
  const SandwichReport report = run_sandwich_experiment(experiment_config(o));
  const std::string csv = trials_csv(report.records, o.timing);
  const std::string summary = to_json(report).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << (o.format == "csv" ? csv : summary);
  } else {
    write_text(o.out + ".csv", csv);
    write_text(o.out + ".json", summary);
  }
  return report.passed() ? 0 : kExitAssertion;
}

int cmd_irreducibility(const Options& o) {
  const IrreducibilityReport report = run_irreducibility_experiment(experiment_config(o));
  const std::string csv = trials_csv(report.records, o.timing);
  const std::string summary = to_json(report).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << (o.format == "csv" ? csv : summary);
  } else {
    std::string certificates;
    for (const TrialRecord& r : report.records) {
      if (!r.certificate) continue;
      nlohmann::json line = to_json(*r.certificate);
      line["trial"] = r.trial;
      certificates += line.dump() + "\n";
    }
    write_text(o.out + ".csv", csv);
    write_text(o.out + ".json", summary);
    write_text(o.out + ".certificates.jsonl", certificates);
  }
  return report.passed() ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating-set laboratory for G(n,p)"};
  app.require_subcommand(1);
  Options o;

  auto add_model = [&](CLI::App* sub, bool need_n) {
    auto* n = sub->add_option("--n", o.n, "vertex count");
    if (need_n) n->required();
    sub->add_option("--k", o.k, "set size (default round(ln n))");
    sub->add_option("--p", o.p, "edge probability (default: calibrate to delta)");
    sub->add_option("--delta", o.delta, "target E[X]")->capture_default_str();
    sub->add_option("--c", o.c, "subgraph exponent")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output file (or prefix for batch reports)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "structured"}))
        ->capture_default_str();
  };
  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials)->capture_default_str();
    sub->add_option("--seed", o.seed)->capture_default_str();
    sub->add_option("--threads", o.threads)->capture_default_str();
    sub->add_flag("--timing", o.timing, "add per-trial wall time to the CSV");
  };

  auto* gen = app.add_subcommand("gen", "sample G(n,p) and print it");
  add_model(gen, true);
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("--stream", o.stream)->capture_default_str();
  gen->add_option("--out", o.out, "output file");

  auto* solve = app.add_subcommand("solve", "count and classify k-sets of a graph file");
  solve->add_option("--graph", o.graph_path)->required();
  solve->add_option("--k", o.k)->required();
  solve->add_option("--limit", o.limit, "dominating sets to list")->capture_default_str();
  add_output(solve);

  auto* moments = app.add_subcommand("moments", "first and second moments");
  add_model(moments, true);
  add_output(moments);

  auto* calibrate = app.add_subcommand("calibrate", "solve E[X] = delta for p");
  add_model(calibrate, true);
  add_output(calibrate);

  auto* map = app.add_subcommand("map", "apply one symmetry mapping to a graph file");
  map->add_option("--graph", o.graph_path)->required();
  map->add_option("--k", o.k)->required();
  map->add_option("--c", o.c)->capture_default_str();
  map->add_option("--h-vertices", o.h_list, "comma-separated H vertices (default first ceil(n^c))");
  map->add_option("--direction", o.direction)
      ->check(CLI::IsMember({"auto", "forward", "reverse"}))
      ->capture_default_str();
  map->add_option("--out", o.out, "write the mapped graph here");

  auto* audit = app.add_subcommand("audit", "formulas vs exhaustive enumeration");
  audit->add_option("--n-max", o.n_max)->capture_default_str();
  audit->add_option("--p", o.ps, "edge probabilities")->capture_default_str();
  audit->add_option("--threads", o.threads)->capture_default_str();
  add_output(audit);

  auto* sandwich = app.add_subcommand("sandwich", "Monte Carlo check of the moment bounds");
  add_model(sandwich, true);
  add_batch(sandwich);
  add_output(sandwich);

  auto* irreducibility =
      app.add_subcommand("irreducibility", "classify, map and verify random instances");
  add_model(irreducibility, true);
  add_batch(irreducibility);
  add_output(irreducibility);
  irreducibility->add_flag("--random-h", o.random_h, "random H instead of the first ceil(n^c)");
  irreducibility->add_flag("--random-witness", o.random_witness,
                           "draw mapping witnesses uniformly");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(o);
    if (*solve) return cmd_solve(o);
    if (*moments) return cmd_moments(o);
    if (*calibrate) return cmd_calibrate(o);
    if (*map) return cmd_map(o);
    if (*audit) return cmd_audit(o);
    if (*sandwich) return cmd_sandwich(o);
    if (*irreducibility) return cmd_irreducibility(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
