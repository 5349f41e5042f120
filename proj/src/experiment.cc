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

#include "domlab/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

#include "domlab/errors.h"
#include "domlab/graph.h"
#include "domlab/rng.h"

namespace domlab {

namespace {

// Runs body(t) for t in [0, trials) over `threads` workers; records land at
// their trial index, so the output is independent of scheduling.
std::vector<TrialRecord> run_trials(
    int trials, int threads,
    const std::function<TrialRecord(std::uint64_t)>& body) {
  std::vector<TrialRecord> records(trials);
  const int workers = std::clamp(threads, 1, std::max(trials, 1));
  auto work = [&](int worker) {
    for (int t = worker; t < trials; t += workers) {
      const auto start = std::chrono::steady_clock::now();
      records[t] = body(static_cast<std::uint64_t>(t));
      records[t].trial = t;
      records[t].wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
  };
  if (workers == 1) {
    work(0);
    return records;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& th : pool) th.join();
  return records;
}

InstanceTag tag_from_counts(const SolveCounts& c) {
  if (c.dominating == 1) return InstanceTag::kUniqueDom;
  if (c.dominating >= 2) return InstanceTag::kMultiDom;
  return c.near > 0 ? InstanceTag::kNoDomWithNear : InstanceTag::kNoDomNoNear;
}

bool within_band(double observed, double expected, double se) {
  return std::fabs(observed - expected) <= kBandWidth * se;
}

void count_certificate(MappingTally& tally, const MappingCertificate& cert) {
  tally.degree_preserved += cert.degree_preserved;
  tally.edge_count_preserved += cert.edge_count_preserved;
  tally.h_unchanged += cert.h_unchanged;
  tally.locally_sound += cert.locally_sound;
  tally.flipped += cert.flipped;
}

}  // namespace

ModelParams resolve_model(const ExperimentConfig& config) {
  if (config.trials < 1) throw DomainError("trials must be at least 1");
  ModelParams m = config.params;
  if (m.n < 1) throw DomainError("vertex count must be positive");
  if (config.k_rule == KRule::kRoundLnN) {
    m.k = static_cast<int>(std::lround(std::log(static_cast<double>(m.n))));
  }
  if (config.calibrate) {
    if (!(m.delta > 0.0 && m.delta < 1.0)) {
      throw DomainError("delta must lie in (0, 1)");
    }
    m.p = calibrate_p(m.n, m.k, m.delta);
  }
  validate(m);
  return m;
}

VertexSet select_h(int n, double c, HSelection policy, RngStream& rng) {
  const int size = std::min(subgraph_order(n, c), n);
  if (policy == HSelection::kFirstNc) return VertexSet::Prefix(size);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  for (int i = 0; i < size; ++i) {
    const auto j = i + static_cast<int>(rng.uniform_below(n - i));
    std::swap(labels[i], labels[j]);
  }
  return VertexSet::FromVertices(std::span<const int>(labels.data(), size));
}

Estimate estimate_mean(std::span<const double> samples) {
  Estimate e;
  const double count = static_cast<double>(samples.size());
  if (samples.empty()) return e;
  e.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / count;
  if (samples.size() < 2) return e;
  double ss = 0;
  for (double x : samples) ss += (x - e.mean) * (x - e.mean);
  e.se = std::sqrt(ss / (count - 1) / count);
  return e;
}

Estimate estimate_proportion(std::uint64_t hits, std::uint64_t trials) {
  Estimate e;
  if (trials == 0) return e;
  const double t = static_cast<double>(trials);
  e.mean = static_cast<double>(hits) / t;
  e.se = std::sqrt(e.mean * (1.0 - e.mean) / t);
  return e;
}

std::array<double, 2> wilson_interval(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double ph = static_cast<double>(hits) / t;
  const double denom = 1.0 + z * z / t;
  const double center = (ph + z * z / (2 * t)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / t + z * z / (4 * t * t)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SandwichReport run_sandwich_experiment(const ExperimentConfig& config) {
  SandwichReport report;
  report.config = config;
  report.model = resolve_model(config);
  report.moments = moment_report(report.model);
  report.bounds = corollary_bounds(report.model.delta);
  const ModelParams model = report.model;

  report.records = run_trials(config.trials, config.threads, [&](std::uint64_t t) {
    RngStream rng(config.master_seed, graph_stream(t));
    const Graph g = generate_gnp(model.n, model.p, rng);
    const SolveCounts counts = count_k_sets(g, model.k);
    TrialRecord rec;
    rec.tag = tag_from_counts(counts);
    rec.x_count = counts.dominating;
    rec.n_count = counts.near;
    return rec;
  });

  std::vector<double> xs, ns;
  std::uint64_t positive = 0;
  std::uint64_t unique = 0;
  for (const TrialRecord& r : report.records) {
    xs.push_back(static_cast<double>(r.x_count));
    ns.push_back(static_cast<double>(r.n_count));
    positive += r.x_count > 0;
    unique += r.x_count == 1;
  }
  const std::uint64_t trials = report.records.size();
  report.mean_x = estimate_mean(xs);
  report.mean_n = estimate_mean(ns);
  report.pr_x_positive = estimate_proportion(positive, trials);
  report.pr_unique = estimate_proportion(unique, trials);
  report.degenerate_se = trials < 2;
  if (!report.degenerate_se) {
    const double se = report.pr_x_positive.se;
    const double pr = report.pr_x_positive.mean;
    report.mean_x_ok = within_band(report.mean_x.mean,
                                   report.moments.e_x.to_double(), report.mean_x.se);
    report.mean_n_ok = within_band(report.mean_n.mean,
                                   report.moments.e_n.to_double(), report.mean_n.se);
    report.upper_ok = pr <= report.moments.markov_upper.to_double() + kBandWidth * se;
    report.lower_ok = pr >= report.moments.pz_lower.to_double() - kBandWidth * se;
  }
  return report;
}

IrreducibilityReport run_irreducibility_experiment(const ExperimentConfig& config) {
  IrreducibilityReport report;
  report.config = config;
  report.model = resolve_model(config);
  const ModelParams model = report.model;
  if (!(model.c > 0.0 && model.c < 1.0)) throw DomainError("c must lie in (0, 1)");
  report.h_order = subgraph_order(model.n, model.c);
  if (report.h_order > model.n - model.k - 2) {
    throw DomainError("subgraph order " + std::to_string(report.h_order) +
                      " leaves no room for S, v and w outside it");
  }
  if (model.p > 0.0 && model.p < 1.0) report.odds = prob_single_neighbor(model);

  report.records = run_trials(config.trials, config.threads, [&](std::uint64_t t) {
    RngStream graph_rng(config.master_seed, graph_stream(t));
    RngStream aux(config.master_seed, aux_stream(t));
    RngStream* witness_rng = config.randomized_witness ? &aux : nullptr;
    const Graph g = generate_gnp(model.n, model.p, graph_rng);
    const VertexSet h = select_h(model.n, model.c, config.h_selection, aux);
    const SolveCounts counts = count_k_sets(g, model.k);
    const InstanceClass cls = classify_instance(g, model.k);

    TrialRecord rec;
    rec.tag = cls.tag;
    rec.x_count = counts.dominating;
    rec.n_count = counts.near;
    if (cls.tag == InstanceTag::kUniqueDom) {
      const VertexSet s = *cls.solution;
      rec.outside_h = !s.intersects(h);
      if (!rec.outside_h) return rec;
      (g.vertices() - h - s).for_each([&](int v) {
        rec.single_neighbor |= (g.neighbors(v) & s).size() == 1;
      });
      if (auto quad = find_forward_witness(g, s, h, witness_rng)) {
        rec.witness_found = true;
        MappingResult mapped = apply_mapping(g, *quad, Direction::kForward, h, s);
        rec.certificate =
            verify_certificate(g, mapped.graph, mapped.certificate, model.k);
      }
    } else if (cls.tag == InstanceTag::kNoDomWithNear) {
      const auto near = find_near_witness(g, model.k, h);
      rec.outside_h = near.has_value();
      if (!near) return rec;
      if (auto quad = find_reverse_witness(g, near->set, near->vertex, h, witness_rng)) {
        rec.witness_found = true;
        MappingResult mapped =
            apply_mapping(g, *quad, Direction::kReverse, h, near->set);
        rec.certificate =
            verify_certificate(g, mapped.graph, mapped.certificate, model.k);
      }
    }
    return rec;
  });

  for (const TrialRecord& r : report.records) {
    ++report.class_counts[static_cast<int>(r.tag)];
    MappingTally* tally = nullptr;
    if (r.tag == InstanceTag::kUniqueDom) tally = &report.forward;
    if (r.tag == InstanceTag::kNoDomWithNear) tally = &report.reverse;
    if (tally == nullptr || !r.outside_h) continue;
    ++tally->eligible;
    if (tally == &report.forward) report.single_neighbor += r.single_neighbor;
    if (!r.witness_found) continue;
    ++tally->witness_found;
    count_certificate(*tally, *r.certificate);
  }
  return report;
}

AuditRow audit_point(const GraphSpaceTally& tally, int k, double p) {
  AuditRow row;
  row.oracle = evaluate(tally, k, p);
  row.formulas = moment_report(ModelParams{tally.n, k, p, 0.5, 0.5});
  const MomentReport& f = row.formulas;
  const OracleReport& o = row.oracle;
  row.err_x = relative_error(f.e_x, LogReal::FromDouble(o.e_x));
  row.err_x2 = relative_error(f.e_x2, LogReal::FromDouble(o.e_x2));
  row.err_n = relative_error(f.e_n, LogReal::FromDouble(o.e_n));
  row.err_n2 = relative_error(f.e_n2, LogReal::FromDouble(o.e_n2));
  row.err_x2_independent = relative_error(f.e_x2_independent, LogReal::FromDouble(o.e_x2));
  row.err_n2_independent = relative_error(f.e_n2_independent, LogReal::FromDouble(o.e_n2));
  return row;
}

AuditReport run_formula_audit(int n_max, std::span<const double> ps, int threads) {
  AuditReport report;
  for (int n = 1; n <= n_max; ++n) {
    const GraphSpaceTally tally = tally_graph_space(n, threads);
    for (int k = 1; k <= n; ++k) {
      for (double p : ps) {
        AuditRow row = audit_point(tally, k, p);
        report.max_error = std::max({report.max_error, row.err_x, row.err_x2,
                                     row.err_n, row.err_n2});
        report.max_error_independent =
            std::max({report.max_error_independent, row.err_x2_independent,
                      row.err_n2_independent});
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace domlab
