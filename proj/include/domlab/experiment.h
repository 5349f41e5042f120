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

#ifndef DOMLAB_EXPERIMENT_H_
#define DOMLAB_EXPERIMENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "domlab/dom_solver.h"
#include "domlab/exact_oracle.h"
#include "domlab/moments.h"
#include "domlab/symmetry_map.h"

namespace domlab {

enum class HSelection { kFirstNc, kRandomNc };
enum class KRule { kExplicit, kRoundLnN };

struct ExperimentConfig {
  // params.p is used only when `calibrate` is false.
  ModelParams params;
  KRule k_rule = KRule::kExplicit;
  bool calibrate = true;
  int trials = 1;
  std::uint64_t master_seed = 0;
  HSelection h_selection = HSelection::kFirstNc;
  // Draw mapping witnesses uniformly instead of taking the first one.
  bool randomized_witness = false;
  int threads = 1;
  // Adds per-trial wall time to CSV output (which then stops being
  // byte-reproducible).
  bool record_timing = false;
};

// Applies the k rule and calibration. Throws DomainError on invalid
// configurations.
ModelParams resolve_model(const ExperimentConfig& config);

// Trial t samples its graph from stream 2t and draws any other randomness
// (random H, randomized witnesses) from stream 2t+1.
inline std::uint64_t graph_stream(std::uint64_t trial) { return 2 * trial; }
inline std::uint64_t aux_stream(std::uint64_t trial) { return 2 * trial + 1; }

VertexSet select_h(int n, double c, HSelection policy, RngStream& rng);

struct TrialRecord {
  std::uint64_t trial = 0;
  InstanceTag tag = InstanceTag::kNoDomNoNear;
  std::uint64_t x_count = 0;
  std::uint64_t n_count = 0;
  // UNIQUE_DOM: S avoids H. NO_DOM_WITH_NEAR: some near witness (S, v) has
  // S ∪ {v} avoiding H.
  bool outside_h = false;
  // Some vertex outside H ∪ S has exactly one neighbor in S (forward only).
  bool single_neighbor = false;
  bool witness_found = false;
  std::optional<MappingCertificate> certificate;
  double wall_ms = 0;
};

struct Estimate {
  double mean = 0;
  double se = 0;
};

Estimate estimate_mean(std::span<const double> samples);
Estimate estimate_proportion(std::uint64_t hits, std::uint64_t trials);
// 95% Wilson score interval.
std::array<double, 2> wilson_interval(std::uint64_t hits, std::uint64_t trials);

// Bands are mean ± 4 standard errors.
inline constexpr double kBandWidth = 4.0;

struct SandwichReport {
  ExperimentConfig config;
  ModelParams model;
  MomentReport moments;
  CorollaryBounds bounds;
  Estimate pr_x_positive;
  Estimate pr_unique;
  Estimate mean_x;
  Estimate mean_n;
  // With a single trial no standard error exists and nothing is asserted.
  bool degenerate_se = false;
  bool mean_x_ok = true;
  bool mean_n_ok = true;
  bool upper_ok = true;  // Pr(X>0) <= E[X] + 4 SE
  bool lower_ok = true;  // Pr(X>0) >= E[X]^2 / E[X^2] - 4 SE
  bool passed() const { return mean_x_ok && mean_n_ok && upper_ok && lower_ok; }
  std::vector<TrialRecord> records;
};

SandwichReport run_sandwich_experiment(const ExperimentConfig& config);

struct MappingTally {
  std::uint64_t eligible = 0;  // right class with the target outside H
  std::uint64_t witness_found = 0;
  std::uint64_t degree_preserved = 0;
  std::uint64_t edge_count_preserved = 0;
  std::uint64_t h_unchanged = 0;
  std::uint64_t locally_sound = 0;
  std::uint64_t flipped = 0;

  bool mechanism_holds() const {
    return degree_preserved == witness_found &&
           edge_count_preserved == witness_found &&
           h_unchanged == witness_found && locally_sound == witness_found;
  }
};

struct IrreducibilityReport {
  ExperimentConfig config;
  ModelParams model;
  int h_order = 0;
  SingleNeighborOdds odds;
  std::array<std::uint64_t, 4> class_counts{};  // indexed by InstanceTag
  std::uint64_t single_neighbor = 0;  // among UNIQUE_DOM with S outside H
  MappingTally forward;
  MappingTally reverse;
  bool passed() const {
    return forward.mechanism_holds() && reverse.mechanism_holds();
  }
  std::vector<TrialRecord> records;
};

IrreducibilityReport run_irreducibility_experiment(const ExperimentConfig& config);

// One formula-vs-enumeration comparison.
struct AuditRow {
  OracleReport oracle;
  MomentReport formulas;
  double err_x = 0;
  double err_x2 = 0;
  double err_n = 0;
  double err_n2 = 0;
  // Same comparison for the independence approximations.
  double err_x2_independent = 0;
  double err_n2_independent = 0;
};

AuditRow audit_point(const GraphSpaceTally& tally, int k, double p);

struct AuditReport {
  std::vector<AuditRow> rows;
  double max_error = 0;
  double max_error_independent = 0;
  double tolerance = 1e-10;
  bool passed() const { return max_error <= tolerance; }
};

// Every n in [1, n_max], every k in [1, n], every p in `ps`.
AuditReport run_formula_audit(int n_max, std::span<const double> ps,
                              int threads = 1);

}  // namespace domlab

#endif  // DOMLAB_EXPERIMENT_H_
