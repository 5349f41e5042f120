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

#include "domlab/report_io.h"

#include <cstdio>
#include <sstream>

namespace domlab {

namespace {

std::string hex64(std::uint64_t x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void put(std::ostringstream& out, const std::string& key, const LogReal& x) {
  out << key << '=' << to_decimal(x) << '\n'
      << key << ".sign=" << x.sign() << '\n'
      << key << ".log=" << num(x.log_magnitude()) << '\n';
}

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

nlohmann::json estimate_json(const Estimate& e) {
  return {{"mean", e.mean}, {"se", e.se}};
}

nlohmann::json tally_json(const MappingTally& t) {
  nlohmann::json j = {{"eligible", t.eligible},
                      {"witness_found", t.witness_found},
                      {"degree_preserved", t.degree_preserved},
                      {"edge_count_preserved", t.edge_count_preserved},
                      {"h_unchanged", t.h_unchanged},
                      {"locally_sound", t.locally_sound},
                      {"flipped", t.flipped},
                      {"mechanism_holds", t.mechanism_holds()}};
  const auto ci = wilson_interval(t.flipped, t.witness_found);
  j["flipped_rate"] = t.witness_found == 0
                          ? 0.0
                          : static_cast<double>(t.flipped) / t.witness_found;
  j["flipped_ci95"] = {ci[0], ci[1]};
  j["witness_rate"] = t.eligible == 0
                          ? 0.0
                          : static_cast<double>(t.witness_found) / t.eligible;
  return j;
}

const char* policy_name(HSelection h) {
  return h == HSelection::kFirstNc ? "FIRST_NC" : "RANDOM_NC";
}

nlohmann::json config_json(const ExperimentConfig& c) {
  return {{"trials", c.trials},
          {"master_seed", c.master_seed},
          {"k_rule", c.k_rule == KRule::kRoundLnN ? "ROUND_LN_N" : "EXPLICIT"},
          {"calibrated", c.calibrate},
          {"h_selection", policy_name(c.h_selection)},
          {"randomized_witness", c.randomized_witness}};
}

}  // namespace

nlohmann::json to_json(const LogReal& x) {
  nlohmann::json j = {{"decimal", to_decimal(x)}, {"sign", x.sign()}};
  if (x.is_zero()) {
    j["log"] = "-inf";
  } else {
    j["log"] = x.log_magnitude();
  }
  return j;
}

nlohmann::json to_json(const ModelParams& p) {
  return {{"n", p.n}, {"k", p.k}, {"p", p.p}, {"delta", p.delta}, {"c", p.c}};
}

nlohmann::json to_json(const MomentReport& r) {
  return {{"params", to_json(r.params)},
          {"e_x", to_json(r.e_x)},
          {"e_x2", to_json(r.e_x2)},
          {"e_n", to_json(r.e_n)},
          {"e_n2", to_json(r.e_n2)},
          {"e_x2_independent", to_json(r.e_x2_independent)},
          {"e_n2_independent", to_json(r.e_n2_independent)},
          {"pz_lower", to_json(r.pz_lower)},
          {"markov_upper", to_json(r.markov_upper)},
          {"unique_lower", to_json(r.unique_lower)},
          {"ratio_n", to_json(r.ratio_n)}};
}

nlohmann::json to_json(const OracleReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"p", r.p},
          {"e_x", r.e_x},
          {"e_x2", r.e_x2},
          {"e_n", r.e_n},
          {"e_n2", r.e_n2},
          {"p_x_pos", r.p_x_pos},
          {"p_unique", r.p_unique},
          {"p_near_pos", r.p_near_pos},
          {"graphs_enumerated", r.graphs_enumerated},
          {"weight_sum", r.weight_sum}};
}

nlohmann::json to_json(const SolveCounts& c) {
  return {{"dominating", c.dominating},
          {"near", c.near},
          {"total_examined", c.total_examined}};
}

nlohmann::json to_json(const InstanceClass& cls) {
  nlohmann::json j = {{"class", std::string(to_string(cls.tag))}};
  if (cls.solution) j["solution"] = cls.solution->members();
  if (cls.near) {
    j["near_set"] = cls.near->set.members();
    j["near_vertex"] = cls.near->vertex;
  }
  return j;
}

nlohmann::json to_json(const MappingCertificate& c) {
  nlohmann::json j = {
      {"direction", std::string(to_string(c.direction))},
      {"quad", {{"u", c.quad.u}, {"v", c.quad.v}, {"z", c.quad.z}, {"w", c.quad.w}}},
      {"removed", {edge_json(c.removed[0]), edge_json(c.removed[1])}},
      {"added", {edge_json(c.added[0]), edge_json(c.added[1])}},
      {"h_vertices", c.h_vertices.members()},
      {"solution", c.solution.members()},
      {"degree_preserved", c.degree_preserved},
      {"edge_count_preserved", c.edge_count_preserved},
      {"h_unchanged", c.h_unchanged},
      {"locally_sound", c.locally_sound},
      {"flipped", c.flipped},
      {"hash_before", hex64(c.hash_before)},
      {"hash_after", hex64(c.hash_after)}};
  j["pre_class"] = c.pre_class ? nlohmann::json(std::string(to_string(*c.pre_class)))
                               : nlohmann::json(nullptr);
  j["post_class"] = c.post_class ? nlohmann::json(std::string(to_string(*c.post_class)))
                                 : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SandwichReport& r) {
  return {{"experiment", "sandwich"},
          {"config", config_json(r.config)},
          {"model", to_json(r.model)},
          {"moments", to_json(r.moments)},
          {"bounds",
           {{"unique_lower", r.bounds.unique_lower},
            {"pz_lower_form", r.bounds.pz_lower_form},
            {"markov_upper", r.bounds.markov_upper}}},
          {"pr_x_positive", estimate_json(r.pr_x_positive)},
          {"pr_unique", estimate_json(r.pr_unique)},
          {"mean_x", estimate_json(r.mean_x)},
          {"mean_n", estimate_json(r.mean_n)},
          {"degenerate_se", r.degenerate_se},
          {"checks",
           {{"mean_x_within_band", r.mean_x_ok},
            {"mean_n_within_band", r.mean_n_ok},
            {"pr_x_positive_below_markov", r.upper_ok},
            {"pr_x_positive_above_pz", r.lower_ok}}},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const IrreducibilityReport& r) {
  nlohmann::json classes;
  for (int t = 0; t < 4; ++t) {
    classes[std::string(to_string(static_cast<InstanceTag>(t)))] = r.class_counts[t];
  }
  const std::uint64_t unique = r.class_counts[0];
  const std::uint64_t near = r.class_counts[2];
  return {{"experiment", "irreducibility"},
          {"config", config_json(r.config)},
          {"model", to_json(r.model)},
          {"h_order", r.h_order},
          {"class_counts", classes},
          {"unique_s_outside_h_rate",
           unique == 0 ? 0.0 : static_cast<double>(r.forward.eligible) / unique},
          {"near_witness_outside_h_rate",
           near == 0 ? 0.0 : static_cast<double>(r.reverse.eligible) / near},
          {"single_neighbor_rate",
           r.forward.eligible == 0
               ? 0.0
               : static_cast<double>(r.single_neighbor) / r.forward.eligible},
          {"single_neighbor_predicted", 1.0 - r.odds.no_witness},
          {"single_neighbor_conditional", r.odds.conditional},
          {"forward", tally_json(r.forward)},
          {"reverse", tally_json(r.reverse)},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const AuditReport& r) {
  return {{"experiment", "audit"},
          {"points", r.rows.size()},
          {"max_relative_error", r.max_error},
          {"max_relative_error_independent", r.max_error_independent},
          {"tolerance", r.tolerance},
          {"passed", r.passed()}};
}

std::string to_key_value(const MomentReport& r) {
  std::ostringstream out;
  out << "n=" << r.params.n << "\nk=" << r.params.k << "\np=" << num(r.params.p)
      << "\ndelta=" << num(r.params.delta) << "\nc=" << num(r.params.c) << '\n';
  put(out, "e_x", r.e_x);
  put(out, "e_x2", r.e_x2);
  put(out, "e_n", r.e_n);
  put(out, "e_n2", r.e_n2);
  put(out, "e_x2_independent", r.e_x2_independent);
  put(out, "e_n2_independent", r.e_n2_independent);
  put(out, "pz_lower", r.pz_lower);
  put(out, "markov_upper", r.markov_upper);
  put(out, "unique_lower", r.unique_lower);
  put(out, "ratio_n", r.ratio_n);
  return out.str();
}

std::string to_key_value(const OracleReport& r) {
  std::ostringstream out;
  out << "oracle.n=" << r.n << "\noracle.k=" << r.k << "\noracle.p=" << num(r.p)
      << "\noracle.e_x=" << num(r.e_x) << "\noracle.e_x2=" << num(r.e_x2)
      << "\noracle.e_n=" << num(r.e_n) << "\noracle.e_n2=" << num(r.e_n2)
      << "\noracle.p_x_pos=" << num(r.p_x_pos) << "\noracle.p_unique=" << num(r.p_unique)
      << "\noracle.p_near_pos=" << num(r.p_near_pos)
      << "\noracle.graphs_enumerated=" << r.graphs_enumerated
      << "\noracle.weight_sum=" << num(r.weight_sum) << '\n';
  return out.str();
}

std::string trials_csv(std::span<const TrialRecord> records, bool with_timing) {
  std::ostringstream out;
  out << "trial,graph_stream,class,x_count,n_count,outside_h,witness_found,"
         "direction,u,v,z,w,degree_preserved,edge_count_preserved,h_unchanged,"
         "locally_sound,flipped,pre_class,post_class,hash_before,hash_after";
  if (with_timing) out << ",wall_ms";
  out << '\n';
  for (const TrialRecord& r : records) {
    out << r.trial << ',' << graph_stream(r.trial) << ',' << to_string(r.tag) << ','
        << r.x_count << ',' << r.n_count << ',' << int{r.outside_h} << ','
        << int{r.witness_found} << ',';
    if (r.certificate) {
      const MappingCertificate& c = *r.certificate;
      out << to_string(c.direction) << ',' << c.quad.u << ',' << c.quad.v << ','
          << c.quad.z << ',' << c.quad.w << ',' << int{c.degree_preserved} << ','
          << int{c.edge_count_preserved} << ',' << int{c.h_unchanged} << ','
          << int{c.locally_sound} << ',' << int{c.flipped} << ','
          << (c.pre_class ? to_string(*c.pre_class) : "") << ','
          << (c.post_class ? to_string(*c.post_class) : "") << ','
          << hex64(c.hash_before) << ',' << hex64(c.hash_after);
    } else {
      out << ",,,,,,,,,,,,,";
    }
    if (with_timing) out << ',' << num(r.wall_ms);
    out << '\n';
  }
  return out.str();
}

std::string audit_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "n,k,p,oracle_e_x,oracle_e_x2,oracle_e_n,oracle_e_n2,err_x,err_x2,"
         "err_n,err_n2,err_x2_independent,err_n2_independent\n";
  for (const AuditRow& r : report.rows) {
    out << r.oracle.n << ',' << r.oracle.k << ',' << num(r.oracle.p) << ','
        << num(r.oracle.e_x) << ',' << num(r.oracle.e_x2) << ',' << num(r.oracle.e_n)
        << ',' << num(r.oracle.e_n2) << ',' << num(r.err_x) << ',' << num(r.err_x2)
        << ',' << num(r.err_n) << ',' << num(r.err_n2) << ','
        << num(r.err_x2_independent) << ',' << num(r.err_n2_independent) << '\n';
  }
  return out.str();
}

}  // namespace domlab
