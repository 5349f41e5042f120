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

#include "domlab/moments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "domlab/errors.h"

namespace domlab {

namespace {

// Powers of q = 1 - p for integer exponents, exact at p in {0, 1}.
class MissPowers {
 public:
  explicit MissPowers(double p) : log_q_(std::log1p(-p)) {}

  double log_q() const { return log_q_; }
  // q^e
  double pow(long long e) const {
    return e == 0 ? 1.0 : std::exp(static_cast<double>(e) * log_q_);
  }
  LogReal pow_log(long long e) const {
    return e == 0 ? LogReal::One()
                  : LogReal::FromLog(static_cast<double>(e) * log_q_);
  }
  // 1 - q^e without cancellation.
  double complement(long long e) const {
    return e == 0 ? 0.0 : -std::expm1(static_cast<double>(e) * log_q_);
  }
  LogReal complement_log(long long e) const {
    return LogReal::FromLog(std::log(complement(e)));
  }

 private:
  double log_q_;
};

void check_overlap(const ModelParams& params, int i) {
  if (i < 0 || i > params.k) {
    throw DomainError("overlap i=" + std::to_string(i) + " outside [0, " +
                      std::to_string(params.k) + "]");
  }
}

// Probability that a vertex of D is dominated by both S and S' (overlap i):
// an edge into S ∩ S', or else edges into both private parts.
double hit_both_probability(const MissPowers& q, int i, int j) {
  const double private_hit = q.complement(j);
  return q.complement(i) + q.pow(i) * private_hit * private_hit;
}

// Probability that a specified r vertices of B = S\S' and t vertices of
// C = S'\S are undominated (by S' and S respectively) while every other
// vertex of B and C is dominated.
LogReal private_block_probability(const MissPowers& q, double p, int i,
                                  int j, int r, int t) {
  const long long forced_absent =
      static_cast<long long>(r + t) * (i + j) - static_cast<long long>(r) * t;
  return q.pow_log(forced_absent) *
         LogReal::FromDouble(cross_cover_probability(j - r, j - t, i, p));
}

LogReal count_of(long long x) { return LogReal::FromDouble(static_cast<double>(x)); }

}  // namespace

void validate(const ModelParams& params) {
  if (params.n < 1) {
    throw DomainError("vertex count n=" + std::to_string(params.n) + " < 1");
  }
  if (params.k < 1 || params.k > params.n) {
    throw DomainError("set size k=" + std::to_string(params.k) +
                      " outside [1, " + std::to_string(params.n) + "]");
  }
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw DomainError("edge probability " + std::to_string(params.p) +
                      " outside [0, 1]");
  }
}

int subgraph_order(int n, double c) {
  return static_cast<int>(std::ceil(std::pow(static_cast<double>(n), c) - 1e-9));
}

LogReal expected_x(const ModelParams& params) {
  validate(params);
  const MissPowers q(params.p);
  return binomial(params.n, params.k) *
         q.complement_log(params.k).pow(params.n - params.k);
}

LogReal overlap_multiplicity(const ModelParams& params, int i) {
  validate(params);
  check_overlap(params, i);
  const int n = params.n;
  const int k = params.k;
  if (n - 2 * k + i < 0) return LogReal::Zero();
  return binomial(n, i) * binomial(n - i, k - i) * binomial(n - k, k - i);
}

LogReal dominating_pair_term(const ModelParams& params, int i) {
  const LogReal pairs = overlap_multiplicity(params, i);
  if (pairs.is_zero()) return pairs;
  const MissPowers q(params.p);
  const int j = params.k - i;
  const int m = params.n - 2 * params.k + i;
  return pairs * private_block_probability(q, params.p, i, j, 0, 0) *
         LogReal::FromDouble(hit_both_probability(q, i, j)).pow(m);
}

LogReal dominating_pair_term_independent(const ModelParams& params, int i) {
  const LogReal pairs = overlap_multiplicity(params, i);
  if (pairs.is_zero()) return pairs;
  const MissPowers q(params.p);
  const int j = params.k - i;
  const int m = params.n - 2 * params.k + i;
  return pairs * q.complement_log(params.k).pow(2LL * j) *
         LogReal::FromDouble(hit_both_probability(q, i, j)).pow(m);
}

LogReal expected_x2(const ModelParams& params) {
  LogReal total;
  for (int i = 0; i <= params.k; ++i) total += dominating_pair_term(params, i);
  return total;
}

LogReal expected_x2_independent(const ModelParams& params) {
  LogReal total;
  for (int i = 0; i <= params.k; ++i) {
    total += dominating_pair_term_independent(params, i);
  }
  return total;
}

LogReal expected_n(const ModelParams& params) {
  validate(params);
  const int n = params.n;
  const int k = params.k;
  if (k == n) return LogReal::Zero();
  const MissPowers q(params.p);
  return binomial(n, k) * count_of(n - k) * q.pow_log(k) *
         q.complement_log(k).pow(n - k - 1);
}

NearPairTerms near_pair_terms(const ModelParams& params, int i) {
  validate(params);
  check_overlap(params, i);
  const int k = params.k;
  const int j = k - i;
  const int m = params.n - 2 * k + i;
  const MissPowers q(params.p);

  NearPairTerms t;
  t.overlap = i;
  t.outside = m;
  t.miss = q.pow(k);
  t.reach_private = q.complement(j);
  t.miss_both = q.pow(2LL * k - i);
  t.hit_both = hit_both_probability(q, i, j);
  if (m < 0) return t;

  const LogReal hit_both = LogReal::FromDouble(t.hit_both);
  const LogReal miss = q.pow_log(k);
  const LogReal one_side = miss * LogReal::FromDouble(t.reach_private);
  const LogReal miss_both = q.pow_log(2LL * k - i);
  const LogReal dominated = q.complement_log(k);

  // Only the private-block factor differs between the two forms.
  auto fill = [&](NearPairCases& cases, const LogReal& block11,
                  const LogReal& block01, const LogReal& block00) {
    if (j >= 1) {
      cases.x_private_y_private = count_of(1LL * j * j) * block11 * hit_both.pow(m);
    }
    if (j >= 1 && m >= 1) {
      cases.x_private_y_outside =
          count_of(1LL * j * m) * block01 * one_side * hit_both.pow(m - 1);
    }
    if (m >= 1) {
      cases.shared_outside = count_of(m) * miss_both * block00 * hit_both.pow(m - 1);
    }
    if (m >= 2) {
      cases.split_outside = count_of(1LL * m * (m - 1)) * one_side.pow(2) *
                            block00 * hit_both.pow(m - 2);
    }
    cases.joint = cases.x_private_y_private + count_of(2) * cases.x_private_y_outside +
                  cases.shared_outside + cases.split_outside;
  };

  fill(t.exact,
       j >= 1 ? private_block_probability(q, params.p, i, j, 1, 1) : LogReal::Zero(),
       j >= 1 ? private_block_probability(q, params.p, i, j, 0, 1) : LogReal::Zero(),
       private_block_probability(q, params.p, i, j, 0, 0));
  fill(t.independent,
       j >= 1 ? miss.pow(2) * dominated.pow(2LL * j - 2) : LogReal::Zero(),
       j >= 1 ? miss * dominated.pow(2LL * j - 1) : LogReal::Zero(),
       dominated.pow(2LL * j));
  return t;
}

LogReal expected_n2(const ModelParams& params) {
  LogReal total;
  for (int i = 0; i <= params.k; ++i) {
    total += overlap_multiplicity(params, i) * near_pair_terms(params, i).exact.joint;
  }
  return total;
}

LogReal expected_n2_independent(const ModelParams& params) {
  LogReal total;
  for (int i = 0; i <= params.k; ++i) {
    total += overlap_multiplicity(params, i) *
             near_pair_terms(params, i).independent.joint;
  }
  return total;
}

double cross_cover_probability(int b, int c, int a, double p) {
  if (b < 0 || c < 0 || a < 0) throw DomainError("negative block size");
  const MissPowers q(p);
  // Pascal rows for the binomial distribution of newly reached C vertices.
  std::vector<std::vector<double>> choose(c + 1);
  for (int r = 0; r <= c; ++r) {
    choose[r].assign(r + 1, 1.0);
    for (int s = 1; s < r; ++s) choose[r][s] = choose[r - 1][s - 1] + choose[r - 1][s];
  }
  // reached[h]: probability that the B vertices processed so far are all
  // covered and exactly h vertices of C have a neighbor among them.
  std::vector<double> reached(c + 1, 0.0);
  reached[0] = 1.0;
  std::vector<double> next(c + 1);
  for (int step = 0; step < b; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int h = 0; h <= c; ++h) {
      if (reached[h] == 0.0) continue;
      const int fresh = c - h;
      // No edge to a fresh C vertex: covered through A or a reached vertex.
      next[h] += reached[h] * q.pow(fresh) * q.complement(a + h);
      for (int t = 1; t <= fresh; ++t) {
        next[h + t] += reached[h] * choose[fresh][t] * std::pow(p, t) *
                       q.pow(fresh - t);
      }
    }
    reached.swap(next);
  }
  // Unreached C vertices must be covered through A.
  const double via_shared = q.complement(a);
  double total = 0.0;
  for (int h = 0; h <= c; ++h) {
    if (reached[h] == 0.0) continue;
    total += reached[h] * (c - h == 0 ? 1.0 : std::pow(via_shared, c - h));
  }
  return total;
}

double calibrate_p(int n, int k, double delta) {
  if (k < 1 || k >= n) {
    throw DomainError("calibration needs 1 <= k < n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (!(delta > 0.0) || !(log_binomial(n, k) > std::log(delta))) {
    throw DomainError("no p in (0,1) gives expected count " + std::to_string(delta) +
                      " for n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const double target = std::log(delta);
  auto log_mean = [&](double p) {
    return expected_x(ModelParams{n, k, p, delta, 0.5}).log_magnitude();
  };
  // log E[X] is strictly increasing in p: -inf at 0, log C(n,k) at 1.
  double lo = 0.0;
  double hi = 1.0;
  if (n >= 3) {
    const double seed = asymptotic_p(n);
    if (seed > 0.0 && seed < 1.0) {
      (log_mean(seed) < target ? lo : hi) = seed;
    }
  }
  double best = 0.5 * (lo + hi);
  double best_residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double value = log_mean(mid);
    const double residual = std::fabs(value - target);
    if (residual < best_residual) {
      best = mid;
      best_residual = residual;
    }
    if (residual <= 1e-14) break;
    (value < target ? lo : hi) = mid;
  }
  // Relative residual of E[X] is expm1 of the log residual.
  if (!(std::expm1(best_residual) <= 1e-9)) {
    throw DomainError("calibration stalled with relative residual " +
                      std::to_string(std::expm1(best_residual)));
  }
  return best;
}

double asymptotic_p(double n) {
  if (!(n >= 3.0)) throw DomainError("asymptotic_p needs n >= 3");
  const double ln_n = std::log(n);
  const double eps = std::log(ln_n) / ln_n;
  return 1.0 - std::exp(-1.0) * std::pow((1.0 - eps) * ln_n * ln_n, 1.0 / ln_n);
}

SingleNeighborOdds prob_single_neighbor(const ModelParams& params) {
  validate(params);
  const double p = params.p;
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("single-neighbor odds need 0 < p < 1");
  }
  const int k = params.k;
  const MissPowers q(p);
  SingleNeighborOdds odds;
  odds.conditional = std::exp(std::log(static_cast<double>(k)) + std::log(p) +
                              (k - 1) * q.log_q() - std::log(q.complement(k)));
  const long long candidates =
      static_cast<long long>(params.n) - subgraph_order(params.n, params.c) - k;
  odds.no_witness = candidates <= 0
                        ? 1.0
                        : std::exp(static_cast<double>(candidates) *
                                   std::log1p(-odds.conditional));
  return odds;
}

CorollaryBounds corollary_bounds(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  return CorollaryBounds{delta * (1.0 - delta) / (1.0 + delta),
                         delta / (delta + 1.0), delta};
}

MomentReport moment_report(const ModelParams& params) {
  MomentReport r;
  r.params = params;
  r.e_x = expected_x(params);
  r.e_x2 = expected_x2(params);
  r.e_n = expected_n(params);
  r.e_n2 = expected_n2(params);
  r.e_x2_independent = expected_x2_independent(params);
  r.e_n2_independent = expected_n2_independent(params);
  r.pz_lower = r.e_x2.is_zero() ? LogReal::Zero() : r.e_x.pow(2) / r.e_x2;
  r.markov_upper = r.e_x;
  const double d = params.delta;
  r.unique_lower = LogReal::FromDouble(d * (1.0 - d) / (1.0 + d));
  r.ratio_n = r.e_n.is_zero() ? LogReal::Zero() : r.e_n2 / r.e_n.pow(2);
  return r;
}

}  // namespace domlab
