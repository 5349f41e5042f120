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

#ifndef DOMLAB_MOMENTS_H_
#define DOMLAB_MOMENTS_H_

#include "domlab/log_real.h"

namespace domlab {

// One instance of the random model: G(n,p), k-sets, target mean `delta` for
// the number of dominating k-sets, and exponent `c` for the order n^c of
// the observed subgraph.
struct ModelParams {
  int n = 0;
  int k = 0;
  double p = 0.0;
  double delta = 0.5;
  double c = 0.5;
};

// Throws DomainError unless 1 <= k <= n and 0 <= p <= 1.
void validate(const ModelParams& params);

// ceil(n^c): vertex count of the observed subgraph.
int subgraph_order(int n, double c);

// Mean number of dominating k-sets: C(n,k) (1 - (1-p)^k)^(n-k).
LogReal expected_x(const ModelParams& params);

// Number of ordered pairs (S, S') of k-sets with |S ∩ S'| = i:
// C(n,i) C(n-i,k-i) C(n-k,k-i). Zero when n - 2k + i < 0.
LogReal overlap_multiplicity(const ModelParams& params, int i);

// Contribution to E[X^2] of pairs with overlap i. Exact: the edges between
// S\S' and S'\S are shared by both domination events and are accounted for
// jointly.
LogReal dominating_pair_term(const ModelParams& params, int i);
// The same term under the approximation that S\S' and S'\S are dominated
// independently, i.e. with factor (1 - (1-p)^k)^(2(k-i)).
LogReal dominating_pair_term_independent(const ModelParams& params, int i);

LogReal expected_x2(const ModelParams& params);
LogReal expected_x2_independent(const ModelParams& params);

// Mean number of k-sets leaving exactly one vertex undominated:
// C(n,k) (n-k) (1-p)^k (1 - (1-p)^k)^(n-k-1).
LogReal expected_n(const ModelParams& params);

// Location of the two undominated vertices x (for S) and y (for S'), with
// B = S\S', C = S'\S, D = outside both.
struct NearPairCases {
  LogReal x_private_y_private;  // x in C, y in B
  LogReal x_private_y_outside;  // x in C, y in D; mirror case counted twice
  LogReal shared_outside;       // x = y in D
  LogReal split_outside;        // x != y, both in D
  LogReal joint;                // first + 2*second + third + fourth
};

struct NearPairTerms {
  int overlap = 0;        // i = |S ∩ S'|
  int outside = 0;        // |D| = n - 2k + i
  double miss = 0;        // (1-p)^k: a vertex has no neighbor in a k-set
  double reach_private = 0;  // 1 - (1-p)^(k-i): some neighbor in S\S'
  double miss_both = 0;      // (1-p)^(2k-i): no neighbor in S ∪ S'
  double hit_both = 0;       // 1 - 2(1-p)^k + (1-p)^(2k-i)
  NearPairCases exact;
  NearPairCases independent;  // cross edges B-C treated as independent
};

// Throws DomainError unless 0 <= i <= k. Void overlaps (n - 2k + i < 0)
// return all-zero cases.
NearPairTerms near_pair_terms(const ModelParams& params, int i);

LogReal expected_n2(const ModelParams& params);
LogReal expected_n2_independent(const ModelParams& params);

// Probability that, with blocks B (size b) and C (size c) and a shared block
// A (size a), every vertex of B has a neighbor in A ∪ C and every vertex of
// C has a neighbor in A ∪ B. Evaluated by a dynamic program with only
// nonnegative terms.
double cross_cover_probability(int b, int c, int a, double p);

// The unique p in (0,1) with expected_x = delta, relative residual below
// 1e-9. Requires 1 <= k < n and C(n,k) > delta > 0; throws DomainError
// otherwise.
double calibrate_p(int n, int k, double delta);

// Closed-form asymptotic choice of p with eps_n = ln ln n / ln n. Used as a
// starting point for calibrate_p. Requires n >= 3.
double asymptotic_p(double n);

struct SingleNeighborOdds {
  // P(exactly one neighbor in S | at least one neighbor in S).
  double conditional = 0;
  // Probability that none of the n - ceil(n^c) - k vertices outside H ∪ S
  // has exactly one neighbor in S.
  double no_witness = 0;
};

// Requires 0 < p < 1.
SingleNeighborOdds prob_single_neighbor(const ModelParams& params);

struct CorollaryBounds {
  double unique_lower = 0;   // delta (1 - delta) / (1 + delta)
  double pz_lower_form = 0;  // delta / (delta + 1)
  double markov_upper = 0;   // delta
};

CorollaryBounds corollary_bounds(double delta);

struct MomentReport {
  ModelParams params;
  LogReal e_x;
  LogReal e_x2;
  LogReal e_n;
  LogReal e_n2;
  LogReal e_x2_independent;
  LogReal e_n2_independent;
  LogReal pz_lower;      // e_x^2 / e_x2
  LogReal markov_upper;  // e_x
  LogReal unique_lower;  // delta (1 - delta) / (1 + delta)
  LogReal ratio_n;       // e_n2 / e_n^2, zero when e_n is zero
};

MomentReport moment_report(const ModelParams& params);

}  // namespace domlab

#endif  // DOMLAB_MOMENTS_H_
