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

#ifndef DOMLAB_EXACT_ORACLE_H_
#define DOMLAB_EXACT_ORACLE_H_

#include <cstdint>
#include <vector>

namespace domlab {

inline constexpr int kOracleMaxVertices = 7;

// Integer statistics over all 2^C(n,2) labeled graphs on n vertices,
// bucketed by edge count, for every set size k = 1..n. Exact; the edge
// probability enters only when a tally is evaluated.
struct GraphSpaceTally {
  struct PerSize {
    // Indexed by edge count e = 0..C(n,2).
    std::vector<std::uint64_t> sum_x, sum_x2, sum_n, sum_n2;
    std::vector<std::uint64_t> x_positive, x_unique, n_positive;
  };

  int n = 0;
  int pairs = 0;
  std::vector<std::uint64_t> graphs;  // C(pairs, e)
  std::vector<PerSize> by_size;       // by_size[k - 1]
};

struct OracleReport {
  int n = 0;
  int k = 0;
  double p = 0;
  double e_x = 0;
  double e_x2 = 0;
  double e_n = 0;
  double e_n2 = 0;
  double p_x_pos = 0;     // Pr(X > 0)
  double p_unique = 0;    // Pr(X = 1)
  double p_near_pos = 0;  // Pr(N > 0)
  std::uint64_t graphs_enumerated = 0;
  double weight_sum = 0;
};

// Walks the graph space in Gray-code order, flipping one edge per step.
// The space is split by its high-order edge bits across `threads` workers;
// the tallies are integers, so the result does not depend on the split.
// Throws CapacityError for n > kOracleMaxVertices.
GraphSpaceTally tally_graph_space(int n, int threads = 1);

// Weights each bucket by p^e (1-p)^(M-e) and sums in ascending e using
// long double accumulators.
OracleReport evaluate(const GraphSpaceTally& tally, int k, double p);

OracleReport enumerate_graph_space(int n, int k, double p);

}  // namespace domlab

#endif  // DOMLAB_EXACT_ORACLE_H_
