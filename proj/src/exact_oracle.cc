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

#include "domlab/exact_oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "domlab/errors.h"

namespace domlab {

namespace {

struct Worker {
  int n = 0;
  int pairs = 0;
  std::vector<std::pair<int, int>> pair_of_bit;
  std::vector<std::uint32_t> size_of;       // popcount of each vertex subset
  std::vector<std::uint32_t> lowest_of;

  void run(std::uint64_t high_bits, int low_count,
           std::vector<GraphSpaceTally::PerSize>& tallies) const {
    const std::uint32_t full = (1u << n) - 1;
    std::array<std::uint32_t, kOracleMaxVertices> closed{};
    for (int v = 0; v < n; ++v) closed[v] = 1u << v;
    int edges = 0;
    auto flip = [&](int bit) {
      const auto [u, v] = pair_of_bit[bit];
      closed[u] ^= 1u << v;
      closed[v] ^= 1u << u;
    };
    for (int bit = low_count; bit < pairs; ++bit) {
      if ((high_bits >> (bit - low_count)) & 1u) {
        flip(bit);
        ++edges;
      }
    }
    std::vector<std::uint32_t> cover(std::size_t{1} << n);
    std::vector<std::uint32_t> x(n + 1), near(n + 1);
    const std::uint64_t steps = std::uint64_t{1} << low_count;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 0; step < steps; ++step) {
      if (step > 0) {
        const int bit = std::countr_zero(step);
        flip(bit);
        gray ^= std::uint64_t{1} << bit;
        edges += ((gray >> bit) & 1u) ? 1 : -1;
      }
      std::fill(x.begin(), x.end(), 0);
      std::fill(near.begin(), near.end(), 0);
      cover[0] = 0;
      for (std::uint32_t s = 1; s <= full; ++s) {
        cover[s] = cover[s & (s - 1)] | closed[lowest_of[s]];
        const int missed = n - std::popcount(cover[s]);
        if (missed == 0) ++x[size_of[s]];
        if (missed == 1) ++near[size_of[s]];
      }
      for (int k = 1; k <= n; ++k) {
        auto& t = tallies[k - 1];
        const std::uint64_t xv = x[k];
        const std::uint64_t nv = near[k];
        t.sum_x[edges] += xv;
        t.sum_x2[edges] += xv * xv;
        t.sum_n[edges] += nv;
        t.sum_n2[edges] += nv * nv;
        t.x_positive[edges] += xv > 0;
        t.x_unique[edges] += xv == 1;
        t.n_positive[edges] += nv > 0;
      }
    }
  }
};

std::vector<GraphSpaceTally::PerSize> empty_tallies(int n, int pairs) {
  std::vector<GraphSpaceTally::PerSize> out(n);
  for (auto& t : out) {
    for (auto* v : {&t.sum_x, &t.sum_x2, &t.sum_n, &t.sum_n2, &t.x_positive,
                    &t.x_unique, &t.n_positive}) {
      v->assign(pairs + 1, 0);
    }
  }
  return out;
}

}  // namespace

GraphSpaceTally tally_graph_space(int n, int threads) {
  if (n < 1 || n > kOracleMaxVertices) {
    throw CapacityError("exhaustive enumeration supports 1 <= n <= " +
                        std::to_string(kOracleMaxVertices) + ", got " +
                        std::to_string(n));
  }
  const int pairs = n * (n - 1) / 2;
  Worker worker;
  worker.n = n;
  worker.pairs = pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) worker.pair_of_bit.emplace_back(u, v);
  }
  worker.size_of.resize(std::size_t{1} << n);
  worker.lowest_of.resize(std::size_t{1} << n);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    worker.size_of[s] = std::popcount(s);
    worker.lowest_of[s] = std::countr_zero(s);
  }

  // Split on the top `high` edge bits.
  int high = 0;
  while ((1 << (high + 1)) <= std::max(threads, 1) && high + 1 <= pairs) ++high;
  const std::uint64_t chunks = std::uint64_t{1} << high;
  std::vector<std::vector<GraphSpaceTally::PerSize>> partial(chunks);
  std::vector<std::thread> pool;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    partial[c] = empty_tallies(n, pairs);
    pool.emplace_back([&, c] { worker.run(c, pairs - high, partial[c]); });
  }
  for (auto& t : pool) t.join();

  GraphSpaceTally tally;
  tally.n = n;
  tally.pairs = pairs;
  tally.by_size = empty_tallies(n, pairs);
  for (const auto& part : partial) {
    for (int k = 0; k < n; ++k) {
      auto& dst = tally.by_size[k];
      const auto& src = part[k];
      for (int e = 0; e <= pairs; ++e) {
        dst.sum_x[e] += src.sum_x[e];
        dst.sum_x2[e] += src.sum_x2[e];
        dst.sum_n[e] += src.sum_n[e];
        dst.sum_n2[e] += src.sum_n2[e];
        dst.x_positive[e] += src.x_positive[e];
        dst.x_unique[e] += src.x_unique[e];
        dst.n_positive[e] += src.n_positive[e];
      }
    }
  }
  tally.graphs.assign(pairs + 1, 1);
  for (int e = 1; e <= pairs; ++e) {
    tally.graphs[e] = tally.graphs[e - 1] * (pairs - e + 1) / e;
  }
  return tally;
}

OracleReport evaluate(const GraphSpaceTally& tally, int k, double p) {
  if (k < 1 || k > tally.n) {
    throw DomainError("set size k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(tally.n) + "]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability outside [0, 1]");
  }
  const auto& t = tally.by_size[k - 1];
  const long double lp = p;
  const long double lq = 1.0L - lp;
  long double e_x = 0, e_x2 = 0, e_n = 0, e_n2 = 0;
  long double x_pos = 0, x_unique = 0, n_pos = 0, total = 0;
  for (int e = 0; e <= tally.pairs; ++e) {
    const long double w = std::pow(lp, e) * std::pow(lq, tally.pairs - e);
    e_x += w * t.sum_x[e];
    e_x2 += w * t.sum_x2[e];
    e_n += w * t.sum_n[e];
    e_n2 += w * t.sum_n2[e];
    x_pos += w * t.x_positive[e];
    x_unique += w * t.x_unique[e];
    n_pos += w * t.n_positive[e];
    total += w * tally.graphs[e];
  }
  OracleReport r;
  r.n = tally.n;
  r.k = k;
  r.p = p;
  r.e_x = static_cast<double>(e_x);
  r.e_x2 = static_cast<double>(e_x2);
  r.e_n = static_cast<double>(e_n);
  r.e_n2 = static_cast<double>(e_n2);
  r.p_x_pos = static_cast<double>(x_pos);
  r.p_unique = static_cast<double>(x_unique);
  r.p_near_pos = static_cast<double>(n_pos);
  r.graphs_enumerated = std::uint64_t{1} << tally.pairs;
  r.weight_sum = static_cast<double>(total);
  return r;
}

OracleReport enumerate_graph_space(int n, int k, double p) {
  return evaluate(tally_graph_space(n), k, p);
}

}  // namespace domlab
