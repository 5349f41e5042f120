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

#include "domlab/dom_solver.h"

#include <random>
#include <vector>

#include "domlab/errors.h"
#include "domlab/rng.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace domlab {
namespace {

using testing::BruteForceCounts;
using testing::Cycle;
using testing::Edgeless;
using testing::Path;

void ExpectCounts(const SolveCounts& c, std::uint64_t dominating, std::uint64_t near) {
  EXPECT_EQ(c.dominating, dominating);
  EXPECT_EQ(c.near, near);
}

TEST(CountKSetsTest, Examples) {
  ExpectCounts(count_k_sets(Graph::Complete(5), 1), 5, 0);
  ExpectCounts(count_k_sets(Edgeless(5), 3), 0, 0);
  ExpectCounts(count_k_sets(Cycle(5), 2), 5, 5);
}

TEST(CountKSetsNaiveTest, Examples) {
  ExpectCounts(count_k_sets_naive(Graph::Complete(5), 1), 5, 0);
  ExpectCounts(count_k_sets_naive(Path(3), 1), 1, 2);
  ExpectCounts(count_k_sets_naive(Cycle(5), 2), 5, 5);
  EXPECT_EQ(count_k_sets_naive(Cycle(5), 2).total_examined, 10u);
}

TEST(CountKSetsTest, RejectsBadK) {
  EXPECT_THROW(count_k_sets(Cycle(5), 0), DomainError);
  EXPECT_THROW(count_k_sets(Cycle(5), 6), DomainError);
  EXPECT_THROW(count_k_sets_naive(Cycle(5), 0), DomainError);
}

TEST(CountKSetsTest, FullSetDominates) {
  std::mt19937_64 gen(4);
  for (int n = 1; n <= 20; ++n) {
    const Graph g = testing::RandomGraph(n, 0.3, gen);
    ExpectCounts(count_k_sets(g, n), 1, 0);
  }
}

TEST(CountKSetsTest, MatchesBruteForceOnFuzzedGraphs) {
  std::mt19937_64 gen(2024);
  int cases = 0;
  for (int t = 0; t < 250; ++t) {
    const int n = 1 + static_cast<int>(gen() % 14);
    const double p = (gen() % 100) / 100.0;
    const Graph g = testing::RandomGraph(n, p, gen);
    for (int k = 1; k <= n; ++k) {
      const testing::BruteCounts want = BruteForceCounts(g, k);
      const SolveCounts fast = count_k_sets(g, k);
      const SolveCounts naive = count_k_sets_naive(g, k);
      ASSERT_EQ(fast.dominating, want.dominating) << to_text(g) << " k=" << k;
      ASSERT_EQ(fast.near, want.near) << to_text(g) << " k=" << k;
      ASSERT_EQ(naive.dominating, want.dominating);
      ASSERT_EQ(naive.near, want.near);
      ++cases;
    }
  }
  EXPECT_GT(cases, 200);
}

TEST(CountKSetsTest, WideGraphsUseTheGeneralPath) {
  // n > 64 leaves the single-word representation.
  std::mt19937_64 gen(8);
  for (int t = 0; t < 3; ++t) {
    const Graph g = testing::RandomGraph(70, 0.5, gen);
    const SolveCounts fast = count_k_sets(g, 2);
    const SolveCounts naive = count_k_sets_naive(g, 2);
    EXPECT_EQ(fast, naive);
  }
  // Star on 70 vertices: only the center dominates alone; any leaf leaves
  // 68 others out.
  ExpectCounts(count_k_sets(testing::Star(69), 1), 1, 0);
  ExpectCounts(count_k_sets(testing::Star(69), 2), 69, 0);
}

TEST(CountKSetsTest, DominatingCountMonotoneUnderEdgeAddition) {
  std::mt19937_64 gen(77);
  for (int t = 0; t < 1000; ++t) {
    const int n = 4 + static_cast<int>(gen() % 9);
    const Graph g = testing::RandomGraph(n, 0.3, gen);
    std::vector<Edge> add;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v) && gen() % 5 == 0) add.push_back(Edge{u, v});
      }
    }
    const Graph denser = toggle_edges(g, {}, add);
    const int k = 1 + static_cast<int>(gen() % 3);
    if (k > n) continue;
    ASSERT_LE(count_k_sets(g, k).dominating, count_k_sets(denser, k).dominating);
  }
}

TEST(FindDominatingSetsTest, Examples) {
  EXPECT_EQ(find_dominating_sets(Graph::Complete(3), 1, 10),
            (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_TRUE(find_dominating_sets(Edgeless(4), 2, 10).empty());
  EXPECT_EQ(find_dominating_sets(Cycle(5), 2, 1), (std::vector<VertexSet>{{0, 2}}));
}

TEST(FindDominatingSetsTest, LexicographicAndComplete) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(gen() % 9);
    const Graph g = testing::RandomGraph(n, 0.4, gen);
    const int k = 1 + static_cast<int>(gen() % 3);
    if (k > n) continue;
    const auto all = find_dominating_sets(g, k, 1u << 20);
    ASSERT_EQ(all.size(), count_k_sets(g, k).dominating);
    for (std::size_t i = 1; i < all.size(); ++i) ASSERT_LT(all[i - 1], all[i]);
    for (const VertexSet& s : all) {
      ASSERT_EQ(s.size(), k);
      ASSERT_TRUE(is_dominating(g, s));
    }
  }
}

TEST(FindNearWitnessTest, Examples) {
  const auto path = find_near_witness(Path(3), 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->set, (VertexSet{0}));
  EXPECT_EQ(path->vertex, 2);

  EXPECT_FALSE(find_near_witness(Graph::Complete(4), 1).has_value());

  const auto cycle = find_near_witness(Cycle(5), 2);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->set, (VertexSet{0, 1}));
  EXPECT_EQ(cycle->vertex, 3);
}

TEST(FindNearWitnessTest, AvoidSkipsSetsTouchingIt) {
  // Avoiding {0}: the first near pair of C5 without 0 whose missed vertex is
  // also not 0 is {1,2}, missing 4.
  const auto w = find_near_witness(Cycle(5), 2, VertexSet{0});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->set, (VertexSet{1, 2}));
  EXPECT_EQ(w->vertex, 4);
}

TEST(ClassifyInstanceTest, Examples) {
  EXPECT_EQ(classify_instance(Graph::Complete(5), 1).tag, InstanceTag::kMultiDom);
  const InstanceClass path = classify_instance(Path(3), 1);
  EXPECT_EQ(path.tag, InstanceTag::kUniqueDom);
  EXPECT_EQ(path.solution, (VertexSet{1}));
  EXPECT_EQ(classify_instance(Edgeless(5), 2).tag, InstanceTag::kNoDomNoNear);
  const InstanceClass near = classify_instance(Path(4), 1);
  EXPECT_EQ(near.tag, InstanceTag::kNoDomWithNear);
  ASSERT_TRUE(near.near.has_value());
}

TEST(ClassifyInstanceTest, PartitionsAndAgreesWithCounts) {
  std::mt19937_64 gen(12);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(gen() % 11);
    const Graph g = testing::RandomGraph(n, 0.35, gen);
    const int k = 1 + static_cast<int>(gen() % std::min(n, 4));
    const SolveCounts c = count_k_sets(g, k);
    const InstanceClass cls = classify_instance(g, k);
    switch (cls.tag) {
      case InstanceTag::kUniqueDom:
        ASSERT_EQ(c.dominating, 1u);
        ASSERT_TRUE(cls.solution.has_value());
        ASSERT_EQ(find_dominating_sets(g, k, 2).size(), 1u);
        ASSERT_EQ(find_dominating_sets(g, k, 2).front(), *cls.solution);
        break;
      case InstanceTag::kMultiDom:
        ASSERT_GE(c.dominating, 2u);
        break;
      case InstanceTag::kNoDomWithNear:
        ASSERT_EQ(c.dominating, 0u);
        ASSERT_GE(c.near, 1u);
        ASSERT_TRUE(cls.near.has_value());
        ASSERT_EQ(undominated(g, cls.near->set), VertexSet{cls.near->vertex});
        break;
      case InstanceTag::kNoDomNoNear:
        ASSERT_EQ(c.dominating, 0u);
        ASSERT_EQ(c.near, 0u);
        break;
    }
  }
}

TEST(InstanceTagTest, RoundTrip) {
  for (InstanceTag t : {InstanceTag::kUniqueDom, InstanceTag::kMultiDom,
                        InstanceTag::kNoDomWithNear, InstanceTag::kNoDomNoNear}) {
    EXPECT_EQ(parse_instance_tag(to_string(t)), t);
  }
  EXPECT_EQ(to_string(InstanceTag::kNoDomWithNear), "NO_DOM_WITH_NEAR");
  EXPECT_FALSE(parse_instance_tag("SOMETHING").has_value());
}

}  // namespace
}  // namespace domlab
