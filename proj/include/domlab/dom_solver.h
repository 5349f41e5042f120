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

#ifndef DOMLAB_DOM_SOLVER_H_
#define DOMLAB_DOM_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "domlab/graph.h"
#include "domlab/vertex_set.h"

namespace domlab {

// Realized counts of dominating k-sets (no undominated vertex) and
// near-dominating k-sets (exactly one undominated vertex) on one graph.
struct SolveCounts {
  std::uint64_t dominating = 0;
  std::uint64_t near = 0;
  // k-sets whose undominated set was actually evaluated. The naive oracle
  // examines all C(n,k); the pruned search examines fewer.
  std::uint64_t total_examined = 0;

  friend bool operator==(const SolveCounts& a, const SolveCounts& b) {
    return a.dominating == b.dominating && a.near == b.near;
  }
};

// A k-set leaving exactly `vertex` undominated.
struct NearWitness {
  VertexSet set;
  int vertex = -1;
};

enum class InstanceTag {
  kUniqueDom,
  kMultiDom,
  kNoDomWithNear,
  kNoDomNoNear,
};

std::string_view to_string(InstanceTag tag);
std::optional<InstanceTag> parse_instance_tag(std::string_view text);

struct InstanceClass {
  InstanceTag tag = InstanceTag::kNoDomNoNear;
  // Set for kUniqueDom (the unique solution) and kMultiDom (the first one).
  std::optional<VertexSet> solution;
  // Set for kNoDomWithNear.
  std::optional<NearWitness> near;
};

// Branch-and-bound over vertices sorted by decreasing closed-neighborhood
// size. Throws DomainError unless 1 <= k <= n.
SolveCounts count_k_sets(const Graph& g, int k);

// Plain combination enumeration with per-pair adjacency lookups. Shares no
// code with the pruned search; it is the reference for count_k_sets.
SolveCounts count_k_sets_naive(const Graph& g, int k);

// Up to `limit` dominating k-sets, in lexicographic order of their sorted
// member lists.
std::vector<VertexSet> find_dominating_sets(const Graph& g, int k,
                                            std::size_t limit);

// Lexicographically first near-dominating k-set and its undominated vertex.
std::optional<NearWitness> find_near_witness(const Graph& g, int k);

// As above, restricted to witnesses with (set ∪ {vertex}) disjoint from
// `avoid`.
std::optional<NearWitness> find_near_witness(const Graph& g, int k,
                                             const VertexSet& avoid);

InstanceClass classify_instance(const Graph& g, int k);

}  // namespace domlab

#endif  // DOMLAB_DOM_SOLVER_H_
