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

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "domlab/errors.h"

namespace domlab {

namespace {

void check_k(const Graph& g, int k) {
  if (k < 1 || k > g.order()) {
    throw DomainError("set size k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(g.order()) + "]");
  }
}

// Mask operations shared by the one-word fast path and the VertexSet path.
inline int popcnt(std::uint64_t m) { return std::popcount(m); }
inline int popcnt(const VertexSet& m) { return m.size(); }
inline std::uint64_t without(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline VertexSet without(const VertexSet& a, const VertexSet& b) { return a - b; }
inline int lowest(std::uint64_t m) { return std::countr_zero(m); }
inline int lowest(const VertexSet& m) { return m.first(); }

template <class Mask>
Mask to_mask(const VertexSet& s) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    return s.word(0);
  } else {
    return s;
  }
}

// Depth-first enumeration of k-subsets of `candidates` (in the given
// order), reporting every subset that leaves at most one vertex undominated.
// A branch is cut when even the largest remaining closed neighborhoods
// cannot bring the undominated count down to one.
template <class Mask>
class PrunedSearch {
 public:
  // visit(chosen candidate positions, undominated mask at the leaf) returns
  // false to stop the search.
  using Visit = std::function<bool(std::span<const int>, const Mask&)>;

  PrunedSearch(const Graph& g, int k, std::vector<int> candidates)
      : k_(k), candidates_(std::move(candidates)), chosen_(k) {
    const int m = static_cast<int>(candidates_.size());
    closed_.reserve(m);
    std::vector<int> sizes(m);
    for (int pos = 0; pos < m; ++pos) {
      const VertexSet closed = g.closed_neighbors(candidates_[pos]);
      closed_.push_back(to_mask<Mask>(closed));
      sizes[pos] = closed.size();
    }
    // best_[pos][r]: sum of the r largest sizes among positions >= pos.
    best_.assign(static_cast<size_t>(m + 1) * (k + 1), 0);
    std::vector<int> suffix;
    for (int pos = m - 1; pos >= 0; --pos) {
      suffix.insert(std::upper_bound(suffix.begin(), suffix.end(), sizes[pos],
                                     std::greater<int>()),
                    sizes[pos]);
      int acc = 0;
      for (int r = 1; r <= k; ++r) {
        if (r <= static_cast<int>(suffix.size())) acc += suffix[r - 1];
        best(pos, r) = acc;
      }
    }
    all_ = to_mask<Mask>(g.vertices());
  }

  const std::vector<int>& candidates() const { return candidates_; }
  std::uint64_t examined() const { return examined_; }

  void run(const Visit& visit) {
    if (static_cast<int>(candidates_.size()) < k_) return;
    descend(0, 0, all_, visit);
  }

 private:
  int& best(int pos, int r) { return best_[static_cast<size_t>(pos) * (k_ + 1) + r]; }

  bool descend(int start, int depth, const Mask& undom, const Visit& visit) {
    const int slots = k_ - depth;
    const int last = static_cast<int>(candidates_.size()) - slots;
    const int remaining = popcnt(undom);
    for (int pos = start; pos <= last; ++pos) {
      // best() only shrinks as pos grows, so the first failure ends the loop.
      if (remaining > best(pos, slots) + 1) break;
      chosen_[depth] = pos;
      const Mask next = without(undom, closed_[pos]);
      if (slots == 1) {
        ++examined_;
        if (popcnt(next) <= 1 && !visit(chosen_, next)) return false;
      } else if (!descend(pos + 1, depth + 1, next, visit)) {
        return false;
      }
    }
    return true;
  }

  int k_;
  std::vector<int> candidates_;
  std::vector<Mask> closed_;
  std::vector<int> best_;
  std::vector<int> chosen_;
  Mask all_{};
  std::uint64_t examined_ = 0;
};

VertexSet chosen_set(std::span<const int> chosen,
                     const std::vector<int>& candidates) {
  VertexSet s;
  for (int pos : chosen) s.insert(candidates[pos]);
  return s;
}

std::vector<int> natural_order(const Graph& g, const VertexSet& exclude) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (!exclude.contains(v)) out.push_back(v);
  }
  return out;
}

// Runs `body` with a PrunedSearch of the width that fits the graph.
template <class Body>
void with_search(const Graph& g, int k, std::vector<int> candidates,
                 Body&& body) {
  if (g.order() <= 64) {
    PrunedSearch<std::uint64_t> search(g, k, std::move(candidates));
    body(search);
  } else {
    PrunedSearch<VertexSet> search(g, k, std::move(candidates));
    body(search);
  }
}

}  // namespace

std::string_view to_string(InstanceTag tag) {
  switch (tag) {
    case InstanceTag::kUniqueDom:
      return "UNIQUE_DOM";
    case InstanceTag::kMultiDom:
      return "MULTI_DOM";
    case InstanceTag::kNoDomWithNear:
      return "NO_DOM_WITH_NEAR";
    case InstanceTag::kNoDomNoNear:
      return "NO_DOM_NO_NEAR";
  }
  return "?";
}

std::optional<InstanceTag> parse_instance_tag(std::string_view text) {
  for (InstanceTag t : {InstanceTag::kUniqueDom, InstanceTag::kMultiDom,
                        InstanceTag::kNoDomWithNear, InstanceTag::kNoDomNoNear}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

SolveCounts count_k_sets(const Graph& g, int k) {
  check_k(g, k);
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  SolveCounts counts;
  with_search(g, k, std::move(order), [&](auto& search) {
    search.run([&](std::span<const int>, const auto& undom) {
      if (popcnt(undom) == 0) {
        ++counts.dominating;
      } else {
        ++counts.near;
      }
      return true;
    });
    counts.total_examined = search.examined();
  });
  return counts;
}

SolveCounts count_k_sets_naive(const Graph& g, int k) {
  check_k(g, k);
  const int n = g.order();
  std::vector<char> picked(n, 0);
  std::fill(picked.begin(), picked.begin() + k, 1);
  std::vector<int> members;
  SolveCounts counts;
  do {
    members.clear();
    for (int v = 0; v < n; ++v) {
      if (picked[v]) members.push_back(v);
    }
    int missed = 0;
    for (int x = 0; x < n && missed < 2; ++x) {
      if (picked[x]) continue;
      bool hit = false;
      for (int s : members) {
        if (g.has_edge(x, s)) {
          hit = true;
          break;
        }
      }
      if (!hit) ++missed;
    }
    ++counts.total_examined;
    if (missed == 0) ++counts.dominating;
    if (missed == 1) ++counts.near;
  } while (std::prev_permutation(picked.begin(), picked.end()));
  return counts;
}

std::vector<VertexSet> find_dominating_sets(const Graph& g, int k,
                                            std::size_t limit) {
  check_k(g, k);
  if (limit < 1) throw DomainError("limit must be at least 1");
  std::vector<VertexSet> found;
  with_search(g, k, natural_order(g, {}), [&](auto& search) {
    search.run([&](std::span<const int> chosen, const auto& undom) {
      if (popcnt(undom) != 0) return true;
      found.push_back(chosen_set(chosen, search.candidates()));
      return found.size() < limit;
    });
  });
  return found;
}

std::optional<NearWitness> find_near_witness(const Graph& g, int k) {
  return find_near_witness(g, k, VertexSet{});
}

std::optional<NearWitness> find_near_witness(const Graph& g, int k,
                                             const VertexSet& avoid) {
  check_k(g, k);
  std::optional<NearWitness> witness;
  with_search(g, k, natural_order(g, avoid), [&](auto& search) {
    search.run([&](std::span<const int> chosen, const auto& undom) {
      if (popcnt(undom) != 1) return true;
      const int v = lowest(undom);
      if (avoid.contains(v)) return true;
      witness = NearWitness{chosen_set(chosen, search.candidates()), v};
      return false;
    });
  });
  return witness;
}

InstanceClass classify_instance(const Graph& g, int k) {
  const std::vector<VertexSet> sets = find_dominating_sets(g, k, 2);
  InstanceClass out;
  if (sets.size() == 1) {
    out.tag = InstanceTag::kUniqueDom;
    out.solution = sets.front();
  } else if (sets.size() >= 2) {
    out.tag = InstanceTag::kMultiDom;
    out.solution = sets.front();
  } else if (auto near = find_near_witness(g, k)) {
    out.tag = InstanceTag::kNoDomWithNear;
    out.near = *near;
  } else {
    out.tag = InstanceTag::kNoDomNoNear;
  }
  return out;
}

}  // namespace domlab
