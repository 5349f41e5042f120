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

#ifndef DOMLAB_SYMMETRY_MAP_H_
#define DOMLAB_SYMMETRY_MAP_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "domlab/dom_solver.h"
#include "domlab/graph.h"
#include "domlab/rng.h"
#include "domlab/vertex_set.h"

namespace domlab {

// FORWARD turns a graph whose k-set S dominates into one where S misses a
// vertex; REVERSE repairs a k-set that misses exactly one vertex.
enum class Direction { kForward, kReverse };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

// The four vertices of a two-edge swap. Edge pattern before the swap:
//   FORWARD: only (u,v) and (z,w) among the six pairs; v's sole neighbor in
//            S is u, z is in S.
//   REVERSE: only (v,w) and (u,z); v is the undominated vertex, u,z in S.
struct Quad {
  int u = -1;
  int v = -1;
  int z = -1;
  int w = -1;

  friend bool operator==(const Quad&, const Quad&) = default;
};

std::array<Edge, 2> removed_edges(const Quad& q, Direction d);
std::array<Edge, 2> added_edges(const Quad& q, Direction d);

struct MappingCertificate {
  Direction direction = Direction::kForward;
  Quad quad;
  std::array<Edge, 2> removed{};
  std::array<Edge, 2> added{};
  VertexSet h_vertices;
  // The k-set whose domination the swap targets.
  VertexSet solution;
  std::optional<InstanceTag> pre_class;
  std::optional<InstanceTag> post_class;
  bool degree_preserved = false;
  bool edge_count_preserved = false;
  bool h_unchanged = false;
  // FORWARD: v is undominated by `solution` afterwards.
  // REVERSE: `solution` dominates afterwards.
  bool locally_sound = false;
  // FORWARD: exactly one dominating k-set before, none after.
  // REVERSE: none before; `solution` dominates after.
  bool flipped = false;
  std::uint64_t hash_before = 0;
  std::uint64_t hash_after = 0;
};

// Searches v in V \ (H ∪ S) with exactly one neighbor u in S, then (z, w)
// with z in S \ {u}, w in V \ (H ∪ S ∪ {v}), lexicographically; the first
// quadruple with the FORWARD pattern wins. With `rng`, one valid quadruple
// is drawn uniformly instead. Throws PreconditionError unless S dominates g
// and S ∩ H = ∅. Sets with fewer than two vertices have no witness.
std::optional<Quad> find_forward_witness(const Graph& g, const VertexSet& s,
                                         const VertexSet& h,
                                         RngStream* rng = nullptr);

// Searches (u, z, w) lexicographically with u, z in S and
// w in V \ (H ∪ S ∪ {v}) matching the REVERSE pattern. Throws
// PreconditionError unless undominated(g, S) = {v} and (S ∪ {v}) ∩ H = ∅.
std::optional<Quad> find_reverse_witness(const Graph& g, const VertexSet& s,
                                         int v, const VertexSet& h,
                                         RngStream* rng = nullptr);

struct MappingResult {
  Graph graph;
  MappingCertificate certificate;
};

// Applies the swap. Throws PreconditionError naming the first pair that
// breaks the direction's edge pattern, or a quad vertex lying in `h`.
// Classification fields and `flipped` are left for verify_certificate.
MappingResult apply_mapping(const Graph& g, const Quad& quad, Direction d,
                            const VertexSet& h = {},
                            const VertexSet& solution = {});

// Recomputes every flag from the two graphs, independently of how the
// certificate was produced, and classifies both graphs with the exact
// solver.
MappingCertificate verify_certificate(const Graph& before, const Graph& after,
                                      MappingCertificate cert, int k);

}  // namespace domlab

#endif  // DOMLAB_SYMMETRY_MAP_H_
