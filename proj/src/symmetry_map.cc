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

#include "domlab/symmetry_map.h"

#include <string>
#include <vector>

#include "domlab/errors.h"

namespace domlab {

namespace {

template <class Candidate>
std::optional<Candidate> pick(std::vector<Candidate>& found, RngStream* rng) {
  if (found.empty()) return std::nullopt;
  if (rng == nullptr) return found.front();
  return found[rng->uniform_below(found.size())];
}

void require_edge(const Graph& g, int a, int b, bool present) {
  if (g.has_edge(a, b) != present) {
    throw PreconditionError("pair " + to_string(Edge{a, b}.normalized()) +
                            (present ? " must be an edge" : " must not be an edge"));
  }
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::kForward ? "FORWARD" : "REVERSE";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "FORWARD" || text == "forward") return Direction::kForward;
  if (text == "REVERSE" || text == "reverse") return Direction::kReverse;
  return std::nullopt;
}

std::array<Edge, 2> removed_edges(const Quad& q, Direction d) {
  if (d == Direction::kForward) return {Edge{q.u, q.v}, Edge{q.z, q.w}};
  return {Edge{q.v, q.w}, Edge{q.u, q.z}};
}

std::array<Edge, 2> added_edges(const Quad& q, Direction d) {
  if (d == Direction::kForward) return {Edge{q.u, q.z}, Edge{q.v, q.w}};
  return {Edge{q.v, q.u}, Edge{q.z, q.w}};
}

std::optional<Quad> find_forward_witness(const Graph& g, const VertexSet& s,
                                         const VertexSet& h, RngStream* rng) {
  if (s.empty() || !s.is_subset_of(g.vertices())) {
    throw PreconditionError("solution set " + to_string(s) + " is not a vertex set of the graph");
  }
  if (s.intersects(h)) {
    throw PreconditionError("solution set " + to_string(s) + " meets H");
  }
  if (!is_dominating(g, s)) {
    throw PreconditionError("set " + to_string(s) + " is not dominating");
  }
  std::vector<Quad> found;
  if (s.size() < 2) return std::nullopt;
  const VertexSet outside = g.vertices() - h - s;
  outside.for_each([&](int v) {
    if (!found.empty() && rng == nullptr) return;
    const VertexSet in_s = g.neighbors(v) & s;
    if (in_s.size() != 1) return;
    const int u = in_s.first();
    for (int z : s.members()) {
      if (z == u || g.has_edge(u, z)) continue;
      for (int w : outside.members()) {
        if (w == v || !g.has_edge(z, w) || g.has_edge(u, w) || g.has_edge(v, w)) {
          continue;
        }
        found.push_back(Quad{u, v, z, w});
        if (rng == nullptr) return;
      }
    }
  });
  return pick(found, rng);
}

std::optional<Quad> find_reverse_witness(const Graph& g, const VertexSet& s,
                                         int v, const VertexSet& h,
                                         RngStream* rng) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside the graph");
  }
  if (s.empty() || !s.is_subset_of(g.vertices())) {
    throw PreconditionError("set " + to_string(s) + " is not a vertex set of the graph");
  }
  if (undominated(g, s) != VertexSet{v}) {
    throw PreconditionError("set " + to_string(s) +
                            " does not leave exactly vertex " + std::to_string(v) +
                            " undominated");
  }
  VertexSet touched = s;
  touched.insert(v);
  if (touched.intersects(h)) {
    throw PreconditionError("S ∪ {v} meets H");
  }
  const std::vector<int> members = s.members();
  const VertexSet outside = g.vertices() - h - touched;
  std::vector<Quad> found;
  for (int u : members) {
    for (int z : members) {
      if (z == u || !g.has_edge(u, z)) continue;
      for (int w : outside.members()) {
        if (!g.has_edge(v, w) || g.has_edge(u, w) || g.has_edge(z, w)) continue;
        found.push_back(Quad{u, v, z, w});
        if (rng == nullptr) return pick(found, rng);
      }
    }
  }
  return pick(found, rng);
}

MappingResult apply_mapping(const Graph& g, const Quad& quad, Direction d,
                            const VertexSet& h, const VertexSet& solution) {
  const std::array<int, 4> vs{quad.u, quad.v, quad.z, quad.w};
  for (int a = 0; a < 4; ++a) {
    if (vs[a] < 0 || vs[a] >= g.order()) {
      throw PreconditionError("quad vertex " + std::to_string(vs[a]) + " outside the graph");
    }
    if (h.contains(vs[a])) {
      throw PreconditionError("quad vertex " + std::to_string(vs[a]) + " lies in H");
    }
    for (int b = a + 1; b < 4; ++b) {
      if (vs[a] == vs[b]) {
        throw PreconditionError("quad repeats vertex " + std::to_string(vs[a]));
      }
    }
  }
  const auto removed = removed_edges(quad, d);
  const auto added = added_edges(quad, d);
  for (const Edge& e : removed) require_edge(g, e.u, e.v, true);
  for (const Edge& e : added) require_edge(g, e.u, e.v, false);
  // The two pairs the swap never touches must stay non-edges.
  require_edge(g, quad.u, quad.w, false);
  require_edge(g, quad.v, quad.z, false);

  Graph after = toggle_edges(g, removed, added);
  MappingCertificate cert;
  cert.direction = d;
  cert.quad = quad;
  cert.removed = removed;
  cert.added = added;
  cert.h_vertices = h;
  cert.solution = solution;
  cert.degree_preserved = g.degrees() == after.degrees();
  cert.edge_count_preserved = g.edge_count() == after.edge_count();
  cert.hash_before = graph_hash(g);
  cert.hash_after = graph_hash(after);
  return MappingResult{std::move(after), cert};
}

MappingCertificate verify_certificate(const Graph& before, const Graph& after,
                                      MappingCertificate cert, int k) {
  cert.degree_preserved = before.degrees() == after.degrees();
  cert.edge_count_preserved = before.edge_count() == after.edge_count();
  cert.hash_before = graph_hash(before);
  cert.hash_after = graph_hash(after);
  cert.h_unchanged =
      cert.h_vertices.empty() ||
      induced_subgraph(before, cert.h_vertices).graph ==
          induced_subgraph(after, cert.h_vertices).graph;

  const InstanceTag pre = classify_instance(before, k).tag;
  const InstanceTag post = classify_instance(after, k).tag;
  cert.pre_class = pre;
  cert.post_class = post;
  const auto has_dom = [](InstanceTag t) {
    return t == InstanceTag::kUniqueDom || t == InstanceTag::kMultiDom;
  };

  const bool target_ok = !cert.solution.empty() && cert.solution.size() == k;
  if (cert.direction == Direction::kForward) {
    cert.locally_sound = target_ok && cert.quad.v >= 0 &&
                         undominated(after, cert.solution).contains(cert.quad.v);
    cert.flipped = pre == InstanceTag::kUniqueDom && !has_dom(post);
  } else {
    cert.locally_sound = target_ok && is_dominating(after, cert.solution);
    cert.flipped = !has_dom(pre) && has_dom(post) && cert.locally_sound;
  }
  return cert;
}

}  // namespace domlab
