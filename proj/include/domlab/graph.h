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

#ifndef DOMLAB_GRAPH_H_
#define DOMLAB_GRAPH_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/rng.h"
#include "domlab/vertex_set.h"

namespace domlab {

// Unordered vertex pair; normalized so that u < v where it matters.
struct Edge {
  int u = 0;
  int v = 0;

  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Labeled simple undirected graph on vertices 0..n-1. Row v of the adjacency
// is the open neighborhood of v. Immutable once built.
class Graph {
 public:
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph Complete(int n);
  static Graph FromEdges(int n, std::span<const Edge> edges);
  // Validates symmetry, loop-freedom and range of every row.
  static Graph FromRows(std::vector<VertexSet> rows);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
  }
  int degree(int v) const { return rows_[v].size(); }
  std::vector<int> degrees() const;
  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::Prefix(n_); }
  std::span<const VertexSet> rows() const { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}

  int n_;
  std::vector<VertexSet> rows_;
};

// G(n,p): pairs (i,j), i<j, visited lexicographically; one uniform variate
// per pair, edge iff variate < p.
Graph generate_gnp(int n, double p, RngStream& rng);

struct InducedSubgraph {
  Graph graph;
  // relabeling[new] = old, ascending.
  std::vector<int> relabeling;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Vertices outside `s` with no neighbor in `s`.
VertexSet undominated(const Graph& g, const VertexSet& s);

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  return undominated(g, s).empty();
}

// Copy of `g` with `remove` deleted and `add` inserted. Throws
// PreconditionError naming the first pair that violates the contract.
Graph toggle_edges(const Graph& g, std::span<const Edge> remove,
                   std::span<const Edge> add);

// Text format: "n m" then m lines "u v" with u < v, sorted.
std::string to_text(const Graph& g);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// FNV-1a over the canonical text form.
std::uint64_t graph_hash(const Graph& g);

}  // namespace domlab

#endif  // DOMLAB_GRAPH_H_
