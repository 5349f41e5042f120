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

#include "domlab/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "domlab/errors.h"

namespace domlab {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) +
                        " outside supported range [1, " +
                        std::to_string(kMaxVertices) + "]");
  }
}

void check_pair(int n, const Edge& e) {
  if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
    throw PreconditionError("pair " + to_string(e) + " references a vertex outside [0, " +
                            std::to_string(n) + ")");
  }
  if (e.u == e.v) {
    throw PreconditionError("pair " + to_string(e) + " is a self-loop");
  }
}

}  // namespace

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.resize(n);
}

Graph Graph::Complete(int n) {
  check_order(n);
  const VertexSet all = VertexSet::Prefix(n);
  std::vector<VertexSet> rows(n, all);
  for (int v = 0; v < n; ++v) rows[v].erase(v);
  return Graph(n, std::move(rows));
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> rows(n);
  for (const Edge& e : edges) {
    check_pair(n, e);
    rows[e.u].insert(e.v);
    rows[e.v].insert(e.u);
  }
  return Graph(n, std::move(rows));
}

Graph Graph::FromRows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::Prefix(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].contains(v)) {
      throw PreconditionError("row " + std::to_string(v) + " has a self-loop");
    }
    if (!rows[v].is_subset_of(all)) {
      throw PreconditionError("row " + std::to_string(v) +
                              " has bits at or beyond n");
    }
    bool symmetric = true;
    rows[v].for_each([&](int u) { symmetric &= rows[u].contains(v); });
    if (!symmetric) {
      throw PreconditionError("row " + std::to_string(v) + " is not symmetric");
    }
  }
  return Graph(n, std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    rows_[u].for_each([&](int v) {
      if (v > u) out.push_back({u, v});
    });
  }
  return out;
}

Graph generate_gnp(int n, double p, RngStream& rng) {
  check_order(n);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("edge probability " + std::to_string(p) +
                      " outside [0, 1]");
  }
  std::vector<VertexSet> rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  return Graph::FromRows(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.empty()) throw DomainError("induced subgraph of an empty vertex set");
  if (!keep.is_subset_of(g.vertices())) {
    throw PreconditionError("vertex set " + to_string(keep) +
                            " is not inside the graph");
  }
  InducedSubgraph out{Graph(keep.size()), keep.members()};
  const int m = static_cast<int>(out.relabeling.size());
  std::vector<VertexSet> rows(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (g.has_edge(out.relabeling[a], out.relabeling[b])) {
        rows[a].insert(b);
        rows[b].insert(a);
      }
    }
  }
  out.graph = Graph::FromRows(std::move(rows));
  return out;
}

VertexSet undominated(const Graph& g, const VertexSet& s) {
  VertexSet covered = s;
  s.for_each([&](int v) { covered |= g.neighbors(v); });
  return g.vertices() - covered;
}

Graph toggle_edges(const Graph& g, std::span<const Edge> remove,
                   std::span<const Edge> add) {
  const int n = g.order();
  std::set<Edge> touched;
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for (const Edge& raw : remove) {
    check_pair(n, raw);
    const Edge e = raw.normalized();
    if (!g.has_edge(e.u, e.v)) {
      throw PreconditionError("cannot remove " + to_string(e) +
                              ": not an edge");
    }
    if (!touched.insert(e).second) {
      throw PreconditionError("pair " + to_string(e) + " listed twice");
    }
    rows[e.u].erase(e.v);
    rows[e.v].erase(e.u);
  }
  for (const Edge& raw : add) {
    check_pair(n, raw);
    const Edge e = raw.normalized();
    if (!touched.insert(e).second) {
      throw PreconditionError("pair " + to_string(e) + " listed twice");
    }
    if (g.has_edge(e.u, e.v)) {
      throw PreconditionError("cannot add " + to_string(e) +
                              ": already an edge");
    }
    rows[e.u].insert(e.v);
    rows[e.v].insert(e.u);
  }
  return Graph::FromRows(std::move(rows));
}

std::string to_text(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::string out = std::to_string(g.order()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::vector<long> numbers;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\n' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc()) {
      throw PreconditionError("graph text: expected an integer at offset " +
                              std::to_string(p - text.data()));
    }
    numbers.push_back(value);
    p = next;
  }
  if (numbers.size() < 2) throw PreconditionError("graph text: missing header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graph text: vertex count " + std::to_string(n) +
                        " unsupported");
  }
  if (m < 0 || numbers.size() != static_cast<size_t>(2 + 2 * m)) {
    throw PreconditionError("graph text: header announces " +
                            std::to_string(m) + " edges, body disagrees");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    const Edge e{static_cast<int>(numbers[2 + 2 * i]),
                 static_cast<int>(numbers[3 + 2 * i])};
    if (e.u >= e.v) {
      throw PreconditionError("graph text: edge " + to_string(e) +
                              " must satisfy u < v");
    }
    if (!edges.empty() && !(edges.back() < e)) {
      throw PreconditionError("graph text: edge " + to_string(e) +
                              " out of order or duplicated");
    }
    edges.push_back(e);
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  out << to_text(g);
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : to_text(g)) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace domlab
