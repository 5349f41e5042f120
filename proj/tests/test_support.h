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

// Test-only helpers: small graph builders and brute-force oracles that do
// not share code with the library's search routines.

#ifndef DOMLAB_TESTS_TEST_SUPPORT_H_
#define DOMLAB_TESTS_TEST_SUPPORT_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "domlab/graph.h"
#include "domlab/symmetry_map.h"

namespace domlab::testing {

inline Graph Edgeless(int n) { return Graph(n); }

inline Graph Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  return Graph::FromEdges(n, edges);
}

inline Graph Path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph::FromEdges(n, edges);
}

inline Graph Star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{0, i});
  return Graph::FromEdges(leaves + 1, edges);
}

// Plain adjacency matrix, filled from a Graph through has_edge only.
using Matrix = std::vector<std::vector<bool>>;

inline Matrix ToMatrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) m[u][v] = g.has_edge(u, v);
  }
  return m;
}

// Random graph from std::mt19937_64, independent of the library RNG.
inline Graph RandomGraph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(gen)) edges.push_back(Edge{u, v});
    }
  }
  return Graph::FromEdges(n, edges);
}

// Number of vertices left undominated by the subset encoded in `mask`.
inline int MissedBy(const Matrix& m, std::uint32_t mask) {
  const int n = static_cast<int>(m.size());
  int missed = 0;
  for (int x = 0; x < n; ++x) {
    if (mask >> x & 1u) continue;
    bool hit = false;
    for (int s = 0; s < n && !hit; ++s) hit = (mask >> s & 1u) && m[x][s];
    missed += !hit;
  }
  return missed;
}

struct BruteCounts {
  std::uint64_t dominating = 0;
  std::uint64_t near = 0;
};

// Scans every subset mask of size k; fine for n <= 16.
inline BruteCounts BruteForceCounts(const Graph& g, int k) {
  const Matrix m = ToMatrix(g);
  const int n = g.order();
  BruteCounts c;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    const int missed = MissedBy(m, mask);
    c.dominating += missed == 0;
    c.near += missed == 1;
  }
  return c;
}

// Every forward quadruple (u,v,z,w) admitted by the rewiring pattern:
// u,z in S; v,w outside H and S; edges uv, zw; non-edges uz, vw, uw, vz;
// and v has u as its only neighbor in S.
inline std::vector<Quad> AllForwardQuads(const Graph& g, const VertexSet& s,
                                         const VertexSet& h) {
  std::vector<Quad> out;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (s.contains(v) || h.contains(v)) continue;
    int in_s = 0;
    for (int x = 0; x < n; ++x) in_s += s.contains(x) && g.has_edge(v, x);
    if (in_s != 1) continue;
    for (int u = 0; u < n; ++u) {
      for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
          if (!s.contains(u) || !s.contains(z) || u == z) continue;
          if (s.contains(w) || h.contains(w) || w == v) continue;
          if (g.has_edge(u, v) && g.has_edge(z, w) && !g.has_edge(u, z) &&
              !g.has_edge(v, w) && !g.has_edge(u, w) && !g.has_edge(v, z)) {
            out.push_back(Quad{u, v, z, w});
          }
        }
      }
    }
  }
  return out;
}

// Every reverse quadruple for a near set S missing exactly v: u,z in S with
// edge uz; w outside H, S and v with edge vw; non-edges uv, zw, uw, vz.
inline std::vector<Quad> AllReverseQuads(const Graph& g, const VertexSet& s,
                                         int v, const VertexSet& h) {
  std::vector<Quad> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int z = 0; z < n; ++z) {
      for (int w = 0; w < n; ++w) {
        if (!s.contains(u) || !s.contains(z) || u == z) continue;
        if (s.contains(w) || h.contains(w) || w == v) continue;
        if (g.has_edge(u, z) && g.has_edge(v, w) && !g.has_edge(u, v) &&
            !g.has_edge(z, w) && !g.has_edge(u, w) && !g.has_edge(v, z)) {
          out.push_back(Quad{u, v, z, w});
        }
      }
    }
  }
  return out;
}

inline std::string CorpusPath(const std::string& name) {
  return std::string(DOMLAB_TEST_DATA_DIR) + "/" + name;
}

}  // namespace domlab::testing

#endif  // DOMLAB_TESTS_TEST_SUPPORT_H_
