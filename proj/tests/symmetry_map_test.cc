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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "domlab/dom_solver.h"
#include "domlab/errors.h"
#include "domlab/rng.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace domlab {
namespace {

using testing::AllForwardQuads;
using testing::AllReverseQuads;
using testing::CorpusPath;

TEST(ForwardWitnessTest, CompleteGraphHasNone) {
  const Graph k5 = Graph::Complete(5);
  EXPECT_FALSE(find_forward_witness(k5, {0, 1}, {}).has_value());
  EXPECT_FALSE(find_forward_witness(k5, {0}, {}).has_value());
  EXPECT_FALSE(find_forward_witness(k5, {2, 3, 4}, {0}).has_value());
}

TEST(ForwardWitnessTest, SingletonSolutionHasNone) {
  EXPECT_FALSE(find_forward_witness(testing::Star(5), {0}, {}).has_value());
}

TEST(ForwardWitnessTest, CorpusInstance) {
  const Graph g = read_graph_file(CorpusPath("corpus/forward_unique_pair.txt"));
  const InstanceClass cls = classify_instance(g, 2);
  ASSERT_EQ(cls.tag, InstanceTag::kUniqueDom);
  ASSERT_EQ(cls.solution, (VertexSet{1, 2}));
  const VertexSet h{0};
  const std::vector<Quad> all = AllForwardQuads(g, *cls.solution, h);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), (Quad{1, 3, 2, 4}));
  const auto quad = find_forward_witness(g, *cls.solution, h);
  ASSERT_TRUE(quad.has_value());
  EXPECT_EQ(*quad, (Quad{1, 3, 2, 4}));

  const MappingResult mapped = apply_mapping(g, *quad, Direction::kForward, h, *cls.solution);
  const MappingCertificate cert = verify_certificate(g, mapped.graph, mapped.certificate, 2);
  EXPECT_TRUE(cert.degree_preserved);
  EXPECT_TRUE(cert.edge_count_preserved);
  EXPECT_TRUE(cert.h_unchanged);
  EXPECT_TRUE(cert.locally_sound);
  EXPECT_TRUE(cert.flipped);
  EXPECT_EQ(cert.pre_class, InstanceTag::kUniqueDom);
  EXPECT_EQ(count_k_sets(mapped.graph, 2).dominating, 0u);
}

TEST(ForwardWitnessTest, Preconditions) {
  const Graph g = read_graph_file(CorpusPath("corpus/forward_unique_pair.txt"));
  EXPECT_THROW(find_forward_witness(g, {1, 2}, {1}), PreconditionError);
  EXPECT_THROW(find_forward_witness(g, {1, 3}, {}), PreconditionError);
}

TEST(ForwardWitnessTest, HContainingVIsRejectedBeforeVerification) {
  const Graph g = read_graph_file(CorpusPath("corpus/forward_unique_pair.txt"));
  // Putting the planted v in H forbids that quad at the witness stage.
  const VertexSet h{0, 3};
  const auto quad = find_forward_witness(g, {1, 2}, h);
  if (quad) EXPECT_NE(quad->v, 3);
  EXPECT_THROW(apply_mapping(g, Quad{1, 3, 2, 4}, Direction::kForward, h, {1, 2}),
               PreconditionError);
}

TEST(ReverseWitnessTest, CorpusInstance) {
  const Graph g = read_graph_file(CorpusPath("corpus/reverse_near_triple.txt"));
  const VertexSet s{1, 2, 3};
  ASSERT_EQ(undominated(g, s), VertexSet{4});
  ASSERT_EQ(count_k_sets(g, 3).dominating, 0u);
  const VertexSet h{0};
  const std::vector<Quad> all = AllReverseQuads(g, s, 4, h);
  ASSERT_FALSE(all.empty());
  const auto quad = find_reverse_witness(g, s, 4, h);
  ASSERT_TRUE(quad.has_value());
  EXPECT_EQ(*quad, all.front());
  EXPECT_EQ(*quad, (Quad{1, 4, 2, 5}));

  const MappingResult mapped = apply_mapping(g, *quad, Direction::kReverse, h, s);
  const MappingCertificate cert = verify_certificate(g, mapped.graph, mapped.certificate, 3);
  EXPECT_TRUE(cert.degree_preserved);
  EXPECT_TRUE(cert.h_unchanged);
  EXPECT_TRUE(cert.locally_sound);
  EXPECT_TRUE(cert.flipped);
  EXPECT_TRUE(is_dominating(mapped.graph, s));

  // Going back: the forward search on the mapped graph finds a witness for S.
  const auto back = find_forward_witness(mapped.graph, s, h);
  ASSERT_TRUE(back.has_value());
  const VertexSet x = undominated(
      apply_mapping(mapped.graph, *back, Direction::kForward, h, s).graph, s);
  EXPECT_TRUE(x.contains(back->v));
}

TEST(ReverseWitnessTest, NoOutsideNeighborMeansNoWitness) {
  // Path 0-1-2 plus isolated 3: S={0,1} misses only 3, which has no edges.
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = Graph::FromEdges(4, edges);
  EXPECT_FALSE(find_reverse_witness(g, {0, 1}, 3, {}).has_value());
  EXPECT_THROW(find_reverse_witness(g, {0, 1}, 2, {}), PreconditionError);
  EXPECT_THROW(find_reverse_witness(g, {0, 1}, 3, {3}), PreconditionError);
}

TEST(ApplyMappingTest, FourVertexExample) {
  const std::vector<Edge> before{{0, 1}, {2, 3}};
  const std::vector<Edge> after{{0, 2}, {1, 3}};
  const Graph g = Graph::FromEdges(4, before);
  const MappingResult m = apply_mapping(g, Quad{0, 1, 2, 3}, Direction::kForward);
  EXPECT_EQ(m.graph, Graph::FromEdges(4, after));
  EXPECT_TRUE(m.certificate.degree_preserved);
  const MappingResult back = apply_mapping(m.graph, Quad{0, 1, 2, 3}, Direction::kReverse);
  EXPECT_EQ(back.graph, g);
}

TEST(ApplyMappingTest, PatternViolationNamesThePair) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 3}};
  const Graph g = Graph::FromEdges(4, edges);
  try {
    apply_mapping(g, Quad{0, 1, 2, 3}, Direction::kForward);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,3)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(apply_mapping(g, Quad{0, 1, 1, 3}, Direction::kForward), PreconditionError);
}

TEST(VerifyCertificateTest, IdentityEditDoesNotFlip) {
  const Graph g = read_graph_file(CorpusPath("corpus/forward_unique_pair.txt"));
  MappingCertificate cert;
  cert.direction = Direction::kForward;
  cert.quad = Quad{1, 3, 2, 4};
  cert.h_vertices = VertexSet{0};
  cert.solution = VertexSet{1, 2};
  const MappingCertificate out = verify_certificate(g, g, cert, 2);
  EXPECT_FALSE(out.flipped);
  EXPECT_FALSE(out.locally_sound);
  EXPECT_TRUE(out.degree_preserved);
  EXPECT_TRUE(out.h_unchanged);
  EXPECT_EQ(out.hash_before, out.hash_after);
}

TEST(DirectionTest, Names) {
  EXPECT_EQ(to_string(Direction::kForward), "FORWARD");
  EXPECT_EQ(parse_direction("REVERSE"), Direction::kReverse);
  EXPECT_FALSE(parse_direction("sideways").has_value());
}

// Over random graphs with planted structure: the library's first witness is
// the first quad of the exhaustive search, the mapping is an involution,
// degrees and H are conserved, and the forward edit always leaves v
// undominated by S.
TEST(SymmetryMapPropertyTest, FuzzedForwardMappings) {
  std::mt19937_64 gen(606);
  int applied = 0;
  for (int t = 0; t < 20000 && applied < 1000; ++t) {
    const int n = 8 + static_cast<int>(gen() % 8);
    const Graph g = testing::RandomGraph(n, 0.3, gen);
    const int k = 2 + static_cast<int>(gen() % 2);
    const auto sets = find_dominating_sets(g, k, 1);
    if (sets.empty()) continue;
    const VertexSet s = sets.front();
    VertexSet h;
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v) && gen() % 4 == 0) h.insert(v);
    }
    const auto quad = find_forward_witness(g, s, h);
    const std::vector<Quad> all = AllForwardQuads(g, s, h);
    ASSERT_EQ(quad.has_value(), !all.empty());
    if (!quad) continue;
    ASSERT_EQ(*quad, all.front());
    const MappingResult fwd = apply_mapping(g, *quad, Direction::kForward, h, s);
    ASSERT_EQ(g.degrees(), fwd.graph.degrees());
    if (!h.empty()) {
      ASSERT_EQ(induced_subgraph(g, h).graph, induced_subgraph(fwd.graph, h).graph);
    }
    ASSERT_TRUE(undominated(fwd.graph, s).contains(quad->v));
    const MappingResult back = apply_mapping(fwd.graph, *quad, Direction::kReverse, h, s);
    ASSERT_EQ(back.graph, g);
    ++applied;
  }
  EXPECT_GE(applied, 1000);
}

TEST(SymmetryMapPropertyTest, FuzzedReverseMappings) {
  std::mt19937_64 gen(707);
  int applied = 0;
  for (int t = 0; t < 40000 && applied < 1000; ++t) {
    const int n = 8 + static_cast<int>(gen() % 8);
    const Graph g = testing::RandomGraph(n, 0.3, gen);
    const int k = 2 + static_cast<int>(gen() % 2);
    const auto near = find_near_witness(g, k);
    if (!near) continue;
    VertexSet h;
    for (int v = 0; v < n; ++v) {
      if (!near->set.contains(v) && v != near->vertex && gen() % 4 == 0) h.insert(v);
    }
    const auto quad = find_reverse_witness(g, near->set, near->vertex, h);
    const std::vector<Quad> all = AllReverseQuads(g, near->set, near->vertex, h);
    ASSERT_EQ(quad.has_value(), !all.empty());
    if (!quad) continue;
    ASSERT_EQ(*quad, all.front());
    const MappingResult rev = apply_mapping(g, *quad, Direction::kReverse, h, near->set);
    ASSERT_EQ(g.degrees(), rev.graph.degrees());
    ASSERT_EQ(g.edge_count(), rev.graph.edge_count());
    ASSERT_TRUE(is_dominating(rev.graph, near->set));
    if (!h.empty()) {
      ASSERT_EQ(induced_subgraph(g, h).graph, induced_subgraph(rev.graph, h).graph);
    }
    const MappingResult fwd = apply_mapping(rev.graph, *quad, Direction::kForward, h, near->set);
    ASSERT_EQ(fwd.graph, g);
    ++applied;
  }
  EXPECT_GE(applied, 1000);
}

TEST(SymmetryMapPropertyTest, RandomizedWitnessIsAValidQuad) {
  const Graph g = read_graph_file(CorpusPath("corpus/forward_unique_pair.txt"));
  const std::vector<Quad> all = AllForwardQuads(g, {1, 2}, {0});
  for (std::uint64_t s = 0; s < 50; ++s) {
    RngStream rng(s, 1);
    const auto quad = find_forward_witness(g, {1, 2}, {0}, &rng);
    ASSERT_TRUE(quad.has_value());
    EXPECT_NE(std::find(all.begin(), all.end(), *quad), all.end());
  }
}

}  // namespace
}  // namespace domlab
