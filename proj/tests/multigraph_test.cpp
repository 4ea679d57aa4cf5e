// Copyright 2026 The tropaut Authors
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


#include "tropaut/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tropaut/automorphism.hpp"
#include "tropaut/families.hpp"

namespace tropaut {
namespace {

using testing::BruteBridges;
using testing::BruteCutVertices;
using testing::Cycle;
using testing::Path;

TEST(MultigraphTest, RejectsEndpointOutOfRange) {
  EXPECT_THROW(Multigraph(2, {{0, 2}}), InvalidArgument);
  EXPECT_THROW(Multigraph(2, {{-1, 0}}), InvalidArgument);
  EXPECT_THROW(Multigraph(-1, {}), InvalidArgument);
}

TEST(MultigraphTest, NormalisesEndpointsAndCountsMultiplicity) {
  const Multigraph g(3, {{1, 0}, {0, 1}, {2, 2}});
  EXPECT_EQ(g.endpoints(0), Endpoints(0, 1));
  EXPECT_EQ(g.multiplicity(0, 1), 2);
  EXPECT_EQ(g.multiplicity(1, 0), 2);
  EXPECT_EQ(g.multiplicity(2, 2), 1);
  EXPECT_EQ(g.incident_edges(2).size(), 1u);
}

TEST(DegreeTest, LoopsCountTwice) {
  EXPECT_EQ(degree(bouquet(1), 0), 2);
  EXPECT_EQ(degree(banana(2), 0), 3);
  EXPECT_EQ(degree(banana(2), 1), 3);
  EXPECT_EQ(degree(lollipop(3), 0), 3);
  EXPECT_THROW(degree(banana(2), 2), InvalidArgument);
}

TEST(DegreeTest, HandshakeHoldsOnFamilies) {
  for (const Multigraph& g : {banana(3), bouquet(4), lollipop(3), h1(), h2(),
                              h(), Path(5), Cycle(4)}) {
    int total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) total += degree(g, v);
    EXPECT_EQ(total, 2 * g.num_edges());
  }
}

TEST(LeaflessTest, Examples) {
  EXPECT_TRUE(is_leafless(banana(2)));
  EXPECT_FALSE(is_leafless(Path(2)));
  EXPECT_TRUE(is_leafless(bouquet(1)));
  EXPECT_TRUE(is_leafless(Multigraph()));
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(connected_components(banana(2)).size(), 1u);
  EXPECT_EQ(connected_components(banana(2))[0].size(), 2u);
  EXPECT_EQ(connected_components(Multigraph(2, {{0, 0}, {1, 1}})).size(), 2u);
  EXPECT_TRUE(connected_components(Multigraph()).empty());
  EXPECT_EQ(connected_components(Multigraph(3, {})).size(), 3u);
}

TEST(BettiTest, Examples) {
  for (int g = 1; g <= 6; ++g) {
    EXPECT_EQ(betti_number(banana(g)), g);
    EXPECT_EQ(betti_number(bouquet(g)), g);
  }
  EXPECT_EQ(betti_number(Path(6)), 0);
  EXPECT_EQ(betti_number(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}})), 0);
  EXPECT_EQ(betti_number(Multigraph(2, {{0, 0}, {1, 1}})), 2);
}

TEST(BridgesTest, Examples) {
  EXPECT_EQ(bridges(lollipop(3)), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(bridges(banana(2)).empty());
  EXPECT_EQ(bridges(Path(3)), (std::vector<EdgeId>{0, 1}));
}

TEST(BridgesTest, ParallelEdgesAndLoopsAreNeverBridges) {
  const Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  EXPECT_EQ(bridges(g), (std::vector<EdgeId>{2}));
}

TEST(CutVerticesTest, Examples) {
  const Multigraph sub = subdivide_uniform(bouquet(2), 2).graph;
  EXPECT_EQ(cut_vertices(sub), (std::vector<VertexId>{0}));
  EXPECT_TRUE(cut_vertices(banana(3)).empty());
  EXPECT_EQ(cut_vertices(Path(3)), (std::vector<VertexId>{1}));
}

TEST(CutVerticesTest, LoopVertexIsNotACut) {
  // Removing a vertex with only a loop leaves the rest untouched.
  EXPECT_TRUE(cut_vertices(bouquet(3)).empty());
  EXPECT_EQ(cut_vertices(lollipop(2)), (std::vector<VertexId>{0}));
}

TEST(BridgesTest, MatchesBruteForceOnConnectedGraphs) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 5; ++m) {
      testing::ForEachEdgeMultiset(n, m, [](const Multigraph& g) {
        EXPECT_EQ(bridges(g), BruteBridges(g)) << to_string(g);
        EXPECT_EQ(cut_vertices(g), BruteCutVertices(g)) << to_string(g);
      });
    }
  }
}

TEST(ContractTest, LollipopBridgesGiveBouquet) {
  const Multigraph g = lollipop(3);
  const std::vector<EdgeId> s = bridges(g);
  const Contraction c = contract(g, s);
  EXPECT_TRUE(are_isomorphic(c.graph, bouquet(3)));
  EXPECT_EQ(betti_number(c.graph), 3);
  EXPECT_EQ(c.projection, (std::vector<VertexId>{0, 0, 0, 0}));
  EXPECT_EQ(c.edge_origin, (std::vector<EdgeId>{3, 4, 5}));
}

TEST(ContractTest, EmptySetIsIdentity) {
  const Multigraph g = h();
  const Contraction c = contract(g, {});
  EXPECT_EQ(c.graph, g);
  std::vector<VertexId> id(g.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(c.projection, id);
}

TEST(ContractTest, OneBananaEdgeLeavesTwoLoops) {
  const EdgeId s[] = {0};
  const Contraction c = contract(banana(2), s);
  EXPECT_EQ(c.graph, Multigraph(1, {{0, 0}, {0, 0}}));
}

TEST(ContractTest, RejectsInvalidEdge) {
  const EdgeId s[] = {3};
  EXPECT_THROW(contract(banana(2), s), InvalidArgument);
}

TEST(SubdivideTest, Examples) {
  const int two[] = {2};
  const Multigraph cycle = subdivide(bouquet(1), two).graph;
  EXPECT_EQ(cycle.num_vertices(), 2);
  EXPECT_EQ(cycle.multiplicity(0, 1), 2);

  EXPECT_EQ(subdivide_uniform(banana(2), 1).graph, banana(2));

  const Multigraph s = subdivide_uniform(banana(2), 2).graph;
  EXPECT_EQ(s.num_vertices(), 5);
  EXPECT_EQ(s.num_edges(), 6);
  EXPECT_EQ(betti_number(s), 2);
}

TEST(SubdivideTest, RejectsZeroCount) {
  const int counts[] = {1, 0, 1};
  EXPECT_THROW(subdivide(banana(2), counts), InvalidArgument);
  const int short_counts[] = {1};
  EXPECT_THROW(subdivide(banana(2), short_counts), InvalidArgument);
}

TEST(SubdivideTest, PathsRunBetweenOriginalEndpoints) {
  const Multigraph g(2, {{0, 1}, {1, 1}});
  const int c[] = {3, 2};
  const Subdivision sub = subdivide(g, c);
  ASSERT_EQ(sub.edge_paths.size(), 2u);
  EXPECT_EQ(sub.edge_paths[0].size(), 3u);
  EXPECT_EQ(sub.edge_paths[1].size(), 2u);
  EXPECT_TRUE(sub.graph.endpoints(sub.edge_paths[0].front()).contains(0));
  EXPECT_TRUE(sub.graph.endpoints(sub.edge_paths[0].back()).contains(1));
  EXPECT_EQ(bridges(sub.graph).size(), 3u);
}

TEST(LeaflessCoreTest, Examples) {
  EXPECT_TRUE(leafless_core(Path(4)).graph.empty());
  const Multigraph pendant(5, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3},
                               {3, 4}});
  const Subgraph core = leafless_core(pendant);
  EXPECT_TRUE(are_isomorphic(core.graph, banana(2)));
  EXPECT_EQ(core.edge_origin, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(leafless_core(banana(3)).graph, banana(3));
}

TEST(LeaflessCoreTest, IdempotentAndOrderIndependent) {
  const Multigraph g(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {3, 5},
                         {6, 6}, {5, 5}});
  const Subgraph once = leafless_core(g);
  EXPECT_EQ(leafless_core(once.graph).graph, once.graph);
  // Relabelling permutes the peeling order; the result is isomorphic.
  const std::vector<VertexId> perm = {6, 5, 4, 3, 2, 1, 0};
  EXPECT_TRUE(
      are_isomorphic(leafless_core(relabel(g, perm)).graph, once.graph));
  EXPECT_EQ(once.graph.num_vertices(), 6);
}

TEST(DecomposeTest, Examples) {
  const CutDecomposition b = decompose_at(bouquet(2), 0);
  EXPECT_EQ(b.parts.size(), 2u);
  EXPECT_EQ(b.part_betti, (std::vector<int>{1, 1}));

  EXPECT_EQ(decompose_at(banana(2), 0).parts.size(), 1u);
  EXPECT_EQ(decompose_at(banana(2), 1).parts.size(), 1u);

  std::vector<int> hx = decompose_at(h(), 0).part_betti;
  std::sort(hx.begin(), hx.end());
  EXPECT_EQ(hx, (std::vector<int>{1, 3}));
}

TEST(DecomposeTest, PartsPartitionTheEdges) {
  for (const Multigraph& g : {lollipop(3), h(), subdivide_uniform(bouquet(3), 2).graph}) {
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
      const CutDecomposition d = decompose_at(g, x);
      std::vector<EdgeId> all;
      int betti = 0;
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const Subgraph& part = d.parts[i];
        EXPECT_TRUE(is_connected(part.graph));
        EXPECT_EQ(part.vertex_origin[0], x);
        all.insert(all.end(), part.edge_origin.begin(), part.edge_origin.end());
        betti += d.part_betti[i];
      }
      std::sort(all.begin(), all.end());
      std::vector<EdgeId> expected(g.num_edges());
      std::iota(expected.begin(), expected.end(), 0);
      EXPECT_EQ(all, expected);
      EXPECT_EQ(betti, betti_number(g));
    }
  }
}

TEST(DecomposeTest, RejectsDisconnectedInput) {
  EXPECT_THROW(decompose_at(Multigraph(2, {{0, 0}, {1, 1}}), 0), InvalidArgument);
}

}  // namespace
}  // namespace tropaut
