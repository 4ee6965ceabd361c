// Copyright 2026 The tjoin Authors
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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tjoin/error.hpp"
#include "tjoin/graph.hpp"

namespace tjoin {
namespace {

using namespace tjoin::testing;

TEST(ConnectedComponents, PathIsOneBlock) {
  const auto comps = connected_components(path3(), vs({a, b, c}));
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0], vs({a, b, c}));
}

TEST(ConnectedComponents, RestrictionDropsMiddle) {
  const auto comps = connected_components(path3(), vs({a, c}));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], vs({a}));
  EXPECT_EQ(comps[1], vs({c}));
}

TEST(ConnectedComponents, CycleMinusOneVertex) {
  const auto comps = connected_components(cycle4(), vs({a, b, d}));
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0], vs({a, b, d}));
}

TEST(ConnectedComponents, EmptyRestriction) {
  EXPECT_TRUE(connected_components(cycle4(), {}).empty());
}

TEST(Cut, Examples) {
  const Multigraph g = cycle4();
  EXPECT_EQ(cut(g, vs({a})), es({0, 3}));
  EXPECT_EQ(cut(g, vs({a, b})), es({1, 3}));
  EXPECT_TRUE(cut(g, g.all_vertices()).empty());
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(neighbors(cycle4(), vs({a})), vs({b, d}));
  EXPECT_TRUE(neighbors(cycle4(), cycle4().all_vertices()).empty());
  EXPECT_EQ(neighbors(path3(), vs({b})), vs({a, c}));
}

TEST(Bipartition, Examples) {
  const auto c4 = bipartition(cycle4());
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->a, vs({a, c}));
  EXPECT_EQ(c4->b, vs({b, d}));
  EXPECT_FALSE(bipartition(triangle()));
  const auto e = bipartition(single_edge());
  ASSERT_TRUE(e);
  EXPECT_EQ(e->a, vs({0}));
  EXPECT_EQ(e->b, vs({1}));
}

TEST(RoundEarPath, Examples) {
  const Multigraph g = cycle4();
  const PathWitness abc{{a, b, c}, {0, 1}};
  EXPECT_TRUE(is_round_ear_path(g, abc, vs({a, c})));
  EXPECT_FALSE(is_round_ear_path(g, abc, vs({a, b, c})));
  const PathWitness ab{{a, b}, {0}};
  EXPECT_TRUE(is_round_ear_path(g, ab, vs({a, b})));
}

TEST(Multigraph, RejectsSelfLoopsAndOversize) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(0, 0), Error);
  EXPECT_THROW(Multigraph(65), Error);
  Multigraph big(2);
  for (int i = 0; i < Multigraph::kMaxEdges; ++i) big.add_edge(0, 1);
  try {
    big.add_edge(0, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSizeCap);
  }
}

TEST(Multigraph, ParallelEdgesKeepDistinctIds) {
  const Multigraph g = make_graph(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(cut(g, vs({0})), es({0, 1}));
}

TEST(GraphProperties, CutIsSymmetricAndClassesAreStable) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const Graft gt = random_bipartite_graft(rng, 7, 4);
    const Multigraph& g = gt.graph();
    for (std::uint64_t mask = 0; mask < (1U << g.vertex_count()); ++mask) {
      VertexSet x;
      for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1U) x.insert(v);
      EXPECT_EQ(cut(g, x), cut(g, g.all_vertices() - x));
    }
    EXPECT_EQ(connected_components(g, g.all_vertices()).size(), 1U);
    const auto parts = bipartition(g);
    ASSERT_TRUE(parts);
    for (const Edge& ed : g.edges())
      EXPECT_NE(parts->a.contains(ed.u), parts->a.contains(ed.v));
    EXPECT_EQ(parts->a | parts->b, g.all_vertices());
    EXPECT_TRUE(parts->a.contains(0));
  }
}

TEST(Induce, MapsRoundTrip) {
  const auto sub = induce(cycle4(), vs({b, c, d}));
  EXPECT_EQ(sub.graph.vertex_count(), 3);
  EXPECT_EQ(sub.graph.edge_count(), 2);
  EXPECT_EQ(sub.to_host(sub.graph.all_edges()), es({1, 2}));
  EXPECT_EQ(sub.from_host(vs({a, c})), vs({1}));
}

}  // namespace
}  // namespace tjoin
