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
#include "tjoin/distance.hpp"
#include "tjoin/error.hpp"
#include "tjoin/join.hpp"

namespace tjoin {
namespace {

using namespace tjoin::testing;

TEST(IsJoin, Examples) {
  const Graft p3(path3(), vs({a, c}));
  EXPECT_TRUE(is_join(p3, es({0, 1})));
  EXPECT_FALSE(is_join(p3, es({0})));
  EXPECT_TRUE(is_join(Graft(cycle4(), {}), {}));
}

TEST(Graft, RejectsOddComponentsAndDisconnection) {
  try {
    Graft(path3(), vs({a}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kParity);
  }
  const Multigraph two = make_graph(4, {{0, 1}, {2, 3}});
  try {
    Graft(two, vs({0, 1}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kDisconnected);
  }
  EXPECT_NO_THROW(Graft(two, vs({0, 1}), false));
}

TEST(NuBruteforce, Examples) {
  const auto edge = nu_bruteforce(Graft(single_edge(), vs({0, 1})));
  EXPECT_EQ(edge.nu, 1);
  EXPECT_EQ(edge.joins, (std::vector<EdgeSet>{es({0})}));

  const auto all = nu_bruteforce(Graft(cycle4(), vs({a, b, c, d})));
  EXPECT_EQ(all.nu, 2);
  EXPECT_EQ(all.joins, (std::vector<EdgeSet>{es({0, 2}), es({1, 3})}));

  const auto none = nu_bruteforce(Graft(cycle4(), {}));
  EXPECT_EQ(none.nu, 0);
  EXPECT_EQ(none.joins, (std::vector<EdgeSet>{EdgeSet{}}));
}

TEST(NuBruteforce, SizeCap) {
  Multigraph g(2);
  for (int i = 0; i < 21; ++i) g.add_edge(0, 1);
  try {
    nu_bruteforce(Graft(g, {}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSizeCap);
  }
}

TEST(MinJoin, Examples) {
  const auto p3 = min_join(Graft(path3(), vs({a, c})));
  EXPECT_EQ(p3.edges, es({0, 1}));
  EXPECT_EQ(p3.size, 2);
  EXPECT_TRUE(p3.minimal);
  // ties broken towards the lexicographically smallest edge list
  EXPECT_EQ(min_join(Graft(cycle4(), vs({a, b, c, d}))).edges, es({0, 2}));
  EXPECT_EQ(min_join(Graft(cycle4(), vs({a, c}))).edges, es({0, 1}));
}

TEST(MinJoin, TerminalCap) {
  Multigraph g(22);
  for (int v = 1; v < 22; ++v) g.add_edge(v - 1, v);
  try {
    min_join(Graft(g, g.all_vertices()));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSizeCap);
  }
}

TEST(IsMinimum, Examples) {
  EXPECT_TRUE(is_minimum(Graft(path3(), vs({a, c})), es({0, 1})));
  const Graft empty(cycle4(), {});
  EXPECT_FALSE(is_minimum(empty, es({0, 1, 2, 3})));
  const auto circuit = negative_circuit(empty, es({0, 1, 2, 3}));
  ASSERT_TRUE(circuit);
  EXPECT_EQ(*circuit, es({0, 1, 2, 3}));
  EXPECT_TRUE(is_minimum(Graft(cycle4(), vs({a, b, c, d})), es({0, 2})));
  try {
    is_minimum(empty, es({0}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotAJoin);
  }
}

TEST(AllowedEdges, Examples) {
  EXPECT_TRUE(allowed_edges(Graft(cycle4(), {})).empty());
  EXPECT_EQ(allowed_edges(Graft(cycle4(), vs({a, b, c, d}))), es({0, 1, 2, 3}));
  EXPECT_EQ(allowed_edges(Graft(path3(), vs({a, c}))), es({0, 1}));
}

TEST(FactorComponents, Examples) {
  EXPECT_EQ(factor_components(Graft(cycle4(), vs({a, b, c, d}))),
            (std::vector<VertexSet>{vs({a, b, c, d})}));
  EXPECT_EQ(factor_components(Graft(cycle4(), {})),
            (std::vector<VertexSet>{vs({a}), vs({b}), vs({c}), vs({d})}));
  EXPECT_EQ(factor_components(Graft(path3(), vs({a, c}))),
            (std::vector<VertexSet>{vs({a, b, c})}));
}

TEST(Subgraft, Examples) {
  const Graft p3(path3(), vs({a, c}));
  EXPECT_EQ(subgraft(p3, es({0, 1}), vs({b, c})).induced_terminals, vs({b, c}));
  EXPECT_EQ(subgraft(p3, es({0, 1}), p3.graph().all_vertices()).induced_terminals, vs({a, c}));
  // a and b are terminals with no join edge leaving {a, b}, so both stay.
  const Graft c4(cycle4(), vs({a, b, c, d}));
  const auto view = subgraft(c4, es({0, 2}), vs({a, b}));
  EXPECT_EQ(view.induced_terminals, vs({a, b}));
  EXPECT_TRUE(is_join(view.graft, view.map.from_host(es({0, 2}))));
  EXPECT_THROW(subgraft(c4, es({0}), vs({a})), Error);
}

TEST(Nu, DisconnectedUsableSet) {
  const Multigraph g = cycle4();
  EdgeSet usable = g.all_edges();
  usable.erase(0);
  usable.erase(2);
  // remaining edges bc and da split {a,b,c,d} into {b,c} and {a,d}
  EXPECT_EQ(nu(g, vs({b, c}), usable), 1);
  EXPECT_FALSE(nu(g, vs({a, b}), usable).has_value());
}

TEST(JoinProperties, OraclesAgreeOnRandomGrafts) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graft gt = random_bipartite_graft(rng, n, static_cast<int>(rng() % 6));
    const auto brute = nu_bruteforce(gt);
    const auto cert = min_join(gt);
    ASSERT_EQ(cert.size, brute.nu);
    EXPECT_EQ(cert.edges, brute.joins.front());
    const auto pairing = pairing_join(gt.graph(), gt.terminals(), gt.graph().all_edges());
    ASSERT_TRUE(pairing);
    EXPECT_EQ(static_cast<int>(pairing->size()), brute.nu);

    EdgeSet union_of_joins;
    for (const EdgeSet& j : brute.joins) union_of_joins |= j;
    EXPECT_EQ(allowed_edges(gt), union_of_joins);

    for (const EdgeSet& j1 : brute.joins)
      for (const EdgeSet& j2 : brute.joins) EXPECT_TRUE(odd_vertices(gt.graph(), j1 ^ j2).empty());

    for (const EdgeSet& j : all_joins_bruteforce(gt)) {
      const bool minimum = static_cast<int>(j.size()) == brute.nu;
      const auto neg = negative_circuit(gt, j);
      EXPECT_EQ(minimum, !neg.has_value());
      if (neg) EXPECT_LT(f_weight(Weighting(j), *neg), 0);
    }

    const auto view = subgraft(gt, cert.edges, VertexSet::prefix(static_cast<std::size_t>(n / 2 + 1)));
    EXPECT_TRUE(is_join(view.graft, view.map.from_host(cert.edges)));
  }
}

}  // namespace
}  // namespace tjoin
