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
#include "tjoin/oracle.hpp"

namespace tjoin {
namespace {

using namespace tjoin::testing;

std::vector<int> labels(const DistanceProfile& p) { return p.labels(); }

TEST(FWeight, Examples) {
  EXPECT_EQ(f_weight(Weighting(es({0, 1})), es({0, 1})), -2);
  EXPECT_EQ(f_weight(Weighting(es({0, 1})), EdgeSet{}), 0);
  EXPECT_EQ(f_weight(Weighting(es({0, 2})), es({0, 1, 2, 3})), 0);
}

TEST(Distance, Examples) {
  const Graft p3(path3(), vs({a, c}));
  const Weighting wp(es({0, 1}));
  EXPECT_EQ(distance(p3, wp, a, c), -2);
  EXPECT_EQ(distance(p3, wp, b, b), 0);
  const Graft c4(cycle4(), vs({a, b, c, d}));
  const Weighting wc(es({0, 2}));
  EXPECT_EQ(distance(c4, wc, a, c), 0);
  // both a–c paths weigh 0
  EXPECT_EQ(oracle::simple_path_minimum(c4.graph(), wc, a)[c], 0);
  const PathWitness p = shortest_path(c4, wc, a, c);
  EXPECT_TRUE(is_valid_path(c4.graph(), p));
  EXPECT_EQ(f_weight(wc, p), 0);
}

TEST(Distance, RejectsNonMinimumWeighting) {
  const Graft c4(cycle4(), {});
  try {
    distance(c4, Weighting(es({0, 1, 2, 3})), a, c);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNonConservative);
  }
}

TEST(DistanceViaNu, Examples) {
  EXPECT_EQ(distance_via_nu(Graft(single_edge(), vs({0, 1})), 0, 1), -1);
  EXPECT_EQ(distance_via_nu(Graft(path3(), vs({a, c})), a, c), -2);
  EXPECT_EQ(distance_via_nu(Graft(path3(), vs({a, c})), b, b), 0);
}

TEST(Profile, Examples) {
  EXPECT_EQ(labels(profile(Graft(path3(), vs({a, c})), Weighting(es({0, 1})), a)),
            (std::vector<int>{0, -1, -2}));
  EXPECT_EQ(labels(profile(Graft(cycle4(), {}), Weighting{}, a)), (std::vector<int>{0, 1, 2, 1}));
  const auto p = profile(Graft(cycle4(), vs({a, b, c, d})), Weighting(es({0, 2})), a);
  EXPECT_EQ(labels(p), (std::vector<int>{0, -1, 0, -1}));
  EXPECT_EQ(p.level(-1), vs({b, d}));
  EXPECT_EQ(p.at_most(-1), vs({b, d}));
  EXPECT_EQ(p.below(0), vs({b, d}));
  EXPECT_EQ(p.at_most(0), vs({a, b, c, d}));
}

TEST(DistanceComponents, Path) {
  const Graft p3(path3(), vs({a, c}));
  const auto fam = distance_components(profile(p3, Weighting(es({0, 1})), a), p3.graph());
  EXPECT_EQ(fam.min_index(), -2);
  EXPECT_EQ(fam.max_index(), 0);
  ASSERT_EQ(fam.at(-2).size(), 1U);
  EXPECT_EQ(fam.at(-2)[0].vertices, vs({c}));
  EXPECT_FALSE(fam.at(-2)[0].capital);
  ASSERT_EQ(fam.at(-1).size(), 1U);
  EXPECT_EQ(fam.at(-1)[0].vertices, vs({b, c}));
  EXPECT_FALSE(fam.at(-1)[0].capital);
  ASSERT_EQ(fam.at(0).size(), 1U);
  EXPECT_EQ(fam.at(0)[0].vertices, vs({a, b, c}));
  EXPECT_TRUE(fam.at(0)[0].capital);
}

TEST(DistanceComponents, HopCycle) {
  const Graft c4(cycle4(), {});
  const auto fam = distance_components(profile(c4, Weighting{}, a), c4.graph());
  ASSERT_EQ(fam.at(0).size(), 1U);
  EXPECT_EQ(fam.at(0)[0].vertices, vs({a}));
  EXPECT_TRUE(fam.at(0)[0].capital);
  ASSERT_EQ(fam.at(1).size(), 1U);
  EXPECT_EQ(fam.at(1)[0].vertices, vs({a, b, d}));
  ASSERT_EQ(fam.at(2).size(), 1U);
  EXPECT_EQ(fam.at(2)[0].vertices, vs({a, b, c, d}));
}

TEST(DistanceComponents, SingleVertex) {
  const Graft one(Multigraph(1), {});
  const auto fam = distance_components(profile(one, Weighting{}, 0), one.graph());
  EXPECT_EQ(fam.min_index(), 0);
  EXPECT_EQ(fam.max_index(), 0);
  ASSERT_EQ(fam.at(0).size(), 1U);
  EXPECT_EQ(fam.at(0)[0].vertices, vs({0}));
  const auto t = trisection(one, Weighting{}, 0);
  EXPECT_EQ(t.a, vs({0}));
  EXPECT_TRUE(t.d.empty());
}

TEST(Trisection, Examples) {
  const auto all = trisection(Graft(cycle4(), vs({a, b, c, d})), Weighting(es({0, 2})), a);
  EXPECT_EQ(all.initial, vs({a, b, c, d}));
  EXPECT_EQ(all.a, vs({a, c}));
  EXPECT_EQ(all.d, vs({b, d}));
  EXPECT_TRUE(all.c.empty());

  const auto none = trisection(Graft(cycle4(), {}), Weighting{}, a);
  EXPECT_EQ(none.a, vs({a}));
  EXPECT_TRUE(none.d.empty());
  EXPECT_EQ(none.c, vs({b, c, d}));

  const auto p3 = trisection(Graft(path3(), vs({a, c})), Weighting(es({0, 1})), a);
  EXPECT_EQ(p3.a, vs({a}));
  EXPECT_EQ(p3.d, vs({b, c}));
  EXPECT_TRUE(p3.c.empty());
}

TEST(Extreme, Examples) {
  const Graft c4(cycle4(), vs({a, b, c, d}));
  EXPECT_TRUE(is_extreme(c4, vs({b})));
  EXPECT_TRUE(is_extreme(c4, vs({a, c})));
  EXPECT_FALSE(is_extreme(Graft(single_edge(), vs({0, 1})), vs({0, 1})));
}

TEST(Primal, Examples) {
  EXPECT_TRUE(is_primal(Graft(path3(), vs({a, c})), a));
  EXPECT_FALSE(is_primal(Graft(cycle4(), {}), a));
  EXPECT_TRUE(is_primal(Graft(Multigraph(1), {}), 0));
}

TEST(DistanceProperties, ThreeRoutesAgreeForEveryMinimumJoin) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graft gt = random_bipartite_graft(rng, n, static_cast<int>(rng() % 6));
    const auto via_nu = distance_matrix_via_nu(gt);
    const ShiftJoins shifts(gt);
    for (const EdgeSet& f : nu_bruteforce(gt).joins) {
      const Weighting w(f);
      const DistanceTable table(gt, w, shifts);
      for (Vertex u = 0; u < n; ++u) {
        const auto brute = oracle::simple_path_minimum(gt.graph(), w, u);
        for (Vertex v = 0; v < n; ++v) {
          EXPECT_EQ(table(u, v), via_nu[static_cast<std::size_t>(u * n + v)]);
          EXPECT_EQ(table(u, v), brute[static_cast<std::size_t>(v)]);
          const PathWitness& p = table.path(u, v);
          EXPECT_TRUE(is_valid_path(gt.graph(), p));
          EXPECT_EQ(p.front(), u);
          EXPECT_EQ(p.back(), v);
          EXPECT_EQ(f_weight(w, p), table(u, v));
        }
        for (const Edge& ed : gt.graph().edges())
          EXPECT_EQ(std::abs(table(u, ed.u) - table(u, ed.v)), 1);
      }
    }
  }
}

}  // namespace
}  // namespace tjoin
