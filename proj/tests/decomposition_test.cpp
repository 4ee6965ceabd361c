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
#include "tjoin/decomposition.hpp"
#include "tjoin/error.hpp"

namespace tjoin {
namespace {

using namespace tjoin::testing;

TEST(KLClasses, Examples) {
  EXPECT_EQ(kl_classes(Graft(cycle4(), vs({a, b, c, d}))).classes,
            (std::vector<VertexSet>{vs({a, c}), vs({b, d})}));
  EXPECT_EQ(kl_classes(Graft(cycle4(), {})).classes,
            (std::vector<VertexSet>{vs({a}), vs({b}), vs({c}), vs({d})}));
  EXPECT_EQ(kl_classes(Graft(single_edge(), vs({0, 1}))).classes,
            (std::vector<VertexSet>{vs({0}), vs({1})}));
}

TEST(NegativeSet, Examples) {
  EXPECT_EQ(negative_set_bruteforce(Graft(cycle4(), vs({a, b, c, d})), Weighting(es({0, 2})),
                                    vs({a, c})),
            vs({b, d}));
  EXPECT_TRUE(negative_set_bruteforce(Graft(cycle4(), {}), Weighting{}, vs({a})).empty());
  EXPECT_EQ(negative_set_bruteforce(Graft(path3(), vs({a, c})), Weighting(es({0, 1})), vs({a})),
            vs({b, c}));
}

TEST(NegativeSet, SizeCap) {
  Multigraph g(13);
  for (int v = 1; v < 13; ++v) g.add_edge(v - 1, v);
  EXPECT_THROW(negative_set_bruteforce(Graft(g, {}), Weighting{}, vs({0})), Error);
}

TEST(CriticalSet, Examples) {
  EXPECT_EQ(critical_set(Graft(cycle4(), vs({a, b, c, d})), vs({a, c})), vs({b, d}));
  EXPECT_EQ(critical_set(Graft(path3(), vs({a, c})), vs({a})), vs({b, c}));
  EXPECT_TRUE(critical_set(Graft(cycle4(), {}), vs({a})).empty());
  EXPECT_THROW(critical_set(Graft(cycle4(), {}), vs({a, c})), Error);
}

TEST(Neicomp, Examples) {
  EXPECT_EQ(neicomp(Graft(cycle4(), vs({a, b, c, d})), a, vs({a, c})),
            (std::vector<VertexSet>{vs({b}), vs({d})}));
  EXPECT_EQ(neicomp(Graft(path3(), vs({a, c})), a, vs({a})), (std::vector<VertexSet>{vs({b, c})}));
  EXPECT_TRUE(neicomp(Graft(cycle4(), {}), a, vs({a})).empty());
}

TEST(IcompStructure, Examples) {
  const auto all = icomp_structure(Graft(cycle4(), vs({a, b, c, d})), a);
  ASSERT_EQ(all.blocks.size(), 1U);
  EXPECT_EQ(all.blocks[0].klass, vs({a, c}));
  EXPECT_EQ(all.blocks[0].critical, vs({b, d}));

  const auto p3 = icomp_structure(Graft(path3(), vs({a, c})), a);
  ASSERT_EQ(p3.blocks.size(), 1U);
  EXPECT_EQ(p3.blocks[0].klass, vs({a}));
  EXPECT_EQ(p3.blocks[0].critical, vs({b, c}));

  const auto none = icomp_structure(Graft(cycle4(), {}), a);
  ASSERT_EQ(none.blocks.size(), 1U);
  EXPECT_EQ(none.blocks[0].klass, vs({a}));
  EXPECT_TRUE(none.blocks[0].critical.empty());
}

TEST(IcompStructure, RequiresBipartite) {
  try {
    icomp_structure(Graft(triangle(), {}), a);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotBipartite);
  }
}

TEST(DecompositionProperties, RandomBipartiteGrafts) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 120; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const DecompositionAtlas atlas(random_bipartite_graft(rng, n, static_cast<int>(rng() % 5)));
    const Graft& gt = atlas.graft();
    const auto& kl = atlas.kl();
    ASSERT_TRUE(is_partition_of(kl.classes, gt.graph().all_vertices()));

    auto related = [&](Vertex u, Vertex v) {
      for (const VertexSet& fc : atlas.factor_components())
        if (fc.contains(u)) return fc.contains(v) && atlas.dist(u, v) == 0;
      return false;
    };
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex x = 0; x < n; ++x)
          if (related(u, v) && related(v, x)) EXPECT_TRUE(related(u, x));

    for (const Edge& ed : gt.graph().edges())
      if (!atlas.allowed().contains(ed.id)) EXPECT_EQ(atlas.dist(ed.u, ed.v), 1);

    const auto joins = nu_bruteforce(gt).joins;
    for (const VertexSet& s : kl.classes) {
      const VertexSet crit = atlas.critical_set(s);
      for (const EdgeSet& f : joins)
        EXPECT_EQ(negative_set_bruteforce(gt, Weighting(f), s), crit);
    }

    for (Vertex r = 0; r < n; ++r) {
      const Trisection t = atlas.trisection(r);
      EXPECT_TRUE(kl.class_of(r).subset_of(t.a));
      EXPECT_NO_THROW(icomp_structure(atlas, r));
      t.a.for_each([&](int x) {
        for (const VertexSet& fc : atlas.factor_components()) {
          if (!fc.contains(x)) continue;
          EXPECT_EQ(t.a & fc, kl.class_of(x));
          EXPECT_TRUE((fc - kl.class_of(x)).subset_of(t.d));
        }
      });
    }
  }
}

}  // namespace
}  // namespace tjoin
