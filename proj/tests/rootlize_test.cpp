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

#include "tjoin/rootlize.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tjoin/error.hpp"

namespace tjoin {
namespace {

using namespace testing;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

Graft c4_all() { return Graft(cycle4(), vs({a, b, c, d})); }
Graft c4_empty() { return Graft(cycle4(), {}); }

std::string failures(const LemmaReport& r) {
  std::string out;
  for (const LemmaVerdict& v : r.verdicts)
    if (!v.pass) out += v.lemma + ": " + v.witness + "\n";
  return out;
}

TEST(Rootlize, FourCycleGadget) {
  const Rootlization rl = rootlize(c4_all(), vs({a, c}));
  EXPECT_EQ(rl.extended.vertex_count(), 6);
  EXPECT_EQ(rl.extended.edge_count(), 7);
  EXPECT_EQ(rl.extended.terminals(), vs({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(rl.root, 4);
  EXPECT_EQ(rl.attachment, 5);
  EXPECT_EQ(rl.root_edge, 4);
  EXPECT_EQ(rl.mount_edges(), es({5, 6}));
  EXPECT_EQ(rl.extended.graph().edge(6).other(5), c);
}

TEST(Rootlize, SingleVertexBecomesPath) {
  const Rootlization rl = rootlize(Graft(Multigraph(1), {}), vs({0}));
  EXPECT_EQ(rl.extended.vertex_count(), 3);
  EXPECT_EQ(rl.extended.terminals(), vs({1, 2}));
  EXPECT_TRUE(rl.extended.graph().adjacent(1, 2));
  EXPECT_TRUE(rl.extended.graph().adjacent(2, 0));
  EXPECT_FALSE(rl.extended.graph().adjacent(1, 0));
}

TEST(Rootlize, RejectsNonExtremeAndEmptyMounts) {
  const Graft edge(single_edge(), vs({0, 1}));
  EXPECT_EQ(code_of([&] { rootlize(edge, vs({0, 1})); }), ErrorCode::kNotExtreme);
  EXPECT_EQ(code_of([&] { rootlize(edge, {}); }), ErrorCode::kInvalidArgument);
}

TEST(ExtendedMinJoins, FourCycle) {
  const ExtendedJoinReport r = extended_min_joins(rootlize(c4_all(), vs({a, c})));
  EXPECT_EQ(r.base_nu, 2);
  EXPECT_EQ(r.extended_nu, 3);
  EXPECT_EQ(r.extended_joins, (std::vector<EdgeSet>{es({0, 2, 4}), es({1, 3, 4})}));
}

TEST(ExtendedMinJoins, SingleVertex) {
  const ExtendedJoinReport r = extended_min_joins(rootlize(Graft(Multigraph(1), {}), vs({0})));
  EXPECT_EQ(r.base_nu, 0);
  EXPECT_EQ(r.extended_nu, 1);
  EXPECT_EQ(r.extended_joins, std::vector<EdgeSet>{es({0})});
}

TEST(RootSetProfile, FourCycleAllTerminals) {
  const RootSetProfile p = root_set_profile(c4_all(), Weighting(es({0, 2})), vs({a, c}));
  EXPECT_EQ(p.distances.labels(), (std::vector<int>{0, -1, 0, -1}));
  EXPECT_EQ(p.trisection.a, vs({a, c}));
  EXPECT_EQ(p.trisection.d, vs({b, d}));
  EXPECT_TRUE(p.trisection.c.empty());
}

TEST(RootSetProfile, FourCycleNoTerminals) {
  const RootSetProfile p = root_set_profile(c4_empty(), Weighting(), vs({b, d}));
  EXPECT_EQ(p.distances.labels(), (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(p.trisection.initial, vs({b, d}));
  EXPECT_EQ(p.trisection.a, vs({b, d}));
  EXPECT_TRUE(p.trisection.d.empty());
}

TEST(RootSetProfile, SingletonMatchesSingleRoot) {
  const Graft gt(path3(), vs({a, c}));
  const Weighting w(es({0, 1}));
  for (Vertex r = 0; r < 3; ++r) {
    const RootSetProfile p = root_set_profile(gt, w, vs({r}));
    EXPECT_EQ(p.distances.labels(), profile(gt, w, r).labels());
  }
}

TEST(RootSetProfile, NonExtremeRoots) {
  EXPECT_EQ(code_of([] { root_set_profile(c4_all(), Weighting(es({0, 2})), vs({a, b})); }),
            ErrorCode::kNotExtreme);
}

TEST(HomogeneousStructure, FourCycleAllTerminals) {
  const InitialStructure s = homogeneous_structure(c4_all(), vs({a, c}));
  ASSERT_EQ(s.blocks.size(), 1U);
  EXPECT_EQ(s.blocks[0].klass, vs({a, c}));
  EXPECT_EQ(s.blocks[0].critical, vs({b, d}));
}

TEST(HomogeneousStructure, FourCycleNoTerminals) {
  const InitialStructure s = homogeneous_structure(c4_empty(), vs({b, d}));
  ASSERT_EQ(s.blocks.size(), 2U);
  EXPECT_EQ(s.blocks[0].klass, vs({b}));
  EXPECT_EQ(s.blocks[1].klass, vs({d}));
  EXPECT_TRUE(s.blocks[0].critical.empty());
  EXPECT_TRUE(s.blocks[1].critical.empty());
}

TEST(HomogeneousStructure, SingletonMatchesIcomp) {
  const Graft gt = c4_all();
  const InitialStructure h = homogeneous_structure(gt, vs({a}));
  const InitialStructure i = icomp_structure(gt, a);
  ASSERT_EQ(h.blocks.size(), i.blocks.size());
  for (std::size_t k = 0; k < h.blocks.size(); ++k) {
    EXPECT_EQ(h.blocks[k].klass, i.blocks[k].klass);
    EXPECT_EQ(h.blocks[k].critical, i.blocks[k].critical);
  }
}

TEST(HomogeneousStructure, Errors) {
  EXPECT_EQ(code_of([] { homogeneous_structure(c4_empty(), vs({a, b})); }), ErrorCode::kNotHomogeneous);
  EXPECT_EQ(code_of([] { homogeneous_structure(Graft(triangle(), {}), vs({a})); }),
            ErrorCode::kNotBipartite);
}

TEST(HeterogeneousStructure, NonExtremeRoots) {
  EXPECT_EQ(code_of([] { heterogeneous_structure(c4_all(), vs({a, b})); }), ErrorCode::kNotExtreme);
}

TEST(HeterogeneousStructure, FourCycleNoTerminals) {
  const HeterogeneousStructure h = heterogeneous_structure(c4_empty(), vs({a, b}));
  EXPECT_EQ(h.roots_a, vs({a}));
  EXPECT_EQ(h.roots_b, vs({b}));
  EXPECT_EQ(h.part_a.a, vs({a}));
  EXPECT_EQ(h.part_b.a, vs({b}));
  EXPECT_EQ(h.whole.trisection.a, vs({a, b}));
}

TEST(HeterogeneousStructure, OneClassDelegates) {
  const HeterogeneousStructure h = heterogeneous_structure(c4_all(), vs({a, c}));
  const InitialStructure s = homogeneous_structure(c4_all(), vs({a, c}));
  EXPECT_EQ(h.whole.trisection.a, s.trisection.a);
  EXPECT_EQ(h.whole.blocks.size(), s.blocks.size());
  EXPECT_EQ(h.part_a.a, vs({a, c}));
  EXPECT_TRUE(h.part_b.a.empty());
}

// X = {2,5} is extreme and meets both colour classes. Vertices 0 and 1 are at
// root-set distance 0 and join the initial subgraph through 5's side, so A_X
// is strictly larger than A_{X∩A} ∪ A_{X∩B}.
TEST(HeterogeneousStructure, SplitFailsOnSevenVertexGraft) {
  const Multigraph g =
      make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {0, 5}, {5, 6}, {1, 6}, {6, 4}});
  const DecompositionAtlas atlas(Graft(g, vs({0, 1, 2, 4})));
  const VertexSet x = vs({2, 5});
  ASSERT_TRUE(is_extreme(atlas.distances(), x));
  EXPECT_EQ(atlas.root_set_trisection(x).a, vs({0, 1, 2, 5, 6}));
  EXPECT_EQ(atlas.root_set_trisection(vs({2})).a, vs({2, 6}));
  EXPECT_EQ(atlas.root_set_trisection(vs({5})).a, vs({5}));
  const LemmaReport r = heterogeneous_checks(atlas, x);
  ASSERT_EQ(r.verdicts.size(), 3U);
  EXPECT_TRUE(r.verdicts[0].pass);
  EXPECT_FALSE(r.verdicts[1].pass);
  EXPECT_FALSE(r.verdicts[2].pass);
  EXPECT_EQ(code_of([&] { heterogeneous_structure(atlas, x); }), ErrorCode::kStructureViolation);
}

TEST(Monotonicity, WorkedExamples) {
  const LemmaReport p3 = monotonicity_checks(DecompositionAtlas(Graft(path3(), vs({a, c}))), a);
  EXPECT_TRUE(p3.all_pass()) << failures(p3);
  const DecompositionAtlas all(c4_all());
  EXPECT_EQ(all.trisection(c).a, vs({a, c}));
  EXPECT_TRUE(monotonicity_checks(all, a).all_pass());
  const DecompositionAtlas none(c4_empty());
  EXPECT_FALSE(none.trisection(b).initial.intersects(none.trisection(a).initial));
  const LemmaReport r = monotonicity_checks(none, a);
  ASSERT_EQ(r.verdicts.size(), 3U);
  EXPECT_EQ(r.verdicts[2].lemma, "icomp2disjoint");
  EXPECT_TRUE(r.all_pass());
}

TEST(Monotonicity, MountVariant) {
  const LemmaReport r = monotonicity_checks(DecompositionAtlas(c4_all()), vs({a, c}));
  EXPECT_EQ(r.verdicts.size(), 4U);
  EXPECT_TRUE(r.all_pass()) << failures(r);
}

TEST(RootlizationChecks, FourCycle) {
  const LemmaReport r = rootlization_checks(DecompositionAtlas(c4_all()), vs({a, c}));
  EXPECT_EQ(r.verdicts.size(), 7U);
  EXPECT_TRUE(r.all_pass()) << failures(r);
}

TEST(RootlizeProperties, RandomBipartiteGrafts) {
  std::mt19937_64 rng(17);
  int mounts_checked = 0;
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graft gt = random_bipartite_graft(rng, n, static_cast<int>(rng() % 4));
    const DecompositionAtlas atlas(gt);
    const Bipartition bip = *bipartition(gt.graph());
    for (Vertex r = 0; r < n; ++r) {
      const LemmaReport m = monotonicity_checks(atlas, r);
      EXPECT_TRUE(m.all_pass()) << failures(m);
    }
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      VertexSet x;
      for (int v = 0; v < n; ++v)
        if ((bits >> v) & 1U) x.insert(static_cast<std::size_t>(v));
      if (x.size() > 3 || !is_extreme(atlas.distances(), x)) continue;
      const LemmaReport hc = heterogeneous_checks(atlas, x);
      EXPECT_TRUE(hc.verdicts[0].pass) << failures(hc);
      if (hc.all_pass()) EXPECT_NO_THROW(heterogeneous_structure(atlas, x));
      if (!x.subset_of(bip.a) && !x.subset_of(bip.b)) continue;
      ++mounts_checked;
      const LemmaReport rc = rootlization_checks(atlas, x);
      EXPECT_TRUE(rc.all_pass()) << failures(rc);
      const LemmaReport mc = monotonicity_checks(atlas, x);
      EXPECT_TRUE(mc.all_pass()) << failures(mc);
      EXPECT_NO_THROW(homogeneous_structure(atlas, x));
      const Rootlization rl = rootlize(atlas, x);
      if (rl.extended.edge_count() <= kBruteForceEdgeCap) EXPECT_NO_THROW(extended_min_joins(rl));
      const RootSetProfile p = root_set_profile(gt, Weighting(atlas.min_join()), x);
      EXPECT_EQ(p.trisection.a, atlas.root_set_trisection(x).a);
    }
  }
  EXPECT_GT(mounts_checked, 100);
}

}  // namespace
}  // namespace tjoin
