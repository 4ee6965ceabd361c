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

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "tjoin/error.hpp"

namespace tjoin {

namespace {

Rootlization build(const Graft& gt, VertexSet mount) {
  if (mount.empty()) fail(ErrorCode::kInvalidArgument, "mount is empty");
  const int n = gt.vertex_count();
  if (!mount.subset_of(gt.graph().all_vertices()))
    fail(ErrorCode::kInvalidArgument, "mount contains a vertex outside the graft");
  if (n + 2 > Multigraph::kMaxVertices)
    fail(ErrorCode::kSizeCap, "rootlization exceeds the vertex cap");
  Multigraph g(n + 2);
  for (const Edge& e : gt.graph().edges()) g.add_edge(e.u, e.v);
  Rootlization rl;
  rl.base = gt;
  rl.mount = mount;
  rl.root = n;
  rl.attachment = n + 1;
  rl.root_edge = g.add_edge(n, n + 1);
  mount.for_each([&](int x) { g.add_edge(n + 1, x); });
  VertexSet t = gt.terminals();
  t.insert(static_cast<std::size_t>(n));
  t.insert(static_cast<std::size_t>(n + 1));
  rl.extended = Graft(std::move(g), t);
  return rl;
}

std::vector<EdgeSet> lex_sorted(std::vector<EdgeSet> v) {
  std::sort(v.begin(), v.end(), [](const EdgeSet& a, const EdgeSet& b) { return lex_less(a, b); });
  return v;
}

Bipartition require_bipartite(const Multigraph& g) {
  auto bip = bipartition(g);
  if (!bip) fail(ErrorCode::kNotBipartite, "graft is not bipartite");
  return *bip;
}

void require_homogeneous(const DecompositionAtlas& atlas, VertexSet roots) {
  const Bipartition bip = require_bipartite(atlas.graph());
  if (roots.empty()) fail(ErrorCode::kInvalidArgument, "root set is empty");
  if (!roots.subset_of(bip.a) && !roots.subset_of(bip.b))
    fail(ErrorCode::kNotHomogeneous, "roots meet both colour classes");
  if (!is_extreme(atlas.distances(), roots))
    fail(ErrorCode::kNotExtreme, "root set " + to_string(roots) + " is not extreme");
}

/// One verdict per lemma, keeping the first failing witness.
class Recorder {
 public:
  void declare(const std::string& lemma) { find(lemma); }

  void check(const std::string& lemma, bool ok, const std::function<std::string()>& witness) {
    LemmaVerdict& v = find(lemma);
    if (!ok && v.pass) {
      v.pass = false;
      v.witness = witness();
    }
  }

  LemmaReport finish() { return std::move(report_); }

 private:
  LemmaVerdict& find(const std::string& lemma) {
    for (LemmaVerdict& v : report_.verdicts)
      if (v.lemma == lemma) return v;
    report_.verdicts.push_back(LemmaVerdict{lemma, true, {}});
    return report_.verdicts.back();
  }

  LemmaReport report_;
};

std::string describe(const char* what, Vertex x, const Trisection& t) {
  return std::string(what) + "=" + std::to_string(x) + " A=" + to_string(t.a) + " D=" + to_string(t.d);
}

}  // namespace

Rootlization rootlize(const Graft& gt, VertexSet mount) {
  Rootlization rl = build(gt, mount);
  if (!is_extreme(gt, mount)) fail(ErrorCode::kNotExtreme, "mount " + to_string(mount) + " is not extreme");
  return rl;
}

Rootlization rootlize(const DecompositionAtlas& atlas, VertexSet mount) {
  Rootlization rl = build(atlas.graft(), mount);
  if (!is_extreme(atlas.distances(), mount))
    fail(ErrorCode::kNotExtreme, "mount " + to_string(mount) + " is not extreme");
  return rl;
}

ExtendedAtlas extend_atlas(const DecompositionAtlas& base, VertexSet mount) {
  Rootlization rl = rootlize(base, mount);
  DecompositionAtlas atlas(rl.extended);
  return ExtendedAtlas{std::move(rl), std::move(atlas)};
}

ExtendedJoinReport extended_min_joins(const Rootlization& rl) {
  const BruteForceJoins base = nu_bruteforce(rl.base);
  const BruteForceJoins ext = nu_bruteforce(rl.extended);
  ExtendedJoinReport out{base.nu, ext.nu, base.joins, ext.joins};
  if (ext.nu != base.nu + 1)
    fail(ErrorCode::kStructureViolation, "extended nu " + std::to_string(ext.nu) +
                                             " differs from base nu + 1 = " + std::to_string(base.nu + 1));
  std::vector<EdgeSet> lifted;
  for (const EdgeSet& f : base.joins) lifted.push_back(rl.lift(f));
  if (lex_sorted(lifted) != lex_sorted(ext.joins))
    fail(ErrorCode::kStructureViolation, "extended minimum joins are not the lifted base joins");
  return out;
}

RootSetProfile root_set_profile(const Graft& gt, const Weighting& w, VertexSet roots) {
  const DistanceTable table(gt, w);
  if (roots.empty()) fail(ErrorCode::kInvalidArgument, "root set is empty");
  if (!is_extreme(table, roots))
    fail(ErrorCode::kNotExtreme, "root set " + to_string(roots) + " is not extreme");
  DistanceProfile prof = root_set_distances(table, roots);
  Trisection tri = trisection(prof, gt.graph());

  const Rootlization rl = build(gt, roots);
  const EdgeSet lifted = rl.lift(w.join_edges());
  if (!is_join(rl.extended, lifted) || !is_minimum(rl.extended, lifted))
    fail(ErrorCode::kStructureViolation, "lifted join is not minimum in the rootlization");
  const DistanceTable ext(rl.extended, Weighting(lifted));
  if (ext(rl.root, rl.attachment) != -1)
    fail(ErrorCode::kStructureViolation, "distance from root to attachment is not -1");
  for (Vertex x = 0; x < gt.vertex_count(); ++x)
    if (ext(rl.root, x) != prof[x])
      fail(ErrorCode::kStructureViolation,
           "root-set distance to " + std::to_string(x) + " disagrees with the rootlization");
  return RootSetProfile{std::move(prof), tri};
}

InitialStructure homogeneous_structure(const DecompositionAtlas& atlas, VertexSet roots) {
  require_homogeneous(atlas, roots);
  return homogeneous_structure(atlas, extend_atlas(atlas, roots));
}

InitialStructure homogeneous_structure(const DecompositionAtlas& atlas, const ExtendedAtlas& extended) {
  const VertexSet roots = extended.rootlization.mount;
  require_homogeneous(atlas, roots);
  InitialStructure out = resolve_initial(atlas, roots, atlas.root_set_trisection(roots));
  const DecompositionAtlas& ext = extended.atlas;
  for (const ClassBlock& block : out.blocks) {
    if (!ext.kl().contains_class(block.klass))
      fail(ErrorCode::kStructureViolation,
           "class " + to_string(block.klass) + " is not a class of the rootlization");
    if (ext.critical_set(block.klass) != block.critical)
      fail(ErrorCode::kStructureViolation,
           "critical set of " + to_string(block.klass) + " changes under rootlization");
  }
  return out;
}

InitialStructure homogeneous_structure(const Graft& gt, VertexSet roots) {
  return homogeneous_structure(DecompositionAtlas(gt), roots);
}

HeterogeneousStructure heterogeneous_structure(const DecompositionAtlas& atlas, VertexSet roots) {
  const Bipartition bip = require_bipartite(atlas.graph());
  if (roots.empty()) fail(ErrorCode::kInvalidArgument, "root set is empty");
  if (!is_extreme(atlas.distances(), roots))
    fail(ErrorCode::kNotExtreme, "root set " + to_string(roots) + " is not extreme");
  HeterogeneousStructure out;
  out.roots_a = roots & bip.a;
  out.roots_b = roots & bip.b;
  if (out.roots_a.empty() || out.roots_b.empty()) {
    out.whole = homogeneous_structure(atlas, roots);
    (out.roots_a.empty() ? out.part_b : out.part_a) = out.whole.trisection;
    return out;
  }
  out.part_a = atlas.root_set_trisection(out.roots_a);
  out.part_b = atlas.root_set_trisection(out.roots_b);
  const Trisection t = atlas.root_set_trisection(roots);
  if (out.part_a.a.intersects(out.part_b.a) || (out.part_a.a | out.part_b.a) != t.a)
    fail(ErrorCode::kStructureViolation, "A of the root set does not split by colour class");
  if (out.part_a.d.intersects(out.part_b.d) || (out.part_a.d | out.part_b.d) != t.d)
    fail(ErrorCode::kStructureViolation, "D of the root set does not split by colour class");
  if (!is_extreme(atlas.distances(), out.part_a.a | out.part_b.a))
    fail(ErrorCode::kStructureViolation, "union of the per-class A sets is not extreme");
  out.whole = resolve_initial(atlas, roots, t);
  return out;
}

HeterogeneousStructure heterogeneous_structure(const Graft& gt, VertexSet roots) {
  return heterogeneous_structure(DecompositionAtlas(gt), roots);
}

bool LemmaReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const LemmaVerdict& v) { return v.pass; });
}

void LemmaReport::require_all() const {
  for (const LemmaVerdict& v : verdicts)
    if (!v.pass) fail(ErrorCode::kStructureViolation, v.lemma + " fails: " + v.witness);
}

LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, Vertex root) {
  require_bipartite(atlas.graph());
  Recorder rec;
  rec.declare("ad2include");
  rec.declare("ad2union");
  rec.declare("icomp2disjoint");
  const Trisection tr = atlas.trisection(root);
  VertexSet union_a;
  VertexSet union_d;
  tr.a.for_each([&](int x) {
    const Trisection tx = atlas.trisection(x);
    rec.check("ad2include", tx.a.subset_of(tr.a) && tx.d.subset_of(tr.d),
              [&] { return describe("x", x, tx); });
    union_a |= tx.a;
    union_d |= tx.d;
  });
  rec.check("ad2union", union_a == tr.a && union_d == tr.d, [&] {
    return "union A=" + to_string(union_a) + " union D=" + to_string(union_d);
  });
  for (Vertex x = 0; x < atlas.graft().vertex_count(); ++x) {
    if (atlas.dist(root, x) <= 0) continue;
    const VertexSet ix = atlas.trisection(x).initial;
    rec.check("icomp2disjoint", !ix.intersects(tr.initial), [&] {
      return "x=" + std::to_string(x) + " initial(x)=" + to_string(ix) +
             " initial(r)=" + to_string(tr.initial);
    });
  }
  return rec.finish();
}

LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, VertexSet mount) {
  require_homogeneous(atlas, mount);
  return monotonicity_checks(atlas, extend_atlas(atlas, mount));
}

LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, const ExtendedAtlas& extended) {
  const VertexSet mount = extended.rootlization.mount;
  require_homogeneous(atlas, mount);
  Recorder rec;
  for (const char* id : {"rootad2include", "rootad2union", "dist2s", "ar2disjoint"}) rec.declare(id);
  const Trisection tm = atlas.root_set_trisection(mount);
  VertexSet union_a;
  VertexSet union_d;
  tm.a.for_each([&](int x) {
    const Trisection tx = atlas.trisection(x);
    rec.check("rootad2include", tx.a.subset_of(tm.a) && tx.d.subset_of(tm.d),
              [&] { return describe("x", x, tx); });
    union_a |= tx.a;
    union_d |= tx.d;
  });
  rec.check("rootad2union", union_a == tm.a && union_d == tm.d, [&] {
    return "union A=" + to_string(union_a) + " union D=" + to_string(union_d);
  });

  const Rootlization& rl = extended.rootlization;
  const DecompositionAtlas& ext = extended.atlas;
  const DistanceTable lifted(rl.extended, Weighting(rl.lift(atlas.min_join())), ext.shifts());
  const Vertex r = rl.root;
  const Vertex s = rl.attachment;
  for (Vertex x = 0; x < atlas.graft().vertex_count(); ++x)
    rec.check("dist2s", lifted(x, s) == lifted(x, r) + 1, [&] {
      return "x=" + std::to_string(x) + " dist(x,s)=" + std::to_string(lifted(x, s)) +
             " dist(x,r)=" + std::to_string(lifted(x, r));
    });
  const VertexSet rs = VertexSet::of({r, s});
  (ext.trisection(r).a - VertexSet::single(r)).for_each([&](int x) {
    const Trisection ex = ext.trisection(x);
    const Trisection bx = atlas.trisection(x);
    rec.check("ar2disjoint",
              lifted(x, s) >= 1 && !(ex.a | ex.d).intersects(rs) && ex.a == bx.a && ex.d == bx.d,
              [&] { return describe("x", x, ex) + " base " + describe("x", x, bx); });
  });
  return rec.finish();
}

LemmaReport heterogeneous_checks(const DecompositionAtlas& atlas, VertexSet roots) {
  const Bipartition bip = require_bipartite(atlas.graph());
  if (roots.empty()) fail(ErrorCode::kInvalidArgument, "root set is empty");
  if (!is_extreme(atlas.distances(), roots))
    fail(ErrorCode::kNotExtreme, "root set " + to_string(roots) + " is not extreme");
  Recorder rec;
  for (const char* id : {"bi2ext", "heteroad2disjoint", "hetero"}) rec.declare(id);
  const Trisection t = atlas.root_set_trisection(roots);
  const VertexSet ra = roots & bip.a;
  const VertexSet rb = roots & bip.b;
  if (!ra.empty() && !rb.empty()) {
    const Trisection pa = atlas.root_set_trisection(ra);
    const Trisection pb = atlas.root_set_trisection(rb);
    rec.check("bi2ext", is_extreme(atlas.distances(), pa.a | pb.a),
              [&] { return "A(X∩A)∪A(X∩B)=" + to_string(pa.a | pb.a); });
    const bool split = !pa.a.intersects(pb.a) && (pa.a | pb.a) == t.a && !pa.d.intersects(pb.d) &&
                       (pa.d | pb.d) == t.d;
    rec.check("heteroad2disjoint", split, [&] {
      return "A_X=" + to_string(t.a) + " D_X=" + to_string(t.d) + " A(X∩A)=" + to_string(pa.a) +
             " D(X∩A)=" + to_string(pa.d) + " A(X∩B)=" + to_string(pb.a) + " D(X∩B)=" + to_string(pb.d);
    });
  }
  std::string why;
  try {
    resolve_initial(atlas, roots, t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kStructureViolation) throw;
    why = e.what();
  }
  rec.check("hetero", why.empty(), [&] { return "X=" + to_string(roots) + ": " + why; });
  return rec.finish();
}

LemmaReport rootlization_checks(const DecompositionAtlas& atlas, VertexSet mount) {
  return rootlization_checks(atlas, extend_atlas(atlas, mount));
}

LemmaReport rootlization_checks(const DecompositionAtlas& atlas, const ExtendedAtlas& extended) {
  const Rootlization& rl = extended.rootlization;
  const DecompositionAtlas& ext = extended.atlas;
  const VertexSet mount = rl.mount;
  const Multigraph& g = atlas.graph();
  const int n = g.vertex_count();
  const Vertex r = rl.root;
  const Vertex s = rl.attachment;
  Recorder rec;
  for (const char* id :
       {"extend-join", "extend-dist", "extend-path", "extend2sim", "layers", "initreduc", "mount-unallowed"})
    rec.declare(id);

  const EdgeSet lifted_join = rl.lift(atlas.min_join());
  const bool join_ok = ext.nu() == atlas.nu() + 1 && is_join(rl.extended, lifted_join);
  rec.check("extend-join", join_ok, [&] {
    return "nu=" + std::to_string(atlas.nu()) + " extended nu=" + std::to_string(ext.nu());
  });
  if (!join_ok) return rec.finish();

  const Weighting w(lifted_join);
  const DistanceTable lifted(rl.extended, w, ext.shifts());
  const DistanceProfile px = root_set_distances(atlas.distances(), mount);

  rec.check("extend-dist", lifted(r, s) == -1,
            [&] { return "dist(r,s)=" + std::to_string(lifted(r, s)); });
  for (Vertex y = 0; y < n; ++y) {
    rec.check("extend-dist", lifted(r, y) == px[y], [&] {
      return "y=" + std::to_string(y) + " dist(r,y)=" + std::to_string(lifted(r, y)) +
             " dist(X,y)=" + std::to_string(px[y]);
    });
    const PathWitness& p = lifted.path(r, y);
    bool ok = p.vertices.size() >= 3 && p.vertices[1] == s && mount.contains(p.vertices[2]);
    if (ok) {
      const Vertex x = p.vertices[2];
      EdgeSet tail = p.edge_set();
      tail.erase(p.edges[0]);
      tail.erase(p.edges[1]);
      ok = atlas.dist(x, y) == px[y] && f_weight(w, tail) == atlas.dist(x, y);
    }
    rec.check("extend-path", ok, [&] { return "y=" + std::to_string(y); });
  }

  std::vector<VertexSet> expected_fc = atlas.factor_components();
  expected_fc.push_back(VertexSet::of({r, s}));
  std::vector<VertexSet> actual_fc = ext.factor_components();
  std::sort(expected_fc.begin(), expected_fc.end());
  std::sort(actual_fc.begin(), actual_fc.end());
  rec.check("extend2sim", expected_fc == actual_fc, [] { return std::string("factor-components differ"); });
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      rec.check("extend2sim", atlas.dist(x, y) >= ext.dist(x, y), [&] {
        return "x=" + std::to_string(x) + " y=" + std::to_string(y) + " distance grows";
      });
  const VertexSet base_vertices = g.all_vertices();
  for (const VertexSet& c : ext.kl().classes) {
    const VertexSet inside = c & base_vertices;
    if (inside.empty()) continue;
    rec.check("extend2sim", inside.subset_of(atlas.kl().class_of(static_cast<Vertex>(inside.min()))),
              [&] { return "class " + to_string(c) + " does not refine"; });
  }

  const DistanceProfile pr = ext.profile(r);
  for (int i = std::min(pr.min_level(), px.min_level()); i <= std::max(pr.max_level(), px.max_level()); ++i) {
    VertexSet expected = px.at_most(i);
    if (i == -1) expected.insert(static_cast<std::size_t>(s));
    if (i >= 0) expected |= VertexSet::of({r, s});
    rec.check("layers", pr.at_most(i) == expected, [&] {
      return "i=" + std::to_string(i) + " extended=" + to_string(pr.at_most(i)) +
             " expected=" + to_string(expected);
    });
  }

  const Trisection tx = trisection(px, g);
  const Trisection tr = ext.trisection(r);
  rec.check("initreduc",
            tr.initial == (tx.initial | VertexSet::of({r, s})) &&
                tr.a == (tx.a | VertexSet::single(r)) && tr.d == (tx.d | VertexSet::single(s)),
            [&] {
              return "extended A=" + to_string(tr.a) + " D=" + to_string(tr.d) +
                     " base A=" + to_string(tx.a) + " D=" + to_string(tx.d);
            });
  rec.check("mount-unallowed", !ext.allowed().intersects(rl.mount_edges()),
            [&] { return "allowed gadget edges " + to_string(ext.allowed() & rl.mount_edges()); });
  return rec.finish();
}

}  // namespace tjoin
