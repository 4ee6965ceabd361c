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

#include "tjoin/decomposition.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tjoin/error.hpp"

namespace tjoin {

int KLPartition::class_index(Vertex v) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].contains(v)) return static_cast<int>(i);
  return -1;
}

bool KLPartition::contains_class(VertexSet s) const {
  return std::find(classes.begin(), classes.end(), s) != classes.end();
}

KLPartition kl_classes_from(const std::vector<VertexSet>& factor_components,
                            const std::vector<int>& dist, int vertex_count) {
  KLPartition out;
  VertexSet unassigned = VertexSet::prefix(static_cast<std::size_t>(vertex_count));
  while (!unassigned.empty()) {
    const auto v = static_cast<Vertex>(unassigned.min());
    VertexSet home;
    for (const VertexSet& c : factor_components)
      if (c.contains(v)) home = c;
    VertexSet klass = VertexSet::single(v);
    (home & unassigned).for_each([&](int u) {
      if (dist[static_cast<std::size_t>(v * vertex_count + u)] == 0) klass.insert(u);
    });
    unassigned -= klass;
    out.classes.push_back(klass);
  }
  return out;
}

KLPartition kl_classes(const Graft& gt) {
  return kl_classes_from(factor_components(gt), distance_matrix_via_nu(gt), gt.vertex_count());
}

bool is_partition_of(const std::vector<VertexSet>& parts, VertexSet whole) {
  VertexSet seen;
  for (const VertexSet& p : parts) {
    if (p.intersects(seen)) return false;
    seen |= p;
  }
  return seen == whole;
}

namespace {

// Is there a path from `x` to some vertex of s with negative weight whose
// other vertices all lie in `inside`?
bool reaches_negatively(const Multigraph& g, const Weighting& w, Vertex x, VertexSet inside,
                        VertexSet s) {
  VertexSet visited = VertexSet::single(x);
  auto dfs = [&](auto&& self, Vertex cur, int weight) -> bool {
    for (EdgeId e : g.incident(cur)) {
      const Vertex y = g.edge(e).other(cur);
      const int next = weight + w.weight(e);
      if (s.contains(y)) {
        if (next < 0) return true;
        continue;
      }
      if (!inside.contains(y) || visited.contains(y)) continue;
      visited.insert(y);
      if (self(self, y, next)) return true;
      visited.erase(y);
    }
    return false;
  };
  return dfs(dfs, x, 0);
}

}  // namespace

VertexSet negative_set_bruteforce(const Graft& gt, const Weighting& w, VertexSet s) {
  if (gt.vertex_count() > kNegativeSetVertexCap)
    fail(ErrorCode::kSizeCap, "negative-set search supports at most " +
                                  std::to_string(kNegativeSetVertexCap) + " vertices");
  const Multigraph& g = gt.graph();
  VertexSet x = g.all_vertices() - s;
  bool changed = true;
  while (changed) {
    changed = false;
    x.for_each([&](int v) {
      if (!reaches_negatively(g, w, v, x, s)) {
        x.erase(v);
        changed = true;
      }
    });
  }
  return x;
}

DecompositionAtlas::DecompositionAtlas(Graft gt)
    : gt_(std::move(gt)),
      shifts_(gt_),
      min_join_(tjoin::min_join(gt_).edges),
      allowed_(allowed_edges(gt_)),
      factor_components_(tjoin::factor_components(gt_, allowed_)),
      table_(gt_, Weighting(min_join_), shifts_) {
  const int n = gt_.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n * n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) dist[static_cast<std::size_t>(u * n + v)] = table_(u, v);
  kl_ = kl_classes_from(factor_components_, dist, n);
}

Trisection DecompositionAtlas::trisection(Vertex root) const {
  return tjoin::trisection(profile(root), gt_.graph());
}

Trisection DecompositionAtlas::root_set_trisection(VertexSet roots) const {
  return tjoin::trisection(root_set_distances(table_, roots), gt_.graph());
}

std::vector<VertexSet> DecompositionAtlas::neicomp(Vertex root, VertexSet s) const {
  const Trisection t = trisection(root);
  if (!s.subset_of(t.a))
    fail(ErrorCode::kInvalidArgument, "class is not contained in A of the root");
  const Multigraph& g = gt_.graph();
  std::vector<VertexSet> out;
  for (const VertexSet& k : connected_components(g, t.d)) {
    bool adjacent = false;
    (cut(g, k) & allowed_).for_each([&](int e) {
      if (s.contains(g.edge(e).u) || s.contains(g.edge(e).v)) adjacent = true;
    });
    if (adjacent) out.push_back(k);
  }
  return out;
}

VertexSet DecompositionAtlas::critical_set(VertexSet s) const {
  if (!kl_.contains_class(s)) fail(ErrorCode::kInvalidArgument, "set is not a KL class");
  const auto root = static_cast<Vertex>(s.min());
  if (!s.subset_of(trisection(root).a))
    fail(ErrorCode::kStructureViolation, "KL class is not inside A of its own member");
  VertexSet out;
  for (const VertexSet& k : neicomp(root, s)) out |= k;
  return out;
}

VertexSet critical_set(const Graft& gt, VertexSet s) { return DecompositionAtlas(gt).critical_set(s); }

std::vector<VertexSet> neicomp(const Graft& gt, Vertex root, VertexSet s) {
  const DecompositionAtlas atlas(gt);
  if (!atlas.kl().contains_class(s)) fail(ErrorCode::kInvalidArgument, "set is not a KL class");
  return atlas.neicomp(root, s);
}

InitialStructure resolve_initial(const DecompositionAtlas& atlas, VertexSet roots,
                                 const Trisection& t) {
  const Multigraph& g = atlas.graph();
  InitialStructure out{roots, t, {}};
  std::vector<VertexSet> classes;
  std::vector<VertexSet> criticals;
  std::vector<VertexSet> refined;
  for (const VertexSet& s : atlas.kl().classes) {
    if (!s.intersects(t.a)) continue;
    if (!s.subset_of(t.a))
      fail(ErrorCode::kStructureViolation, "a KL class straddles the boundary of A");
    ClassBlock block{s, atlas.critical_set(s), {}};
    block.critical_components = connected_components(g, block.critical);
    classes.push_back(s);
    criticals.push_back(block.critical);
    refined.insert(refined.end(), block.critical_components.begin(),
                   block.critical_components.end());
    out.blocks.push_back(std::move(block));
  }
  if (out.blocks.empty() || !is_partition_of(classes, t.a))
    fail(ErrorCode::kStructureViolation, "A is not a disjoint union of KL classes");
  if (!is_partition_of(criticals, t.d))
    fail(ErrorCode::kStructureViolation, "D is not the disjoint union of the critical sets");
  std::vector<VertexSet> whole = connected_components(g, t.d);
  std::sort(whole.begin(), whole.end());
  std::sort(refined.begin(), refined.end());
  if (whole != refined)
    fail(ErrorCode::kStructureViolation,
         "components of G[D] differ from the components of the critical sets");
  return out;
}

InitialStructure icomp_structure(const DecompositionAtlas& atlas, Vertex root) {
  if (!bipartition(atlas.graph())) fail(ErrorCode::kNotBipartite, "graft is not bipartite");
  return resolve_initial(atlas, VertexSet::single(root), atlas.trisection(root));
}

InitialStructure icomp_structure(const Graft& gt, Vertex root) {
  return icomp_structure(DecompositionAtlas(gt), root);
}

}  // namespace tjoin
