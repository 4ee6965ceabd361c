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

#include "tjoin/distance.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "tjoin/error.hpp"

namespace tjoin {

int f_weight(const Weighting& w, const EdgeSet& edges) {
  return static_cast<int>((edges - w.join_edges()).size()) -
         static_cast<int>((edges & w.join_edges()).size());
}

int f_weight(const Weighting& w, const PathWitness& p) {
  int total = 0;
  for (EdgeId e : p.edges) total += w.weight(e);
  return total;
}

ShiftJoins::ShiftJoins(const Graft& gt) : n_(gt.vertex_count()) {
  const Multigraph& g = gt.graph();
  const EdgeSet all = g.all_edges();
  const auto base = pairing_join(g, gt.terminals(), all);
  if (!base) fail(ErrorCode::kInfeasible, "no join exists");
  nu_ = static_cast<int>(base->size());
  joins_.resize(static_cast<std::size_t>(n_ * n_));
  for (Vertex u = 0; u < n_; ++u) {
    joins_[static_cast<std::size_t>(u * n_ + u)] = *base;
    for (Vertex v = u + 1; v < n_; ++v) {
      VertexSet shifted = gt.terminals();
      shifted.flip(u);
      shifted.flip(v);
      const auto join = pairing_join(g, shifted, all);
      if (!join) fail(ErrorCode::kInfeasible, "shifted terminal set has no join");
      joins_[static_cast<std::size_t>(u * n_ + v)] = *join;
      joins_[static_cast<std::size_t>(v * n_ + u)] = *join;
    }
  }
}

namespace {

void require_minimum(const Graft& gt, const Weighting& w, int nu_value) {
  if (!is_join(gt, w.join_edges()) || static_cast<int>(w.join_edges().size()) != nu_value)
    fail(ErrorCode::kNonConservative,
         "weighting is not induced by a minimum join; a negative circuit exists");
}

// F Δ F_uv is a (G, {u, v})-join: a u–v path plus edge-disjoint circuits of
// nonnegative F-weight. Any u–v path inside it is therefore F-shortest.
PathWitness extract_shortest(const Graft& gt, const Weighting& w, const EdgeSet& shift,
                             Vertex u, Vertex v) {
  if (u == v) return PathWitness{{u}, {}};
  const auto path = find_path(gt.graph(), u, v, w.join_edges() ^ shift);
  if (!path) fail(ErrorCode::kStructureViolation, "symmetric difference holds no u-v path");
  return *path;
}

}  // namespace

DistanceTable::DistanceTable(const Graft& gt, const Weighting& w, const ShiftJoins& shifts)
    : n_(gt.vertex_count()), w_(w) {
  require_minimum(gt, w, shifts.nu());
  dist_.assign(static_cast<std::size_t>(n_ * n_), 0);
  paths_.resize(static_cast<std::size_t>(n_ * n_));
  for (Vertex u = 0; u < n_; ++u) {
    paths_[static_cast<std::size_t>(u * n_ + u)] = PathWitness{{u}, {}};
    for (Vertex v = u + 1; v < n_; ++v) {
      PathWitness p = extract_shortest(gt, w, shifts.at(u, v), u, v);
      const int weight = f_weight(w, p);
      dist_[static_cast<std::size_t>(u * n_ + v)] = weight;
      dist_[static_cast<std::size_t>(v * n_ + u)] = weight;
      PathWitness back = p;
      std::reverse(back.vertices.begin(), back.vertices.end());
      std::reverse(back.edges.begin(), back.edges.end());
      paths_[static_cast<std::size_t>(u * n_ + v)] = std::move(p);
      paths_[static_cast<std::size_t>(v * n_ + u)] = std::move(back);
    }
  }
}

DistanceTable::DistanceTable(const Graft& gt, const Weighting& w)
    : DistanceTable(gt, w, ShiftJoins(gt)) {}

namespace {

EdgeSet shift_join(const Graft& gt, Vertex u, Vertex v) {
  VertexSet shifted = gt.terminals();
  shifted.flip(u);
  shifted.flip(v);
  const auto join = pairing_join(gt.graph(), shifted, gt.graph().all_edges());
  if (!join) fail(ErrorCode::kInfeasible, "shifted terminal set has no join");
  return *join;
}

}  // namespace

PathWitness shortest_path(const Graft& gt, const Weighting& w, Vertex u, Vertex v) {
  require_minimum(gt, w, nu(gt));
  return extract_shortest(gt, w, shift_join(gt, u, v), u, v);
}

int distance(const Graft& gt, const Weighting& w, Vertex u, Vertex v) {
  return f_weight(w, shortest_path(gt, w, u, v));
}

int distance_via_nu(const Graft& gt, Vertex u, Vertex v) {
  if (u == v) return 0;
  VertexSet shifted = gt.terminals();
  shifted.flip(u);
  shifted.flip(v);
  const auto shifted_nu = nu(gt.graph(), shifted, gt.graph().all_edges());
  if (!shifted_nu) fail(ErrorCode::kInfeasible, "shifted terminal set has no join");
  return *shifted_nu - nu(gt);
}

std::vector<int> distance_matrix_via_nu(const Graft& gt) {
  const int n = gt.vertex_count();
  const int base = nu(gt);
  std::vector<int> out(static_cast<std::size_t>(n * n), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet shifted = gt.terminals();
      shifted.flip(u);
      shifted.flip(v);
      const auto value = nu(gt.graph(), shifted, gt.graph().all_edges());
      if (!value) fail(ErrorCode::kInfeasible, "shifted terminal set has no join");
      out[static_cast<std::size_t>(u * n + v)] = *value - base;
      out[static_cast<std::size_t>(v * n + u)] = *value - base;
    }
  return out;
}

DistanceProfile::DistanceProfile(VertexSet roots, std::vector<int> dist)
    : roots_(roots), dist_(std::move(dist)) {
  if (dist_.empty()) return;
  const auto [lo, hi] = std::minmax_element(dist_.begin(), dist_.end());
  min_ = *lo;
  max_ = *hi;
  levels_.resize(static_cast<std::size_t>(max_ - min_ + 1));
  for (std::size_t x = 0; x < dist_.size(); ++x)
    levels_[static_cast<std::size_t>(dist_[x] - min_)].insert(x);
}

VertexSet DistanceProfile::level(int i) const {
  if (i < min_ || i > max_) return {};
  return levels_[static_cast<std::size_t>(i - min_)];
}

VertexSet DistanceProfile::below(int i) const {
  VertexSet out;
  for (int j = min_; j < i && j <= max_; ++j) out |= levels_[static_cast<std::size_t>(j - min_)];
  return out;
}

DistanceProfile profile(const DistanceTable& table, Vertex root) {
  const auto row = table.row(root);
  return DistanceProfile(VertexSet::single(root), std::vector<int>(row.begin(), row.end()));
}

DistanceProfile profile(const Graft& gt, const Weighting& w, Vertex root) {
  return profile(DistanceTable(gt, w), root);
}

DistanceProfile root_set_distances(const DistanceTable& table, VertexSet roots) {
  if (roots.empty()) fail(ErrorCode::kInvalidArgument, "root set is empty");
  std::vector<int> dist(static_cast<std::size_t>(table.vertex_count()),
                        std::numeric_limits<int>::max());
  roots.for_each([&](int r) {
    for (Vertex x = 0; x < table.vertex_count(); ++x)
      dist[static_cast<std::size_t>(x)] = std::min(dist[static_cast<std::size_t>(x)], table(r, x));
  });
  return DistanceProfile(roots, std::move(dist));
}

DistanceComponentFamily::DistanceComponentFamily(
    int min_index, std::vector<std::vector<DistanceComponent>> by_index)
    : min_(min_index), by_index_(std::move(by_index)) {}

const DistanceComponent* DistanceComponentFamily::capital_at(int i) const {
  if (i < min_index() || i > max_index()) return nullptr;
  for (const DistanceComponent& k : at(i))
    if (k.capital) return &k;
  return nullptr;
}

std::vector<DistanceComponent> DistanceComponentFamily::all() const {
  std::vector<DistanceComponent> out;
  for (const auto& layer : by_index_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

DistanceComponentFamily distance_components(const DistanceProfile& p, const Multigraph& g) {
  std::vector<std::vector<DistanceComponent>> by_index;
  for (int i = p.min_level(); i <= p.max_level(); ++i) {
    std::vector<DistanceComponent> layer;
    for (const VertexSet& k : connected_components(g, p.at_most(i)))
      layer.push_back(DistanceComponent{i, k, k.intersects(p.roots())});
    by_index.push_back(std::move(layer));
  }
  return DistanceComponentFamily(p.min_level(), std::move(by_index));
}

Trisection trisection(const DistanceProfile& p, const Multigraph& g) {
  Trisection t;
  for (const VertexSet& k : connected_components(g, p.at_most(0)))
    if (k.intersects(p.roots())) t.initial |= k;
  t.a = t.initial & p.level(0);
  t.d = t.initial - t.a;
  t.c = g.all_vertices() - t.initial;
  return t;
}

Trisection trisection(const Graft& gt, const Weighting& w, Vertex root) {
  return trisection(profile(gt, w, root), gt.graph());
}

bool is_extreme(const DistanceTable& table, VertexSet x) {
  bool ok = true;
  x.for_each([&](int u) {
    x.for_each([&](int v) {
      if (table(u, v) < 0) ok = false;
    });
  });
  return ok;
}

bool is_extreme(const Graft& gt, VertexSet x) {
  const std::vector<int> u_list = x.elements();
  for (std::size_t i = 0; i < u_list.size(); ++i)
    for (std::size_t j = i + 1; j < u_list.size(); ++j)
      if (distance_via_nu(gt, u_list[i], u_list[j]) < 0) return false;
  return true;
}

bool is_primal(const Graft& gt, Vertex root) {
  for (Vertex x = 0; x < gt.vertex_count(); ++x)
    if (distance_via_nu(gt, root, x) > 0) return false;
  return true;
}

}  // namespace tjoin
