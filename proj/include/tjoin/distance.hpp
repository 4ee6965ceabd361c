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

#pragma once

#include <span>
#include <vector>

#include "tjoin/bitset.hpp"
#include "tjoin/graph.hpp"
#include "tjoin/join.hpp"

namespace tjoin {

/// The ±1 edge weighting w_F: −1 on the join F, +1 elsewhere.
class Weighting {
 public:
  Weighting() = default;
  explicit Weighting(EdgeSet join_edges) : join_edges_(join_edges) {}

  const EdgeSet& join_edges() const { return join_edges_; }
  int weight(EdgeId e) const { return join_edges_.contains(e) ? -1 : 1; }

 private:
  EdgeSet join_edges_;
};

/// (#edges outside F) − (#edges in F).
int f_weight(const Weighting& w, const EdgeSet& edges);
int f_weight(const Weighting& w, const PathWitness& p);

/// For every vertex pair {u, v}, one minimum join of (G, T Δ {u, v}).
/// F Δ shift(u, v) then contains an F-shortest u–v path for any minimum join F.
class ShiftJoins {
 public:
  explicit ShiftJoins(const Graft& gt);

  int nu() const { return nu_; }
  const EdgeSet& at(Vertex u, Vertex v) const {
    return joins_[static_cast<std::size_t>(u * n_ + v)];
  }

 private:
  int n_ = 0;
  int nu_ = 0;
  std::vector<EdgeSet> joins_;
};

/// All-pairs F-distances and F-shortest path witnesses for one minimum join.
class DistanceTable {
 public:
  /// Throws NonConservative unless `w` is a minimum join of `gt`.
  DistanceTable(const Graft& gt, const Weighting& w, const ShiftJoins& shifts);
  DistanceTable(const Graft& gt, const Weighting& w);

  int vertex_count() const { return n_; }
  const Weighting& weighting() const { return w_; }
  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u * n_ + v)]; }
  const PathWitness& path(Vertex u, Vertex v) const {
    return paths_[static_cast<std::size_t>(u * n_ + v)];
  }
  std::span<const int> row(Vertex u) const {
    return std::span<const int>(dist_).subspan(static_cast<std::size_t>(u * n_),
                                               static_cast<std::size_t>(n_));
  }

 private:
  int n_ = 0;
  Weighting w_;
  std::vector<int> dist_;
  std::vector<PathWitness> paths_;
};

/// Minimum F-weight of a u–v path. Throws NonConservative unless w is a
/// minimum join.
int distance(const Graft& gt, const Weighting& w, Vertex u, Vertex v);
PathWitness shortest_path(const Graft& gt, const Weighting& w, Vertex u, Vertex v);

/// ν(G, T Δ {u, v}) − ν(G, T).
int distance_via_nu(const Graft& gt, Vertex u, Vertex v);
/// All pairs of distance_via_nu, row-major.
std::vector<int> distance_matrix_via_nu(const Graft& gt);

/// Distance labels from a root (or the minimum over a root set) with the
/// level and layer sets derived from them.
class DistanceProfile {
 public:
  DistanceProfile(VertexSet roots, std::vector<int> dist);

  VertexSet roots() const { return roots_; }
  int operator[](Vertex x) const { return dist_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& labels() const { return dist_; }
  int min_level() const { return min_; }
  int max_level() const { return max_; }

  /// {x : dist(x) = i}
  VertexSet level(int i) const;
  /// {x : dist(x) < i}
  VertexSet below(int i) const;
  /// {x : dist(x) ≤ i}
  VertexSet at_most(int i) const { return below(i) | level(i); }

  bool primal() const { return max_ <= 0; }

 private:
  VertexSet roots_;
  std::vector<int> dist_;
  int min_ = 0;
  int max_ = 0;
  std::vector<VertexSet> levels_;  // levels_[i - min_]
};

DistanceProfile profile(const Graft& gt, const Weighting& w, Vertex root);
DistanceProfile profile(const DistanceTable& table, Vertex root);
/// dist(R, x) = min over r ∈ R of dist(r, x). `roots` must be nonempty.
DistanceProfile root_set_distances(const DistanceTable& table, VertexSet roots);

struct DistanceComponent {
  int index = 0;
  VertexSet vertices;
  bool capital = false;
};

/// Components of G[{x : dist ≤ i}] for every i in [min level, max level].
class DistanceComponentFamily {
 public:
  DistanceComponentFamily(int min_index, std::vector<std::vector<DistanceComponent>> by_index);

  int min_index() const { return min_; }
  int max_index() const { return min_ + static_cast<int>(by_index_.size()) - 1; }
  const std::vector<DistanceComponent>& at(int i) const {
    return by_index_[static_cast<std::size_t>(i - min_)];
  }
  /// The component at index i containing a root, if any.
  const DistanceComponent* capital_at(int i) const;
  std::vector<DistanceComponent> all() const;

 private:
  int min_ = 0;
  std::vector<std::vector<DistanceComponent>> by_index_;
};

DistanceComponentFamily distance_components(const DistanceProfile& p, const Multigraph& g);

struct Trisection {
  VertexSet initial;
  VertexSet a;
  VertexSet d;
  VertexSet c;
};

/// For a single root the initial part is the capital component at index 0;
/// for a root set it is the union of the components of G[{dist ≤ 0}] meeting
/// the roots.
Trisection trisection(const DistanceProfile& p, const Multigraph& g);
Trisection trisection(const Graft& gt, const Weighting& w, Vertex root);

/// Pairwise nonnegative distances inside x.
bool is_extreme(const Graft& gt, VertexSet x);
bool is_extreme(const DistanceTable& table, VertexSet x);

bool is_primal(const Graft& gt, Vertex root);

}  // namespace tjoin
