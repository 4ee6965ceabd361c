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

#include <optional>
#include <span>
#include <vector>

#include "tjoin/bitset.hpp"

namespace tjoin {

using Vertex = int;
using EdgeId = int;

struct Edge {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Undirected multigraph on dense vertex indices. Parallel edges are allowed,
/// self-loops are not. Edge ids are dense and assigned in insertion order.
class Multigraph {
 public:
  static constexpr int kMaxVertices = 64;
  static constexpr int kMaxEdges = 128;

  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  /// Throws SizeCap past the caps and InvalidArgument on a self-loop or an
  /// out-of-range endpoint.
  EdgeId add_edge(Vertex u, Vertex v);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }

  VertexSet all_vertices() const { return VertexSet::prefix(static_cast<std::size_t>(vertex_count_)); }
  EdgeSet all_edges() const { return EdgeSet::prefix(edges_.size()); }

  /// Edges of the induced subgraph G[x].
  EdgeSet edges_within(VertexSet x) const;
  /// End vertices of the given edges.
  VertexSet ends(EdgeSet f) const;
  bool adjacent(Vertex u, Vertex v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A simple path stored as alternating vertices and edges:
/// vertices[0], edges[0], vertices[1], ..., vertices.back().
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  EdgeSet edge_set() const { return EdgeSet::of(edges); }
};

bool is_valid_path(const Multigraph& g, const PathWitness& p);

/// Components of g[restrict] using only edges from `usable`, ordered by
/// their minimum vertex.
std::vector<VertexSet> connected_components(const Multigraph& g, VertexSet restrict,
                                            const EdgeSet& usable);
std::vector<VertexSet> connected_components(const Multigraph& g, VertexSet restrict);

EdgeSet cut(const Multigraph& g, VertexSet x);
VertexSet neighbors(const Multigraph& g, VertexSet x);

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

/// Canonical two-colouring with vertex 0 in `a`; each further component is
/// oriented so its minimum vertex lies in `a`. Empty when an odd cycle exists.
std::optional<Bipartition> bipartition(const Multigraph& g);

/// True iff V(p) meets x exactly in the two (distinct) ends of p.
bool is_round_ear_path(const Multigraph& g, const PathWitness& p, VertexSet x);

/// Finds some simple u-v path using only `usable` edges (BFS, edges scanned in
/// id order).
std::optional<PathWitness> find_path(const Multigraph& g, Vertex u, Vertex v,
                                     const EdgeSet& usable);

/// G[window] renumbered densely, with maps back to the host graph.
struct InducedSubgraph {
  Multigraph graph;
  std::vector<Vertex> to_host_vertex;
  std::vector<EdgeId> to_host_edge;
  std::vector<int> from_host_vertex;  // -1 outside the window
  std::vector<int> from_host_edge;    // -1 outside G[window]

  VertexSet to_host(VertexSet local) const;
  EdgeSet to_host(const EdgeSet& local) const;
  VertexSet from_host(VertexSet host) const;
  EdgeSet from_host(const EdgeSet& host) const;
};

InducedSubgraph induce(const Multigraph& g, VertexSet window);

}  // namespace tjoin
