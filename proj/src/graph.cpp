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

#include "tjoin/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tjoin/error.hpp"

namespace tjoin {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    fail(ErrorCode::kSizeCap, "vertex count " + std::to_string(vertex_count) +
                                  " outside [0, " + std::to_string(kMaxVertices) + "]");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  if (edge_count() >= kMaxEdges)
    fail(ErrorCode::kSizeCap, "more than " + std::to_string(kMaxEdges) + " edges");
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  if (u == v) fail(ErrorCode::kInvalidArgument, "self-loops are not supported");
  const EdgeId id = edge_count();
  edges_.push_back(Edge{id, u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(id);
  incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

EdgeSet Multigraph::edges_within(VertexSet x) const {
  EdgeSet out;
  for (const Edge& e : edges_)
    if (x.contains(static_cast<std::size_t>(e.u)) && x.contains(static_cast<std::size_t>(e.v)))
      out.insert(static_cast<std::size_t>(e.id));
  return out;
}

VertexSet Multigraph::ends(EdgeSet f) const {
  VertexSet out;
  f.for_each([&](int e) {
    out.insert(static_cast<std::size_t>(edge(e).u));
    out.insert(static_cast<std::size_t>(edge(e).v));
  });
  return out;
}

bool Multigraph::adjacent(Vertex u, Vertex v) const {
  for (EdgeId e : incident(u))
    if (edge(e).other(u) == v) return true;
  return false;
}

bool is_valid_path(const Multigraph& g, const PathWitness& p) {
  if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  VertexSet seen;
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen.contains(static_cast<std::size_t>(v))) return false;
    seen.insert(static_cast<std::size_t>(v));
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    const Vertex a = p.vertices[i];
    const Vertex b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

std::vector<VertexSet> connected_components(const Multigraph& g, VertexSet restrict,
                                            const EdgeSet& usable) {
  std::vector<VertexSet> out;
  VertexSet unseen = restrict;
  while (!unseen.empty()) {
    const auto start = unseen.min();
    VertexSet comp = VertexSet::single(start);
    unseen.erase(start);
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (!usable.contains(static_cast<std::size_t>(e))) continue;
        const auto y = static_cast<std::size_t>(g.edge(e).other(x));
        if (unseen.contains(y)) {
          unseen.erase(y);
          comp.insert(y);
          stack.push_back(static_cast<Vertex>(y));
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Multigraph& g, VertexSet restrict) {
  return connected_components(g, restrict, g.all_edges());
}

EdgeSet cut(const Multigraph& g, VertexSet x) {
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (x.contains(static_cast<std::size_t>(e.u)) != x.contains(static_cast<std::size_t>(e.v)))
      out.insert(static_cast<std::size_t>(e.id));
  return out;
}

VertexSet neighbors(const Multigraph& g, VertexSet x) {
  return g.ends(cut(g, x)) - x;
}

std::optional<Bipartition> bipartition(const Multigraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
  Bipartition out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const Vertex y = g.edge(e).other(x);
        auto& cy = colour[static_cast<std::size_t>(y)];
        if (cy == -1) {
          cy = 1 - colour[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (cy == colour[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    (colour[static_cast<std::size_t>(v)] == 0 ? out.a : out.b).insert(static_cast<std::size_t>(v));
  return out;
}

bool is_round_ear_path(const Multigraph& g, const PathWitness& p, VertexSet x) {
  if (!is_valid_path(g, p) || p.front() == p.back()) return false;
  VertexSet bonds = VertexSet::single(static_cast<std::size_t>(p.front()));
  bonds.insert(static_cast<std::size_t>(p.back()));
  return (p.vertex_set() & x) == bonds;
}

std::optional<PathWitness> find_path(const Multigraph& g, Vertex u, Vertex v,
                                     const EdgeSet& usable) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<EdgeId> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{u};
  seen[static_cast<std::size_t>(u)] = true;
  while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (!usable.contains(static_cast<std::size_t>(e))) continue;
      const Vertex y = g.edge(e).other(x);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      via[static_cast<std::size_t>(y)] = e;
      queue.push_back(y);
    }
  }
  if (!seen[static_cast<std::size_t>(v)]) return std::nullopt;
  PathWitness p;
  Vertex x = v;
  p.vertices.push_back(x);
  while (x != u) {
    const EdgeId e = via[static_cast<std::size_t>(x)];
    p.edges.push_back(e);
    x = g.edge(e).other(x);
    p.vertices.push_back(x);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

VertexSet InducedSubgraph::to_host(VertexSet local) const {
  VertexSet out;
  local.for_each([&](int v) { out.insert(static_cast<std::size_t>(to_host_vertex[static_cast<std::size_t>(v)])); });
  return out;
}

EdgeSet InducedSubgraph::to_host(const EdgeSet& local) const {
  EdgeSet out;
  local.for_each([&](int e) { out.insert(static_cast<std::size_t>(to_host_edge[static_cast<std::size_t>(e)])); });
  return out;
}

VertexSet InducedSubgraph::from_host(VertexSet host) const {
  VertexSet out;
  host.for_each([&](int v) {
    const int local = from_host_vertex[static_cast<std::size_t>(v)];
    if (local >= 0) out.insert(static_cast<std::size_t>(local));
  });
  return out;
}

EdgeSet InducedSubgraph::from_host(const EdgeSet& host) const {
  EdgeSet out;
  host.for_each([&](int e) {
    const int local = from_host_edge[static_cast<std::size_t>(e)];
    if (local >= 0) out.insert(static_cast<std::size_t>(local));
  });
  return out;
}

InducedSubgraph induce(const Multigraph& g, VertexSet window) {
  InducedSubgraph sub;
  sub.from_host_vertex.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  sub.from_host_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  window.for_each([&](int v) {
    sub.from_host_vertex[static_cast<std::size_t>(v)] = static_cast<int>(sub.to_host_vertex.size());
    sub.to_host_vertex.push_back(v);
  });
  sub.graph = Multigraph(static_cast<int>(sub.to_host_vertex.size()));
  for (const Edge& e : g.edges()) {
    const int lu = sub.from_host_vertex[static_cast<std::size_t>(e.u)];
    const int lv = sub.from_host_vertex[static_cast<std::size_t>(e.v)];
    if (lu < 0 || lv < 0) continue;
    sub.from_host_edge[static_cast<std::size_t>(e.id)] = sub.graph.add_edge(lu, lv);
    sub.to_host_edge.push_back(e.id);
  }
  return sub;
}

}  // namespace tjoin
