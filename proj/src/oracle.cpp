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

#include "tjoin/oracle.hpp"

#include <algorithm>
#include <limits>

namespace tjoin::oracle {

std::vector<int> simple_path_minimum(const Multigraph& g, const Weighting& w, Vertex source) {
  std::vector<int> best(static_cast<std::size_t>(g.vertex_count()), std::numeric_limits<int>::max());
  best[static_cast<std::size_t>(source)] = 0;
  for_each_simple_path(g, source, g.all_vertices(), [&](const PathWitness& p) {
    int& slot = best[static_cast<std::size_t>(p.back())];
    slot = std::min(slot, f_weight(w, p));
  });
  return best;
}

std::vector<EdgeSet> enumerate_circuits(const Multigraph& g) {
  std::vector<EdgeSet> out;
  // Anchor each circuit at its smallest edge id e = uv: the rest is a simple
  // v–u path using only larger ids. Each circuit is found once per direction.
  for (const Edge& e : g.edges()) {
    EdgeSet larger = g.all_edges() - EdgeSet::prefix(static_cast<std::size_t>(e.id) + 1);
    PathWitness path{{e.v}, {}};
    VertexSet on_path = VertexSet::single(e.v);
    auto dfs = [&](auto&& self, Vertex cur) -> void {
      for (EdgeId f : g.incident(cur)) {
        if (!larger.contains(f)) continue;
        const Vertex y = g.edge(f).other(cur);
        if (y == e.u) {
          EdgeSet c = EdgeSet::of(path.edges);
          c.insert(f);
          c.insert(e.id);
          out.push_back(c);
          continue;
        }
        if (on_path.contains(y)) continue;
        on_path.insert(y);
        path.edges.push_back(f);
        self(self, y);
        path.edges.pop_back();
        on_path.erase(y);
      }
    };
    dfs(dfs, e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PathWitness> round_ear_paths(const Multigraph& g, VertexSet x, bool leave_x) {
  std::vector<PathWitness> out;
  const VertexSet outside = g.all_vertices() - x;
  x.for_each([&](int start) {
    // Interior vertices avoid x; the last step may enter x at a larger vertex.
    PathWitness path{{start}, {}};
    VertexSet on_path = VertexSet::single(start);
    auto dfs = [&](auto&& self, Vertex cur) -> void {
      for (EdgeId e : g.incident(cur)) {
        const Vertex y = g.edge(e).other(cur);
        if (on_path.contains(y)) continue;
        if (x.contains(y)) {
          if (y > start && (!leave_x || path.edges.size() >= 1)) {
            PathWitness ear = path;
            ear.vertices.push_back(y);
            ear.edges.push_back(e);
            out.push_back(std::move(ear));
          }
          continue;
        }
        if (!outside.contains(y)) continue;
        on_path.insert(y);
        path.vertices.push_back(y);
        path.edges.push_back(e);
        self(self, y);
        path.vertices.pop_back();
        path.edges.pop_back();
        on_path.erase(y);
      }
    };
    dfs(dfs, start);
  });
  return out;
}

}  // namespace tjoin::oracle
