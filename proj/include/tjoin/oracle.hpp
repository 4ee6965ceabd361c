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

#include <vector>

#include "tjoin/distance.hpp"
#include "tjoin/graph.hpp"

// Exhaustive enumerations used as independent oracles. Exponential; meant
// for graphs with at most a dozen vertices.
namespace tjoin::oracle {

inline constexpr int kPathVertexCap = 12;

/// Calls visit(path) for every simple path with at least one edge that starts
/// at `source` and stays inside `inside` (source need not be in `inside`).
template <typename Visit>
void for_each_simple_path(const Multigraph& g, Vertex source, VertexSet inside, Visit&& visit) {
  PathWitness path{{source}, {}};
  VertexSet on_path = VertexSet::single(source);
  auto dfs = [&](auto&& self, Vertex cur) -> void {
    for (EdgeId e : g.incident(cur)) {
      const Vertex y = g.edge(e).other(cur);
      if (on_path.contains(y) || !inside.contains(y)) continue;
      on_path.insert(y);
      path.vertices.push_back(y);
      path.edges.push_back(e);
      visit(static_cast<const PathWitness&>(path));
      self(self, y);
      path.vertices.pop_back();
      path.edges.pop_back();
      on_path.erase(y);
    }
  };
  dfs(dfs, source);
}

/// Minimum F-weight over all simple source–x paths, for every x.
std::vector<int> simple_path_minimum(const Multigraph& g, const Weighting& w, Vertex source);

/// Every circuit of g as an edge set (parallel pairs included), sorted.
std::vector<EdgeSet> enumerate_circuits(const Multigraph& g);

/// Every round ear path relative to x: a path whose vertex set meets x
/// exactly in its two distinct ends. With `leave_x`, only ears with at least
/// one vertex outside x (i.e. not a single edge of G[x]).
std::vector<PathWitness> round_ear_paths(const Multigraph& g, VertexSet x, bool leave_x);

}  // namespace tjoin::oracle
