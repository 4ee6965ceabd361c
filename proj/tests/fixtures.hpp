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

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tjoin/graph.hpp"
#include "tjoin/join.hpp"

namespace tjoin::testing {

// Vertex names used throughout: a=0, b=1, c=2, d=3, e=4, f=5.
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

inline Multigraph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// a–b–c with edges ab=0, bc=1.
inline Multigraph path3() { return make_graph(3, {{a, b}, {b, c}}); }
// a–b–c–d–a with edges ab=0, bc=1, cd=2, da=3.
inline Multigraph cycle4() { return make_graph(4, {{a, b}, {b, c}, {c, d}, {d, a}}); }
inline Multigraph cycle6() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}
inline Multigraph single_edge() { return make_graph(2, {{0, 1}}); }
inline Multigraph triangle() { return make_graph(3, {{a, b}, {b, c}, {c, a}}); }

inline VertexSet vs(std::initializer_list<int> items) { return VertexSet::of(items); }
inline EdgeSet es(std::initializer_list<int> items) { return EdgeSet::of(items); }

/// Connected bipartite multigraph: random spanning tree on a random 2-colouring
/// plus extra cross edges (parallel allowed), random even terminal set.
inline Graft random_bipartite_graft(std::mt19937_64& rng, int n, int extra_edges) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (auto& c : colour) c = coin(rng);
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) {
    // attach v to an earlier vertex of the other colour if possible
    std::vector<Vertex> options;
    for (Vertex u = 0; u < v; ++u)
      if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)]) options.push_back(u);
    if (options.empty()) {
      colour[static_cast<std::size_t>(v)] = 1 - colour[0];
      options.push_back(0);
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    g.add_edge(options[pick(rng)], v);
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int k = 0; k < extra_edges * 4 && g.edge_count() < n - 1 + extra_edges; ++k) {
    const Vertex u = any(rng), v = any(rng);
    if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  }
  VertexSet t;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) t.insert(v);
  if (t.size() % 2 == 1) t.flip(static_cast<std::size_t>(any(rng)));
  return Graft(std::move(g), t);
}

}  // namespace tjoin::testing
