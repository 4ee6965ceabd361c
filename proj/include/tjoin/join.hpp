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
#include <vector>

#include "tjoin/bitset.hpp"
#include "tjoin/graph.hpp"

namespace tjoin {

/// A multigraph with a terminal set T such that every connected component
/// holds an even number of terminals.
class Graft {
 public:
  Graft() = default;
  /// Throws ParityError when some component has odd |T ∩ K|, and
  /// DisconnectedError when `require_connected` and the graph is not connected.
  Graft(Multigraph graph, VertexSet terminals, bool require_connected = true);

  const Multigraph& graph() const { return graph_; }
  VertexSet terminals() const { return terminals_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  bool connected() const;

 private:
  Multigraph graph_;
  VertexSet terminals_;
};

/// |∂(v) ∩ f| is odd exactly on `terminals`.
bool is_join(const Multigraph& g, VertexSet terminals, const EdgeSet& f);
bool is_join(const Graft& gt, const EdgeSet& f);

/// The set of vertices of odd degree in the spanning subgraph (V, f).
VertexSet odd_vertices(const Multigraph& g, const EdgeSet& f);

inline constexpr int kBruteForceEdgeCap = 20;
inline constexpr int kPairingTerminalCap = 22;
inline constexpr int kGraftTerminalCap = 20;

struct BruteForceJoins {
  int nu = 0;
  /// Every minimum join, in increasing lexicographic order.
  std::vector<EdgeSet> joins;
};

/// Exhaustive scan over all edge subsets. Throws SizeCap above 20 edges.
BruteForceJoins nu_bruteforce(const Graft& gt);
/// Every join (not only minimum ones), in increasing lexicographic order.
std::vector<EdgeSet> all_joins_bruteforce(const Graft& gt);

/// ν of (g restricted to `usable`, terminals) via minimum-cost pairing of the
/// terminals under hop distances. Components are handled independently;
/// std::nullopt when some component holds an odd number of terminals.
std::optional<int> nu(const Multigraph& g, VertexSet terminals, const EdgeSet& usable);
int nu(const Graft& gt);

/// A minimum join realised as the symmetric difference of shortest paths
/// along an optimal pairing. std::nullopt when infeasible.
std::optional<EdgeSet> pairing_join(const Multigraph& g, VertexSet terminals,
                                    const EdgeSet& usable);

struct JoinCertificate {
  EdgeSet edges;
  int size = 0;
  bool minimal = false;
};

/// The lexicographically smallest minimum join.
JoinCertificate min_join(const Graft& gt);

/// A circuit of negative w_f-weight, as an edge set, if one exists.
std::optional<EdgeSet> negative_circuit(const Graft& gt, const EdgeSet& f);
/// Throws NotAJoin when f is not a join.
bool is_minimum(const Graft& gt, const EdgeSet& f);

/// Edges lying in some minimum join: e = xy is allowed iff
/// ν(G − e, T Δ {x, y}) = ν(G, T) − 1.
EdgeSet allowed_edges(const Graft& gt);
std::vector<VertexSet> factor_components(const Graft& gt, const EdgeSet& allowed);
std::vector<VertexSet> factor_components(const Graft& gt);

/// The subgraft (G, T)_F[X] with its vertex/edge maps.
struct SubgraftView {
  VertexSet window;
  /// Terminal set Y of the subgraft, in host vertex indices.
  VertexSet induced_terminals;
  InducedSubgraph map;
  /// The subgraft itself, renumbered; not required to be connected.
  Graft graft;
};

/// v ∈ X becomes a terminal iff |T ∩ {v}| and the number of f-edges from v
/// leaving X have distinct parities. Throws NotAJoin when f is not a join.
SubgraftView subgraft(const Graft& gt, const EdgeSet& f, VertexSet window);

}  // namespace tjoin
