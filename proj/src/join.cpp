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

#include "tjoin/join.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "tjoin/error.hpp"

namespace tjoin {
namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Hop distances from `source` using only `usable` edges; kInf when unreachable.
std::vector<int> hop_distances(const Multigraph& g, Vertex source, const EdgeSet& usable) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInf);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (!usable.contains(e)) continue;
      const Vertex y = g.edge(e).other(x);
      if (dist[y] != kInf) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

struct Pairing {
  int cost = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// Minimum-cost perfect pairing of the terminals by bitmask DP. The lowest
// unpaired terminal is always matched next, so only masks reachable that way
// are ever touched.
std::optional<Pairing> optimal_pairing(const Multigraph& g, VertexSet terminals,
                                       const EdgeSet& usable) {
  const std::vector<int> t = terminals.elements();
  const auto k = t.size();
  if (k % 2 != 0) return std::nullopt;
  if (k == 0) return Pairing{};
  if (k > static_cast<std::size_t>(kPairingTerminalCap))
    fail(ErrorCode::kSizeCap, "pairing DP supports at most " + std::to_string(kPairingTerminalCap) +
                                  " terminals, got " + std::to_string(k));

  std::vector<std::vector<int>> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto from = hop_distances(g, t[i], usable);
    d[i].resize(k);
    for (std::size_t j = 0; j < k; ++j) d[i][j] = from[t[j]];
  }

  const std::uint32_t full = (k == 32) ? ~0U : ((1U << k) - 1);
  // best[mask] = minimum cost to pair the terminals outside `mask`.
  std::vector<int> best(std::size_t{1} << k, -1);
  auto solve = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == full) return 0;
    int& memo = best[mask];
    if (memo != -1) return memo;
    const auto i = static_cast<std::size_t>(std::countr_one(mask));
    int result = kInf;
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((mask >> j) & 1U || d[i][j] >= kInf) continue;
      const int rest = self(self, mask | (1U << i) | (1U << j));
      if (rest < kInf) result = std::min(result, d[i][j] + rest);
    }
    memo = result;
    return result;
  };
  const int total = solve(solve, 0);
  if (total >= kInf) return std::nullopt;

  Pairing out;
  out.cost = total;
  std::uint32_t mask = 0;
  while (mask != full) {
    const auto i = static_cast<std::size_t>(std::countr_one(mask));
    const int here = solve(solve, mask);
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((mask >> j) & 1U || d[i][j] >= kInf) continue;
      const std::uint32_t next = mask | (1U << i) | (1U << j);
      const int rest = solve(solve, next);
      if (rest < kInf && d[i][j] + rest == here) {
        out.pairs.emplace_back(t[i], t[j]);
        mask = next;
        break;
      }
    }
  }
  return out;
}

}  // namespace

Graft::Graft(Multigraph graph, VertexSet terminals, bool require_connected)
    : graph_(std::move(graph)), terminals_(terminals) {
  if (!terminals_.subset_of(graph_.all_vertices()))
    fail(ErrorCode::kInvalidArgument, "terminal outside the vertex range");
  const auto comps = connected_components(graph_, graph_.all_vertices());
  for (const VertexSet& k : comps)
    if ((k & terminals_).size() % 2 != 0)
      fail(ErrorCode::kParity, "a connected component holds an odd number of terminals");
  if (require_connected && comps.size() > 1)
    fail(ErrorCode::kDisconnected, "graft is not connected");
}

bool Graft::connected() const {
  return connected_components(graph_, graph_.all_vertices()).size() <= 1;
}

VertexSet odd_vertices(const Multigraph& g, const EdgeSet& f) {
  VertexSet odd;
  f.for_each([&](int e) {
    odd.flip(g.edge(e).u);
    odd.flip(g.edge(e).v);
  });
  return odd;
}

bool is_join(const Multigraph& g, VertexSet terminals, const EdgeSet& f) {
  return f.subset_of(g.all_edges()) && odd_vertices(g, f) == terminals;
}

bool is_join(const Graft& gt, const EdgeSet& f) { return is_join(gt.graph(), gt.terminals(), f); }

namespace {

// Gray-code walk over all 2^m edge subsets, calling visit(subset) on joins.
template <typename Visit>
void scan_joins(const Graft& gt, Visit&& visit) {
  const int m = gt.edge_count();
  if (m > kBruteForceEdgeCap)
    fail(ErrorCode::kSizeCap, "brute-force join scan supports at most " +
                                  std::to_string(kBruteForceEdgeCap) + " edges, got " +
                                  std::to_string(m));
  std::vector<std::uint64_t> flip(static_cast<std::size_t>(m));
  for (const Edge& e : gt.graph().edges())
    flip[e.id] = (std::uint64_t{1} << e.u) ^ (std::uint64_t{1} << e.v);
  const std::uint64_t target = gt.terminals().word(0);
  std::uint64_t odd = 0;
  std::uint32_t subset = 0;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t i = 0;; ++i) {
    if (odd == target) visit(subset);
    if (i + 1 == count) break;
    const int bit = std::countr_zero(i + 1);
    subset ^= 1U << bit;
    odd ^= flip[bit];
  }
}

EdgeSet from_bits(std::uint32_t bits) {
  EdgeSet s;
  while (bits != 0) {
    s.insert(static_cast<std::size_t>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
  return s;
}

void sort_lex(std::vector<EdgeSet>& sets) {
  std::vector<std::pair<std::vector<int>, EdgeSet>> keyed;
  keyed.reserve(sets.size());
  for (const EdgeSet& s : sets) keyed.emplace_back(s.elements(), s);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < sets.size(); ++i) sets[i] = keyed[i].second;
}

}  // namespace

BruteForceJoins nu_bruteforce(const Graft& gt) {
  int best = kInf;
  std::vector<std::uint32_t> found;
  scan_joins(gt, [&](std::uint32_t subset) {
    const int size = std::popcount(subset);
    if (size < best) {
      best = size;
      found.clear();
    }
    if (size == best) found.push_back(subset);
  });
  if (best == kInf) fail(ErrorCode::kInfeasible, "no join exists");
  BruteForceJoins out;
  out.nu = best;
  for (auto s : found) out.joins.push_back(from_bits(s));
  sort_lex(out.joins);
  return out;
}

std::vector<EdgeSet> all_joins_bruteforce(const Graft& gt) {
  std::vector<EdgeSet> out;
  scan_joins(gt, [&](std::uint32_t subset) { out.push_back(from_bits(subset)); });
  sort_lex(out);
  return out;
}

std::optional<int> nu(const Multigraph& g, VertexSet terminals, const EdgeSet& usable) {
  const auto pairing = optimal_pairing(g, terminals, usable);
  if (!pairing) return std::nullopt;
  return pairing->cost;
}

int nu(const Graft& gt) {
  const auto value = nu(gt.graph(), gt.terminals(), gt.graph().all_edges());
  if (!value) fail(ErrorCode::kInfeasible, "no join exists");
  return *value;
}

std::optional<EdgeSet> pairing_join(const Multigraph& g, VertexSet terminals,
                                    const EdgeSet& usable) {
  const auto pairing = optimal_pairing(g, terminals, usable);
  if (!pairing) return std::nullopt;
  EdgeSet f;
  for (const auto& [s, t] : pairing->pairs) {
    const auto path = find_path(g, s, t, usable);
    f ^= path->edge_set();
  }
  if (!is_join(g, terminals, f) || static_cast<int>(f.size()) > pairing->cost)
    fail(ErrorCode::kStructureViolation, "pairing realisation is not a minimum join");
  return f;
}

JoinCertificate min_join(const Graft& gt) {
  if (static_cast<int>(gt.terminals().size()) > kGraftTerminalCap)
    fail(ErrorCode::kSizeCap, "min_join supports at most " + std::to_string(kGraftTerminalCap) +
                                  " terminals");
  const Multigraph& g = gt.graph();
  int need = nu(gt);
  // Greedy in id order: keep an edge whenever some minimum join consistent
  // with the decisions so far contains it.
  EdgeSet usable = g.all_edges();
  VertexSet remaining = gt.terminals();
  EdgeSet chosen;
  for (const Edge& e : g.edges()) {
    if (need == 0) break;
    usable.erase(e.id);
    VertexSet shifted = remaining;
    shifted.flip(e.u);
    shifted.flip(e.v);
    const auto rest = nu(g, shifted, usable);
    if (rest && *rest == need - 1) {
      chosen.insert(e.id);
      remaining = shifted;
      --need;
    }
  }
  if (need != 0 || !is_join(gt, chosen))
    fail(ErrorCode::kStructureViolation, "canonical join construction failed");
  return JoinCertificate{chosen, static_cast<int>(chosen.size()), true};
}

std::optional<EdgeSet> negative_circuit(const Graft& gt, const EdgeSet& f) {
  if (!is_join(gt, f)) fail(ErrorCode::kNotAJoin, "edge set is not a join");
  const Multigraph& g = gt.graph();
  const auto reference = pairing_join(g, gt.terminals(), g.all_edges());
  if (!reference) fail(ErrorCode::kInfeasible, "no join exists");
  // f Δ f* is an even subgraph; split it into circuits. Their weights sum to
  // |f*| - |f|, so one is negative whenever f is not minimum.
  EdgeSet rest = f ^ *reference;
  while (!rest.empty()) {
    const Vertex start = g.edge(static_cast<EdgeId>(rest.min())).u;
    std::vector<Vertex> walk{start};
    std::vector<EdgeId> trail;
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    position[start] = 0;
    Vertex cur = start;
    while (true) {
      EdgeId next = -1;
      for (EdgeId e : g.incident(cur))
        if (rest.contains(e)) {
          next = e;
          break;
        }
      if (next == -1) break;  // only when cur == start and the trail is empty
      rest.erase(next);
      const Vertex y = g.edge(next).other(cur);
      if (position[y] >= 0) {
        const auto from = static_cast<std::size_t>(position[y]);
        EdgeSet circuit = EdgeSet::single(next);
        for (std::size_t i = from; i < trail.size(); ++i) circuit.insert(trail[i]);
        for (std::size_t i = from + 1; i < walk.size(); ++i) position[walk[i]] = -1;
        walk.resize(from + 1);
        trail.resize(from);
        const int weight = static_cast<int>((circuit - f).size()) - static_cast<int>((circuit & f).size());
        if (weight < 0) return circuit;
        cur = y;
      } else {
        position[y] = static_cast<int>(walk.size());
        walk.push_back(y);
        trail.push_back(next);
        cur = y;
      }
    }
  }
  return std::nullopt;
}

bool is_minimum(const Graft& gt, const EdgeSet& f) { return !negative_circuit(gt, f).has_value(); }

EdgeSet allowed_edges(const Graft& gt) {
  const Multigraph& g = gt.graph();
  const int base = nu(gt);
  EdgeSet allowed;
  for (const Edge& e : g.edges()) {
    EdgeSet usable = g.all_edges();
    usable.erase(e.id);
    VertexSet shifted = gt.terminals();
    shifted.flip(e.u);
    shifted.flip(e.v);
    const auto value = nu(g, shifted, usable);
    if (value && *value == base - 1) allowed.insert(e.id);
  }
  return allowed;
}

std::vector<VertexSet> factor_components(const Graft& gt, const EdgeSet& allowed) {
  return connected_components(gt.graph(), gt.graph().all_vertices(), allowed);
}

std::vector<VertexSet> factor_components(const Graft& gt) {
  return factor_components(gt, allowed_edges(gt));
}

SubgraftView subgraft(const Graft& gt, const EdgeSet& f, VertexSet window) {
  if (!is_join(gt, f)) fail(ErrorCode::kNotAJoin, "edge set is not a join");
  const Multigraph& g = gt.graph();
  SubgraftView view;
  view.window = window;
  window.for_each([&](int v) {
    int leaving = 0;
    for (EdgeId e : g.incident(v))
      if (f.contains(e) && !window.contains(g.edge(e).other(v))) ++leaving;
    if (gt.terminals().contains(v) != (leaving % 2 == 1)) view.induced_terminals.insert(v);
  });
  view.map = induce(g, window);
  view.graft = Graft(view.map.graph, view.map.from_host(view.induced_terminals), false);
  return view;
}

}  // namespace tjoin
