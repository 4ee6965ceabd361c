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

#include "tjoin/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"
#include "tjoin/distance.hpp"
#include "tjoin/error.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/rootlize.hpp"

namespace tjoin::harness {

namespace {

bool is_connected(const Multigraph& g) {
  return connected_components(g, g.all_vertices()).size() <= 1;
}

VertexSet random_even_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> any(0, n - 1);
  VertexSet t;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng) != 0) t.insert(static_cast<std::size_t>(v));
  if (t.size() % 2 == 1) t.flip(static_cast<std::size_t>(any(rng)));
  return t;
}

}  // namespace

void enumerate_grafts(const InstanceSpec& spec, const std::function<void(const Graft&)>& visit) {
  if (spec.max_vertices > kEnumerateVertexCap)
    fail(ErrorCode::kSizeCap, "exhaustive enumeration is capped at 7 vertices");
  if (spec.allow_parallel)
    fail(ErrorCode::kInvalidArgument, "exhaustive enumeration covers simple graphs only");
  std::mt19937_64 rng(spec.seed);
  for (int n = std::max(1, spec.min_vertices); n <= spec.max_vertices; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t masks = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const int edges = std::popcount(mask);
      if (edges > spec.max_edges || edges < n - 1) continue;
      Multigraph g(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
      if (!is_connected(g)) continue;
      if (spec.bipartite_only && !bipartition(g)) continue;
      if (spec.terminal_policy == TerminalPolicy::kRandomEven) {
        visit(Graft(g, random_even_subset(rng, n)));
        continue;
      }
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
        if (std::popcount(t) % 2 != 0) continue;
        VertexSet terminals;
        for (int v = 0; v < n; ++v)
          if ((t >> v) & 1U) terminals.insert(static_cast<std::size_t>(v));
        visit(Graft(g, terminals));
      }
    }
  }
}

Graft random_graft(const InstanceSpec& spec, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const int lo = std::max(1, spec.min_vertices);
  const int hi = std::max(lo, std::min(spec.max_vertices, spec.max_edges + 1));
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int& c : colour) c = coin(rng);
  Multigraph g(n);
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> options;
    for (Vertex u = 0; u < v; ++u)
      if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)]) options.push_back(u);
    if (options.empty()) {
      colour[static_cast<std::size_t>(v)] = 1 - colour[0];
      for (Vertex u = 0; u < v; ++u) options.push_back(u);
    }
    g.add_edge(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)], v);
  }
  const int target = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, spec.max_edges))(rng);
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int attempt = 0; attempt < 50 * target && g.edge_count() < target; ++attempt) {
    const Vertex u = any(rng);
    const Vertex v = any(rng);
    if (u == v) continue;
    if (spec.bipartite_only && colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
      continue;
    if (!spec.allow_parallel && g.adjacent(u, v)) continue;
    g.add_edge(u, v);
  }
  return Graft(std::move(g), random_even_subset(rng, n));
}

std::string describe(const Graft& gt) {
  std::string out = "n=" + std::to_string(gt.vertex_count()) + " e=";
  bool first = true;
  for (const Edge& e : gt.graph().edges()) {
    if (!first) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  out += " t=";
  first = true;
  gt.terminals().for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) fail(ErrorCode::kParse, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(ErrorCode::kParse, "bad integer '" + s + "'");
  }
}

}  // namespace

Graft parse_description(const std::string& text) {
  const std::vector<std::string> fields = split(text, ' ');
  if (fields.size() != 3 || fields[0].rfind("n=", 0) != 0 || fields[1].rfind("e=", 0) != 0 ||
      fields[2].rfind("t=", 0) != 0)
    fail(ErrorCode::kParse, "expected 'n=.. e=.. t=..'");
  const int n = parse_int(fields[0].substr(2));
  if (n < 1 || n > Multigraph::kMaxVertices) fail(ErrorCode::kSizeCap, "vertex count out of range");
  Multigraph g(n);
  for (const std::string& e : split(fields[1].substr(2), ',')) {
    const std::vector<std::string> ends = split(e, '-');
    if (ends.size() != 2) fail(ErrorCode::kParse, "bad edge '" + e + "'");
    const int u = parse_int(ends[0]);
    const int v = parse_int(ends[1]);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) fail(ErrorCode::kParse, "bad edge '" + e + "'");
    g.add_edge(u, v);
  }
  VertexSet t;
  for (const std::string& v : split(fields[2].substr(2), ',')) {
    const int x = parse_int(v);
    if (x < 0 || x >= n) fail(ErrorCode::kParse, "bad terminal '" + v + "'");
    t.insert(static_cast<std::size_t>(x));
  }
  return Graft(std::move(g), t);
}

std::uint64_t digest(const Graft& gt) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : describe(gt)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

namespace {

struct SkipCheck {
  std::string reason;
};

std::string str(int v) { return std::to_string(v); }

class Outcome {
 public:
  template <typename Witness>
  void expect(bool ok, Witness&& witness) {
    ++cases_;
    if (!ok && !failed_) {
      failed_ = true;
      witness_ = witness();
    }
  }

  /// Folds a lemma report into this outcome, one case per verdict.
  void absorb(const LemmaReport& report, const std::string& context) {
    for (const LemmaVerdict& v : report.verdicts)
      expect(v.pass, [&] { return context + " " + v.lemma + ": " + v.witness; });
  }

  /// Runs f, turning a StructureViolation into a failed case.
  template <typename F>
  void guard(const std::string& context, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kStructureViolation) throw;
      expect(false, [&] { return context + ": " + e.what(); });
    }
  }

  bool failed() const { return failed_; }
  long long cases() const { return cases_; }
  const std::string& witness() const { return witness_; }

 private:
  bool failed_ = false;
  long long cases_ = 0;
  std::string witness_;
};

/// Per-instance data shared by every check, computed on first use.
class Context {
 public:
  Context(const Graft& gt, const CheckOptions& options)
      : gt_(gt), options_(options), colours_(bipartition(gt.graph())) {}

  const Graft& graft() const { return gt_; }
  const Multigraph& graph() const { return gt_.graph(); }
  int n() const { return gt_.vertex_count(); }
  const CheckOptions& options() const { return options_; }

  void require_bipartite() const {
    if (!colours_) throw SkipCheck{"precondition: graft is not bipartite"};
  }
  const Bipartition& colours() const { return *colours_; }

  void require_path_cap() const {
    if (n() > options_.path_vertex_cap)
      throw SkipCheck{"over cap: more than " + str(options_.path_vertex_cap) + " vertices for path enumeration"};
  }

  const DecompositionAtlas& atlas() {
    if (!atlas_) atlas_ = std::make_unique<DecompositionAtlas>(gt_);
    return *atlas_;
  }

  const BruteForceJoins& joins() {
    if (gt_.edge_count() > kBruteForceEdgeCap)
      throw SkipCheck{"over cap: more than " + str(kBruteForceEdgeCap) + " edges for join enumeration"};
    if (!joins_) joins_ = std::make_unique<BruteForceJoins>(nu_bruteforce(gt_));
    return *joins_;
  }
  std::size_t join_count() { return joins().joins.size(); }
  const EdgeSet& join(std::size_t j) { return joins().joins[j]; }

  const DistanceTable& table(std::size_t j) {
    if (tables_.empty()) tables_.resize(join_count());
    if (!tables_[j])
      tables_[j] = std::make_unique<DistanceTable>(gt_, Weighting(join(j)), atlas().shifts());
    return *tables_[j];
  }

  const std::vector<int>& via_nu() {
    if (via_nu_.empty()) via_nu_ = distance_matrix_via_nu(gt_);
    return via_nu_;
  }

  const std::vector<int>& simple_paths(std::size_t j, Vertex u) {
    require_path_cap();
    auto& slot = simple_[{j, u}];
    if (slot.empty()) slot = oracle::simple_path_minimum(graph(), Weighting(join(j)), u);
    return slot;
  }

  const std::vector<EdgeSet>& circuits() {
    require_path_cap();
    if (!circuits_) circuits_ = std::make_unique<std::vector<EdgeSet>>(oracle::enumerate_circuits(graph()));
    return *circuits_;
  }

  const std::vector<PathWitness>& ears(VertexSet k) {
    if (n() > options_.ear_vertex_cap)
      throw SkipCheck{"over cap: more than " + str(options_.ear_vertex_cap) + " vertices for ear enumeration"};
    auto it = ears_.find(k);
    if (it == ears_.end()) it = ears_.emplace(k, oracle::round_ear_paths(graph(), k, true)).first;
    return it->second;
  }

  const DistanceProfile& profile(Vertex r) {
    auto it = profiles_.find(r);
    if (it == profiles_.end()) it = profiles_.emplace(r, atlas().profile(r)).first;
    return it->second;
  }

  const DistanceComponentFamily& family(Vertex r) {
    auto it = families_.find(r);
    if (it == families_.end()) it = families_.emplace(r, distance_components(profile(r), graph())).first;
    return it->second;
  }

  const Trisection& trisection(Vertex r) {
    auto it = trisections_.find(r);
    if (it == trisections_.end()) it = trisections_.emplace(r, atlas().trisection(r)).first;
    return it->second;
  }

  struct Sub {
    SubgraftView view;
    EdgeSet local_join;
    bool minimum = false;
    std::unique_ptr<DistanceTable> table;
  };

  /// The subgraft (G, T)_F[K] for the j-th minimum join.
  const Sub& sub(std::size_t j, VertexSet k) {
    auto& slot = subs_[{j, k}];
    if (!slot) {
      slot = std::make_unique<Sub>();
      slot->view = subgraft(gt_, join(j), k);
      slot->local_join = slot->view.map.from_host(join(j) & graph().edges_within(k));
      slot->minimum = is_join(slot->view.graft, slot->local_join) &&
                      static_cast<int>(slot->local_join.size()) == nu(slot->view.graft);
      if (slot->minimum)
        slot->table = std::make_unique<DistanceTable>(slot->view.graft, Weighting(slot->local_join));
    }
    return *slot;
  }

  /// Extreme sets of size 1..mount_cap, in increasing size then lexicographic order.
  const std::vector<VertexSet>& extreme_sets() {
    if (!extreme_sets_) {
      extreme_sets_ = std::make_unique<std::vector<VertexSet>>();
      VertexSet current;
      auto grow = [&](auto&& self, Vertex from, int remaining) -> void {
        if (remaining == 0) {
          if (is_extreme(atlas().distances(), current)) extreme_sets_->push_back(current);
          return;
        }
        for (Vertex v = from; v < n(); ++v) {
          current.insert(static_cast<std::size_t>(v));
          self(self, v + 1, remaining - 1);
          current.erase(static_cast<std::size_t>(v));
        }
      };
      for (int size = 1; size <= std::min(options_.mount_cap, n()); ++size) grow(grow, 0, size);
    }
    return *extreme_sets_;
  }

  /// Extreme sets inside one colour class.
  std::vector<VertexSet> mounts() {
    require_bipartite();
    std::vector<VertexSet> out;
    for (const VertexSet& x : extreme_sets())
      if (x.subset_of(colours_->a) || x.subset_of(colours_->b)) out.push_back(x);
    return out;
  }

  const ExtendedAtlas& extended(VertexSet mount) {
    auto& slot = extended_[mount];
    if (!slot) slot = std::make_unique<ExtendedAtlas>(extend_atlas(atlas(), mount));
    return *slot;
  }

  const LemmaReport& rootlization_report(VertexSet mount) {
    auto it = rootlization_reports_.find(mount);
    if (it == rootlization_reports_.end())
      it = rootlization_reports_.emplace(mount, rootlization_checks(atlas(), extended(mount))).first;
    return it->second;
  }

 private:
  Graft gt_;
  CheckOptions options_;
  std::optional<Bipartition> colours_;
  std::unique_ptr<DecompositionAtlas> atlas_;
  std::unique_ptr<BruteForceJoins> joins_;
  std::vector<std::unique_ptr<DistanceTable>> tables_;
  std::vector<int> via_nu_;
  std::map<std::pair<std::size_t, Vertex>, std::vector<int>> simple_;
  std::unique_ptr<std::vector<EdgeSet>> circuits_;
  std::map<VertexSet, std::vector<PathWitness>> ears_;
  std::map<Vertex, DistanceProfile> profiles_;
  std::map<Vertex, DistanceComponentFamily> families_;
  std::map<Vertex, Trisection> trisections_;
  std::map<std::pair<std::size_t, VertexSet>, std::unique_ptr<Sub>> subs_;
  std::unique_ptr<std::vector<VertexSet>> extreme_sets_;
  std::map<VertexSet, std::unique_ptr<ExtendedAtlas>> extended_;
  std::map<VertexSet, LemmaReport> rootlization_reports_;
};

std::string at_join(Context& ctx, std::size_t j) { return "F=" + to_string(ctx.join(j)); }

/// The vertex of K incident with the unique F-edge of ∂(K), or -1.
Vertex entry_vertex(const Multigraph& g, VertexSet k, const EdgeSet& f) {
  const EdgeSet c = cut(g, k) & f;
  if (c.size() != 1) return -1;
  const Edge& e = g.edge(static_cast<EdgeId>(c.min()));
  return k.contains(static_cast<std::size_t>(e.u)) ? e.u : e.v;
}

template <typename Visit>
void for_each_join_root(Context& ctx, Visit&& visit) {
  for (std::size_t j = 0; j < ctx.join_count(); ++j)
    for (Vertex r = 0; r < ctx.n(); ++r) visit(j, r);
}

void check_oracle(Context& ctx, Outcome& out) {
  const BruteForceJoins& bf = ctx.joins();
  const DecompositionAtlas& at = ctx.atlas();
  out.expect(bf.nu == at.nu() && static_cast<int>(at.min_join().size()) == bf.nu &&
                 is_join(ctx.graft(), at.min_join()),
             [&] { return "brute-force nu=" + str(bf.nu) + " nu=" + str(at.nu()) + " min_join=" + to_string(at.min_join()); });
  out.expect(!bf.joins.empty() && bf.joins.front() == at.min_join(),
             [&] { return "canonical join " + to_string(at.min_join()) + " is not the least brute-force join"; });
  EdgeSet all;
  for (const EdgeSet& f : bf.joins) all |= f;
  out.expect(all == at.allowed(), [&] {
    return "allowed=" + to_string(at.allowed()) + " union of minimum joins=" + to_string(all);
  });
  ctx.require_path_cap();
  const std::vector<int>& via = ctx.via_nu();
  const int n = ctx.n();
  for (std::size_t j = 0; j < ctx.join_count(); ++j) {
    const DistanceTable& t = ctx.table(j);
    for (Vertex u = 0; u < n; ++u) {
      const std::vector<int>& paths = ctx.simple_paths(j, u);
      for (Vertex v = 0; v < n; ++v) {
        const int d = t(u, v);
        out.expect(d == via[static_cast<std::size_t>(u * n + v)] && d == paths[static_cast<std::size_t>(v)], [&] {
          return at_join(ctx, j) + " u=" + str(u) + " v=" + str(v) + " table=" + str(d) +
                 " via-nu=" + str(via[static_cast<std::size_t>(u * n + v)]) +
                 " simple-paths=" + str(paths[static_cast<std::size_t>(v)]);
        });
        const PathWitness& p = t.path(u, v);
        out.expect(is_valid_path(ctx.graph(), p) && p.front() == u && p.back() == v &&
                       f_weight(t.weighting(), p) == d,
                   [&] { return at_join(ctx, j) + " u=" + str(u) + " v=" + str(v) + " bad witness path"; });
      }
    }
  }
}

void check_fact1(Context& ctx, Outcome& out) {
  const std::vector<int>& via = ctx.via_nu();
  const int n = ctx.n();
  const bool literal = ctx.options().literal_fact1;
  for (std::size_t j = 0; j < ctx.join_count(); ++j)
    for (Vertex u = 0; u < n; ++u) {
      const std::vector<int>& paths = ctx.simple_paths(j, u);
      for (Vertex v = u + 1; v < n; ++v) {
        const int shifted = via[static_cast<std::size_t>(u * n + v)];
        const int formula = literal ? -shifted : shifted;
        out.expect(paths[static_cast<std::size_t>(v)] == formula, [&] {
          return at_join(ctx, j) + " x=" + str(u) + " y=" + str(v) +
                 " path weight=" + str(paths[static_cast<std::size_t>(v)]) +
                 " nu difference=" + (formula > 0 ? "+" : "") + str(formula);
        });
      }
    }
}

void check_circuit_flip(Context& ctx, Outcome& out) {
  const int nu0 = ctx.joins().nu;
  const EdgeSet allowed = ctx.atlas().allowed();
  for (std::size_t j = 0; j < ctx.join_count(); ++j) {
    const Weighting w(ctx.join(j));
    for (const EdgeSet& c : ctx.circuits()) {
      if (f_weight(w, c) != 0) continue;
      const EdgeSet flipped = ctx.join(j) ^ c;
      out.expect(is_join(ctx.graft(), flipped) && static_cast<int>(flipped.size()) == nu0 && c.subset_of(allowed),
                 [&] { return at_join(ctx, j) + " C=" + to_string(c) + " F^C=" + to_string(flipped); });
    }
  }
}

void check_conservative(Context& ctx, Outcome& out) {
  const int nu0 = ctx.joins().nu;
  const std::vector<EdgeSet>& circuits = ctx.circuits();
  for (const EdgeSet& f : all_joins_bruteforce(ctx.graft())) {
    const Weighting w(f);
    const EdgeSet* negative = nullptr;
    for (const EdgeSet& c : circuits)
      if (f_weight(w, c) < 0) {
        negative = &c;
        break;
      }
    const bool minimum = static_cast<int>(f.size()) == nu0;
    out.expect(minimum == (negative == nullptr), [&] {
      return "J=" + to_string(f) + (minimum ? " is minimum but C=" + to_string(*negative) + " is negative"
                                            : std::string(" is not minimum yet no circuit is negative"));
    });
  }
}

void check_fc_nonpos(Context& ctx, Outcome& out) {
  if (ctx.atlas().factor_components().size() != 1)
    throw SkipCheck{"precondition: graft is not factor-connected"};
  for (std::size_t j = 0; j < ctx.join_count(); ++j)
    for (Vertex u = 0; u < ctx.n(); ++u)
      for (Vertex v = 0; v < ctx.n(); ++v)
        out.expect(ctx.table(j)(u, v) <= 0, [&] {
          return at_join(ctx, j) + " x=" + str(u) + " y=" + str(v) + " dist=" + str(ctx.table(j)(u, v));
        });
}

void check_adj_step(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const DistanceTable& t = ctx.table(j);
    for (const Edge& e : ctx.graph().edges())
      out.expect(std::abs(t(r, e.u) - t(r, e.v)) == 1, [&] {
        return at_join(ctx, j) + " root=" + str(r) + " edge=" + str(e.u) + "-" + str(e.v);
      });
  });
}

void check_cut_parity(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    for (const DistanceComponent& k : ctx.family(r).all()) {
      const EdgeSet c = cut(ctx.graph(), k.vertices) & ctx.join(j);
      const bool capital = k.vertices.contains(static_cast<std::size_t>(r));
      out.expect(capital ? c.empty() : c.size() == 1, [&] {
        return at_join(ctx, j) + " root=" + str(r) + " K=" + to_string(k.vertices) + " cut∩F=" + to_string(c);
      });
    }
  });
}

void check_path_cut(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const Multigraph& g = ctx.graph();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const EdgeSet& f = ctx.join(j);
    for (Vertex x = 0; x < ctx.n(); ++x) {
      const EdgeSet p = ctx.table(j).path(r, x).edge_set();
      for (const DistanceComponent& k : ctx.family(r).all()) {
        const EdgeSet crossing = p & cut(g, k.vertices);
        const std::size_t in_f = (crossing & f).size();
        const bool rin = k.vertices.contains(static_cast<std::size_t>(r));
        const bool xin = k.vertices.contains(static_cast<std::size_t>(x));
        bool ok = false;
        if (rin && xin) ok = p.subset_of(g.edges_within(k.vertices));
        else if (rin) ok = crossing.size() == 1 && in_f == 0;
        else if (xin) ok = crossing.size() == 1 && in_f == 1;
        else ok = crossing.empty() || (in_f == 1 && (crossing - f).size() == 1);
        out.expect(ok, [&] {
          return at_join(ctx, j) + " root=" + str(r) + " x=" + str(x) + " K=" + to_string(k.vertices) +
                 " P=" + to_string(p);
        });
      }
    }
  });
}

void check_primal_sub(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const DistanceTable& t = ctx.table(j);
    for (const DistanceComponent& k : ctx.family(r).all()) {
      if (k.capital) continue;
      const Vertex rk = entry_vertex(ctx.graph(), k.vertices, ctx.join(j));
      const std::string where = at_join(ctx, j) + " root=" + str(r) + " K=" + to_string(k.vertices);
      out.expect(rk >= 0, [&] { return where + " has no unique F-edge in its cut"; });
      if (rk < 0) continue;
      const Context::Sub& s = ctx.sub(j, k.vertices);
      out.expect(s.minimum, [&] { return where + " F∩E(K) is not a minimum join of the subgraft"; });
      if (!s.minimum) continue;
      const int lrk = s.view.map.from_host_vertex[static_cast<std::size_t>(rk)];
      k.vertices.for_each([&](int x) {
        const int lx = s.view.map.from_host_vertex[static_cast<std::size_t>(x)];
        const int inside = (*s.table)(lrk, lx);
        out.expect(t(r, x) == t(r, rk) + inside && inside <= 0, [&] {
          return where + " r_K=" + str(rk) + " x=" + str(x) + " dist(r,x)=" + str(t(r, x)) +
                 " dist(r,r_K)=" + str(t(r, rk)) + " subgraft dist=" + str(inside);
        });
      });
    }
  });
}

void check_kl_equiv(Context& ctx, Outcome& out) {
  const DecompositionAtlas& at = ctx.atlas();
  const int n = ctx.n();
  std::vector<int> fc(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < at.factor_components().size(); ++i)
    at.factor_components()[i].for_each([&](int v) { fc[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  for (std::size_t j = 0; j < ctx.join_count(); ++j) {
    const DistanceTable& t = ctx.table(j);
    auto rel = [&](Vertex u, Vertex v) {
      return fc[static_cast<std::size_t>(u)] == fc[static_cast<std::size_t>(v)] && t(u, v) == 0;
    };
    for (Vertex u = 0; u < n; ++u) {
      out.expect(rel(u, u), [&] { return at_join(ctx, j) + " not reflexive at " + str(u); });
      for (Vertex v = 0; v < n; ++v) {
        out.expect(rel(u, v) == rel(v, u),
                   [&] { return at_join(ctx, j) + " not symmetric at " + str(u) + "," + str(v); });
        out.expect(rel(u, v) == (at.kl().class_index(u) == at.kl().class_index(v)),
                   [&] { return at_join(ctx, j) + " classes disagree at " + str(u) + "," + str(v); });
        for (Vertex x = 0; x < n; ++x)
          if (rel(u, v) && rel(v, x))
            out.expect(rel(u, x), [&] {
              return at_join(ctx, j) + " not transitive at " + str(u) + "," + str(v) + "," + str(x);
            });
      }
    }
  }
}

void check_level_extreme(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const DistanceTable& t = ctx.table(j);
    for (const DistanceComponent& k : ctx.family(r).all()) {
      const VertexSet x = k.vertices & ctx.profile(r).level(k.index);
      const std::string where = at_join(ctx, j) + " root=" + str(r) + " K=" + to_string(k.vertices) +
                                " level set=" + to_string(x);
      const Context::Sub& s = ctx.sub(j, k.vertices);
      out.expect(s.minimum, [&] { return where + " F∩E(K) is not a minimum join of the subgraft"; });
      x.for_each([&](int u) {
        x.for_each([&](int v) {
          out.expect(t(u, v) >= 0, [&] { return where + " dist(" + str(u) + "," + str(v) + ") < 0 in G"; });
          if (!s.minimum) return;
          const int lu = s.view.map.from_host_vertex[static_cast<std::size_t>(u)];
          const int lv = s.view.map.from_host_vertex[static_cast<std::size_t>(v)];
          out.expect((*s.table)(lu, lv) >= 0,
                     [&] { return where + " dist(" + str(u) + "," + str(v) + ") < 0 in the subgraft"; });
        });
      });
    }
  });
}

void check_ears(Context& ctx, Outcome& out, bool capital_only) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const Weighting w(ctx.join(j));
    for (const DistanceComponent& k : ctx.family(r).all()) {
      if (capital_only && !k.capital) continue;
      const Vertex rk = k.capital ? -1 : entry_vertex(ctx.graph(), k.vertices, ctx.join(j));
      for (const PathWitness& p : ctx.ears(k.vertices)) {
        const int wt = f_weight(w, p);
        bool ok = capital_only ? wt >= 2 : wt >= 0;
        if (!capital_only && wt == 0) ok = !k.capital && (p.front() == rk || p.back() == rk);
        out.expect(ok, [&] {
          return at_join(ctx, j) + " root=" + str(r) + " K=" + to_string(k.vertices) + " ear=" +
                 to_string(p.edge_set()) + " weight=" + str(wt);
        });
      }
    }
  });
}

void check_a_min(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for_each_join_root(ctx, [&](std::size_t j, Vertex r) {
    const DistanceTable& t = ctx.table(j);
    ctx.trisection(r).a.for_each([&](int x) {
      for (Vertex y = 0; y < ctx.n(); ++y)
        out.expect(t(r, y) <= t(x, y), [&] {
          return at_join(ctx, j) + " root=" + str(r) + " x=" + str(x) + " y=" + str(y);
        });
    });
  });
}

void check_unit_dist(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for (std::size_t j = 0; j < ctx.join_count(); ++j) {
    const DistanceTable& t = ctx.table(j);
    for (const VertexSet& s : ctx.atlas().kl().classes) {
      const auto x = static_cast<Vertex>(s.min());
      s.for_each([&](int y) {
        for (Vertex z = 0; z < ctx.n(); ++z)
          out.expect(t(x, z) == t(y, z), [&] {
            return at_join(ctx, j) + " x=" + str(x) + " y=" + str(y) + " z=" + str(z);
          });
      });
    }
  }
}

void check_icomp(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const DecompositionAtlas& at = ctx.atlas();
  for (Vertex r = 0; r < ctx.n(); ++r) {
    const std::string where = "root=" + str(r);
    out.guard(where, [&] { icomp_structure(at, r); });
    const Trisection& t = ctx.trisection(r);
    out.expect(at.kl().class_of(r).subset_of(t.a), [&] { return where + " class of root leaves A"; });
    t.a.for_each([&](int x) {
      for (const VertexSet& fc : at.factor_components()) {
        if (!fc.contains(static_cast<std::size_t>(x))) continue;
        const VertexSet s = at.kl().class_of(x);
        out.expect((t.a & fc) == s && (fc - s).subset_of(t.d),
                   [&] { return where + " x=" + str(x) + " factor-component " + to_string(fc); });
      }
    });
    std::vector<VertexSet> seen;
    for (const VertexSet& s : at.kl().classes) {
      if (!s.subset_of(t.a)) continue;
      for (const VertexSet& k : at.neicomp(r, s)) {
        out.expect(std::find(seen.begin(), seen.end(), k) == seen.end(),
                   [&] { return where + " component " + to_string(k) + " hangs off two classes"; });
        seen.push_back(k);
      }
    }
  }
}

void check_coup_eq(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const DecompositionAtlas& at = ctx.atlas();
  std::vector<std::pair<VertexSet, VertexSet>> critical;
  for (const VertexSet& s : at.kl().classes) {
    VertexSet crit;
    out.guard("S=" + to_string(s), [&] { crit = at.critical_set(s); });
    critical.emplace_back(s, crit);
    s.for_each([&](int r) {
      VertexSet u;
      for (const VertexSet& k : at.neicomp(r, s)) u |= k;
      out.expect(u == crit, [&] {
        return "S=" + to_string(s) + " root=" + str(r) + " neiset=" + to_string(u) + " coup=" + to_string(crit);
      });
    });
  }
  ctx.require_path_cap();
  for (std::size_t j = 0; j < ctx.join_count(); ++j)
    for (const auto& [s, crit] : critical) {
      const VertexSet neg = negative_set_bruteforce(ctx.graft(), Weighting(ctx.join(j)), s);
      out.expect(neg == crit, [&] {
        return at_join(ctx, j) + " S=" + to_string(s) + " negative set=" + to_string(neg) +
               " critical set=" + to_string(crit);
      });
    }
}

void check_nonallowed_one(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const EdgeSet allowed = ctx.atlas().allowed();
  for (std::size_t j = 0; j < ctx.join_count(); ++j)
    for (const Edge& e : ctx.graph().edges()) {
      if (allowed.contains(static_cast<std::size_t>(e.id))) continue;
      out.expect(ctx.table(j)(e.u, e.v) == 1,
                 [&] { return at_join(ctx, j) + " edge=" + str(e.u) + "-" + str(e.v); });
    }
}

void check_rootlize_join(Context& ctx, Outcome& out) {
  for (const VertexSet& x : ctx.mounts()) {
    const std::string where = "mount=" + to_string(x);
    for (const LemmaVerdict& v : ctx.rootlization_report(x).verdicts)
      if (v.lemma != "extend2sim") out.expect(v.pass, [&] { return where + " " + v.lemma + ": " + v.witness; });
    out.guard(where, [&] { extended_min_joins(ctx.extended(x).rootlization); });
  }
}

void check_rootlize_sim(Context& ctx, Outcome& out) {
  for (const VertexSet& x : ctx.mounts())
    for (const LemmaVerdict& v : ctx.rootlization_report(x).verdicts)
      if (v.lemma == "extend2sim")
        out.expect(v.pass, [&] { return "mount=" + to_string(x) + " " + v.lemma + ": " + v.witness; });
}

void check_homog(Context& ctx, Outcome& out) {
  for (const VertexSet& x : ctx.mounts())
    out.guard("mount=" + to_string(x), [&] {
      homogeneous_structure(ctx.atlas(), ctx.extended(x));
      out.expect(true, [] { return std::string(); });
    });
}

void check_monotone(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for (Vertex r = 0; r < ctx.n(); ++r) out.absorb(monotonicity_checks(ctx.atlas(), r), "root=" + str(r));
  for (const VertexSet& x : ctx.mounts())
    out.absorb(monotonicity_checks(ctx.atlas(), ctx.extended(x)), "mount=" + to_string(x));
}

void check_hetero(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for (const VertexSet& x : ctx.extreme_sets()) {
    if (!x.intersects(ctx.colours().a) || !x.intersects(ctx.colours().b)) continue;
    out.absorb(heterogeneous_checks(ctx.atlas(), x), "X=" + to_string(x));
  }
}

void check_neigh_posi(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  for (Vertex r = 0; r < ctx.n(); ++r) {
    const DistanceProfile& p = ctx.profile(r);
    for (int i = 0; i < p.max_level(); ++i) {
      const DistanceComponent* l = ctx.family(r).capital_at(i);
      const VertexSet x = l->vertices & p.level(i);
      const VertexSet y = neighbors(ctx.graph(), l->vertices);
      x.for_each([&](int u) {
        y.for_each([&](int v) {
          out.expect(ctx.atlas().dist(u, v) >= 1, [&] {
            return "root=" + str(r) + " i=" + str(i) + " x=" + str(u) + " y=" + str(v);
          });
        });
      });
    }
  }
}

void check_hinitial(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const DecompositionAtlas& at = ctx.atlas();
  for (Vertex r = 0; r < ctx.n(); ++r) {
    const DistanceProfile& p = ctx.profile(r);
    for (int i = 0; i < p.max_level(); ++i) {
      const VertexSet k = ctx.family(r).capital_at(i)->vertices;
      const VertexSet l = ctx.family(r).capital_at(i + 1)->vertices;
      const VertexSet nk = neighbors(ctx.graph(), k);
      const std::string where = "root=" + str(r) + " i=" + str(i) + " K=" + to_string(k) + " N=" + to_string(nk);
      const bool extreme = is_extreme(at.distances(), nk);
      out.expect(extreme, [&] { return where + " N(K) is not extreme"; });
      if (!extreme) continue;
      const Trisection tn = at.root_set_trisection(nk);
      const VertexSet top = p.level(i + 1);
      out.expect((l & top) == tn.a, [&] {
        return where + " V(L)∩level=" + to_string(l & top) + " A_N=" + to_string(tn.a);
      });
      out.expect((l - k - top) == tn.d, [&] {
        return where + " V(L)-V(K)-level=" + to_string(l - k - top) + " D_N=" + to_string(tn.d);
      });
    }
  }
}

void check_capital(Context& ctx, Outcome& out) {
  ctx.require_bipartite();
  const Multigraph& g = ctx.graph();
  for (Vertex r = 0; r < ctx.n(); ++r) {
    const DistanceProfile& p = ctx.profile(r);
    for (int i = 1; i <= p.max_level(); ++i) {
      const VertexSet k = ctx.family(r).capital_at(i - 1)->vertices;
      const VertexSet l = ctx.family(r).capital_at(i)->vertices;
      const VertexSet nk = neighbors(g, k);
      const std::string where = "root=" + str(r) + " i=" + str(i) + " K=" + to_string(k) + " L=" + to_string(l);
      out.guard(where, [&] {
        const InitialStructure s = homogeneous_structure(ctx.atlas(), nk);
        VertexSet classes;
        VertexSet criticals;
        std::vector<VertexSet> pieces;
        for (const ClassBlock& b : s.blocks) {
          classes |= b.klass;
          criticals |= b.critical;
          pieces.insert(pieces.end(), b.critical_components.begin(), b.critical_components.end());
        }
        const VertexSet rest = l - k - p.level(i);
        std::vector<VertexSet> comps = connected_components(g, rest);
        std::sort(comps.begin(), comps.end());
        std::sort(pieces.begin(), pieces.end());
        out.expect(classes == (l & p.level(i)), [&] {
          return where + " classes cover " + to_string(classes) + " not " + to_string(l & p.level(i));
        });
        out.expect(criticals == rest, [&] {
          return where + " critical sets cover " + to_string(criticals) + " not " + to_string(rest);
        });
        out.expect(comps == pieces, [&] { return where + " components of the remainder differ"; });
      });
    }
  }
}

using CheckFn = void (*)(Context&, Outcome&);

const std::vector<std::pair<std::string, CheckFn>>& table_of_checks() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"oracle", check_oracle},
      {"fact1-sign", check_fact1},
      {"circuit-flip", check_circuit_flip},
      {"conservative", check_conservative},
      {"fc-nonpos", check_fc_nonpos},
      {"adj-step", check_adj_step},
      {"cut-parity", check_cut_parity},
      {"path-cut", check_path_cut},
      {"primal-sub", check_primal_sub},
      {"kl-equiv", check_kl_equiv},
      {"level-extreme", check_level_extreme},
      {"ear-nonneg", [](Context& c, Outcome& o) { check_ears(c, o, false); }},
      {"ear-capital", [](Context& c, Outcome& o) { check_ears(c, o, true); }},
      {"a-min", check_a_min},
      {"unit-dist", check_unit_dist},
      {"icomp", check_icomp},
      {"coup-eq", check_coup_eq},
      {"nonallowed-one", check_nonallowed_one},
      {"rootlize-join", check_rootlize_join},
      {"rootlize-sim", check_rootlize_sim},
      {"homog", check_homog},
      {"monotone", check_monotone},
      {"hetero", check_hetero},
      {"neigh-posi", check_neigh_posi},
      {"hinitial", check_hinitial},
      {"capital", check_capital},
  };
  return checks;
}

CheckFn lookup(const std::string& id) {
  for (const auto& [name, fn] : table_of_checks())
    if (name == id) return fn;
  fail(ErrorCode::kInvalidArgument, "unknown check '" + id + "'");
}

CheckReport run_in(Context& ctx, const std::string& id, const std::string& instance, std::uint64_t hash) {
  const CheckFn fn = lookup(id);
  CheckReport report;
  report.check_id = id;
  report.instance = instance;
  report.digest = hash;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    fn(ctx, out);
    report.verdict = out.failed() ? Verdict::kFail : Verdict::kPass;
    report.witness = out.witness();
  } catch (const SkipCheck& s) {
    report.verdict = out.failed() ? Verdict::kFail : Verdict::kSkipped;
    report.witness = out.failed() ? out.witness() : s.reason;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSizeCap && !out.failed()) {
      report.verdict = Verdict::kSkipped;
      report.witness = std::string("over cap: ") + e.what();
    } else {
      report.verdict = Verdict::kFail;
      report.witness = out.failed() ? out.witness() : std::string(to_string(e.code())) + ": " + e.what();
    }
  }
  report.cases = out.cases();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& registry() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : table_of_checks()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

bool is_registered(const std::string& id) {
  const auto& ids = registry();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<CheckReport> run_checks(const Graft& gt, const std::vector<std::string>& check_ids,
                                    const CheckOptions& options) {
  Context ctx(gt, options);
  const std::string instance = describe(gt);
  const std::uint64_t hash = digest(gt);
  std::vector<CheckReport> out;
  out.reserve(check_ids.size());
  for (const std::string& id : check_ids) out.push_back(run_in(ctx, id, instance, hash));
  return out;
}

CheckReport run_check(const Graft& gt, const std::string& check_id, const CheckOptions& options) {
  return run_checks(gt, {check_id}, options).front();
}

bool SuiteSummary::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.fail > 0; });
}

const CheckSummary* SuiteSummary::find(const std::string& check_id) const {
  for (const CheckSummary& c : checks)
    if (c.check_id == check_id) return &c;
  return nullptr;
}

std::string SuiteSummary::to_text(bool timing) const {
  std::ostringstream out;
  out << "instances " << instances << '\n';
  for (const CheckSummary& c : checks) {
    out << c.check_id << ": pass " << c.pass << " fail " << c.fail << " skipped " << c.skipped << " cases "
        << c.cases;
    if (timing) out << " seconds " << c.seconds;
    out << '\n';
    if (c.first_failure)
      out << "  first failure [" << c.first_failure->instance << "] " << c.first_failure->witness << '\n';
    if (c.skipped > 0) out << "  first skip: " << c.skip_reason << '\n';
  }
  if (timing) out << "seconds " << seconds << '\n';
  out << (any_fail() ? "FAIL" : "OK") << '\n';
  return out.str();
}

std::string SuiteSummary::to_json(bool timing) const {
  nlohmann::ordered_json doc;
  doc["instances"] = instances;
  doc["ok"] = !any_fail();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CheckSummary& c : checks) {
    nlohmann::ordered_json item;
    item["check"] = c.check_id;
    item["pass"] = c.pass;
    item["fail"] = c.fail;
    item["skipped"] = c.skipped;
    item["cases"] = c.cases;
    if (c.first_failure) {
      item["first_failure"] = {{"instance", c.first_failure->instance},
                               {"digest", c.first_failure->digest},
                               {"witness", c.first_failure->witness}};
    }
    if (c.skipped > 0) item["skip_reason"] = c.skip_reason;
    if (timing) item["seconds"] = c.seconds;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  if (timing) doc["seconds"] = seconds;
  return doc.dump(2);
}

SuiteSummary run_suite(const InstanceSpec& spec, const std::vector<std::string>& check_ids,
                       const CheckOptions& options, int threads) {
  for (const std::string& id : check_ids) lookup(id);
  const auto start = std::chrono::steady_clock::now();
  SuiteSummary summary;
  for (const std::string& id : check_ids) summary.checks.push_back(CheckSummary{id, 0, 0, 0, 0, {}, {}, 0.0});

  auto merge = [&](const std::vector<std::vector<CheckReport>>& batch) {
    for (const std::vector<CheckReport>& reports : batch) {
      ++summary.instances;
      for (std::size_t c = 0; c < reports.size(); ++c) {
        CheckSummary& s = summary.checks[c];
        const CheckReport& r = reports[c];
        s.cases += r.cases;
        s.seconds += r.seconds;
        switch (r.verdict) {
          case Verdict::kPass:
            ++s.pass;
            break;
          case Verdict::kFail:
            ++s.fail;
            if (!s.first_failure) s.first_failure = r;
            break;
          case Verdict::kSkipped:
            ++s.skipped;
            if (s.skip_reason.empty()) s.skip_reason = r.witness;
            break;
        }
      }
    }
  };

  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<Graft> pending;
  auto flush = [&] {
    std::vector<std::vector<CheckReport>> results(pending.size());
    if (workers == 1 || pending.size() < 2) {
      for (std::size_t i = 0; i < pending.size(); ++i) results[i] = run_checks(pending[i], check_ids, options);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < pending.size(); i += workers)
            results[i] = run_checks(pending[i], check_ids, options);
        });
      for (std::thread& t : pool) t.join();
    }
    merge(results);
    pending.clear();
  };
  constexpr std::size_t kBatch = 256;
  auto push = [&](const Graft& gt) {
    pending.push_back(gt);
    if (pending.size() >= kBatch) flush();
  };
  if (spec.kind == GeneratorKind::kEnumerate) {
    enumerate_grafts(spec, push);
  } else {
    for (int i = 0; i < spec.count; ++i) push(random_graft(spec, static_cast<std::uint64_t>(i)));
  }
  flush();
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<CapitalStep> capital_chain(const DecompositionAtlas& atlas, Vertex root) {
  const Multigraph& g = atlas.graph();
  if (!bipartition(g)) fail(ErrorCode::kNotBipartite, "graft is not bipartite");
  const DistanceProfile p = atlas.profile(root);
  const DistanceComponentFamily family = distance_components(p, g);
  std::vector<CapitalStep> steps;
  for (int i = 0; i < p.max_level(); ++i) {
    CapitalStep step;
    step.index = i;
    step.k = family.capital_at(i)->vertices;
    step.l = family.capital_at(i + 1)->vertices;
    step.neighbors = neighbors(g, step.k);
    const std::string where = "level " + std::to_string(i) + ": ";
    if (!is_extreme(atlas.distances(), step.neighbors))
      fail(ErrorCode::kStructureViolation, where + "N(K) " + to_string(step.neighbors) + " is not extreme");
    step.neighbor_trisection = atlas.root_set_trisection(step.neighbors);
    const VertexSet top = p.level(i + 1);
    if ((step.l & top) != step.neighbor_trisection.a)
      fail(ErrorCode::kStructureViolation, where + "V(L) ∩ level differs from A of N(K)");
    if ((step.l - step.k - top) != step.neighbor_trisection.d)
      fail(ErrorCode::kStructureViolation, where + "V(L) − V(K) − level differs from D of N(K)");
    step.structure = homogeneous_structure(atlas, step.neighbors);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<CapitalStep> capital_chain(const Graft& gt, Vertex root) {
  return capital_chain(DecompositionAtlas(gt), root);
}

}  // namespace tjoin::harness
