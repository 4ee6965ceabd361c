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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tjoin/decomposition.hpp"
#include "tjoin/join.hpp"

namespace tjoin::harness {

enum class GeneratorKind { kEnumerate, kRandom };
enum class TerminalPolicy { kAllEven, kRandomEven };

struct InstanceSpec {
  GeneratorKind kind = GeneratorKind::kEnumerate;
  int min_vertices = 2;
  int max_vertices = 4;
  int max_edges = 8;
  bool allow_parallel = false;
  bool bipartite_only = true;
  TerminalPolicy terminal_policy = TerminalPolicy::kAllEven;
  std::uint64_t seed = 1;
  /// Number of instances drawn in random mode.
  int count = 0;
};

inline constexpr int kEnumerateVertexCap = 7;

/// Connected labeled simple graphs ordered by vertex count and then by edge
/// mask over the pairs (0,1), (0,2), ..., crossed with every even terminal
/// subset in increasing mask order (or one seeded even subset). Throws SizeCap
/// above 7 vertices and InvalidArgument when parallel edges are requested.
void enumerate_grafts(const InstanceSpec& spec, const std::function<void(const Graft&)>& visit);

/// Reproducible from (spec.seed, index): a random spanning tree on a random
/// 2-colouring plus cross edges up to spec.max_edges, parallel ones only when
/// allowed, and an even terminal set.
Graft random_graft(const InstanceSpec& spec, std::uint64_t index);

/// Replayable text form "n=4 e=0-1,1-2,2-3,0-3 t=0,1,2,3".
std::string describe(const Graft& gt);
/// Inverse of describe. Throws Parse.
Graft parse_description(const std::string& text);
/// FNV-1a of describe().
std::uint64_t digest(const Graft& gt);

enum class Verdict { kPass, kFail, kSkipped };
const char* to_string(Verdict v);

struct CheckReport {
  std::string check_id;
  std::string instance;
  std::uint64_t digest = 0;
  Verdict verdict = Verdict::kPass;
  /// Counterexample on fail, reason on skip.
  std::string witness;
  long long cases = 0;
  double seconds = 0.0;
};

struct CheckOptions {
  /// Largest mount or root set tried by the root-set checks.
  int mount_cap = 3;
  /// Evaluate fact1-sign with ν(T) − ν(T Δ {x,y}).
  bool literal_fact1 = false;
  /// Vertex cap for simple-path and negative-set enumeration.
  int path_vertex_cap = 12;
  /// Vertex cap for round ear path enumeration.
  int ear_vertex_cap = 10;
};

/// Every check id in registry order.
const std::vector<std::string>& registry();
bool is_registered(const std::string& id);

CheckReport run_check(const Graft& gt, const std::string& check_id, const CheckOptions& options = {});
/// Shares the per-instance computations across checks.
std::vector<CheckReport> run_checks(const Graft& gt, const std::vector<std::string>& check_ids,
                                    const CheckOptions& options = {});

struct CheckSummary {
  std::string check_id;
  long long pass = 0;
  long long fail = 0;
  long long skipped = 0;
  long long cases = 0;
  std::optional<CheckReport> first_failure;
  /// First skip reason seen, for orientation.
  std::string skip_reason;
  double seconds = 0.0;
};

struct SuiteSummary {
  long long instances = 0;
  std::vector<CheckSummary> checks;
  double seconds = 0.0;

  bool any_fail() const;
  const CheckSummary* find(const std::string& check_id) const;
  /// Deterministic unless `timing` is set.
  std::string to_text(bool timing = false) const;
  std::string to_json(bool timing = false) const;
};

/// Runs every listed check on every generated instance. Instances are split
/// into batches processed by `threads` workers; results merge in instance
/// order. Throws InvalidArgument on an unknown check id.
SuiteSummary run_suite(const InstanceSpec& spec, const std::vector<std::string>& check_ids,
                       const CheckOptions& options = {}, int threads = 1);

struct CapitalStep {
  int index = 0;
  VertexSet k;
  VertexSet neighbors;
  VertexSet l;
  /// A/D of the root set N(K).
  Trisection neighbor_trisection;
  InitialStructure structure;
};

/// For each i from 0 to the maximum level − 1: K = capital component at i,
/// L = capital component at i + 1, and the structure of N(K). Throws
/// NotBipartite, StructureViolation.
std::vector<CapitalStep> capital_chain(const DecompositionAtlas& atlas, Vertex root);
std::vector<CapitalStep> capital_chain(const Graft& gt, Vertex root);

}  // namespace tjoin::harness
