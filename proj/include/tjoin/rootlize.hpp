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

#include <string>
#include <vector>

#include "tjoin/decomposition.hpp"
#include "tjoin/distance.hpp"
#include "tjoin/join.hpp"

namespace tjoin {

/// The graft extended by a root r and an attachment s with edges rs and sx
/// for every x in the mount; r and s become terminals. Base vertex and edge
/// ids are kept; r = n, s = n + 1, rs = m, and the mount edges follow in
/// increasing order of x.
struct Rootlization {
  Graft base;
  VertexSet mount;
  Graft extended;
  Vertex root = 0;
  Vertex attachment = 0;
  EdgeId root_edge = 0;

  EdgeSet base_edges() const { return base.graph().all_edges(); }
  EdgeSet mount_edges() const { return extended.graph().all_edges() - base_edges() - EdgeSet::single(root_edge); }
  EdgeSet lift(const EdgeSet& base_join) const { return base_join | EdgeSet::single(root_edge); }
};

/// Throws InvalidArgument on an empty mount, SizeCap when the extension would
/// exceed the vertex cap, NotExtreme when the mount is not extreme.
Rootlization rootlize(const Graft& gt, VertexSet mount);
Rootlization rootlize(const DecompositionAtlas& atlas, VertexSet mount);

/// A rootlization together with the decomposition of its extension.
struct ExtendedAtlas {
  Rootlization rootlization;
  DecompositionAtlas atlas;
};

/// Throws as rootlize.
ExtendedAtlas extend_atlas(const DecompositionAtlas& base, VertexSet mount);

struct ExtendedJoinReport {
  int base_nu = 0;
  int extended_nu = 0;
  std::vector<EdgeSet> base_joins;
  std::vector<EdgeSet> extended_joins;
};

/// Brute-forces both grafts and confirms that the minimum joins of the
/// extension are exactly the lifted minimum joins of the base. Throws
/// StructureViolation otherwise.
ExtendedJoinReport extended_min_joins(const Rootlization& rl);

struct RootSetProfile {
  DistanceProfile distances;
  Trisection trisection;
};

/// dist(R, ·) with its initial subgraph and A/D/C split, cross-checked against
/// the single-root profile of the rootlization. Throws NotExtreme,
/// NonConservative, StructureViolation.
RootSetProfile root_set_profile(const Graft& gt, const Weighting& w, VertexSet roots);

/// Requires bipartite, extreme, and roots within one colour class. Throws
/// NotBipartite, NotExtreme, NotHomogeneous, StructureViolation.
InitialStructure homogeneous_structure(const DecompositionAtlas& atlas, VertexSet roots);
InitialStructure homogeneous_structure(const Graft& gt, VertexSet roots);
InitialStructure homogeneous_structure(const DecompositionAtlas& atlas, const ExtendedAtlas& ext);

struct HeterogeneousStructure {
  InitialStructure whole;
  VertexSet roots_a;
  VertexSet roots_b;
  /// Trisections for roots ∩ A and roots ∩ B; all-empty when that side has no roots.
  Trisection part_a;
  Trisection part_b;
};

/// Roots may meet both colour classes. Checks A_R = A_{R∩A} ∪̇ A_{R∩B}, the
/// same for D, extremeness of A_{R∩A} ∪ A_{R∩B}, then resolves A_R into KL
/// classes. Throws as homogeneous_structure.
HeterogeneousStructure heterogeneous_structure(const DecompositionAtlas& atlas, VertexSet roots);
HeterogeneousStructure heterogeneous_structure(const Graft& gt, VertexSet roots);

struct LemmaVerdict {
  std::string lemma;
  bool pass = true;
  std::string witness;
};

struct LemmaReport {
  std::vector<LemmaVerdict> verdicts;

  bool all_pass() const;
  /// Throws StructureViolation naming the first failing lemma.
  void require_all() const;
};

/// ad2include, ad2union and icomp2disjoint for one root of a bipartite graft.
/// Unions range over x ∈ A for both A and D.
LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, Vertex root);
/// rootad2include, rootad2union, dist2s and ar2disjoint for a homogeneous
/// extreme mount. Throws NotBipartite, NotHomogeneous, NotExtreme.
LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, VertexSet mount);
LemmaReport monotonicity_checks(const DecompositionAtlas& atlas, const ExtendedAtlas& ext);

/// bi2ext, heteroad2disjoint and hetero for an extreme root set, each as a
/// separate verdict. Throws NotBipartite, NotExtreme.
LemmaReport heterogeneous_checks(const DecompositionAtlas& atlas, VertexSet roots);

/// Claims relating a graft to its rootlization with F̂ = F ∪ {rs}:
/// extend-dist, extend-path, extend2sim, layers, initreduc, mount-unallowed.
/// Throws NotExtreme.
LemmaReport rootlization_checks(const DecompositionAtlas& atlas, VertexSet mount);
LemmaReport rootlization_checks(const DecompositionAtlas& atlas, const ExtendedAtlas& ext);

}  // namespace tjoin
