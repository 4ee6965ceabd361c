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

#include "tjoin/bitset.hpp"
#include "tjoin/distance.hpp"
#include "tjoin/graph.hpp"
#include "tjoin/join.hpp"

namespace tjoin {

/// Equivalence classes of u ∼ v: same factor-component and distance 0.
struct KLPartition {
  /// Ordered by minimum vertex.
  std::vector<VertexSet> classes;

  int class_index(Vertex v) const;
  const VertexSet& class_of(Vertex v) const { return classes[static_cast<std::size_t>(class_index(v))]; }
  bool contains_class(VertexSet s) const;
};

/// Each class is grown from its minimum unassigned vertex by direct relation
/// to that vertex only; transitivity is checked separately by the harness.
KLPartition kl_classes_from(const std::vector<VertexSet>& factor_components,
                            const std::vector<int>& dist, int vertex_count);
KLPartition kl_classes(const Graft& gt);

/// True iff `parts` are pairwise disjoint and cover `whole`.
bool is_partition_of(const std::vector<VertexSet>& parts, VertexSet whole);

inline constexpr int kNegativeSetVertexCap = 12;

/// Maximum X ⊆ V ∖ S such that every x ∈ X reaches S by a path of negative
/// F-weight whose vertices other than its end in S lie in X. Computed as a
/// greatest fixpoint with exhaustive path search. Throws SizeCap above 12
/// vertices.
VertexSet negative_set_bruteforce(const Graft& gt, const Weighting& w, VertexSet s);

/// Everything derived from a graft that the decomposition needs, computed
/// once: ν, the canonical minimum join, allowed edges, factor-components,
/// all-pairs distances and the KL partition.
class DecompositionAtlas {
 public:
  explicit DecompositionAtlas(Graft gt);

  const Graft& graft() const { return gt_; }
  const Multigraph& graph() const { return gt_.graph(); }
  int nu() const { return shifts_.nu(); }
  const EdgeSet& min_join() const { return min_join_; }
  const EdgeSet& allowed() const { return allowed_; }
  const std::vector<VertexSet>& factor_components() const { return factor_components_; }
  const ShiftJoins& shifts() const { return shifts_; }
  const DistanceTable& distances() const { return table_; }
  int dist(Vertex u, Vertex v) const { return table_(u, v); }
  const KLPartition& kl() const { return kl_; }

  DistanceProfile profile(Vertex root) const { return tjoin::profile(table_, root); }
  Trisection trisection(Vertex root) const;
  Trisection root_set_trisection(VertexSet roots) const;

  /// Components of G[D_root] joined to s by an allowed edge.
  std::vector<VertexSet> neicomp(Vertex root, VertexSet s) const;
  /// Union of neicomp(r, s) for r = min(s).
  VertexSet critical_set(VertexSet s) const;

 private:
  Graft gt_;
  ShiftJoins shifts_;
  EdgeSet min_join_;
  EdgeSet allowed_;
  std::vector<VertexSet> factor_components_;
  DistanceTable table_;
  KLPartition kl_;
};

VertexSet critical_set(const Graft& gt, VertexSet s);
std::vector<VertexSet> neicomp(const Graft& gt, Vertex root, VertexSet s);

struct ClassBlock {
  VertexSet klass;
  VertexSet critical;
  std::vector<VertexSet> critical_components;
};

/// The initial part of a root (or root set) resolved into KL classes and
/// their critical sets.
struct InitialStructure {
  VertexSet roots;
  Trisection trisection;
  std::vector<ClassBlock> blocks;
};

/// Resolves `t` (the trisection for `roots`) into classes S_1..S_k covering
/// A, critical sets covering D, and components of G[D] split among the
/// critical sets. Throws StructureViolation when any cover or disjointness
/// fails.
InitialStructure resolve_initial(const DecompositionAtlas& atlas, VertexSet roots,
                                 const Trisection& t);

/// Requires a bipartite graft. Throws NotBipartite, StructureViolation.
InitialStructure icomp_structure(const DecompositionAtlas& atlas, Vertex root);
InitialStructure icomp_structure(const Graft& gt, Vertex root);

}  // namespace tjoin
