// Copyright 2026 The sphtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Combinatorics of the stratification: inventories, adjacency at vertices,
// sequences of unbalanced strata, balanced parts of semi-balanced tetrahedra
// and the cubic 1-skeleton that carries the homotopy type of the space of
// triangles.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sphtri/lattice.hpp"

namespace sphtri {

struct InventoryVertex {
  LatticeVertex vertex;
  BalanceClass balance;
};

struct InventoryEdge {
  EdgeRef edge;
  bool in_x1 = false;
  BalanceClass balance;
};

struct InventoryTetra {
  TetraIndex tetra;
  BalanceClass balance;
  std::vector<EdgeRef> x1_edges;
};

/// Vertices and edges are clipped to [0, box]^3; tetrahedra are the
/// T_{m,n,k} with index in [0, box]^3, and each lists all of its X_1 edges.
struct StrataInventory {
  int box = 0;
  std::vector<InventoryVertex> vertices;
  std::vector<InventoryEdge> edges;
  std::vector<InventoryTetra> tetrahedra;
};

StrataInventory enumerate(int box);

/// Edges of X_1 at v whose open interior lies in the open first octant,
/// sorted. Six for a balanced vertex, four (dominant angle constant) for an
/// unbalanced one.
std::vector<EdgeRef> edges_at_vertex(const LatticeVertex& v);

/// The chain nabla_0, L_1, nabla_1, L_2, ... hanging off a semi-balanced
/// X_1 edge L_0. The chain is infinite; members are computed on demand.
class UnbalancedSequence {
 public:
  /// Throws Error(NotSemiBalanced) unless seed is a semi-balanced X_1 edge.
  explicit UnbalancedSequence(const EdgeRef& seed);

  const EdgeRef& seed() const { return seed_; }
  const LatticeVertex& balanced_end() const { return balanced_; }
  const LatticeVertex& marginal_end() const { return marginal_; }
  /// Axis whose angle stays constant along the edges of the chain.
  int axis() const { return axis_; }

  /// nabla_j for j >= 0.
  TetraIndex tetra(int j) const;
  /// L_j for j >= 0; L_0 is the seed.
  EdgeRef edge(int j) const;

  using Item = std::variant<TetraIndex, EdgeRef>;
  /// nabla_0, L_1, nabla_1, ..., L_horizon, nabla_horizon.
  std::vector<Item> items(int horizon) const;

 private:
  EdgeRef seed_;
  LatticeVertex balanced_;
  LatticeVertex marginal_;
  int axis_ = 0;
};

UnbalancedSequence sequence_from_seed(const EdgeRef& seed);

struct SequencePosition {
  EdgeRef seed;
  int j = 0;
  bool operator==(const SequencePosition&) const = default;
};

/// Seed and position of an unbalanced tetrahedron or X_1 edge (j >= 1), of a
/// semi-balanced X_1 edge (itself, j = 0) or of a not pointed semi-balanced
/// tetrahedron (j = 0). Empty for everything else.
std::optional<SequencePosition> sequence_of(const TetraIndex& t);
std::optional<SequencePosition> sequence_of(const EdgeRef& e);
std::optional<SequencePosition> sequence_of(const Stratum& s);

/// Closure of the set of balanced points of a tetrahedron, T ∩ K, as its
/// vertex list. Coordinates are stored doubled (all vertices are
/// half-integral). Empty when T has no balanced interior points.
struct BalancedPolytope {
  TetraIndex tetra;
  std::vector<Int3> doubled_vertices;
};

BalancedPolytope balanced_subpolytope(const TetraIndex& idx);

enum class Labeling { Pqr, Mnk };

struct SkeletonGraph {
  std::vector<Int3> nodes;                // sorted lexicographically
  std::vector<std::pair<int, int>> arcs;  // first < second, sorted
  Labeling labeling = Labeling::Pqr;

  bool operator==(const SkeletonGraph&) const = default;
};

/// Cubic 1-skeleton on [0,n]^3 in (p,q,r) coordinates.
SkeletonGraph lambda1_graph(int n);

/// Balanced vertices with coordinates <= box and the balanced X_1 edges
/// between them, in (m,n,k) coordinates.
SkeletonGraph balanced_graph(int box);

/// Maps every node through pqr_from_vertex. Throws on unbalanced nodes.
SkeletonGraph relabel_to_pqr(const SkeletonGraph& g);

/// Subgraph of g induced on the given node set (missing nodes are ignored).
SkeletonGraph induced_subgraph(const SkeletonGraph& g, const std::vector<Int3>& nodes);

/// Checks that balanced_graph(box), relabeled, coincides with the induced
/// subgraph of the cubic skeleton on its image.
bool check_lambda1_isomorphism(int box);

enum class GraphFormat { Dot, Json };

std::string export_graph(const SkeletonGraph& g, GraphFormat format);
/// Inverse of export_graph(g, Json). Throws Error(BadInput) on malformed text.
SkeletonGraph parse_graph_json(const std::string& text);

/// Deterministic JSON dump of an inventory, with per-class counts.
std::string inventory_to_json(const StrataInventory& inv);

}  // namespace sphtri
