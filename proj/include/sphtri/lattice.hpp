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

// Angle triples of spherical triangles and the tetrahedral stratification of
// the set X of admissible triples.
//
// Angles are measured in half-turns (pi radians == 1). X is the union of open
// tetrahedra T_{m,n,k} (one per unit cube of the first octant), some of their
// open edges and some of their vertices. All lattice bookkeeping below is
// exact integer arithmetic; only cond1/cond2 and classify() of floating
// triples use floating point.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sphtri {

inline constexpr double kDefaultEps = 1e-9;

using Int3 = std::array<int, 3>;

struct AngleTriple {
  double A = 0;
  double B = 0;
  double C = 0;

  double operator[](int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  double& operator[](int i) { return i == 0 ? A : (i == 1 ? B : C); }
  bool operator==(const AngleTriple&) const = default;
};

/// Integer point with odd coordinate sum.
class LatticeVertex {
 public:
  LatticeVertex() : v_{1, 0, 0} {}
  /// Throws Error(BadInput) if the coordinate sum is even.
  explicit LatticeVertex(const Int3& v);
  LatticeVertex(int m, int n, int k) : LatticeVertex(Int3{m, n, k}) {}

  const Int3& coords() const { return v_; }
  int operator[](int i) const { return v_[i]; }
  int sum() const { return v_[0] + v_[1] + v_[2]; }

  auto operator<=>(const LatticeVertex&) const = default;

 private:
  Int3 v_;
};

/// Index of the unit cube Q_{m,n,k}, and of the tetrahedron T_{m,n,k} in it.
struct TetraIndex {
  Int3 idx{0, 0, 0};

  int operator[](int i) const { return idx[i]; }
  auto operator<=>(const TetraIndex&) const = default;
};

enum class EdgeType { FirstType, SecondType };

/// Edge of the tetrahedral partition. Endpoints are stored in lexicographic
/// order so that equal edges compare equal.
class EdgeRef {
 public:
  /// Throws Error(BadInput) unless u and v differ by +-1 in exactly two
  /// coordinates (the only way two vertices share a tetrahedron).
  static EdgeRef between(const LatticeVertex& u, const LatticeVertex& v);

  const LatticeVertex& first() const { return ends_[0]; }
  const LatticeVertex& second() const { return ends_[1]; }
  const LatticeVertex& end(int i) const { return ends_[i]; }

  EdgeType type() const;
  /// Twice the midpoint; exactly one coordinate is even.
  Int3 doubled_midpoint() const;
  bool contains(const LatticeVertex& v) const { return v == ends_[0] || v == ends_[1]; }
  /// The endpoint that is not v (v must be an endpoint).
  const LatticeVertex& other(const LatticeVertex& v) const;

  auto operator<=>(const EdgeRef&) const = default;

 private:
  EdgeRef(const LatticeVertex& a, const LatticeVertex& b) : ends_{a, b} {}
  std::array<LatticeVertex, 2> ends_;
};

enum class Balance { Balanced, SemiBalanced, Unbalanced };

struct BalanceClass {
  Balance balance = Balance::Balanced;
  bool marginal = false;  // lattice vertices only
  bool pointed = false;   // tetrahedra only

  bool operator==(const BalanceClass&) const = default;
};

struct NotInX {
  bool operator==(const NotInX&) const = default;
};
struct InteriorStratum {
  TetraIndex tetra;
  bool operator==(const InteriorStratum&) const = default;
};
struct EdgeStratum {
  EdgeRef edge;
  double position = 0.5;  // point = first + position * (second - first)
  bool operator==(const EdgeStratum&) const = default;
};
struct VertexStratum {
  LatticeVertex vertex;
  bool operator==(const VertexStratum&) const = default;
};

struct Stratum {
  std::variant<NotInX, InteriorStratum, EdgeStratum, VertexStratum> kind;

  bool in_x() const { return !std::holds_alternative<NotInX>(kind); }
  /// Number of free side parameters: 0 interior, 1 edge, 2 vertex.
  /// Meaningless (returns -1) outside X.
  int family_dimension() const;

  template <class T>
  bool is() const { return std::holds_alternative<T>(kind); }
  template <class T>
  const T& as() const { return std::get<T>(kind); }

  bool operator==(const Stratum&) const = default;
};

std::string to_string(const Int3& v);
std::string to_string(const LatticeVertex& v);
std::string to_string(const EdgeRef& e);
std::string to_string(Balance b);
std::string to_string(const Stratum& s);

// ---------------------------------------------------------------------------
// Existence criteria

/// cos^2 pi A + cos^2 pi B + cos^2 pi C + 2 cos pi A cos pi B cos pi C - 1.
/// Negative exactly when a triangle with non-integer angles (A,B,C) exists.
double cond1_value(const AngleTriple& t);

/// Product form of the same criterion:
/// cos pi(A+B+C)/2 * cos pi(A+B-C)/2 * cos pi(A-B+C)/2 * cos pi(-A+B+C)/2.
double cond2_value(const AngleTriple& t);

struct EvenLatticeDistance {
  double distance = 0;
  Int3 point{0, 0, 0};  // a nearest point with even coordinate sum
};

/// L1 distance from t to the lattice of integer points with even sum.
EvenLatticeDistance d1_to_even_lattice(const AngleTriple& t);

/// Exact variant for a rational point numerators/den (den > 0). Returns the
/// distance numerator over the same denominator.
struct ExactEvenLatticeDistance {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  Int3 point{0, 0, 0};
};
ExactEvenLatticeDistance d1_to_even_lattice_exact(const Int3& numerators, int den);

// ---------------------------------------------------------------------------
// Stratification

/// Locates t in the stratification. Entries within eps of an integer are
/// treated as integers.
/// Throws Error(InvalidAngle) for a non-positive entry and
/// Error(BoundaryIndeterminate) when t lies within eps of a stratum boundary.
Stratum classify(const AngleTriple& t, double eps = kDefaultEps);

/// Vertices of T_{m,n,k}; the parity of m+n+k selects which diagonal
/// tetrahedron of the cube it is.
std::array<LatticeVertex, 4> tetra_vertices(const TetraIndex& idx);

/// The six edges of T_{m,n,k}.
std::array<EdgeRef, 6> tetra_edges(const TetraIndex& idx);

/// Tetrahedra with nonnegative index having e as an edge (one or two).
std::vector<TetraIndex> tetras_adjacent_to_edge(const EdgeRef& e);

/// The tetrahedron of the cube Q_{floor(t)} if t lies strictly inside it.
/// Throws Error(DegenerateOnFace) within eps of its boundary.
std::optional<TetraIndex> tetra_containing(const AngleTriple& t, double eps = kDefaultEps);

// ---------------------------------------------------------------------------
// Balance

/// Closed triangle inequalities A <= B+C, B <= A+C, C <= A+B.
bool is_balanced(const Int3& v);
bool is_balanced(const AngleTriple& t);

/// Balanced or Unbalanced.
BalanceClass balance_class_point(const AngleTriple& t);
BalanceClass vertex_balance(const LatticeVertex& v);
BalanceClass edge_balance(const EdgeRef& e);
BalanceClass tetra_balance(const TetraIndex& idx);
/// Throws Error(BadInput) for NotInX.
BalanceClass stratum_balance(const Stratum& s);

/// Index (0,1,2) of the strictly largest coordinate of an unbalanced vertex.
int dominant_axis(const Int3& v);

// ---------------------------------------------------------------------------
// Balanced vertices <-> first octant of (p,q,r) space

/// Solves q+r = m-1, p+r = n-1, p+q = k-1; empty when the solution has a
/// negative entry.
std::optional<Int3> pqr_from_vertex(const LatticeVertex& v);
LatticeVertex vertex_from_pqr(const Int3& pqr);

// ---------------------------------------------------------------------------
// Which edges lie in X_1

enum class EdgeTest { Structural, Analytic };

/// Structural uses the adjacency rules at balanced / unbalanced vertices;
/// Analytic classifies the edge midpoint. Both must agree.
bool edge_in_x1(const EdgeRef& e, EdgeTest via = EdgeTest::Structural);

/// Structural rule evaluated from the point of view of one endpoint.
bool edge_in_x1_structural_at(const EdgeRef& e, int endpoint);

}  // namespace sphtri
