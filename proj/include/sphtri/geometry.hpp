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

// Explicit spherical triangles for every admissible angle triple.
//
// A triangle is stored as three corners on the unit sphere together with the
// great circles carrying its sides. Integer data that a developing map forgets
// (how many times a side winds around its circle, which integer part an angle
// has) is carried symbolically; every real number reported by measure_angles
// and measure_sides is recomputed from the geometry.
//
// Placement: B = (1,0,0), side a on the equator traversed counterclockwise as
// seen from +z. Attaching hemispheres keeps the corners where they are.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphtri/lattice.hpp"
#include "sphtri/strata.hpp"

namespace sphtri {

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  bool operator==(const Vec3&) const = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(double s, const Vec3& a);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);

/// Side carried by the great circle with unit normal `normal`, traversed
/// counterclockwise about it. Total length is 2 * winding + frac_length with
/// frac_length in (0, 2]; the closed end only occurs for sides of exactly
/// even length, whose two ends coincide.
struct SideArc {
  Vec3 normal;
  double frac_length = 0;
  int winding = 0;

  double length() const { return 2.0 * winding + frac_length; }
  bool is_short() const { return winding == 0 && frac_length < 2.0; }
};

struct TriangleRecord {
  std::array<Vec3, 3> corners;  // A, B, C; boundary A -> B -> C is positive
  std::array<SideArc, 3> sides;  // a = BC, b = CA, c = AB
  Int3 angle_floor{0, 0, 0};     // integer parts of the angles
  Int3 attachments{0, 0, 0};     // hemispheres (p, q, r) glued to a, b, c
  Stratum stratum;
  int dev_degree = 1;
};

/// Edge strata: one value, the fractional part of the side opposite the
/// first (in A, B, C order) non-integer corner. Vertex strata: the lengths of
/// sides a and b of the final triangle. Interior strata: empty.
using FamilyParams = std::vector<double>;

enum class SubChart { UA, UB, UC };

/// Forces a particular route through construct(); used to check that
/// different charts agree. Unset fields use the default choice.
struct ConstructOptions {
  std::optional<LatticeVertex> vertex;  // balanced vertex of the U chart
  std::optional<SubChart> subchart;     // chart for the base triangle
  double eps = kDefaultEps;             // tolerance passed to classify()
};

/// Classical triangle with all angles in (0,1) and A+B+C > 1 satisfying the
/// existence inequality. Throws Error(OutOfRegion) otherwise.
TriangleRecord solve_primitive(const AngleTriple& t);

/// Throws Error(NotRealizable) outside X, Error(ParamOutOfRange) for params
/// of the wrong count or outside the admissible range, and whatever
/// classify() throws.
TriangleRecord construct(const AngleTriple& t, const FamilyParams& params = {},
                         const ConstructOptions& options = {});

/// Glues dp, dq, dr further hemispheres to sides a, b, c.
/// Throws Error(LongSideAttachment) if a receiving side has length >= 2.
TriangleRecord attach(const TriangleRecord& rec, int dp, int dq, int dr);

/// Reflected complement; angles (2-A, 2-B, 2-C), same sides. Defined for
/// triangles of the eight tetrahedra in (0,2)^3; Error(OutOfDomain) otherwise.
TriangleRecord complement_tau(const TriangleRecord& rec);

/// Throws Error(DegenerateCorner) when a side has (near) zero length.
AngleTriple measure_angles(const TriangleRecord& rec);
std::array<double, 3> measure_sides(const TriangleRecord& rec);
std::array<double, 6> embed_r6(const TriangleRecord& rec);

/// Family parameters of rec in the convention of construct().
FamilyParams family_params(const TriangleRecord& rec);

struct ChartCoordinates {
  enum class Kind { Short, Sequence };
  Kind kind = Kind::Short;
  LatticeVertex vertex;            // Short: balanced vertex (m,n,k)
  SubChart subchart = SubChart::UA;  // Short
  std::optional<EdgeRef> seed;     // Sequence
  double arc_length = 0;           // Short: base side along the equator
  Vec3 apex;                       // apex in the chart's own placement
  double total_angle = 0;          // Sequence: base angle at the apex
};

/// Throws Error(ChartUndefined) when the apex falls on the excluded arc of
/// the equator.
ChartCoordinates chart_coordinates(const TriangleRecord& rec);

std::string to_string(SubChart c);

/// Record serialization; reals use 17 significant digits.
std::string record_to_json(const TriangleRecord& rec);
/// Throws Error(BadInput) on malformed input.
TriangleRecord record_from_json(const std::string& text);

}  // namespace sphtri
