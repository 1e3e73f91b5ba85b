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

#include "sphtri/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "sphtri/error.hpp"

namespace sphtri {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidAngle: return "InvalidAngle";
    case ErrorCode::BoundaryIndeterminate: return "BoundaryIndeterminate";
    case ErrorCode::DegenerateOnFace: return "DegenerateOnFace";
    case ErrorCode::NotSemiBalanced: return "NotSemiBalanced";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::RootFindFailure: return "RootFindFailure";
    case ErrorCode::LongSideAttachment: return "LongSideAttachment";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegenerateCorner: return "DegenerateCorner";
    case ErrorCode::ChartUndefined: return "ChartUndefined";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

bool is_odd(int x) { return (x % 2 + 2) % 2 == 1; }

int floor_int(double x) { return static_cast<int>(std::floor(x)); }

}  // namespace

LatticeVertex::LatticeVertex(const Int3& v) : v_(v) {
  if (!is_odd(v[0] + v[1] + v[2])) {
    throw Error(ErrorCode::BadInput, "lattice vertex " + to_string(v) + " has even sum");
  }
}

EdgeRef EdgeRef::between(const LatticeVertex& u, const LatticeVertex& v) {
  int changed = 0;
  for (int i = 0; i < 3; ++i) {
    int d = std::abs(u[i] - v[i]);
    if (d > 1) changed = 99;
    changed += d;
  }
  if (changed != 2) {
    throw Error(ErrorCode::BadInput,
                "not a tetrahedron edge: " + to_string(u) + " " + to_string(v));
  }
  return u < v ? EdgeRef(u, v) : EdgeRef(v, u);
}

EdgeType EdgeRef::type() const {
  return ends_[0].sum() == ends_[1].sum() ? EdgeType::FirstType : EdgeType::SecondType;
}

Int3 EdgeRef::doubled_midpoint() const {
  return {ends_[0][0] + ends_[1][0], ends_[0][1] + ends_[1][1], ends_[0][2] + ends_[1][2]};
}

const LatticeVertex& EdgeRef::other(const LatticeVertex& v) const {
  return v == ends_[0] ? ends_[1] : ends_[0];
}

int Stratum::family_dimension() const {
  if (is<InteriorStratum>()) return 0;
  if (is<EdgeStratum>()) return 1;
  if (is<VertexStratum>()) return 2;
  return -1;
}

std::string to_string(const Int3& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
         std::to_string(v[2]) + ")";
}

std::string to_string(const LatticeVertex& v) { return to_string(v.coords()); }

std::string to_string(const EdgeRef& e) {
  return "(" + to_string(e.first()) + "," + to_string(e.second()) + ")";
}

std::string to_string(Balance b) {
  switch (b) {
    case Balance::Balanced: return "balanced";
    case Balance::SemiBalanced: return "semi-balanced";
    case Balance::Unbalanced: return "unbalanced";
  }
  return "?";
}

std::string to_string(const Stratum& s) {
  if (s.is<InteriorStratum>()) return "interior T" + to_string(s.as<InteriorStratum>().tetra.idx);
  if (s.is<EdgeStratum>()) return "edge " + to_string(s.as<EdgeStratum>().edge);
  if (s.is<VertexStratum>()) return "vertex " + to_string(s.as<VertexStratum>().vertex);
  return "not-in-X";
}

// ---------------------------------------------------------------------------

double cond1_value(const AngleTriple& t) {
  const double ca = std::cos(std::numbers::pi * t.A);
  const double cb = std::cos(std::numbers::pi * t.B);
  const double cc = std::cos(std::numbers::pi * t.C);
  return ca * ca + cb * cb + cc * cc + 2 * ca * cb * cc - 1;
}

double cond2_value(const AngleTriple& t) {
  const double h = std::numbers::pi / 2;
  return std::cos(h * (t.A + t.B + t.C)) * std::cos(h * (t.A + t.B - t.C)) *
         std::cos(h * (t.A - t.B + t.C)) * std::cos(h * (-t.A + t.B + t.C));
}

// The nearest even-sum point is within L1 distance 3/2 of any point, so a
// window of +-2 around the floor is complete.
EvenLatticeDistance d1_to_even_lattice(const AngleTriple& t) {
  EvenLatticeDistance best{std::numeric_limits<double>::infinity(), {0, 0, 0}};
  const Int3 base{floor_int(t.A), floor_int(t.B), floor_int(t.C)};
  for (int i = -2; i <= 3; ++i)
    for (int j = -2; j <= 3; ++j)
      for (int k = -2; k <= 3; ++k) {
        const Int3 p{base[0] + i, base[1] + j, base[2] + k};
        if (is_odd(p[0] + p[1] + p[2])) continue;
        const double d = std::abs(t.A - p[0]) + std::abs(t.B - p[1]) + std::abs(t.C - p[2]);
        if (d < best.distance) best = {d, p};
      }
  return best;
}

ExactEvenLatticeDistance d1_to_even_lattice_exact(const Int3& num, int den) {
  if (den <= 0) throw Error(ErrorCode::BadInput, "denominator must be positive");
  auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const Int3 base{floor_div(num[0], den), floor_div(num[1], den), floor_div(num[2], den)};
  ExactEvenLatticeDistance best{std::numeric_limits<std::int64_t>::max(), den, {0, 0, 0}};
  for (int i = -2; i <= 3; ++i)
    for (int j = -2; j <= 3; ++j)
      for (int k = -2; k <= 3; ++k) {
        const Int3 p{base[0] + i, base[1] + j, base[2] + k};
        if (is_odd(p[0] + p[1] + p[2])) continue;
        std::int64_t d = 0;
        for (int c = 0; c < 3; ++c) {
          d += std::llabs(static_cast<std::int64_t>(num[c]) -
                          static_cast<std::int64_t>(p[c]) * den);
        }
        if (d < best.numerator) best = {d, den, p};
      }
  return best;
}

// ---------------------------------------------------------------------------

std::array<LatticeVertex, 4> tetra_vertices(const TetraIndex& t) {
  const int m = t[0], n = t[1], k = t[2];
  if (!is_odd(m + n + k)) {
    return {LatticeVertex{m + 1, n, k}, LatticeVertex{m, n + 1, k}, LatticeVertex{m, n, k + 1},
            LatticeVertex{m + 1, n + 1, k + 1}};
  }
  return {LatticeVertex{m, n + 1, k + 1}, LatticeVertex{m + 1, n, k + 1},
          LatticeVertex{m + 1, n + 1, k}, LatticeVertex{m, n, k}};
}

std::array<EdgeRef, 6> tetra_edges(const TetraIndex& idx) {
  const auto v = tetra_vertices(idx);
  return {EdgeRef::between(v[0], v[1]), EdgeRef::between(v[0], v[2]),
          EdgeRef::between(v[0], v[3]), EdgeRef::between(v[1], v[2]),
          EdgeRef::between(v[1], v[3]), EdgeRef::between(v[2], v[3])};
}

std::vector<TetraIndex> tetras_adjacent_to_edge(const EdgeRef& e) {
  const auto& u = e.first();
  const auto& v = e.second();
  int fixed = 0;
  while (u[fixed] != v[fixed]) ++fixed;
  Int3 base{};
  for (int i = 0; i < 3; ++i) base[i] = std::min(u[i], v[i]);
  std::vector<TetraIndex> out;
  for (int shift : {-1, 0}) {
    TetraIndex t{base};
    t.idx[fixed] += shift;
    if (t[fixed] < 0) continue;
    out.push_back(t);
  }
  return out;
}

std::optional<TetraIndex> tetra_containing(const AngleTriple& t, double eps) {
  const TetraIndex idx{{floor_int(t.A), floor_int(t.B), floor_int(t.C)}};
  double x = t.A - idx[0], y = t.B - idx[1], z = t.C - idx[2];
  if (is_odd(idx[0] + idx[1] + idx[2])) {
    x = 1 - x;
    y = 1 - y;
    z = 1 - z;
  }
  // Facet functions of T_0 = conv{(1,0,0),(0,1,0),(0,0,1),(1,1,1)}; all
  // positive exactly in the open tetrahedron.
  const double margin = std::min({x + y + z - 1, 1 + x - y - z, 1 - x + y - z, 1 - x - y + z});
  if (std::abs(margin) <= eps) {
    throw Error(ErrorCode::DegenerateOnFace, "point within tolerance of a facet of T" +
                                                 to_string(idx.idx));
  }
  if (margin < 0) return std::nullopt;
  return idx;
}

// ---------------------------------------------------------------------------

bool is_balanced(const Int3& v) {
  return v[0] <= v[1] + v[2] && v[1] <= v[0] + v[2] && v[2] <= v[0] + v[1];
}

bool is_balanced(const AngleTriple& t) {
  return t.A <= t.B + t.C && t.B <= t.A + t.C && t.C <= t.A + t.B;
}

BalanceClass balance_class_point(const AngleTriple& t) {
  return {is_balanced(t) ? Balance::Balanced : Balance::Unbalanced, false, false};
}

BalanceClass vertex_balance(const LatticeVertex& v) {
  const int m = v[0], n = v[1], k = v[2];
  const int hits = (m - 1 == n + k) + (n - 1 == m + k) + (k - 1 == m + n);
  return {is_balanced(v.coords()) ? Balance::Balanced : Balance::Unbalanced, hits == 1, false};
}

namespace {

Balance combine(int balanced, int total) {
  if (balanced == total) return Balance::Balanced;
  if (balanced == 0) return Balance::Unbalanced;
  return Balance::SemiBalanced;
}

}  // namespace

BalanceClass edge_balance(const EdgeRef& e) {
  const int b = is_balanced(e.first().coords()) + is_balanced(e.second().coords());
  return {combine(b, 2), false, false};
}

BalanceClass tetra_balance(const TetraIndex& idx) {
  const auto verts = tetra_vertices(idx);
  const auto edges = tetra_edges(idx);
  int balanced = 0;
  bool pointed = false;
  for (const auto& v : verts) {
    if (!is_balanced(v.coords())) continue;
    ++balanced;
    int in_x1 = 0;
    for (const auto& e : edges) in_x1 += e.contains(v) && edge_in_x1(e);
    pointed = pointed || in_x1 == 3;
  }
  return {combine(balanced, 4), false, pointed};
}

BalanceClass stratum_balance(const Stratum& s) {
  if (s.is<InteriorStratum>()) return tetra_balance(s.as<InteriorStratum>().tetra);
  if (s.is<EdgeStratum>()) return edge_balance(s.as<EdgeStratum>().edge);
  if (s.is<VertexStratum>()) return vertex_balance(s.as<VertexStratum>().vertex);
  throw Error(ErrorCode::BadInput, "stratum_balance of a point outside X");
}

int dominant_axis(const Int3& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

// ---------------------------------------------------------------------------

std::optional<Int3> pqr_from_vertex(const LatticeVertex& v) {
  const int m = v[0], n = v[1], k = v[2];
  // m+n+k is odd, so every numerator below is even.
  const Int3 pqr{(n + k - m - 1) / 2, (m + k - n - 1) / 2, (m + n - k - 1) / 2};
  if (pqr[0] < 0 || pqr[1] < 0 || pqr[2] < 0) return std::nullopt;
  return pqr;
}

LatticeVertex vertex_from_pqr(const Int3& pqr) {
  if (pqr[0] < 0 || pqr[1] < 0 || pqr[2] < 0) {
    throw Error(ErrorCode::BadInput, "negative (p,q,r) " + to_string(pqr));
  }
  return LatticeVertex{pqr[1] + pqr[2] + 1, pqr[0] + pqr[2] + 1, pqr[0] + pqr[1] + 1};
}

// ---------------------------------------------------------------------------

bool edge_in_x1_structural_at(const EdgeRef& e, int endpoint) {
  const Int3 mid = e.doubled_midpoint();
  if (mid[0] <= 0 || mid[1] <= 0 || mid[2] <= 0) return false;
  const LatticeVertex& v = e.end(endpoint);
  const LatticeVertex& w = e.other(v);
  if (is_balanced(v.coords())) return e.type() == EdgeType::SecondType;
  const int d = dominant_axis(v.coords());
  return v[d] == w[d];
}

bool edge_in_x1(const EdgeRef& e, EdgeTest via) {
  if (via == EdgeTest::Structural) return edge_in_x1_structural_at(e, 0);
  const Int3 mid = e.doubled_midpoint();
  if (mid[0] <= 0 || mid[1] <= 0 || mid[2] <= 0) return false;
  const AngleTriple t{mid[0] / 2.0, mid[1] / 2.0, mid[2] / 2.0};
  const Stratum s = classify(t);
  return s.is<EdgeStratum>() && s.as<EdgeStratum>().edge == e;
}

// ---------------------------------------------------------------------------

namespace {

struct Snapped {
  bool integer = false;
  int value = 0;
};

Snapped snap(double x, double eps) {
  const double r = std::round(x);
  if (std::abs(x - r) <= eps) return {true, static_cast<int>(r)};
  return {};
}

// Edge case: angle i is the integer a; the other two are not integers.
Stratum classify_one_integer(const AngleTriple& t, int i, int a, double eps) {
  const int j = i == 0 ? 1 : 0;
  const int l = i == 2 ? 1 : 2;
  const double b = t[j], c = t[l];
  const int b0 = floor_int(b);

  auto make = [&](int bu, int cu, int bv, int cv) {
    Int3 u{}, v{};
    u[i] = a; u[j] = bu; u[l] = cu;
    v[i] = a; v[j] = bv; v[l] = cv;
    const LatticeVertex lu{u}, lv{v};
    const EdgeRef e = EdgeRef::between(lu, lv);
    double pos = b - b0;
    if (e.first() != lu) pos = 1 - pos;
    return Stratum{EdgeStratum{e, pos}};
  };

  const Snapped sum = snap(b + c, eps);
  if (sum.integer && is_odd(sum.value + a) && sum.value <= a - 1) {
    return make(b0, sum.value - b0, b0 + 1, sum.value - b0 - 1);
  }
  const Snapped diff = snap(b - c, eps);
  if (diff.integer && is_odd(diff.value + a) && std::abs(diff.value) <= a - 1) {
    return make(b0, b0 - diff.value, b0 + 1, b0 + 1 - diff.value);
  }
  return Stratum{NotInX{}};
}

}  // namespace

Stratum classify(const AngleTriple& t, double eps) {
  for (int i = 0; i < 3; ++i) {
    if (!(t[i] > 0) || !std::isfinite(t[i])) {
      throw Error(ErrorCode::InvalidAngle, "angles must be positive and finite");
    }
  }
  std::array<Snapped, 3> s{snap(t.A, eps), snap(t.B, eps), snap(t.C, eps)};
  int integers = 0;
  for (int i = 0; i < 3; ++i) {
    if (s[i].integer && s[i].value == 0) {
      throw Error(ErrorCode::BoundaryIndeterminate, "angle within tolerance of 0");
    }
    integers += s[i].integer;
  }

  if (integers == 3) {
    const Int3 v{s[0].value, s[1].value, s[2].value};
    const int sum = v[0] + v[1] + v[2];
    const int mx = std::max({v[0], v[1], v[2]});
    if (is_odd(sum) && 2 * mx <= sum - 1) return Stratum{VertexStratum{LatticeVertex{v}}};
    return Stratum{NotInX{}};
  }
  if (integers == 2) return Stratum{NotInX{}};
  if (integers == 1) {
    for (int i = 0; i < 3; ++i) {
      if (s[i].integer) return classify_one_integer(t, i, s[i].value, eps);
    }
  }

  const double c1 = cond1_value(t);
  if (std::abs(c1) <= eps) {
    throw Error(ErrorCode::BoundaryIndeterminate, "existence criterion within tolerance of 0");
  }
  if (c1 > 0) return Stratum{NotInX{}};
  std::optional<TetraIndex> idx;
  try {
    idx = tetra_containing(t, eps);
  } catch (const Error& e) {
    throw Error(ErrorCode::BoundaryIndeterminate, e.what());
  }
  if (!idx) {
    throw Error(ErrorCode::BoundaryIndeterminate,
                "criterion holds but the point is outside its cube's tetrahedron");
  }
  return Stratum{InteriorStratum{*idx}};
}

}  // namespace sphtri
