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

#include "sphtri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sphtri/error.hpp"

namespace sphtri {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

std::string to_string(SubChart c) {
  switch (c) {
    case SubChart::UA: return "U_A";
    case SubChart::UB: return "U_B";
    case SubChart::UC: return "U_C";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTol = 1e-15;
constexpr int kRootIterations = 200;
constexpr double kResidualTol = 1e-9;
constexpr double kDegenerateSide = 1e-12;

const Vec3 kX{1, 0, 0};
const Vec3 kZ{0, 0, 1};

double reduce2(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  return r;
}

// cos(pi x) and sin(pi x), exact at multiples of 1/2 so that antipodal and
// coincident corners come out exactly.
double cospi(double x) {
  const double r = reduce2(x);
  if (r == 0.0) return 1.0;
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 1.0) return -1.0;
  return std::cos(kPi * r);
}

double sinpi(double x) {
  const double r = reduce2(x);
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(kPi * r);
}

// Counterclockwise angle (half-turns, in [0,2)) from P to Q about n.
double arc_from_to(const Vec3& p, const Vec3& q, const Vec3& n) {
  double g = std::atan2(dot(cross(p, q), n), dot(p, q));
  if (g < 0) g += 2 * kPi;
  return g / kPi;
}

// Side i runs from corner i+1 to corner i+2. At corner i the boundary leaves
// along side i+2 and arrives along side i+1.
double raw_angle(const TriangleRecord& r, int i) {
  const Vec3& x = r.corners[i];
  const Vec3 out = cross(r.sides[(i + 2) % 3].normal, x);
  const Vec3 back = -cross(r.sides[(i + 1) % 3].normal, x);
  double g = std::atan2(dot(cross(out, back), x), dot(out, back));
  if (g < 0) g += 2 * kPi;
  return g / kPi;
}

double raw_side(const TriangleRecord& r, int i) {
  return arc_from_to(r.corners[(i + 1) % 3], r.corners[(i + 2) % 3], r.sides[i].normal);
}

double wrap_side(double x) { return x - 2.0 * std::round(x / 2.0); }

double wrap_angle(double x) {
  while (x < -0.5) x += 2.0;
  while (x >= 1.5) x -= 2.0;
  return x;
}

Int3 add(const Int3& a, const Int3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Int3 sub(const Int3& a, const Int3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Stratum translate(const Stratum& s, const Int3& off) {
  if (s.is<InteriorStratum>()) {
    return {InteriorStratum{TetraIndex{add(s.as<InteriorStratum>().tetra.idx, off)}}};
  }
  if (s.is<EdgeStratum>()) {
    const auto& e = s.as<EdgeStratum>();
    return {EdgeStratum{EdgeRef::between(LatticeVertex{add(e.edge.first().coords(), off)},
                                         LatticeVertex{add(e.edge.second().coords(), off)}),
                        e.position}};
  }
  if (s.is<VertexStratum>()) {
    return {VertexStratum{LatticeVertex{add(s.as<VertexStratum>().vertex.coords(), off)}}};
  }
  return s;
}

SideArc make_side(const Vec3& from, const Vec3& to, const Vec3& normal) {
  return {normal, arc_from_to(from, to, normal), 0};
}

// ---------------------------------------------------------------------------
// Base triangles near the vertex (1,1,1), in their own placement.

// Apex where the rays leaving B and C at angles B0, C0 meet; both rays enter
// the upper hemisphere when the angles are below 1 and the lower one above.
Vec3 apex_from_rays(double a, double b0, double c0) {
  const Vec3 c{cospi(a), sinpi(a), 0};
  const Vec3 db{0, cospi(b0), sinpi(b0)};
  const Vec3 dc = cospi(c0) * Vec3{sinpi(a), -cospi(a), 0} + sinpi(c0) * kZ;
  Vec3 p = normalized(cross(cross(kX, db), cross(c, dc)));
  if (dot(p, db) < 0) p = -p;
  return p;
}

TriangleRecord ray_triangle(double a, double b0, double c0) {
  TriangleRecord r;
  const Vec3 c{cospi(a), sinpi(a), 0};
  const Vec3 p = apex_from_rays(a, b0, c0);
  r.corners = {p, kX, c};
  r.sides[0] = {kZ, a, 0};
  r.sides[1] = make_side(c, p, normalized(cross(c, p)));
  r.sides[2] = make_side(p, kX, normalized(cross(p, kX)));
  return r;
}

// Chart U_A: bisection in the length a of the side on the equator. With B0,
// C0 < 1 the apex angle increases with a on (0,1) and on (1,2); with B0, C0 > 1
// it decreases.
TriangleRecord solve_ua(double a0, double b0, double c0) {
  const bool lower = b0 < 1.0;
  if (lower != (c0 < 1.0) || a0 == 1.0) {
    throw Error(ErrorCode::OutOfRegion, "U_A base needs B, C on the same side of 1 and A != 1");
  }
  const bool short_base = lower == (a0 < 1.0);
  double lo = short_base ? 0.0 : 1.0;
  double hi = lo + 1.0;
  auto apex_angle = [&](double a) { return raw_angle(ray_triangle(a, b0, c0), 0); };
  for (int it = 0; it < kRootIterations && hi - lo > kRootTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = apex_angle(mid) < a0;
    if (below == lower) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double a = 0.5 * (lo + hi);
  TriangleRecord r = ray_triangle(a, b0, c0);
  const double residual = std::abs(raw_angle(r, 0) - a0);
  if (!(residual <= kResidualTol)) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "angles (%.17g, %.17g, %.17g): bracket [%.17g, %.17g], residual %.3g", a0, b0,
                  c0, lo, hi, residual);
    throw Error(ErrorCode::RootFindFailure, buf);
  }
  r.angle_floor = {static_cast<int>(std::floor(a0)), static_cast<int>(std::floor(b0)),
                   static_cast<int>(std::floor(c0))};
  return r;
}

// Apex at distance c from B along the ray leaving B at angle b0; used when
// C is B or its antipode, so the two rays share a great circle.
Vec3 apex_on_ray(double b0, double c) {
  const Vec3 db{0, cospi(b0), sinpi(b0)};
  return cospi(c) * kX + sinpi(c) * db;
}

// Edge from (1,1,1) with A = 1, B = C = b0: C antipodal to B, b + c = 1.
TriangleRecord solve_unit_edge(double b0, double c) {
  TriangleRecord r;
  const Vec3 cc{-1, 0, 0};
  const Vec3 p = apex_on_ray(b0, c);
  r.corners = {p, kX, cc};
  r.sides[0] = {kZ, 1.0, 0};
  r.sides[1] = make_side(cc, p, normalized(cross(cc, p)));
  r.sides[2] = make_side(p, kX, normalized(cross(p, kX)));
  const int f = static_cast<int>(std::floor(b0));
  r.angle_floor = {1, f, f};
  return r;
}

// Boundary points B, C, A of the hemisphere at arc positions 0, a, a + b.
TriangleRecord hemisphere(double a, double b) {
  TriangleRecord r;
  r.corners = {Vec3{cospi(a + b), sinpi(a + b), 0}, kX, Vec3{cospi(a), sinpi(a), 0}};
  r.sides[0] = {kZ, a, 0};
  r.sides[1] = {kZ, b, 0};
  r.sides[2] = {kZ, 2.0 - a - b, 0};
  r.angle_floor = {1, 1, 1};
  return r;
}

// Long-sided base: C winds around the equator; angles B0, C0 in (0,1).
// For integer A0 (the edges of the sequence) c is the length of side AB.
TriangleRecord solve_sequence(double a0, double b0, double c0, double c) {
  const int w = static_cast<int>(std::floor(a0 / 2.0));
  const double af = a0 - 2.0 * w;
  TriangleRecord r;
  if (af == 0.0 || af == 1.0) {
    const Vec3 cc = af == 0.0 ? kX : Vec3{-1, 0, 0};
    const Vec3 p = apex_on_ray(b0, c);
    r.corners = {p, kX, cc};
    r.sides[0] = af == 0.0 ? SideArc{kZ, 2.0, w - 1} : SideArc{kZ, 1.0, w};
    r.sides[2] = make_side(p, kX, normalized(cross(p, kX)));
    r.sides[1] = {-r.sides[2].normal, 0, 0};
    if (af == 1.0) r.sides[1].normal = normalized(cross(cc, p));
    r.sides[1].frac_length = arc_from_to(cc, p, r.sides[1].normal);
    r.angle_floor = {static_cast<int>(a0), 0, 0};
    return r;
  }
  r = solve_ua(af, b0, c0);
  r.sides[0].winding = w;
  r.angle_floor[0] += 2 * w;
  return r;
}

// Record built for t' = (t[s], t[s+1], t[s+2]) back in the original labels.
TriangleRecord unrotate(const TriangleRecord& r, int s) {
  if (s == 0) return r;
  TriangleRecord out = r;
  for (int j = 0; j < 3; ++j) {
    const int i = (j - s + 3) % 3;
    out.corners[j] = r.corners[i];
    out.sides[j] = r.sides[i];
    out.angle_floor[j] = r.angle_floor[i];
  }
  return out;
}

// Rotation taking B to (1,0,0) and the circle of side a to the equator.
std::array<Vec3, 3> frame(const Vec3& b, const Vec3& n) { return {b, cross(n, b), n}; }

Vec3 rotate_by(const std::array<Vec3, 3>& rows, const Vec3& v) {
  return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)};
}

void canonicalize(TriangleRecord& r) {
  const auto rows = frame(r.corners[1], r.sides[0].normal);
  for (auto& c : r.corners) c = rotate_by(rows, c);
  for (auto& s : r.sides) s.normal = rotate_by(rows, s.normal);
}

int first_noninteger_axis(int integer_axis) { return integer_axis == 0 ? 1 : 0; }

int integer_axis_of(const EdgeRef& e) {
  for (int i = 0; i < 3; ++i)
    if (e.first()[i] == e.second()[i]) return i;
  return 0;
}

void check_unit_interval(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange, std::string(what) + " must lie in (0,1)");
  }
}

// Base value of the designated side of an edge stratum: the final side is the
// parameter, plus 1 when an odd number of hemispheres flips it past 1.
double pulled_back_edge_param(double param, int count) {
  return count % 2 == 0 ? param : 1.0 - param;
}

struct ShortRoute {
  LatticeVertex vertex;
  Int3 pqr;
};

ShortRoute pick_vertex(const AngleTriple& t, const Stratum& s, const ConstructOptions& opt) {
  std::vector<LatticeVertex> cand;
  if (s.is<InteriorStratum>()) {
    const auto v = tetra_vertices(s.as<InteriorStratum>().tetra);
    cand.assign(v.begin(), v.end());
  } else if (s.is<EdgeStratum>()) {
    cand = {s.as<EdgeStratum>().edge.first(), s.as<EdgeStratum>().edge.second()};
  } else {
    cand = {s.as<VertexStratum>().vertex};
  }
  std::erase_if(cand, [](const LatticeVertex& v) { return !is_balanced(v.coords()); });
  std::sort(cand.begin(), cand.end());
  if (opt.vertex) {
    if (std::find(cand.begin(), cand.end(), *opt.vertex) == cand.end()) {
      throw Error(ErrorCode::OutOfDomain,
                  "vertex " + to_string(*opt.vertex) + " has no chart containing the triple");
    }
    return {*opt.vertex, *pqr_from_vertex(*opt.vertex)};
  }
  if (cand.empty()) throw Error(ErrorCode::OutOfDomain, "no balanced vertex nearby");
  auto l1 = [&](const LatticeVertex& v) {
    return std::abs(t.A - v[0]) + std::abs(t.B - v[1]) + std::abs(t.C - v[2]);
  };
  const LatticeVertex best = *std::min_element(
      cand.begin(), cand.end(), [&](const auto& x, const auto& y) { return l1(x) < l1(y); });
  return {best, *pqr_from_vertex(best)};
}

TriangleRecord construct_short(const AngleTriple& t, const Stratum& s, const FamilyParams& params,
                               const ConstructOptions& opt) {
  const ShortRoute route = pick_vertex(t, s, opt);
  const Int3 pqr = route.pqr;
  const Int3 off = sub(route.vertex.coords(), {1, 1, 1});
  const AngleTriple t0{t.A - off[0], t.B - off[1], t.C - off[2]};
  const Stratum base_stratum = translate(s, {-off[0], -off[1], -off[2]});

  TriangleRecord base;
  int shift = 0;
  if (s.is<VertexStratum>()) {
    const double a = params[0], b = params[1];
    if (!(a > 0 && a < 2 && b > 0 && b < 2)) {
      throw Error(ErrorCode::ParamOutOfRange, "side lengths must lie in (0,2)");
    }
    const double a0 = pqr[0] % 2 == 0 ? a : 2.0 - a;
    const double b0 = pqr[1] % 2 == 0 ? b : 2.0 - b;
    if (!(a0 + b0 < 2.0)) {
      throw Error(ErrorCode::ParamOutOfRange, "base sides must satisfy a + b < 2");
    }
    base = hemisphere(a0, b0);
  } else if (s.is<EdgeStratum>()) {
    const int axis = integer_axis_of(s.as<EdgeStratum>().edge);
    const int side = first_noninteger_axis(axis);
    check_unit_interval(params[0], "edge parameter");
    const double v0 = pulled_back_edge_param(params[0], pqr[side]);
    const int rotated = (side - axis + 3) % 3;
    shift = axis;
    base = solve_unit_edge(t0[(axis + 1) % 3], rotated == 2 ? v0 : 1.0 - v0);
  } else {
    const Int3 idx = base_stratum.as<InteriorStratum>().tetra.idx;
    if (opt.subchart) {
      shift = static_cast<int>(*opt.subchart);
      if (idx[(shift + 1) % 3] != idx[(shift + 2) % 3]) {
        throw Error(ErrorCode::OutOfDomain, to_string(*opt.subchart) + " does not contain T" +
                                                to_string(idx));
      }
    } else if (idx == Int3{0, 0, 0}) {
      shift = -1;
    } else {
      // The chart whose equator side is opposite the corner that differs
      // from the other two.
      shift = idx[1] == idx[2] ? 0 : (idx[0] == idx[2] ? 1 : 2);
    }
    if (shift < 0) {
      base = solve_primitive(t0);
      shift = 0;
    } else {
      base = solve_ua(t0[shift], t0[(shift + 1) % 3], t0[(shift + 2) % 3]);
    }
  }
  base = unrotate(base, shift);
  if (shift != 0) canonicalize(base);
  base.stratum = base_stratum;
  base.dev_degree = 1;
  return attach(base, pqr[0], pqr[1], pqr[2]);
}

TriangleRecord construct_sequence(const AngleTriple& t, const Stratum& s,
                                  const FamilyParams& params) {
  const auto pos = sequence_of(s);
  if (!pos) throw Error(ErrorCode::OutOfDomain, "no sequence contains " + to_string(s));
  const UnbalancedSequence seq(pos->seed);
  const int d = seq.axis();
  const Int3 pqr = *pqr_from_vertex(seq.balanced_end());
  const Int3 off = sub(seq.balanced_end().coords(), {1, 1, 1});
  const AngleTriple t0{t.A - off[0], t.B - off[1], t.C - off[2]};
  const Stratum base_stratum = translate(s, {-off[0], -off[1], -off[2]});
  const double b0 = t0[(d + 1) % 3], c0 = t0[(d + 2) % 3];

  TriangleRecord base;
  if (s.is<EdgeStratum>()) {
    const int top = s.as<EdgeStratum>().edge.first()[d] - off[d];
    const int side = first_noninteger_axis(d);
    check_unit_interval(params[0], "edge parameter");
    const double v0 = pulled_back_edge_param(params[0], pqr[side]);
    const int rotated = (side - d + 3) % 3;
    // Odd positions (even A) have b = c, even positions b + c = 1.
    const double c = top % 2 == 0 || rotated == 2 ? v0 : 1.0 - v0;
    base = solve_sequence(top, b0, c0, c);
  } else {
    base = solve_sequence(t0[d], b0, c0, 0.0);
  }
  base = unrotate(base, d);
  if (d != 0) canonicalize(base);
  base.stratum = base_stratum;
  base.dev_degree = 1 + base.sides[0].winding + base.sides[1].winding + base.sides[2].winding;
  return attach(base, pqr[0], pqr[1], pqr[2]);
}

}  // namespace

// ---------------------------------------------------------------------------

TriangleRecord solve_primitive(const AngleTriple& t) {
  const bool inside = t.A > 0 && t.A < 1 && t.B > 0 && t.B < 1 && t.C > 0 && t.C < 1 &&
                      t.A + t.B + t.C > 1 && t.A + t.B - t.C < 1 && t.A - t.B + t.C < 1 &&
                      -t.A + t.B + t.C < 1;
  if (!inside) {
    throw Error(ErrorCode::OutOfRegion, "angles must lie in the open tetrahedron T_{0,0,0}");
  }
  const double x =
      (cospi(t.A) + cospi(t.B) * cospi(t.C)) / (sinpi(t.B) * sinpi(t.C));
  const double a = std::acos(std::clamp(x, -1.0, 1.0)) / kPi;
  TriangleRecord r = ray_triangle(a, t.B, t.C);
  r.stratum = {InteriorStratum{TetraIndex{{0, 0, 0}}}};
  return r;
}

TriangleRecord construct(const AngleTriple& t, const FamilyParams& params,
                         const ConstructOptions& options) {
  const Stratum s = classify(t, options.eps);
  if (!s.in_x()) throw Error(ErrorCode::NotRealizable, "no triangle has these angles");
  if (static_cast<int>(params.size()) != s.family_dimension()) {
    throw Error(ErrorCode::ParamOutOfRange,
                "expected " + std::to_string(s.family_dimension()) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw Error(ErrorCode::ParamOutOfRange, "non-finite parameter");
  }
  const bool unbalanced = !s.is<VertexStratum>() && stratum_balance(s).balance == Balance::Unbalanced;
  if (unbalanced && (options.vertex || options.subchart)) {
    throw Error(ErrorCode::OutOfDomain, "long-sided triangles have a single chart");
  }
  TriangleRecord r = unbalanced ? construct_sequence(t, s, params)
                                : construct_short(t, s, params, options);
  r.stratum = s;
  return r;
}

TriangleRecord attach(const TriangleRecord& rec, int dp, int dq, int dr) {
  const Int3 d{dp, dq, dr};
  if (dp < 0 || dq < 0 || dr < 0) {
    throw Error(ErrorCode::BadInput, "attachment counts must be nonnegative");
  }
  TriangleRecord out = rec;
  for (int i = 0; i < 3; ++i) {
    if (d[i] == 0) continue;
    if (!rec.sides[i].is_short()) {
      throw Error(ErrorCode::LongSideAttachment,
                  std::string("side ") + "abc"[i] + " is not shorter than a full circle");
    }
    if (d[i] % 2 == 1) {
      out.sides[i].normal = -out.sides[i].normal;
      out.sides[i].frac_length = 2.0 - out.sides[i].frac_length;
    }
  }
  const Int3 off{dq + dr, dp + dr, dp + dq};
  out.angle_floor = add(out.angle_floor, off);
  out.attachments = add(out.attachments, d);
  out.dev_degree += dp + dq + dr;
  out.stratum = translate(rec.stratum, off);
  return out;
}

TriangleRecord complement_tau(const TriangleRecord& rec) {
  if (!rec.stratum.is<InteriorStratum>()) {
    throw Error(ErrorCode::OutOfDomain, "complement is defined on tetrahedra only");
  }
  const Int3 idx = rec.stratum.as<InteriorStratum>().tetra.idx;
  for (int i = 0; i < 3; ++i) {
    if (idx[i] < 0 || idx[i] > 1 || !rec.sides[i].is_short()) {
      throw Error(ErrorCode::OutOfDomain, "angles must lie in (0,2)^3");
    }
  }
  auto reflect = [](const Vec3& v) { return Vec3{v.x, v.y, -v.z}; };
  TriangleRecord out = rec;
  for (auto& c : out.corners) c = reflect(c);
  for (auto& s : out.sides) s.normal = -reflect(s.normal);
  for (int i = 0; i < 3; ++i) out.angle_floor[i] = 1 - rec.angle_floor[i];
  out.stratum = {InteriorStratum{TetraIndex{{1 - idx[0], 1 - idx[1], 1 - idx[2]}}}};
  return out;
}

std::array<double, 3> measure_sides(const TriangleRecord& rec) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const SideArc& s = rec.sides[i];
    out[i] = 2.0 * s.winding + s.frac_length + wrap_side(raw_side(rec, i) - s.frac_length);
    if (!(out[i] > kDegenerateSide)) {
      throw Error(ErrorCode::DegenerateCorner,
                  std::string("side ") + "abc"[i] + " has vanishing length");
    }
  }
  return out;
}

AngleTriple measure_angles(const TriangleRecord& rec) {
  measure_sides(rec);
  AngleTriple out;
  for (int i = 0; i < 3; ++i) {
    out[i] = rec.angle_floor[i] + wrap_angle(raw_angle(rec, i) - rec.angle_floor[i]);
  }
  return out;
}

std::array<double, 6> embed_r6(const TriangleRecord& rec) {
  const AngleTriple t = measure_angles(rec);
  const auto s = measure_sides(rec);
  return {t.A, t.B, t.C, s[0], s[1], s[2]};
}

FamilyParams family_params(const TriangleRecord& rec) {
  const auto sides = measure_sides(rec);
  if (rec.stratum.is<VertexStratum>()) return {sides[0], sides[1]};
  if (rec.stratum.is<EdgeStratum>()) {
    const int i = first_noninteger_axis(integer_axis_of(rec.stratum.as<EdgeStratum>().edge));
    const SideArc& s = rec.sides[i];
    return {sides[i] - 2.0 * s.winding - (s.frac_length >= 1.0 ? 1.0 : 0.0)};
  }
  return {};
}

ChartCoordinates chart_coordinates(const TriangleRecord& rec) {
  const auto sides = measure_sides(rec);
  ChartCoordinates out;
  const bool is_long = !(rec.sides[0].is_short() && rec.sides[1].is_short() &&
                         rec.sides[2].is_short());
  if (is_long) {
    const auto pos = sequence_of(rec.stratum);
    if (!pos) throw Error(ErrorCode::ChartUndefined, "long-sided record outside any sequence");
    const UnbalancedSequence seq(pos->seed);
    const int d = seq.axis();
    out.kind = ChartCoordinates::Kind::Sequence;
    out.seed = pos->seed;
    out.vertex = seq.balanced_end();
    const auto rows = frame(rec.corners[(d + 1) % 3], rec.sides[d].normal);
    out.apex = rotate_by(rows, rec.corners[d]);
    out.arc_length = sides[d];
    out.total_angle =
        measure_angles(rec)[d] - rec.attachments[(d + 1) % 3] - rec.attachments[(d + 2) % 3];
    return out;
  }

  // Undo the hemispheres: corners stay, flipped sides flip back.
  std::array<double, 3> base{};
  std::array<Vec3, 3> normals{};
  for (int i = 0; i < 3; ++i) {
    const bool odd = rec.attachments[i] % 2 == 1;
    base[i] = odd ? 2.0 - sides[i] : sides[i];
    normals[i] = odd ? -rec.sides[i].normal : rec.sides[i].normal;
  }
  int i = 0;
  for (int k = 0; k < 3; ++k)
    if (base[k] >= 1.0) i = k;
  out.kind = ChartCoordinates::Kind::Short;
  out.vertex = vertex_from_pqr(rec.attachments);
  out.subchart = static_cast<SubChart>(i);
  out.arc_length = base[i];
  const auto rows = frame(rec.corners[(i + 1) % 3], normals[i]);
  out.apex = rotate_by(rows, rec.corners[i]);
  const Vec3 c = rotate_by(rows, rec.corners[(i + 2) % 3]);
  // Excluded arc: the side itself together with the arc between the
  // antipodes of its ends.
  constexpr double tol = 1e-12;
  const Vec3& p = out.apex;
  if (std::abs(p.z) <= tol && (p.y > -tol || c.x * p.y - c.y * p.x < tol)) {
    throw Error(ErrorCode::ChartUndefined, "apex lies on the excluded arc of the equator");
  }
  return out;
}

}  // namespace sphtri
