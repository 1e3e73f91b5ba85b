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

#include "sphtri/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "sphtri/error.hpp"
#include "sphtri/strata.hpp"

namespace sphtri {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int sign(double x) { return (x > 0) - (x < 0); }

bool in_unit_cube_2(const AngleTriple& t) {
  return t.A > 0 && t.A < 2 && t.B > 0 && t.B < 2 && t.C > 0 && t.C < 2;
}

// ---------------------------------------------------------------------------

CriterionResult criterion_equivalence(AcceptanceLevel level, std::mt19937_64& rng) {
  const int n = level == AcceptanceLevel::Full ? 100000 : 10000;
  std::uniform_real_distribution<double> u(0.0, 5.0);
  int tested = 0, sign_bad = 0, d1_bad = 0;
  const auto t0 = Clock::now();
  while (tested < n) {
    const AngleTriple t{u(rng), u(rng), u(rng)};
    bool near_int = false;
    for (int i = 0; i < 3; ++i) near_int = near_int || std::abs(t[i] - std::round(t[i])) <= 1e-3;
    const double c1 = cond1_value(t);
    if (near_int || std::abs(c1) <= 1e-9) continue;
    ++tested;
    sign_bad += sign(c1) != sign(cond2_value(t));
    d1_bad += (c1 < 0) != (d1_to_even_lattice(t).distance > 1.0);
  }
  const double secs = seconds_since(t0);
  CriterionResult r{1, "criterion equivalence", sign_bad == 0 && d1_bad == 0 && secs < 5.0, "", secs};
  r.detail = std::to_string(tested) + " triples, " + std::to_string(sign_bad) +
             " sign violations, " + std::to_string(d1_bad) + " d1 violations";
  return r;
}

CriterionResult criterion_edges(AcceptanceLevel) {
  const auto t0 = Clock::now();
  const int dirs[12][3] = {{1, 1, 0},  {1, -1, 0},  {-1, 1, 0}, {-1, -1, 0},
                           {1, 0, 1},  {1, 0, -1},  {-1, 0, 1}, {-1, 0, -1},
                           {0, 1, 1},  {0, 1, -1},  {0, -1, 1}, {0, -1, -1}};
  int vertices = 0, disagree = 0, bad_count = 0;
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= 9; ++n)
      for (int k = 1; k <= 9; ++k) {
        if ((m + n + k) % 2 == 0) continue;
        ++vertices;
        const LatticeVertex v{m, n, k};
        int count = 0;
        for (const auto& d : dirs) {
          const EdgeRef e = EdgeRef::between(v, LatticeVertex{m + d[0], n + d[1], k + d[2]});
          const bool s = edge_in_x1(e, EdgeTest::Structural);
          disagree += s != edge_in_x1(e, EdgeTest::Analytic);
          count += s;
        }
        bad_count += count != (is_balanced(v.coords()) ? 6 : 4);
      }
  const double secs = seconds_since(t0);
  CriterionResult r{2, "edge classification", disagree == 0 && bad_count == 0 && secs < 5.0, "",
                    secs};
  r.detail = std::to_string(vertices) + " vertices, " + std::to_string(disagree) +
             " disagreements, " + std::to_string(bad_count) + " wrong counts";
  return r;
}

CriterionResult criterion_facets(AcceptanceLevel) {
  const auto t0 = Clock::now();
  int facets = 0, bad = 0;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k) {
        const auto v = tetra_vertices({{m, n, k}});
        for (int skip = 0; skip < 4; ++skip) {
          Int3 num{0, 0, 0};
          for (int i = 0; i < 4; ++i)
            if (i != skip)
              for (int c = 0; c < 3; ++c) num[c] += v[i][c];
          const auto d = d1_to_even_lattice_exact(num, 3);
          ++facets;
          bad += d.numerator != d.denominator;
        }
      }
  CriterionResult r{3, "facet exclusion", bad == 0, "", seconds_since(t0)};
  r.detail = std::to_string(facets) + " facet barycenters, " + std::to_string(bad) + " with d1 != 1";
  return r;
}

CriterionResult criterion_roundtrip(AcceptanceLevel level, std::mt19937_64& rng) {
  const int n = level == AcceptanceLevel::Full ? 10000 : 1000;
  const auto t0 = Clock::now();
  double worst_angle = 0, worst_param = 0;
  int failures = 0, bound_bad = 0, small = 0;
  std::string first_failure;
  for (int i = 0; i < n; ++i) {
    Sample s;
    const int kind = i % 20;
    if (kind < 2) {
      s.t = sample_in_tetra({{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                              static_cast<int>(rng() % 2)}},
                            rng);
    } else if (kind < 11) {
      s = sample_interior(rng, 10);
    } else if (kind < 17) {
      s = sample_edge(rng, 10);
    } else {
      s = sample_vertex(rng, 10);
    }
    try {
      const TriangleRecord rec = construct(s.t, s.params);
      const AngleTriple m = measure_angles(rec);
      for (int k = 0; k < 3; ++k) worst_angle = std::max(worst_angle, std::abs(m[k] - s.t[k]));
      const FamilyParams back = family_params(rec);
      for (std::size_t k = 0; k < s.params.size(); ++k) {
        worst_param = std::max(worst_param, std::abs(back[k] - s.params[k]));
      }
      if (in_unit_cube_2(s.t)) {
        ++small;
        const auto sides = measure_sides(rec);
        int long_ones = 0;
        for (double x : sides) {
          bound_bad += !(x < 2.0);
          long_ones += x >= 1.0;
        }
        bound_bad += long_ones > 1;
      }
    } catch (const Error& e) {
      if (failures++ == 0) {
        first_failure = "(" + fmt("%.17g", s.t.A) + ", " + fmt("%.17g", s.t.B) + ", " +
                        fmt("%.17g", s.t.C) + "): " + e.what();
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = failures == 0 && worst_angle <= 1e-8 && worst_param <= 1e-8 &&
                    bound_bad == 0 && secs < 60.0;
  CriterionResult r{4, "constructor roundtrip", pass, "", secs};
  r.detail = std::to_string(n) + " inputs, max angle error " + fmt("%.2e", worst_angle) +
             ", max param error " + fmt("%.2e", worst_param) + ", " + std::to_string(small) +
             " in (0,2)^3 with " + std::to_string(bound_bad) + " bound violations, " +
             std::to_string(failures) + " failures";
  if (!first_failure.empty()) r.detail += "; first: " + first_failure;
  return r;
}

CriterionResult criterion_integer_side(AcceptanceLevel level, std::mt19937_64& rng) {
  const int n = 1000;
  (void)level;
  const auto t0 = Clock::now();
  int bad = 0, sequence_edges = 0;
  std::string first;
  for (int i = 0; i < n; ++i) {
    const Sample s = sample_edge(rng, 10);
    const Stratum st = classify(s.t);
    const EdgeRef e = st.as<EdgeStratum>().edge;
    int axis = 0;
    while (e.first()[axis] != e.second()[axis]) ++axis;
    double expected = 1.0;
    if (edge_balance(e).balance == Balance::Unbalanced) {
      expected = sequence_of(e)->j + 1.0;
      ++sequence_edges;
    }
    try {
      const double got = measure_sides(construct(s.t, s.params))[axis];
      if (got != expected) {
        if (bad++ == 0) first = to_string(e) + ": " + fmt("%.17g", got);
      }
    } catch (const Error& ex) {
      if (bad++ == 0) first = to_string(e) + ": " + ex.what();
    }
  }
  CriterionResult r{5, "integer-side law", bad == 0, "", seconds_since(t0)};
  r.detail = std::to_string(n) + " edge triangles (" + std::to_string(sequence_edges) +
             " on sequences), " + std::to_string(bad) + " not exactly integral as predicted";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

CriterionResult criterion_tau(AcceptanceLevel level, std::mt19937_64& rng) {
  const int n = 1000;
  (void)level;
  const auto t0 = Clock::now();
  double worst_pair = 0, worst_map = 0;
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    const TetraIndex idx{{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                          static_cast<int>(rng() % 2)}};
    const AngleTriple t = sample_in_tetra(idx, rng);
    const AngleTriple tt{2 - t.A, 2 - t.B, 2 - t.C};
    try {
      const TriangleRecord r1 = construct(t);
      const TriangleRecord r2 = construct(tt);
      const auto s1 = measure_sides(r1), s2 = measure_sides(r2);
      const TriangleRecord r3 = complement_tau(r1);
      const auto s3 = measure_sides(r3);
      const AngleTriple a3 = measure_angles(r3);
      for (int k = 0; k < 3; ++k) {
        worst_pair = std::max(worst_pair, std::abs(s1[k] - s2[k]));
        worst_map = std::max({worst_map, std::abs(s3[k] - s1[k]), std::abs(a3[k] - tt[k])});
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  CriterionResult r{6, "tau invariance", failures == 0 && worst_pair <= 1e-9 && worst_map <= 1e-9,
                    "", seconds_since(t0)};
  r.detail = std::to_string(n) + " pairs, max side difference " + fmt("%.2e", worst_pair) +
             " (independent), " + fmt("%.2e", worst_map) + " (complement map), " +
             std::to_string(failures) + " failures";
  return r;
}

struct Plane {
  std::array<std::int64_t, 3> n;
  std::int64_t off;  // n . y <= off on the hull, y in doubled coordinates
};

// Facet planes of the convex hull of a full-dimensional point set.
std::vector<Plane> hull_planes(const std::vector<Int3>& pts) {
  std::vector<Plane> out;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        std::array<std::int64_t, 3> u{}, v{};
        for (int c = 0; c < 3; ++c) {
          u[c] = pts[j][c] - pts[i][c];
          v[c] = pts[k][c] - pts[i][c];
        }
        std::array<std::int64_t, 3> nn{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                       u[0] * v[1] - u[1] * v[0]};
        if (nn == std::array<std::int64_t, 3>{0, 0, 0}) continue;
        const std::int64_t off = nn[0] * pts[i][0] + nn[1] * pts[i][1] + nn[2] * pts[i][2];
        bool le = true, ge = true;
        for (const auto& p : pts) {
          const std::int64_t x = nn[0] * p[0] + nn[1] * p[1] + nn[2] * p[2];
          le = le && x <= off;
          ge = ge && x >= off;
        }
        if (le) out.push_back({nn, off});
        if (ge) out.push_back({{-nn[0], -nn[1], -nn[2]}, -off});
      }
  return out;
}

CriterionResult criterion_polytopes(AcceptanceLevel level, std::mt19937_64& rng) {
  const int per_tetra = level == AcceptanceLevel::Full ? 10000 : 300;
  const auto t0 = Clock::now();
  int tetras = 0, list_bad = 0, mismatches = 0;
  long points = 0;
  constexpr std::int64_t kDen = std::int64_t{1} << 20;
  std::string first;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= 6; ++k) {
        const TetraIndex t{{m, n, k}};
        if (tetra_balance(t).balance != Balance::SemiBalanced) continue;
        ++tetras;
        const auto poly = balanced_subpolytope(t);
        auto expect = balanced_hull_case_list(t);
        std::sort(expect.begin(), expect.end());
        if (poly.doubled_vertices != expect) {
          if (list_bad++ == 0) first = "hull list of T" + to_string(t.idx);
        }
        const auto planes = hull_planes(poly.doubled_vertices);
        const auto verts = tetra_vertices(t);
        std::uniform_int_distribution<std::int64_t> u(1, kDen - 1);
        for (int s = 0; s < per_tetra; ++s) {
          // Random positive barycentric weights with power-of-two total, so
          // the sampled point is exact in binary floating point.
          std::array<std::int64_t, 5> cut{0, u(rng), u(rng), u(rng), kDen};
          std::sort(cut.begin(), cut.end());
          std::array<std::int64_t, 4> w{};
          bool degenerate = false;
          for (int i = 0; i < 4; ++i) {
            w[i] = cut[i + 1] - cut[i];
            degenerate = degenerate || w[i] == 0;
          }
          if (degenerate) continue;
          std::array<std::int64_t, 3> num{0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int c = 0; c < 3; ++c) num[c] += w[i] * verts[i][c];
          const AngleTriple p{static_cast<double>(num[0]) / kDen, static_cast<double>(num[1]) / kDen,
                              static_cast<double>(num[2]) / kDen};
          const bool balanced = balance_class_point(p).balance == Balance::Balanced;
          bool inside = !planes.empty();
          for (const auto& pl : planes) {
            const std::int64_t lhs = 2 * (pl.n[0] * num[0] + pl.n[1] * num[1] + pl.n[2] * num[2]);
            inside = inside && lhs <= pl.off * kDen;
          }
          ++points;
          if (balanced != inside) {
            if (mismatches++ == 0 && first.empty()) first = "membership in T" + to_string(t.idx);
          }
        }
      }
  CriterionResult r{7, "balanced polytopes", list_bad == 0 && mismatches == 0, "",
                    seconds_since(t0)};
  r.detail = std::to_string(tetras) + " semi-balanced tetrahedra, " + std::to_string(list_bad) +
             " list mismatches, " + std::to_string(points) + " sampled points, " +
             std::to_string(mismatches) + " membership mismatches";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

CriterionResult criterion_sequences(AcceptanceLevel) {
  const auto t0 = Clock::now();
  const int box = 8;
  const auto inv = enumerate(box);
  std::map<TetraIndex, int> tetra_hits;
  std::map<EdgeRef, int> edge_hits;
  auto inside = [&](const Int3& v) { return std::max({v[0], v[1], v[2]}) <= box; };
  int seeds = 0;
  for (const auto& e : inv.edges) {
    if (!e.in_x1 || e.balance.balance != Balance::SemiBalanced) continue;
    ++seeds;
    const UnbalancedSequence seq(e.edge);
    for (int j = 1; j <= 3 * box; ++j) {
      const TetraIndex t = seq.tetra(j);
      if (inside(t.idx)) ++tetra_hits[t];
      const EdgeRef l = seq.edge(j);
      if (inside(l.first().coords()) && inside(l.second().coords())) ++edge_hits[l];
    }
  }
  int tetras = 0, edges = 0, bad = 0;
  for (const auto& t : inv.tetrahedra) {
    if (t.balance.balance != Balance::Unbalanced) continue;
    ++tetras;
    bad += tetra_hits[t.tetra] != 1;
  }
  for (const auto& e : inv.edges) {
    if (!e.in_x1 || e.balance.balance != Balance::Unbalanced) continue;
    ++edges;
    bad += edge_hits[e.edge] != 1;
  }
  // Nothing balanced or semi-balanced is ever produced past the seed.
  for (const auto& [t, hits] : tetra_hits) bad += tetra_balance(t).balance != Balance::Unbalanced;
  CriterionResult r{8, "sequence partition", bad == 0, "", seconds_since(t0)};
  r.detail = std::to_string(seeds) + " seeds cover " + std::to_string(tetras) +
             " unbalanced tetrahedra and " + std::to_string(edges) + " unbalanced edges, " +
             std::to_string(bad) + " not covered exactly once";
  return r;
}

CriterionResult criterion_lambda1(AcceptanceLevel) {
  const auto t0 = Clock::now();
  const bool iso = check_lambda1_isomorphism(11);
  const double secs = seconds_since(t0);
  const auto g = balanced_graph(11);
  CriterionResult r{9, "lambda1 identification", iso && secs < 2.0, "", secs};
  r.detail = std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.arcs.size()) +
             " arcs, " + (iso ? "isomorphic" : "NOT isomorphic");
  return r;
}

CriterionResult criterion_attach(AcceptanceLevel level, std::mt19937_64& rng) {
  const int n = 1000;
  (void)level;
  const auto t0 = Clock::now();
  double worst = 0;
  int integer_bad = 0, failures = 0, made = 0;
  while (made < n) {
    Sample s;
    switch (made % 3) {
      case 0: s = sample_interior(rng, 8); break;
      case 1: s = sample_edge(rng, 8); break;
      default: s = sample_vertex(rng, 8); break;
    }
    if (!classify(s.t).is<VertexStratum>() &&
        stratum_balance(classify(s.t)).balance == Balance::Unbalanced) {
      continue;  // long-sided: attachments are not allowed on the long side
    }
    ++made;
    const int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4),
              r = static_cast<int>(rng() % 4);
    try {
      const TriangleRecord base = construct(s.t, s.params);
      const TriangleRecord out = attach(base, p, q, r);
      const AngleTriple a0 = measure_angles(base), a1 = measure_angles(out);
      const auto s0 = measure_sides(base), s1 = measure_sides(out);
      const Int3 pqr{p, q, r};
      const Int3 off{q + r, p + r, p + q};
      for (int i = 0; i < 3; ++i) {
        const double angle = a0[i] + off[i];
        const double side = (pqr[i] % 2 == 0 ? 1.0 : -1.0) * (s0[i] - 1.0) + 1.0;
        worst = std::max({worst, std::abs(a1[i] - angle), std::abs(s1[i] - side)});
        integer_bad += out.angle_floor[i] != base.angle_floor[i] + off[i];
        integer_bad += out.sides[i].winding != base.sides[i].winding;
        integer_bad += out.attachments[i] != base.attachments[i] + pqr[i];
        // Integer parts of the transformed values, from the exact base data.
        const bool base_upper = base.sides[i].frac_length >= 1.0;
        const bool out_upper = out.sides[i].frac_length >= 1.0;
        const bool base_integer = s0[i] == 1.0;
        if (!base_integer) integer_bad += out_upper != (pqr[i] % 2 == 0 ? base_upper : !base_upper);
      }
      integer_bad += out.dev_degree != base.dev_degree + p + q + r;
    } catch (const Error&) {
      ++failures;
    }
  }
  CriterionResult r{10, "attachment algebra", failures == 0 && integer_bad == 0 && worst <= 1e-9,
                    "", seconds_since(t0)};
  r.detail = std::to_string(n) + " records, max fractional deviation " + fmt("%.2e", worst) +
             ", " + std::to_string(integer_bad) + " integer mismatches, " +
             std::to_string(failures) + " failures";
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

AngleTriple sample_in_tetra(const TetraIndex& idx, std::mt19937_64& rng, double margin) {
  const auto v = tetra_vertices(idx);
  std::exponential_distribution<double> e(1.0);
  for (;;) {
    std::array<double, 4> w{};
    double total = 0;
    for (auto& x : w) total += (x = e(rng));
    bool ok = true;
    for (auto& x : w) ok = ok && (x /= total) > margin;
    if (!ok) continue;
    AngleTriple t;
    for (int c = 0; c < 3; ++c) {
      for (int i = 0; i < 4; ++i) t[c] += w[i] * v[i][c];
    }
    // Keep clear of the tolerance band of classify().
    bool clear = true;
    for (int c = 0; c < 3; ++c) clear = clear && std::abs(t[c] - std::round(t[c])) > 1e-7;
    if (clear && std::abs(cond1_value(t)) > 1e-7) return t;
  }
}

Sample sample_interior(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> u(0, bound - 1);
  return {sample_in_tetra({{u(rng), u(rng), u(rng)}}, rng), {}};
}

Sample sample_edge(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> u(0, bound - 1);
  std::uniform_real_distribution<double> pos(1e-3, 1 - 1e-3);
  for (;;) {
    const Int3 c{u(rng), u(rng), u(rng)};
    if ((c[0] + c[1] + c[2]) % 2 == 0) continue;
    std::vector<EdgeRef> edges;
    for (const auto& e : edges_at_vertex(LatticeVertex{c})) {
      const auto& o = e.other(LatticeVertex{c});
      if (std::max({o[0], o[1], o[2]}) < bound) edges.push_back(e);
    }
    if (edges.empty()) continue;
    const EdgeRef& e = edges[rng() % edges.size()];
    const double s = pos(rng);
    AngleTriple t;
    for (int i = 0; i < 3; ++i) t[i] = e.first()[i] + s * (e.second()[i] - e.first()[i]);
    return {t, {pos(rng)}};
  }
}

Sample sample_vertex(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> u(1, bound - 1);
  std::uniform_real_distribution<double> side(1e-2, 2 - 1e-2);
  for (;;) {
    const Int3 c{u(rng), u(rng), u(rng)};
    if ((c[0] + c[1] + c[2]) % 2 == 0 || !is_balanced(c)) continue;
    const Int3 pqr = *pqr_from_vertex(LatticeVertex{c});
    double a0 = 0, b0 = 0;
    do {
      a0 = side(rng);
      b0 = side(rng);
    } while (!(a0 + b0 < 2 - 1e-2));
    const double a = pqr[0] % 2 == 0 ? a0 : 2 - a0;
    const double b = pqr[1] % 2 == 0 ? b0 : 2 - b0;
    return {{double(c[0]), double(c[1]), double(c[2])}, {a, b}};
  }
}

std::vector<Int3> balanced_hull_case_list(const TetraIndex& t) {
  std::set<Int3> out;
  const auto verts = tetra_vertices(t);
  const auto edges = tetra_edges(t);
  const auto bc = tetra_balance(t);
  auto doubled = [](const LatticeVertex& v) { return Int3{2 * v[0], 2 * v[1], 2 * v[2]}; };
  auto balanced = [](const LatticeVertex& v) { return is_balanced(v.coords()); };
  if (bc.balance == Balance::Balanced) {
    for (const auto& v : verts) out.insert(doubled(v));
  } else if (bc.balance == Balance::SemiBalanced && bc.pointed) {
    for (const auto& v : verts)
      if (balanced(v)) out.insert(doubled(v));
    for (const auto& e : edges)
      if (!balanced(e.first()) || !balanced(e.second())) out.insert(e.doubled_midpoint());
  } else if (bc.balance == Balance::SemiBalanced) {
    for (const auto& v : verts) {
      if (!balanced(v)) continue;
      out.insert(doubled(v));
      for (const auto& e : edges)
        if (e.contains(v)) out.insert(e.doubled_midpoint());
    }
  }
  return {out.begin(), out.end()};
}

CriterionResult run_criterion(int id, AcceptanceLevel level, std::uint64_t seed) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(id));
  switch (id) {
    case 1: return criterion_equivalence(level, rng);
    case 2: return criterion_edges(level);
    case 3: return criterion_facets(level);
    case 4: return criterion_roundtrip(level, rng);
    case 5: return criterion_integer_side(level, rng);
    case 6: return criterion_tau(level, rng);
    case 7: return criterion_polytopes(level, rng);
    case 8: return criterion_sequences(level);
    case 9: return criterion_lambda1(level);
    case 10: return criterion_attach(level, rng);
    default: throw Error(ErrorCode::BadInput, "no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance(AcceptanceLevel level, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, level, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %2d  %-24s (%.2f s)  ", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  return buf + r.detail;
}

}  // namespace sphtri
