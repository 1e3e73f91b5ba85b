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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sphtri/acceptance.hpp"
#include "sphtri/error.hpp"
#include "sphtri/geometry.hpp"
#include "sphtri/render.hpp"

namespace sphtri {
namespace {

constexpr double kPi = 3.14159265358979323846;

void expect_triple(const AngleTriple& got, const AngleTriple& want, double tol) {
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], want[i], tol) << "component " << i;
}

void expect_sides(const std::array<double, 3>& got, const std::array<double, 3>& want, double tol) {
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], want[i], tol) << "side " << i;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::BadInput;
}

// Every corner on the unit sphere and on the circles of its two sides.
void expect_well_formed(const TriangleRecord& r) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(norm(r.corners[i]), 1.0, 1e-12);
    EXPECT_NEAR(norm(r.sides[i].normal), 1.0, 1e-12);
    EXPECT_NEAR(dot(r.sides[i].normal, r.corners[(i + 1) % 3]), 0.0, 1e-12);
    EXPECT_NEAR(dot(r.sides[i].normal, r.corners[(i + 2) % 3]), 0.0, 1e-12);
    EXPECT_GT(r.sides[i].frac_length, 0.0);
    EXPECT_LE(r.sides[i].frac_length, 2.0);
    EXPECT_GE(r.sides[i].winding, 0);
  }
}

TEST(Primitive, ClassicalExamples) {
  const auto oct = solve_primitive({0.5, 0.5, 0.5});
  expect_sides(measure_sides(oct), {0.5, 0.5, 0.5}, 1e-12);
  EXPECT_EQ(oct.corners[1], (Vec3{1, 0, 0}));
  EXPECT_NEAR(oct.corners[2].z, 0.0, 1e-15);
  expect_well_formed(oct);

  expect_sides(measure_sides(solve_primitive({0.5, 0.5, 0.75})), {0.5, 0.5, 0.75}, 1e-12);

  // Law of cosines in angle form as the oracle.
  const double A = 0.9 * kPi;
  const double a = std::acos((std::cos(A) + std::cos(A) * std::cos(A)) / (std::sin(A) * std::sin(A))) / kPi;
  const auto eq = solve_primitive({0.9, 0.9, 0.9});
  expect_sides(measure_sides(eq), {a, a, a}, 1e-12);
  expect_triple(measure_angles(eq), {0.9, 0.9, 0.9}, 1e-9);
}

TEST(Primitive, RejectsOutsideRegion) {
  EXPECT_EQ(code_of([] { solve_primitive({0.25, 0.25, 0.25}); }), ErrorCode::OutOfRegion);
  EXPECT_EQ(code_of([] { solve_primitive({1.2, 0.5, 0.5}); }), ErrorCode::OutOfRegion);
}

TEST(Construct, Examples) {
  const auto hemi = construct({1, 1, 1}, {0.6, 0.7});
  expect_sides(measure_sides(hemi), {0.6, 0.7, 0.7}, 1e-12);
  expect_triple(measure_angles(hemi), {1, 1, 1}, 1e-12);
  expect_well_formed(hemi);

  const auto delta = construct({2, 0.5, 0.5}, {0.3});
  const auto ds = measure_sides(delta);
  EXPECT_EQ(ds[0], 2.0);
  EXPECT_NEAR(ds[1], ds[2], 1e-12);
  EXPECT_LT(ds[1], 1.0);
  expect_triple(measure_angles(delta), {2, 0.5, 0.5}, 1e-12);

  const auto e6 = embed_r6(construct({1.5, 1, 1.5}, {0.25}));
  const std::array<double, 6> want{1.5, 1, 1.5, 0.25, 1, 0.75};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(e6[i], want[i], 1e-12);

  // (2.3, 1.2, 1.4) lies outside the space; a nearby admissible triple
  // plays the same role.
  EXPECT_EQ(code_of([] { construct({2.3, 1.2, 1.4}); }), ErrorCode::NotRealizable);
  const auto r = construct({2.3, 1.2, 1.6});
  expect_triple(measure_angles(r), {2.3, 1.2, 1.6}, 1e-8);
  expect_well_formed(r);
}

TEST(Construct, ParameterErrors) {
  EXPECT_EQ(code_of([] { construct({0.5, 0.5, 0.5}, {0.1}); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { construct({1, 1, 1}, {0.6}); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { construct({1, 1, 1}, {1.2, 1.1}); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { construct({2, 0.5, 0.5}, {1.0}); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { construct({2, 0.5, 0.5}, {NAN}); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { construct({3, 1, 1}); }), ErrorCode::NotRealizable);
}

TEST(Construct, FamilyParamsRoundtrip) {
  for (double p : {0.05, 0.3, 0.5, 0.95}) {
    EXPECT_NEAR(family_params(construct({2, 0.5, 0.5}, {p}))[0], p, 1e-12);
    EXPECT_NEAR(family_params(construct({1.5, 1, 1.5}, {p}))[0], p, 1e-12);
    EXPECT_NEAR(family_params(construct({3, 0.4, 0.4}, {p}))[0], p, 1e-12);
  }
  const auto fp = family_params(construct({2, 2, 1}, {0.5, 0.8}));
  ASSERT_EQ(fp.size(), 2u);
  EXPECT_NEAR(fp[0], 0.5, 1e-12);
  EXPECT_NEAR(fp[1], 0.8, 1e-12);
  EXPECT_TRUE(family_params(construct({0.5, 0.5, 0.5})).empty());
}

TEST(Measure, Examples) {
  const auto hemi = measure_sides(construct({1, 1, 1}, {0.3, 0.4}));
  EXPECT_NEAR(hemi[0] + hemi[1] + hemi[2], 2.0, 1e-12);
  const auto oct = embed_r6(construct({0.5, 0.5, 0.5}));
  for (double x : oct) EXPECT_NEAR(x, 0.5, 1e-12);
  const auto h6 = embed_r6(construct({1, 1, 1}, {0.6, 0.7}));
  const std::array<double, 6> want{1, 1, 1, 0.6, 0.7, 0.7};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(h6[i], want[i], 1e-12);
}

TEST(Measure, DegenerateSide) {
  auto r = construct({0.5, 0.5, 0.5});
  r.corners[2] = r.corners[1];
  EXPECT_EQ(code_of([&] { measure_sides(r); }), ErrorCode::DegenerateCorner);
}

TEST(Attach, Examples) {
  const auto hemi = construct({1, 1, 1}, {0.6, 0.7});
  const auto h1 = attach(hemi, 1, 0, 0);
  expect_triple(measure_angles(h1), {1, 2, 2}, 1e-12);
  expect_sides(measure_sides(h1), {1.4, 0.7, 0.7}, 1e-12);
  EXPECT_EQ(h1.dev_degree, hemi.dev_degree + 1);
  EXPECT_EQ(h1.corners, hemi.corners);

  const auto oct = construct({0.5, 0.5, 0.5});
  const auto o3 = attach(oct, 1, 1, 1);
  expect_triple(measure_angles(o3), {2.5, 2.5, 2.5}, 1e-12);
  expect_sides(measure_sides(o3), {1.5, 1.5, 1.5}, 1e-12);
  for (const auto& s : o3.sides) {
    EXPECT_EQ(s.winding, 0);
    EXPECT_NEAR(s.frac_length, 1.5, 1e-12);
  }
  // The same triangle built directly from its angles.
  expect_sides(measure_sides(construct({2.5, 2.5, 2.5})), {1.5, 1.5, 1.5}, 1e-12);

  const auto same = attach(oct, 0, 0, 0);
  EXPECT_EQ(same.corners, oct.corners);
  EXPECT_EQ(embed_r6(same), embed_r6(oct));
  EXPECT_EQ(same.dev_degree, oct.dev_degree);
}

TEST(Attach, LongSideRejected) {
  const auto delta = construct({2, 0.5, 0.5}, {0.3});
  EXPECT_EQ(code_of([&] { attach(delta, 1, 0, 0); }), ErrorCode::LongSideAttachment);
  // The short sides still accept hemispheres.
  expect_triple(measure_angles(attach(delta, 0, 1, 0)), {3, 0.5, 1.5}, 1e-12);
}

TEST(Complement, Examples) {
  const auto oct = construct({0.5, 0.5, 0.5});
  const auto t = complement_tau(oct);
  expect_triple(measure_angles(t), {1.5, 1.5, 1.5}, 1e-12);
  expect_sides(measure_sides(t), {0.5, 0.5, 0.5}, 1e-12);
  const auto back = complement_tau(t);
  expect_triple(measure_angles(back), {0.5, 0.5, 0.5}, 1e-12);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(norm(back.corners[i] - oct.corners[i]), 0.0, 1e-15);
  }

  const auto r = construct({0.5, 0.5, 1.5});
  const auto tr = complement_tau(r);
  expect_triple(measure_angles(tr), {1.5, 1.5, 0.5}, 1e-9);
  expect_sides(measure_sides(tr), measure_sides(r), 1e-9);
  expect_sides(measure_sides(construct({1.5, 1.5, 0.5})), measure_sides(r), 1e-9);
}

TEST(Complement, Domain) {
  EXPECT_EQ(code_of([] { complement_tau(construct({2.5, 0.3, 0.4})); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { complement_tau(construct({1, 1, 1}, {0.6, 0.7})); }),
            ErrorCode::OutOfDomain);
}

TEST(Charts, Examples) {
  const auto oct = chart_coordinates(construct({0.5, 0.5, 0.5}));
  EXPECT_EQ(oct.kind, ChartCoordinates::Kind::Short);
  EXPECT_EQ(oct.vertex, (LatticeVertex{1, 1, 1}));
  EXPECT_EQ(oct.subchart, SubChart::UA);
  EXPECT_NEAR(oct.arc_length, 0.5, 1e-12);
  EXPECT_GT(oct.apex.z, 0.0);

  const auto seq = chart_coordinates(construct({2.5, 0.3, 0.4}));
  EXPECT_EQ(seq.kind, ChartCoordinates::Kind::Sequence);
  ASSERT_TRUE(seq.seed.has_value());
  EXPECT_EQ(*seq.seed, EdgeRef::between(LatticeVertex{1, 1, 1}, LatticeVertex{1, 0, 0}));
  EXPECT_NEAR(seq.total_angle, 2.5, 1e-12);
  EXPECT_GT(seq.apex.z, 0.0);

  // Balanced vertices away from the origin carry their own chart.
  const auto far = chart_coordinates(construct({2.4, 1.3, 2.2}));
  EXPECT_EQ(far.kind, ChartCoordinates::Kind::Short);
  EXPECT_TRUE(is_balanced(far.vertex.coords()));
}

TEST(Charts, HemisphereApexOnEquator) {
  const auto rec = construct({1, 1, 1}, {0.6, 0.7});
  try {
    const auto c = chart_coordinates(rec);
    EXPECT_NEAR(c.apex.z, 0.0, 1e-12);
    EXPECT_EQ(c.vertex, (LatticeVertex{1, 1, 1}));
  } catch (const Error& e) {
    ADD_FAILURE() << e.what();
  }
}

// Zero-dimensional strata carry a single triangle, so
// every admissible chart has to produce it.
TEST(Uniqueness, ForcedChartsAgree) {
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Sample s = sample_interior(rng, 6);
    const Stratum st = classify(s.t);
    if (stratum_balance(st).balance == Balance::Unbalanced) continue;
    const auto ref = embed_r6(construct(s.t));
    for (const auto& v : tetra_vertices(st.as<InteriorStratum>().tetra)) {
      if (!is_balanced(v.coords())) continue;
      for (int sc = 0; sc < 3; ++sc) {
        ConstructOptions opt;
        opt.vertex = v;
        opt.subchart = static_cast<SubChart>(sc);
        TriangleRecord r;
        try {
          r = construct(s.t, {}, opt);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
          continue;
        }
        const auto e6 = embed_r6(r);
        for (int i = 0; i < 6; ++i) EXPECT_NEAR(e6[i], ref[i], 1e-8);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 400);
}

TEST(Uniqueness, EdgeFamiliesAcrossVertices) {
  // An edge with two balanced ends is reachable from either chart.
  const EdgeRef e = EdgeRef::between(LatticeVertex{1, 1, 1}, LatticeVertex{2, 1, 2});
  ASSERT_TRUE(is_balanced(e.second().coords()));
  const AngleTriple t{1.4, 1, 1.4};
  for (double p : {0.2, 0.7}) {
    ConstructOptions o1, o2;
    o1.vertex = e.first();
    o2.vertex = e.second();
    const auto r1 = embed_r6(construct(t, {p}, o1));
    const auto r2 = embed_r6(construct(t, {p}, o2));
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(r1[i], r2[i], 1e-8);
  }
}

TEST(Uniqueness, LongSidedRejectsForcedCharts) {
  ConstructOptions opt;
  opt.vertex = LatticeVertex{1, 1, 1};
  EXPECT_EQ(code_of([&] { construct({2.5, 0.3, 0.4}, {}, opt); }), ErrorCode::OutOfDomain);
}

TEST(Families, EmbeddingSeparatesParameters) {
  for (const auto& [t, dim] : std::vector<std::pair<AngleTriple, int>>{
           {{2, 0.5, 0.5}, 1}, {{1.5, 1, 1.5}, 1}, {{0.4, 3, 0.4}, 1}}) {
    std::vector<std::array<double, 6>> seen;
    for (int i = 1; i < 20; ++i) seen.push_back(embed_r6(construct(t, {i / 20.0})));
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (std::size_t j = i + 1; j < seen.size(); ++j) {
        double d = 0;
        for (int k = 0; k < 6; ++k) d += std::abs(seen[i][k] - seen[j][k]);
        EXPECT_GT(d, 1e-3) << dim;
      }
  }
}

// Short-sided exactly when the angles sit within (-1,1) of a
// balanced vertex in every coordinate.
TEST(ShortSided, CoverageLaw) {
  std::mt19937_64 rng(11);
  int short_count = 0, long_count = 0;
  for (int i = 0; i < 1500; ++i) {
    Sample s;
    switch (i % 3) {
      case 0: s = sample_interior(rng, 8); break;
      case 1: s = sample_edge(rng, 8); break;
      default: s = sample_vertex(rng, 8); break;
    }
    const auto sides = measure_sides(construct(s.t, s.params));
    const bool all_short = sides[0] < 2 && sides[1] < 2 && sides[2] < 2;
    bool near_balanced = false;
    for (int m = 0; m <= 9; ++m)
      for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= 9; ++k) {
          if ((m + n + k) % 2 == 0 || !is_balanced(Int3{m, n, k})) continue;
          near_balanced = near_balanced ||
                          (std::abs(s.t.A - m) < 1 && std::abs(s.t.B - n) < 1 && std::abs(s.t.C - k) < 1);
        }
    EXPECT_EQ(all_short, near_balanced) << s.t.A << " " << s.t.B << " " << s.t.C;
    (all_short ? short_count : long_count)++;
  }
  EXPECT_GT(short_count, 100);
  EXPECT_GT(long_count, 100);
}

TEST(DegreeLaw, IntegerAngles) {
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= 7; ++k) {
        if ((m + n + k) % 2 == 0 || !is_balanced(Int3{m, n, k})) continue;
        const Int3 pqr = *pqr_from_vertex(LatticeVertex{m, n, k});
        const double a = pqr[0] % 2 == 0 ? 0.5 : 1.5;
        const double b = pqr[1] % 2 == 0 ? 0.7 : 1.3;
        const auto r = construct({double(m), double(n), double(k)}, {a, b});
        EXPECT_EQ(r.dev_degree, 1 + pqr[0] + pqr[1] + pqr[2]);
        EXPECT_EQ(r.dev_degree, (m + n + k - 1) / 2);
        EXPECT_EQ(r.attachments, pqr);
        expect_triple(measure_angles(r), {double(m), double(n), double(k)}, 1e-12);
      }
}

TEST(DegreeLaw, SequencesAddWindings) {
  // Each extra pair of half-turns at the dominant corner adds one sheet.
  const int d3 = construct({3.5, 0.3, 0.4}).dev_degree;
  const int d5 = construct({5.5, 0.3, 0.4}).dev_degree;
  EXPECT_EQ(d5, d3 + 1);
  EXPECT_EQ(construct({2.5, 0.3, 0.4}).dev_degree, 2);
}

TEST(RecordJson, Roundtrip) {
  for (const auto& r : {construct({0.5, 0.5, 0.5}), construct({1, 1, 1}, {0.6, 0.7}),
                        construct({2, 0.5, 0.5}, {0.3}), construct({7.3, 2.2, 2.4}),
                        attach(construct({0.5, 0.5, 0.75}), 2, 0, 1)}) {
    const std::string text = record_to_json(r);
    EXPECT_EQ(record_to_json(r), text);  // deterministic
    const auto back = record_from_json(text);
    EXPECT_EQ(back.corners, r.corners);
    EXPECT_EQ(back.angle_floor, r.angle_floor);
    EXPECT_EQ(back.attachments, r.attachments);
    EXPECT_EQ(back.stratum, r.stratum);
    EXPECT_EQ(back.dev_degree, r.dev_degree);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(back.sides[i].normal, r.sides[i].normal);
      EXPECT_EQ(back.sides[i].frac_length, r.sides[i].frac_length);
      EXPECT_EQ(back.sides[i].winding, r.sides[i].winding);
    }
    EXPECT_EQ(record_to_json(back), text);
  }
}

TEST(RecordJson, RejectsBadInput) {
  EXPECT_EQ(code_of([] { record_from_json("{"); }), ErrorCode::BadInput);
  EXPECT_EQ(code_of([] { record_from_json("{}"); }), ErrorCode::BadInput);
  std::string text = record_to_json(construct({0.5, 0.5, 0.5}));
  const auto pos = text.find("\"corners\"");
  ASSERT_NE(pos, std::string::npos);
  const auto num = text.find_first_of("-0123456789", pos);
  text.replace(num, 1, "3");
  EXPECT_EQ(code_of([&] { record_from_json(text); }), ErrorCode::BadInput);
}

TEST(Render, DeterministicSvg) {
  const auto rec = construct({2.3, 1.2, 1.6});
  const auto a = render_svg(rec), b = render_svg(rec);
  EXPECT_EQ(a.svg, b.svg);
  EXPECT_FALSE(a.rotated);
  EXPECT_NE(a.svg.find("<svg"), std::string::npos);
  EXPECT_NE(a.svg.find("data-side=\"a\""), std::string::npos);
  RenderSpec ortho;
  ortho.projection = Projection::Orthographic;
  EXPECT_NE(render_svg(rec, ortho).svg, a.svg);
}

TEST(Render, RotatesCornersOffPole) {
  auto rec = construct({0.5, 0.5, 0.5});
  for (auto& c : rec.corners) c = {c.x, -c.y, -c.z};
  for (auto& s : rec.sides) s.normal = {s.normal.x, -s.normal.y, -s.normal.z};
  EXPECT_TRUE(render_svg(rec).rotated);
}

TEST(Render, RejectsTinyCanvas) {
  RenderSpec spec;
  spec.size_px = 63;
  EXPECT_EQ(code_of([&] { render_svg(construct({0.5, 0.5, 0.5}), spec); }), ErrorCode::BadInput);
}

}  // namespace
}  // namespace sphtri
