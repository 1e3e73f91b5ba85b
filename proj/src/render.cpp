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

#include "sphtri/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "sphtri/error.hpp"

namespace sphtri {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct P2 {
  double x = 0;
  double y = 0;
};

// Rotation about the x axis by the given angle.
Vec3 turn(const Vec3& v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {v.x, c * v.y - s * v.z, s * v.y + c * v.z};
}

class Canvas {
 public:
  Canvas(const RenderSpec& spec, double extent) : spec_(spec), extent_(extent) {}

  std::optional<P2> project(const Vec3& v) const {
    if (spec_.projection == Projection::Orthographic) return to_px(v.x, v.y);
    const double d = 1.0 + v.z;
    if (d < 1e-9) return std::nullopt;
    const double x = v.x / d, y = v.y / d;
    if (std::abs(x) > 4 * extent_ || std::abs(y) > 4 * extent_) return std::nullopt;
    return to_px(x, y);
  }

  double size() const { return spec_.size_px; }

 private:
  P2 to_px(double x, double y) const {
    const double half = spec_.size_px / 2.0;
    return {half + x * half / extent_, half - y * half / extent_};
  }

  const RenderSpec& spec_;
  double extent_;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return std::string(buf) == "-0.00" ? "0.00" : buf;
}

// Point at arc angle theta from p along the circle with the given normal.
Vec3 along(const Vec3& p, const Vec3& n, double theta) {
  return std::cos(theta) * p + std::sin(theta) * cross(n, p);
}

// Polylines of the arc, broken wherever the projection blows up.
std::vector<std::vector<P2>> trace(const Canvas& cv, const Vec3& from, const Vec3& n,
                                   double half_turns) {
  std::vector<std::vector<P2>> out(1);
  const int steps = std::max(8, static_cast<int>(std::ceil(half_turns * 180)));
  for (int i = 0; i <= steps; ++i) {
    const auto p = cv.project(along(from, n, kPi * half_turns * i / steps));
    if (!p) {
      if (!out.back().empty()) out.emplace_back();
      continue;
    }
    out.back().push_back(*p);
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

std::string polyline(const std::vector<P2>& pts, const std::string& color, double width,
                     const std::string& dash, const std::string& extra = "") {
  std::string s = "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
                  "\"";
  if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
  s += extra + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].x) + "," + num(pts[i].y);
  }
  return s + "\"/>\n";
}

bool same_circle(const Vec3& a, const Vec3& b) { return norm(cross(a, b)) < 1e-9; }

}  // namespace

RenderResult render_svg(const TriangleRecord& rec, const RenderSpec& spec) {
  if (spec.size_px < 64) throw Error(ErrorCode::BadInput, "canvas must be at least 64 px");
  RenderResult res;

  // Keep the corners away from the projection pole.
  double angle = 0;
  if (spec.projection == Projection::Stereographic) {
    for (double a : {0.0, 0.5, -0.5, 1.0, -1.0, 0.25}) {
      bool clear = true;
      for (const auto& c : rec.corners) clear = clear && turn(c, a * kPi).z > -1 + 1e-3;
      if (clear) {
        angle = a * kPi;
        break;
      }
    }
    res.rotated = angle != 0;
  }
  std::array<Vec3, 3> corners, normals;
  for (int i = 0; i < 3; ++i) {
    corners[i] = turn(rec.corners[i], angle);
    normals[i] = turn(rec.sides[i].normal, angle);
  }

  double extent = 1.15;
  if (spec.projection == Projection::Stereographic) {
    for (const auto& c : corners) {
      const double r = std::hypot(c.x, c.y) / (1 + c.z);
      extent = std::max(extent, std::min(1.15 * r + 0.1, 4.0));
    }
  }
  const Canvas cv(spec, extent);
  const double sz = spec.size_px;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.size_px) +
         "\" height=\"" + std::to_string(spec.size_px) + "\" viewBox=\"0 0 " + num(sz) + " " +
         num(sz) + "\">\n";
  if (res.rotated) svg += "<!-- auto-rotated: a corner was at the projection pole -->\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Reference: the equator for stereographic, the disc outline otherwise.
  {
    const double half = sz / 2;
    const double r = half / extent;
    svg += "<circle cx=\"" + num(half) + "\" cy=\"" + num(half) + "\" r=\"" + num(r) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.75\"/>\n";
  }

  // Full side circles, thin. Coincident circles get both styles.
  svg += "<g id=\"circles\" opacity=\"0.55\">\n";
  for (int i = 0; i < 3; ++i) {
    int twin = -1;
    for (int j = 0; j < i; ++j)
      if (same_circle(normals[i], normals[j])) twin = j;
    if (twin >= 0) continue;  // drawn with its first side
    int partner = -1;
    for (int j = i + 1; j < 3; ++j)
      if (same_circle(normals[i], normals[j]) && partner < 0) partner = j;
    const Vec3 start = corners[(i + 1) % 3];
    for (const auto& line : trace(cv, start, normals[i], 2.0)) {
      svg += polyline(line, spec.colors[i], 1.0, "");
      if (partner >= 0) svg += polyline(line, spec.colors[partner], 1.0, "5 5");
    }
  }
  svg += "</g>\n";

  // The boundary, sides traced with their full length.
  svg += "<g id=\"boundary\">\n";
  for (int i = 0; i < 3; ++i) {
    const std::string id = std::string(" data-side=\"") + "abc"[i] + "\"";
    for (const auto& line : trace(cv, corners[(i + 1) % 3], normals[i], rec.sides[i].length())) {
      svg += polyline(line, spec.colors[i], 2.5, spec.dashes[i], id);
    }
  }
  svg += "</g>\n";

  svg += "<g id=\"corners\" font-family=\"serif\" font-size=\"16\" font-weight=\"bold\">\n";
  for (int i = 0; i < 3; ++i) {
    const auto p = cv.project(corners[i]);
    if (!p) continue;
    svg += "<circle cx=\"" + num(p->x) + "\" cy=\"" + num(p->y) + "\" r=\"3.5\" fill=\"black\"/>\n";
    svg += "<text x=\"" + num(p->x + 6) + "\" y=\"" + num(p->y - 6) + "\">" + "ABC"[i] +
           "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  res.svg = std::move(svg);
  return res;
}

}  // namespace sphtri
