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

// SVG pictures of triangle records: the three side circles, the corners,
// and the boundary path traced with multiplicity.
#pragma once

#include <string>

#include "sphtri/geometry.hpp"

namespace sphtri {

enum class Projection { Stereographic, Orthographic };

struct RenderSpec {
  Projection projection = Projection::Stereographic;  // from (0,0,-1)
  int size_px = 480;                                  // square canvas, >= 64
  // Stroke style per side a, b, c. A circle carrying two sides is drawn in
  // both styles at once.
  std::array<std::string, 3> colors{"#c0392b", "#2471a3", "#1e8449"};
  std::array<std::string, 3> dashes{"", "6 4", "2 3"};
};

struct RenderResult {
  std::string svg;
  bool rotated = false;  // the figure was turned to keep corners off the pole
};

/// Throws Error(BadInput) for a canvas under 64 px.
RenderResult render_svg(const TriangleRecord& rec, const RenderSpec& spec = {});

}  // namespace sphtri
