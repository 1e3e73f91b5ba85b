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

// TriangleRecord <-> JSON. Output is written by hand so that every real is
// printed with 17 significant digits and the byte stream is reproducible;
// input goes through nlohmann::json.
#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "sphtri/error.hpp"
#include "sphtri/geometry.hpp"

namespace sphtri {

namespace {

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

std::string vec(const Vec3& v) { return "[" + real(v.x) + ", " + real(v.y) + ", " + real(v.z) + "]"; }

std::string ints(const Int3& v) {
  return "[" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) +
         "]";
}

std::string stratum_json(const Stratum& s) {
  if (s.is<InteriorStratum>()) {
    return "{\"kind\": \"interior\", \"tetra\": " + ints(s.as<InteriorStratum>().tetra.idx) + "}";
  }
  if (s.is<EdgeStratum>()) {
    const auto& e = s.as<EdgeStratum>();
    return "{\"kind\": \"edge\", \"edge\": [" + ints(e.edge.first().coords()) + ", " +
           ints(e.edge.second().coords()) + "], \"position\": " + real(e.position) + "}";
  }
  if (s.is<VertexStratum>()) {
    return "{\"kind\": \"vertex\", \"vertex\": " + ints(s.as<VertexStratum>().vertex.coords()) + "}";
  }
  return "{\"kind\": \"none\"}";
}

Vec3 vec_from(const nlohmann::json& j) {
  const auto a = j.get<std::array<double, 3>>();
  return {a[0], a[1], a[2]};
}

Stratum stratum_from(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "interior") return {InteriorStratum{TetraIndex{j.at("tetra").get<Int3>()}}};
  if (kind == "edge") {
    const auto& e = j.at("edge");
    return {EdgeStratum{EdgeRef::between(LatticeVertex{e.at(0).get<Int3>()},
                                         LatticeVertex{e.at(1).get<Int3>()}),
                        j.at("position").get<double>()}};
  }
  if (kind == "vertex") return {VertexStratum{LatticeVertex{j.at("vertex").get<Int3>()}}};
  if (kind == "none") return {NotInX{}};
  throw Error(ErrorCode::BadInput, "unknown stratum kind '" + kind + "'");
}

}  // namespace

std::string record_to_json(const TriangleRecord& rec) {
  std::string out = "{\n  \"corners\": [";
  for (int i = 0; i < 3; ++i) out += (i ? ", " : "") + vec(rec.corners[i]);
  out += "],\n  \"sides\": [";
  for (int i = 0; i < 3; ++i) {
    const SideArc& s = rec.sides[i];
    out += (i ? ",\n            " : "") + std::string("{\"normal\": ") + vec(s.normal) +
           ", \"frac\": " + real(s.frac_length) + ", \"winding\": " + std::to_string(s.winding) +
           "}";
  }
  out += "],\n  \"angle_floor\": " + ints(rec.angle_floor);
  out += ",\n  \"attachments\": " + ints(rec.attachments);
  out += ",\n  \"stratum\": " + stratum_json(rec.stratum);
  out += ",\n  \"dev_degree\": " + std::to_string(rec.dev_degree);
  out += "\n}\n";
  return out;
}

TriangleRecord record_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    TriangleRecord rec;
    const auto& corners = j.at("corners");
    const auto& sides = j.at("sides");
    if (corners.size() != 3 || sides.size() != 3) {
      throw Error(ErrorCode::BadInput, "a record has three corners and three sides");
    }
    for (int i = 0; i < 3; ++i) {
      rec.corners[i] = vec_from(corners.at(i));
      const auto& s = sides.at(i);
      rec.sides[i] = {vec_from(s.at("normal")), s.at("frac").get<double>(),
                      s.at("winding").get<int>()};
    }
    rec.angle_floor = j.at("angle_floor").get<Int3>();
    rec.attachments = j.at("attachments").get<Int3>();
    rec.stratum = stratum_from(j.at("stratum"));
    rec.dev_degree = j.at("dev_degree").get<int>();
    for (const auto& c : rec.corners) {
      if (std::abs(norm(c) - 1.0) > 1e-9) throw Error(ErrorCode::BadInput, "corner off the sphere");
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
}

}  // namespace sphtri
