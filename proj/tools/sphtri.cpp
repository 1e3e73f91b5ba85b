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

// Command-line front end. Exit codes: 0 ok, 1 negative answer (not in the
// space, not realizable, isomorphism failed, self-test failed), 2 other
// library errors, 3 boundary indeterminate, 64 usage, 65 bad parameters,
// 66 unreadable input.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphtri/acceptance.hpp"
#include "sphtri/error.hpp"
#include "sphtri/geometry.hpp"
#include "sphtri/render.hpp"
#include "sphtri/strata.hpp"

#ifndef SPHTRI_FIXTURE_DIR
#define SPHTRI_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

using namespace sphtri;

constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitBoundary = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_eps() {
  const char* env = std::getenv("SPHTRI_EPS");
  if (!env || !*env) return kDefaultEps;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0)) throw UsageError("SPHTRI_EPS must be a positive number");
  return v;
}

AngleTriple to_triple(const std::vector<double>& v, bool degrees) {
  const double k = degrees ? 1.0 / 180.0 : 1.0;
  return {v[0] * k, v[1] * k, v[2] * k};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string stratum_kind(const Stratum& s) {
  if (s.is<VertexStratum>()) return "vertex";
  if (s.is<EdgeStratum>()) return "edge";
  if (s.is<InteriorStratum>()) return "interior";
  return "none";
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "cannot write " << path << "\n";
    return kExitError;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::vector<double> angles;
  std::optional<double> eps;
  bool json = false;
  bool degrees = false;
};

int cmd_classify(const ClassifyArgs& a) {
  const AngleTriple t = to_triple(a.angles, a.degrees);
  const double eps = a.eps ? *a.eps : default_eps();
  Stratum s;
  try {
    s = classify(t, eps);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::BoundaryIndeterminate ? kExitBoundary : kExitError;
  }
  nlohmann::ordered_json j;
  j["angles"] = {t.A, t.B, t.C};
  j["in_x"] = s.in_x();
  j["stratum"] = to_string(s);
  j["kind"] = stratum_kind(s);
  std::optional<Int3> pqr;
  if (s.in_x()) {
    const auto b = stratum_balance(s);
    j["balance"] = to_string(b.balance);
    j["dimension"] = s.family_dimension();
    if (s.is<VertexStratum>()) pqr = pqr_from_vertex(s.as<VertexStratum>().vertex);
    if (pqr) j["pqr"] = *pqr;
    if (const auto pos = sequence_of(s)) {
      j["sequence"] = {{"seed", {pos->seed.first().coords(), pos->seed.second().coords()}},
                       {"j", pos->j}};
    }
  }
  if (a.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "stratum: " << to_string(s) << "\n";
    if (s.in_x()) {
      std::cout << "balance: " << j["balance"].get<std::string>() << "\n";
      std::cout << "dimension: " << s.family_dimension() << "\n";
      if (pqr) std::cout << "pqr: " << to_string(*pqr) << "\n";
      if (j.contains("sequence")) {
        const auto pos = sequence_of(s);
        std::cout << "sequence: seed " << to_string(pos->seed) << ", j = " << pos->j << "\n";
      }
    }
  }
  return s.in_x() ? 0 : kExitNo;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::vector<double> angles;
  std::string params;
  std::string out;
  bool degrees = false;
};

FamilyParams parse_params(const std::string& text) {
  FamilyParams out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::ParamOutOfRange, "bad parameter '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_construct(const ConstructArgs& a) {
  const AngleTriple t = to_triple(a.angles, a.degrees);
  try {
    ConstructOptions opt;
    opt.eps = default_eps();
    const TriangleRecord rec = construct(t, parse_params(a.params), opt);
    const auto e = embed_r6(rec);
    std::string line = "embedding:";
    for (double x : e) line += " " + fmt(x);
    // Keep stdout clean when it carries the record.
    (a.out == "-" ? std::cerr : std::cout) << line << "\n";
    if (!a.out.empty()) return write_output(a.out, record_to_json(rec));
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotRealizable: return kExitNo;
      case ErrorCode::ParamOutOfRange: return kExitData;
      case ErrorCode::BoundaryIndeterminate: return kExitBoundary;
      default: return kExitError;
    }
  }
}

// ---------------------------------------------------------------------------

int cmd_enumerate(int box, bool json) {
  const auto inv = enumerate(box);
  const auto j = nlohmann::ordered_json::parse(inventory_to_json(inv));
  if (json) {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "box " << box << "\n";
  for (const auto& [k, v] : j["counts"].items()) std::cout << k << ": " << v << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct SkeletonArgs {
  int box = 1;
  std::string labeling = "pqr";
  std::string format = "dot";
  std::string out;
  bool check_iso = false;
};

int cmd_skeleton(const SkeletonArgs& a) {
  if (a.check_iso) {
    const bool ok = check_lambda1_isomorphism(a.box);
    std::cout << (ok ? "PASS" : "FAIL") << " lambda1 isomorphism, box " << a.box << "\n";
    return ok ? 0 : kExitNo;
  }
  const SkeletonGraph g = a.labeling == "pqr" ? lambda1_graph(a.box) : balanced_graph(a.box);
  return write_output(a.out, export_graph(g, a.format == "dot" ? GraphFormat::Dot : GraphFormat::Json));
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  std::string input;
  std::string projection = "stereographic";
  int size = 480;
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  std::ifstream f(a.input, std::ios::binary);
  if (!f) {
    std::cerr << "cannot read " << a.input << "\n";
    return kExitNoInput;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  TriangleRecord rec;
  try {
    rec = record_from_json(buf.str());
  } catch (const Error& e) {
    std::cerr << a.input << ": " << e.what() << "\n";
    return kExitNoInput;
  }
  RenderSpec spec;
  spec.projection = a.projection == "orthographic" ? Projection::Orthographic : Projection::Stereographic;
  spec.size_px = a.size;
  const RenderResult r = render_svg(rec, spec);
  if (r.rotated) std::cerr << "note: figure rotated to keep the corners off the projection pole\n";
  return write_output(a.out, r.svg);
}

// ---------------------------------------------------------------------------

// The enumeration counts for box 3 are frozen in a fixture file; a mismatch
// means the build or the install is broken.
bool check_fixture(const std::string& dir, std::string& detail) {
  const std::string path = dir + "/enumerate_box3_counts.json";
  std::ifstream f(path);
  if (!f) {
    detail = "cannot read " + path;
    return false;
  }
  try {
    const auto want = nlohmann::ordered_json::parse(f);
    const auto got = nlohmann::ordered_json::parse(inventory_to_json(enumerate(3)))["counts"];
    if (want != got) {
      detail = "counts differ from " + path;
      return false;
    }
  } catch (const nlohmann::json::exception& e) {
    detail = path + ": " + e.what();
    return false;
  }
  detail = "enumeration counts match " + path;
  return true;
}

int cmd_selftest(const std::string& level, const std::string& fixtures) {
  const auto lv = level == "full" ? AcceptanceLevel::Full : AcceptanceLevel::Quick;
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    const auto r = run_criterion(id, lv);
    std::cout << format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::string detail;
  const bool ok = check_fixture(fixtures, detail);
  std::cout << (ok ? "PASS" : "FAIL") << "    golden fixture            " << detail << "\n";
  failed += !ok;
  std::cout << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed")
            << "\n";
  return failed == 0 ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical triangles with arbitrary angles: strata, charts and constructions"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Locate an angle triple in the stratification");
  classify_cmd->add_option("angles", ca.angles, "A B C in half-turns")->expected(3)->required();
  classify_cmd->add_option("--eps", ca.eps, "boundary tolerance (default: $SPHTRI_EPS or 1e-9)")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--json", ca.json, "print a JSON report");
  classify_cmd->add_flag("--degrees", ca.degrees, "angles are given in degrees");

  ConstructArgs co;
  auto* construct_cmd = app.add_subcommand("construct", "Build the triangle with the given angles");
  construct_cmd->add_option("angles", co.angles, "A B C in half-turns")->expected(3)->required();
  construct_cmd->add_option("--params", co.params, "family parameters, comma separated");
  construct_cmd->add_option("--out", co.out, "write the record as JSON ('-' for stdout)");
  construct_cmd->add_flag("--degrees", co.degrees, "angles are given in degrees");

  int box = 1;
  bool enum_json = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List lattice strata in a box");
  enumerate_cmd->add_option("--box", box, "box size N >= 1")->check(CLI::Range(1, 64));
  enumerate_cmd->add_flag("--json", enum_json, "print the full inventory as JSON");

  SkeletonArgs sk;
  auto* skeleton_cmd = app.add_subcommand("skeleton", "Export the cubic skeleton graph");
  skeleton_cmd->add_option("--box", sk.box, "box size N >= 0")->check(CLI::Range(0, 64));
  skeleton_cmd->add_option("--labeling", sk.labeling, "pqr or mnk")
      ->check(CLI::IsMember({"pqr", "mnk"}));
  skeleton_cmd->add_option("--format", sk.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  skeleton_cmd->add_option("--out", sk.out, "output file (default stdout)");
  skeleton_cmd->add_flag("--check-iso", sk.check_iso, "verify the pqr/mnk isomorphism");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand("render", "Draw a record as SVG");
  render_cmd->add_option("record", ra.input, "record JSON file")->required();
  render_cmd->add_option("--projection", ra.projection, "stereographic or orthographic")
      ->check(CLI::IsMember({"stereographic", "orthographic"}));
  render_cmd->add_option("--size", ra.size, "canvas size in px (>= 64)")->check(CLI::Range(64, 8192));
  render_cmd->add_option("--out", ra.out, "output file (default stdout)");

  std::string level = "quick";
  std::string fixtures = SPHTRI_FIXTURE_DIR;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  selftest_cmd->add_option("--fixtures", fixtures, "directory with golden fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca);
    if (*construct_cmd) return cmd_construct(co);
    if (*enumerate_cmd) return cmd_enumerate(box, enum_json);
    if (*skeleton_cmd) return cmd_skeleton(sk);
    if (*render_cmd) return cmd_render(ra);
    if (*selftest_cmd) return cmd_selftest(level, fixtures);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
