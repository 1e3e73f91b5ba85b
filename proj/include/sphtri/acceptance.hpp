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

// The ten acceptance criteria as a library, shared by the acceptance test
// binary and `sphtri selftest`.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sphtri/geometry.hpp"

namespace sphtri {

enum class AcceptanceLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criterion `id` (1..10). Quick shrinks the sample sizes; tolerances
/// never change.
CriterionResult run_criterion(int id, AcceptanceLevel level, std::uint64_t seed = 20260416);
std::vector<CriterionResult> run_acceptance(AcceptanceLevel level, std::uint64_t seed = 20260416);

/// "PASS  3  facet exclusion  (0.01 s)  detail".
std::string format_result(const CriterionResult& r);

// Samplers used by the criteria and by the unit tests.

struct Sample {
  AngleTriple t;
  FamilyParams params;
};

/// Uniform point of the open tetrahedron T_idx, kept `margin` (in
/// barycentric coordinates) away from its faces.
AngleTriple sample_in_tetra(const TetraIndex& idx, std::mt19937_64& rng, double margin = 1e-6);
/// Admissible input of the given family dimension with every angle below
/// `bound` (an integer >= 2).
Sample sample_interior(std::mt19937_64& rng, int bound);
Sample sample_edge(std::mt19937_64& rng, int bound);
Sample sample_vertex(std::mt19937_64& rng, int bound);

/// Balanced part of a tetrahedron as listed case by case (doubled
/// coordinates): for a pointed one, its balanced vertices and the midpoints
/// of edges with an unbalanced end; for a not pointed one, its balanced
/// vertex and the midpoints of the three edges there; for a balanced one, its
/// vertices. Independent of the halfspace computation it checks.
std::vector<Int3> balanced_hull_case_list(const TetraIndex& t);

}  // namespace sphtri
