// Copyright 2026 The qsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Invariant suites run by `qsynth checks`. Each suite is deterministic for a
// given seed.

#include <cstdint>
#include <string>
#include <vector>

#include "qsynth/kak.hpp"

namespace qsynth::cli {

struct SuiteResult {
  std::string name;
  long passed = 0;
  long total = 0;
  bool ok = false;
  std::string detail;
};

/// Dimension of the closure of {S_x, S_y, S_z, H^alpha(0), H0}; expects 15.
SuiteResult check_lie_closure_full();
/// Dimension of the closure of {S_x, S_y, S_z, H0}; expects 7.
SuiteResult check_k_closure();
/// [k,k] in k, [k,p] in p, [p,p] in k for random samples (residual <= 1e-12).
SuiteResult check_cartan_relations(std::uint64_t seed, int samples = 100);
/// r_majorizes against convex-hull membership of the Weyl orbit.
SuiteResult check_weyl_convexity(std::uint64_t seed, int samples = 10000);
/// r_majorizes(a, a + 2 pi z) on a grid of a in [-pi, pi]^2, z in {-3..3}^2.
SuiteResult check_lattice_shift();
/// t_opt for b = (1, 0) never exceeds t_opt for any |b1| + |b2| = 1.
SuiteResult check_remark3_dominance(std::uint64_t seed, int targets = 100, int drives = 20);
/// Truncation error ratio between J/omega = 10 and 100 in [5, 20], and error
/// at 1e5 at most 1e-4.
SuiteResult check_truncation_scaling();

std::vector<SuiteResult> run_checks(std::uint64_t seed);

/// Independent oracle: is a inside the convex hull of the signed permutations
/// of b, with the given slack?
bool hull_contains(AbelianAngles a, AbelianAngles b, double slack);

}  // namespace qsynth::cli
