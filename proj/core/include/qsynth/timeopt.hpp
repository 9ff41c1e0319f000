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

// Minimal synthesis time under a drive b = b1 (-i S^beta I_x) + b2 (-i S^alpha I_x).
//
// A target with canonical angles a is reachable in (dimensionless) time t iff
// a is r-majorized by t*b, i.e. a lies in the convex hull of the Weyl orbit of
// t*b. Times are in units of 1/omega_r^I.

#include <complex>
#include <vector>

#include "qsynth/kak.hpp"
#include "qsynth/su4core.hpp"

namespace qsynth {

struct DriveSpec {
  double b1 = 1.0;
  double b2 = 0.0;
  /// Peak slow-qubit Rabi frequency in rad/s.
  double omega_r_I = 1.0;

  AbelianAngles direction() const { return {b1, b2}; }
  /// Throws std::invalid_argument unless |b1|+|b2| <= 1 + 1e-12, the drive is
  /// non-zero and omega_r_I > 0.
  void validate() const;
};

struct WeylOrbit {
  std::vector<AbelianAngles> points;
  /// conjugators[i] indexes weyl_conjugator() and maps the source to points[i].
  std::vector<int> conjugators;
};

/// Distinct signed permutations of b (tolerance 1e-12); a duplicate keeps the
/// first conjugator index that produced it.
WeylOrbit weyl_orbit(AbelianAngles b);

/// Checks every conjugator numerically: W (b.a) W^dag == p.a to 1e-12.
bool conjugator_verify(const WeylOrbit& orbit, AbelianAngles b);

/// max|a_i| <= max|b_i| and |a1|+|a2| <= |b1|+|b2|, each with slack 1e-12.
bool r_majorizes(AbelianAngles a, AbelianAngles b);

struct ScheduleEntry {
  AbelianAngles orbit_point;
  double weight = 0.0;
  int conjugator_index = 0;
};

/// Convex weights over weyl_orbit(b) reproducing a, with at most 3 non-zero
/// weights. Throws std::invalid_argument unless r_majorizes(a, b).
std::vector<ScheduleEntry> convex_weyl_decompose(AbelianAngles a, AbelianAngles b);

/// Smallest t >= 0 with r_majorizes(a, t*b). Throws std::invalid_argument for
/// b = 0.
double t_opt_angles(AbelianAngles a, AbelianAngles b);

/// A scalar i^power * id in the center of SU(4).
struct CenterElement {
  int power = 0;
  Complex scalar() const;
};

struct OptResult {
  /// Dimensionless time (units of 1/omega_r^I).
  double t_opt = 0.0;
  /// t_opt / omega_r_I.
  double seconds = 0.0;
  KAKFactors factors;
  CenterElement center;
  /// representative = phase * G is the determinant-one representative used.
  Complex representative_phase{1.0, 0.0};
  DriveSpec drive;
  /// Points are Weyl images of the drive direction; weights are times and sum
  /// to t_opt.
  std::vector<ScheduleEntry> schedule;
};

/// Minimizes over the four determinant-one representatives of G. With
/// search_center = false, G must already have det 1 and is used as given.
/// Throws std::invalid_argument on an invalid drive or non-unitary G.
OptResult min_time(const Unitary4& g, const DriveSpec& drive, bool search_center = true);

}  // namespace qsynth
