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

// Pulse programs built from three controls in the rotating frame:
//   fast electron rotations exp(-i angle n.S)           (zero model duration)
//   free evolution          exp(-i angle H0/J)          (angle/J seconds)
//   selective nuclear drive exp(-i angle H^b(phi)/w_I)  (angle/w_I seconds)
// with H0 = J I_z + 2J S_z I_z, H^alpha(phi) = 2J S^beta I_z + w_I S^alpha I_phi
// and H^beta(phi) = exp(i pi S_x) H^alpha(phi) exp(-i pi S_x).

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsynth/kak.hpp"
#include "qsynth/su4core.hpp"
#include "qsynth/timeopt.hpp"

namespace qsynth {

/// Lab-frame quantities kept for bookkeeping only.
struct LabMetadata {
  double omega_S = 0.0;
  double omega_I = 0.0;
  double carrier_S = 0.0;
  double carrier_I = 0.0;
  double phase_S = 0.0;
};

struct SystemParams {
  /// Coupling J (rad/s).
  double J = 10.0;
  /// Peak nuclear Rabi frequency (rad/s).
  double omega_r_I = 1.0;
  /// Peak electron Rabi frequency (rad/s).
  double omega_r_S = 100.0;
  std::optional<LabMetadata> lab;

  /// Throws std::invalid_argument for non-positive or non-finite rates.
  void validate() const;
  /// Human-readable warnings when omega_r_I < J < omega_r_S is violated or
  /// either ratio is below 10.
  std::vector<std::string> warnings() const;
};

enum class Branch { alpha, beta };

struct FastRotation {
  std::array<double, 3> axis{1.0, 0.0, 0.0};
  double angle = 0.0;
};

struct FreeEvolution {
  /// Rotation angle of H0/J; always >= 0.
  double angle = 0.0;
};

struct SelectiveDrive {
  Branch branch = Branch::alpha;
  double phase = 0.0;
  /// Rotation angle of the drive; always >= 0.
  double angle = 0.0;
};

using PulseSegment = std::variant<FastRotation, FreeEvolution, SelectiveDrive>;

/// Angles of the canonical sequence
///   e^{-i v0 S_z} e^{-i w I_z} R1 e^{-i tau2 H0/J} R2 e^{-i t1 H^beta(t3+tau)/w_I}
///   e^{-i t4 H0/J} e^{-i t2 H^alpha(tau)/w_I} R3 e^{-i tau4 H0/J} R4.
struct AssemblyAngles {
  double t1 = 0.0, t2 = 0.0;
  double t3 = 0.0, t4 = 0.0;
  std::array<double, 4> taus{};
  /// theta[j][k] = theta_{j+1,k+1}: Euler angles of L1..L4.
  std::array<std::array<double, 3>, 4> theta{};
  double v0 = 0.0, v1 = 0.0, v2 = 0.0, v3 = 0.0;
  double tau = 0.0;
  double w = 0.0;
};

struct Budgets {
  /// Sum of selective-drive angles / omega_r_I (s).
  double slow_time = 0.0;
  /// Sum of free-evolution angles / J (s).
  double coupling_time = 0.0;
  int fast_pulse_count = 0;
};

/// Segments are stored in application order: segments[0] acts first, so the
/// overall operator is segments[n-1] * ... * segments[0].
struct PulseProgram {
  std::vector<PulseSegment> segments;
  std::optional<Unitary4> target;
  std::optional<AssemblyAngles> assembly;
};

Budgets budgets(const PulseProgram& program, const SystemParams& params);

/// Hamiltonians in rad/s.
Matrix4 free_hamiltonian(const SystemParams& params);
Matrix4 hamiltonian_alpha(double phi, const SystemParams& params);
Matrix4 hamiltonian_beta(double phi, const SystemParams& params);

/// exp of a single segment.
Matrix4 segment_unitary(const PulseSegment& segment, const SystemParams& params);

/// Right-to-left product of the segment exponentials.
Unitary4 simulate(const PulseProgram& program, const SystemParams& params);

/// Canonical sequence for K1 exp(t1, t2) K2 using only alpha-branch drives,
/// free evolution and fast rotations.
PulseProgram assemble(const KAKFactors& factors, const SystemParams& params);

/// Program that follows the time-optimal schedule of `opt`.
PulseProgram assemble_schedule(const OptResult& opt, const SystemParams& params);

struct VerifyReport {
  double distance = 0.0;
  Budgets budgets;
  bool pass = false;
};

VerifyReport verify(const PulseProgram& program, const SystemParams& params,
                    const Unitary4& target, double tol);

/// Phase-insensitive distance between the evolution under the full
/// (untruncated) nuclear drive and under H^alpha(phi), in units omega_r_I = 1,
/// J = ratio, for drive angle total_angle.
double truncation_error(double ratio, double phi, double total_angle);

// Building blocks shared by the assemblers.

/// Appends exp(-i angle (n.S)) as a fast rotation from an SU(2) matrix.
void append_electron_rotation(PulseProgram& program, const Matrix2& l);
/// Appends exp(-i angle I_z) via two pi pulses around halved free evolutions.
void append_iz_rotation(PulseProgram& program, double angle);
/// Appends exp(angle (-i S^branch I_phi)), compensating the coupling term of
/// the selective drive with free evolution.
void append_slow_rotation(PulseProgram& program, Branch branch, double phase, double angle,
                          const SystemParams& params);
/// Appends a program realizing an arbitrary K element.
void append_k_element(PulseProgram& program, const KElement& k);

/// Merges adjacent fast rotations and adjacent free evolutions, reduces free
/// evolution angles into [0, 2 pi) and drops identity segments.
void simplify(PulseProgram& program);

/// Reference programs for exp(i pi/4) CNOT[1,2] and exp(i pi/4) SWAP.
PulseProgram cnot12_program(const SystemParams& params);
PulseProgram swap_program(const SystemParams& params);

/// x mod period in [0, period).
double positive_mod(double x, double period);

}  // namespace qsynth
