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

#include "qsynth/pulseprog.hpp"

#include <cmath>
#include <stdexcept>

namespace qsynth {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kIdentityRotationTol = 1e-15;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::array<double, 3> normalized(const std::array<double, 3>& v) {
  const double n = std::hypot(v[0], v[1], v[2]);
  if (n == 0.0) return {0.0, 0.0, 1.0};
  return {v[0] / n, v[1] / n, v[2] / n};
}

Matrix2 fast_rotation_matrix(const FastRotation& r) {
  return su2_rotation(normalized(r.axis), r.angle);
}

// Axis-angle form of an SU(2) element: l = exp(-i angle/2 n.sigma) with
// angle in [0, 2 pi]. Returns nullopt for the identity.
std::optional<FastRotation> rotation_from_su2(const Matrix2& l) {
  const double a0 = 0.5 * l.trace().real();
  std::array<double, 3> m{};
  for (int axis = 0; axis < 3; ++axis) m[axis] = (0.5 * kI * (pauli(axis) * l).trace()).real();
  const double m_norm = std::hypot(m[0], m[1], m[2]);
  if (m_norm <= kIdentityRotationTol && a0 > 0.0) return std::nullopt;
  FastRotation r;
  r.angle = 2.0 * std::atan2(m_norm, a0);
  r.axis = m_norm > 0.0 ? std::array<double, 3>{m[0] / m_norm, m[1] / m_norm, m[2] / m_norm}
                        : std::array<double, 3>{0.0, 0.0, 1.0};
  return r;
}

// exp(-i t_phase I_z-like) blocks: diag(e^{-i x/2}, e^{i x/2}).
Matrix2 z_phase(double x) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::exp(-kI * (x / 2.0));
  m(1, 1) = std::exp(kI * (x / 2.0));
  return m;
}

std::array<double, 3> in_plane_axis(double phi) { return {std::cos(phi), std::sin(phi), 0.0}; }

// Axis of R(theta) = S_x cos(theta) - S_y sin(theta).
std::array<double, 3> r_axis(double theta) { return {std::cos(theta), -std::sin(theta), 0.0}; }

void push_fast(PulseProgram& p, std::array<double, 3> axis, double angle) {
  p.segments.emplace_back(FastRotation{axis, angle});
}

void push_free(PulseProgram& p, double angle) {
  p.segments.emplace_back(FreeEvolution{positive_mod(angle, kTwoPi)});
}

void push_drive(PulseProgram& p, double phase, double angle) {
  if (angle < 0.0) {
    angle = -angle;
    phase += kPi;
  }
  p.segments.emplace_back(SelectiveDrive{Branch::alpha, positive_mod(phase, kTwoPi), angle});
}

}  // namespace

double positive_mod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

void SystemParams::validate() const {
  for (double v : {J, omega_r_I, omega_r_S}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("system rates J, omega_r_I, omega_r_S must be positive");
    }
  }
}

std::vector<std::string> SystemParams::warnings() const {
  std::vector<std::string> out;
  if (!(omega_r_I < J && J < omega_r_S)) {
    out.emplace_back("time-scale ordering omega_r_I < J < omega_r_S is violated");
  } else {
    if (J / omega_r_I < 10.0) out.emplace_back("J / omega_r_I is below 10");
    if (omega_r_S / J < 10.0) out.emplace_back("omega_r_S / J is below 10");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonians and simulation

Matrix4 free_hamiltonian(const SystemParams& params) {
  const auto& ob = operator_basis();
  return params.J * ob.Iz + params.J * ob.products[2][2];
}

Matrix4 hamiltonian_alpha(double phi, const SystemParams& params) {
  const auto& ob = operator_basis();
  const Matrix4 i_phi = ob.Ix * std::cos(phi) + ob.Iy * std::sin(phi);
  return 2.0 * params.J * ob.S_beta * ob.Iz + params.omega_r_I * ob.S_alpha * i_phi;
}

Matrix4 hamiltonian_beta(double phi, const SystemParams& params) {
  const auto& ob = operator_basis();
  const Matrix4 i_phi = ob.Ix * std::cos(phi) + ob.Iy * std::sin(phi);
  return 2.0 * params.J * ob.S_alpha * ob.Iz + params.omega_r_I * ob.S_beta * i_phi;
}

Matrix4 segment_unitary(const PulseSegment& segment, const SystemParams& params) {
  return std::visit(
      Overloaded{
          [](const FastRotation& r) -> Matrix4 { return electron_operator(fast_rotation_matrix(r)); },
          [](const FreeEvolution& f) -> Matrix4 {
            // H0/J = 2 S^beta I_z = diag(1, -1, 0, 0).
            Matrix4 m = Matrix4::Identity();
            m(0, 0) = std::exp(-kI * f.angle);
            m(1, 1) = std::exp(kI * f.angle);
            return m;
          },
          [&params](const SelectiveDrive& d) -> Matrix4 {
            // The coupling term and the drive act on different electron
            // branches and commute.
            const double t = d.angle / params.omega_r_I;
            const Matrix2 idle = z_phase(2.0 * params.J * t);
            const Matrix2 driven = su2_rotation(in_plane_axis(d.phase), d.angle);
            Matrix4 m = Matrix4::Zero();
            if (d.branch == Branch::alpha) {
              m.topLeftCorner<2, 2>() = idle;
              m.bottomRightCorner<2, 2>() = driven;
            } else {
              m.topLeftCorner<2, 2>() = driven;
              m.bottomRightCorner<2, 2>() = idle;
            }
            return m;
          },
      },
      segment);
}

Unitary4 simulate(const PulseProgram& program, const SystemParams& params) {
  Matrix4 u = Matrix4::Identity();
  for (const auto& seg : program.segments) u = segment_unitary(seg, params) * u;
  return Unitary4::trusted(u, true);
}

Budgets budgets(const PulseProgram& program, const SystemParams& params) {
  double slow = 0.0;
  double coupling = 0.0;
  Budgets b;
  for (const auto& seg : program.segments) {
    std::visit(Overloaded{
                   [&](const FastRotation&) { ++b.fast_pulse_count; },
                   [&](const FreeEvolution& f) { coupling += f.angle; },
                   [&](const SelectiveDrive& d) { slow += d.angle; },
               },
               seg);
  }
  b.slow_time = slow / params.omega_r_I;
  b.coupling_time = coupling / params.J;
  return b;
}

VerifyReport verify(const PulseProgram& program, const SystemParams& params,
                    const Unitary4& target, double tol) {
  VerifyReport r;
  r.distance = distance_up_to_phase(simulate(program, params), target);
  r.budgets = budgets(program, params);
  r.pass = r.distance <= tol;
  return r;
}

double truncation_error(double ratio, double phi, double total_angle) {
  if (!(ratio > 0.0)) throw std::invalid_argument("J / omega_r_I must be positive");
  const SystemParams unit{ratio, 1.0, 1.0, std::nullopt};
  const auto& ob = operator_basis();
  const Matrix4 i_phi = ob.Ix * std::cos(phi) + ob.Iy * std::sin(phi);
  const Matrix4 full = 2.0 * ratio * ob.S_beta * ob.Iz + i_phi;
  const Matrix4 truncated = hamiltonian_alpha(phi, unit);
  return distance_up_to_phase(evolve(full, total_angle), evolve(truncated, total_angle));
}

// ---------------------------------------------------------------------------
// Building blocks

void append_electron_rotation(PulseProgram& program, const Matrix2& l) {
  if (auto r = rotation_from_su2(l)) program.segments.emplace_back(*r);
}

void append_iz_rotation(PulseProgram& program, double angle) {
  // exp(-i w I_z) = e^{-i pi S_x} e^{-i w H0/(2J)} e^{i pi S_x} e^{-i w H0/(2J)}.
  const double half = angle / 2.0;
  push_free(program, half);
  push_fast(program, {1, 0, 0}, -kPi);
  push_free(program, half);
  push_fast(program, {1, 0, 0}, kPi);
}

void append_slow_rotation(PulseProgram& program, Branch branch, double phase, double angle,
                          const SystemParams& params) {
  if (angle == 0.0) return;
  const double magnitude = std::abs(angle);
  // The drive also rotates the idle branch by 2 J t about z; undo it with
  // free evolution exp(-i x H0/J), x = -J t.
  const double compensation = -params.J * magnitude / params.omega_r_I;
  if (branch == Branch::beta) push_fast(program, {1, 0, 0}, kPi);
  push_drive(program, phase, angle);
  push_free(program, compensation);
  if (branch == Branch::beta) push_fast(program, {1, 0, 0}, -kPi);
}

void append_k_element(PulseProgram& program, const KElement& k) {
  // K = exp(-i (tau1 - tau2) I_z) L1 exp(-i tau2 H0/J) L2.
  const KFactorization f = k_factorize(k);
  append_electron_rotation(program, euler_zxz_matrix(f.euler2));
  push_free(program, f.tau2);
  append_electron_rotation(program, euler_zxz_matrix(f.euler1));
  append_iz_rotation(program, f.tau1 - f.tau2);
}

void simplify(PulseProgram& program) {
  std::vector<PulseSegment> out;
  out.reserve(program.segments.size());
  for (const auto& seg : program.segments) {
    if (const auto* f = std::get_if<FreeEvolution>(&seg)) {
      double angle = positive_mod(f->angle, kTwoPi);
      if (!out.empty()) {
        if (auto* prev = std::get_if<FreeEvolution>(&out.back())) {
          angle = positive_mod(prev->angle + angle, kTwoPi);
          out.pop_back();
        }
      }
      if (angle != 0.0) out.emplace_back(FreeEvolution{angle});
    } else if (const auto* r = std::get_if<FastRotation>(&seg)) {
      Matrix2 m = fast_rotation_matrix(*r);
      if (!out.empty()) {
        if (auto* prev = std::get_if<FastRotation>(&out.back())) {
          m = m * fast_rotation_matrix(*prev);
          out.pop_back();
        }
      }
      if (auto merged = rotation_from_su2(m)) out.emplace_back(*merged);
    } else {
      const auto& d = std::get<SelectiveDrive>(seg);
      if (d.angle != 0.0) out.push_back(d);
    }
  }
  program.segments = std::move(out);
}

// ---------------------------------------------------------------------------
// Assemblers

PulseProgram assemble(const KAKFactors& factors, const SystemParams& params) {
  params.validate();
  const KFactorization f1 = k_factorize(factors.k1);
  const KFactorization f2 = k_factorize(factors.k2);

  AssemblyAngles a;
  a.t1 = factors.angles.t1;
  a.t2 = factors.angles.t2;
  a.taus = {f1.tau1, f1.tau2, f2.tau1, f2.tau2};
  const std::array<EulerZXZ, 4> eulers{f1.euler1, f1.euler2, f2.euler1, f2.euler2};
  for (int j = 0; j < 4; ++j) a.theta[j] = {eulers[j].theta1, eulers[j].theta2, eulers[j].theta3};

  // Drive durations are |t_j|; a negative angle becomes a pi phase shift.
  const double d1 = std::abs(a.t1);
  const double d2 = std::abs(a.t2);
  const double ratio = params.J / params.omega_r_I;
  a.t3 = positive_mod(2.0 * ratio * d1, 4.0 * kPi);
  a.t4 = positive_mod(ratio * (d1 - d2), kTwoPi);

  const auto& th = a.theta;
  a.v3 = th[2][2] + th[3][0] + th[3][2];
  a.v2 = th[1][2] + th[2][0] + a.v3;
  a.v1 = th[0][2] + th[1][0] + a.v2;
  a.v0 = th[0][0] + a.v1;
  a.tau = a.taus[3] - a.taus[2];
  a.w = a.taus[0] - a.taus[1] + a.taus[2] - a.taus[3] - a.t3;

  const double phase1 = a.t3 + a.tau + (a.t1 < 0.0 ? kPi : 0.0);
  const double phase2 = a.tau + (a.t2 < 0.0 ? kPi : 0.0);

  PulseProgram p;
  push_fast(p, r_axis(th[3][2]), th[3][1]);  // R4
  push_free(p, a.taus[3]);
  push_fast(p, r_axis(a.v3), th[2][1]);  // R3
  push_drive(p, phase2, d2);
  push_free(p, a.t4);
  // H^beta through the alpha transition: e^{i pi S_x} (...) e^{-i pi S_x}.
  push_fast(p, {1, 0, 0}, kPi);
  push_drive(p, phase1, d1);
  push_fast(p, {1, 0, 0}, -kPi);
  push_fast(p, r_axis(a.v2), th[1][1]);  // R2
  push_free(p, a.taus[1]);
  push_fast(p, r_axis(a.v1), th[0][1]);  // R1
  append_iz_rotation(p, a.w);
  push_fast(p, {0, 0, 1}, a.v0);
  simplify(p);

  p.target = factors.reconstruct();
  p.assembly = a;
  return p;
}

PulseProgram assemble_schedule(const OptResult& opt, const SystemParams& params) {
  params.validate();
  const AbelianAngles b = opt.drive.direction();
  PulseProgram p;
  append_k_element(p, opt.factors.k2);
  for (const auto& entry : opt.schedule) {
    // exp(w p.a) = W exp(w b.a) W^dag for p = weyl_image(k, b).
    const Unitary4& w = weyl_conjugator(entry.conjugator_index);
    append_k_element(p, KElement(w.adjoint()));
    append_slow_rotation(p, Branch::beta, 0.0, entry.weight * b.t1, params);
    append_slow_rotation(p, Branch::alpha, 0.0, entry.weight * b.t2, params);
    append_k_element(p, KElement(w));
  }
  append_k_element(p, opt.factors.k1);
  simplify(p);
  p.target = opt.factors.reconstruct();
  return p;
}

PulseProgram cnot12_program(const SystemParams& params) {
  params.validate();
  PulseProgram p;
  p.segments.emplace_back(SelectiveDrive{Branch::alpha, kPi, kPi});
  push_free(p, -kPi * params.J / params.omega_r_I);
  push_fast(p, {0, 0, 1}, -kPi / 2.0);  // e^{i pi S_z / 2}
  p.target = Unitary4::trusted(std::exp(kI * (kPi / 4.0)) * cnot12_matrix(), true);
  return p;
}

PulseProgram swap_program(const SystemParams& params) {
  params.validate();
  PulseProgram p;
  push_fast(p, {0, 1, 0}, kPi / 2.0);
  push_free(p, kPi / 2.0);
  push_fast(p, {1, 0, 0}, kPi / 2.0);
  p.segments.emplace_back(SelectiveDrive{Branch::alpha, kPi, kPi});
  push_free(p, -kPi * params.J / params.omega_r_I);
  push_fast(p, {0, 1, 0}, -kPi / 2.0);
  push_free(p, 1.5 * kPi);
  // R5 = e^{i pi S_z/2} e^{-i pi S_x/2}
  append_electron_rotation(p, su2_rotation({0, 0, 1}, -kPi / 2.0) * su2_rotation({1, 0, 0}, kPi / 2.0));
  p.target = Unitary4::trusted(std::exp(kI * (kPi / 4.0)) * swap_matrix(), true);
  return p;
}

}  // namespace qsynth
