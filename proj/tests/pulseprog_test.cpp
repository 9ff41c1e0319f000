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

#include <cmath>

#include <gtest/gtest.h>

#include "qsynth/pulseprog.hpp"
#include "qsynth/random.hpp"

namespace qsynth {
namespace {

const SystemParams kParams{};

Matrix4 exp_h(const Matrix4& h, double t) { return evolve(h, t); }

int count_drives(const PulseProgram& p) {
  int n = 0;
  for (const auto& s : p.segments) n += std::holds_alternative<SelectiveDrive>(s);
  return n;
}

TEST(SystemParams, ValidationAndWarnings) {
  EXPECT_NO_THROW(kParams.validate());
  EXPECT_TRUE(kParams.warnings().empty());
  EXPECT_THROW((SystemParams{0, 1, 100, {}}.validate()), std::invalid_argument);
  EXPECT_THROW((SystemParams{10, -1, 100, {}}.validate()), std::invalid_argument);
  EXPECT_FALSE((SystemParams{10, 5, 100, {}}.warnings().empty()));
  EXPECT_FALSE((SystemParams{1, 5, 100, {}}.warnings().empty()));
}

TEST(Hamiltonians, Entries) {
  const auto& ob = operator_basis();
  const SystemParams p{7, 2, 100, {}};
  EXPECT_LE((hamiltonian_alpha(0, p) - (14.0 * ob.S_beta * ob.Iz + 2.0 * ob.S_alpha * ob.Ix)).norm(), 1e-15);
  EXPECT_LE((hamiltonian_alpha(kPi / 2, p) - (14.0 * ob.S_beta * ob.Iz + 2.0 * ob.S_alpha * ob.Iy)).norm(), 1e-15);
  EXPECT_LE((free_hamiltonian(p) - 14.0 * ob.S_beta * ob.Iz).norm(), 1e-15);
  // H^beta is H^alpha conjugated by a pi pulse about x.
  const Matrix4 x = electron_operator(su2_rotation({1, 0, 0}, kPi));
  EXPECT_LE((hamiltonian_beta(0.4, p) - x.adjoint() * hamiltonian_alpha(0.4, p) * x).norm(), 1e-14);
}

TEST(SegmentUnitary, ClosedFormsMatchExponentials) {
  Rng rng(41);
  std::uniform_real_distribution<double> uni(0, 2 * kPi);
  const SystemParams p{10, 1.3, 100, {}};
  const auto& ob = operator_basis();
  for (int i = 0; i < 50; ++i) {
    const double angle = uni(rng), phase = uni(rng);
    const Matrix4 free = segment_unitary(FreeEvolution{angle}, p);
    EXPECT_LE((free - exp_h(free_hamiltonian(p), angle / p.J)).norm(), 1e-12);
    const Matrix4 a = segment_unitary(SelectiveDrive{Branch::alpha, phase, angle}, p);
    EXPECT_LE((a - exp_h(hamiltonian_alpha(phase, p), angle / p.omega_r_I)).norm(), 1e-12);
    const Matrix4 b = segment_unitary(SelectiveDrive{Branch::beta, phase, angle}, p);
    EXPECT_LE((b - exp_h(hamiltonian_beta(phase, p), angle / p.omega_r_I)).norm(), 1e-12);
    const std::array<double, 3> axis{std::cos(phase), std::sin(phase) * 0.6, 0.8 * std::sin(phase)};
    const Matrix4 n_s = axis[0] * ob.Sx + axis[1] * ob.Sy + axis[2] * ob.Sz;
    const double len = std::hypot(axis[0], axis[1], axis[2]);
    const Matrix4 r = segment_unitary(FastRotation{axis, angle}, p);
    EXPECT_LE((r - exp_h(n_s / len, angle)).norm(), 1e-12);
  }
}

TEST(Simulate, EmptyIsIdentity) {
  EXPECT_LE((simulate(PulseProgram{}, kParams).matrix() - Matrix4::Identity()).norm(), 0.0);
}

TEST(Simulate, Multiplicative) {
  PulseProgram a, b, ab;
  a.segments = {FastRotation{{0, 1, 0}, 0.3}, FreeEvolution{1.1}};
  b.segments = {SelectiveDrive{Branch::alpha, 0.2, 2.0}, FastRotation{{1, 0, 0}, 1.7}};
  ab.segments = a.segments;
  ab.segments.insert(ab.segments.end(), b.segments.begin(), b.segments.end());
  const Matrix4 expected = simulate(b, kParams).matrix() * simulate(a, kParams).matrix();
  EXPECT_LE((simulate(ab, kParams).matrix() - expected).norm(), 1e-14);
}

TEST(ReferencePrograms, Cnot12) {
  const PulseProgram p = cnot12_program(kParams);
  ASSERT_EQ(p.segments.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<SelectiveDrive>(p.segments[0]));
  EXPECT_TRUE(std::holds_alternative<FreeEvolution>(p.segments[1]));
  EXPECT_TRUE(std::holds_alternative<FastRotation>(p.segments[2]));
  EXPECT_NEAR(std::get<FreeEvolution>(p.segments[1]).angle, positive_mod(-kPi * 10.0, 2 * kPi), 1e-15);
  const Matrix4 target = std::exp(kI * (kPi / 4)) * cnot12_matrix();
  EXPECT_LE(distance_up_to_phase(simulate(p, kParams).matrix(), target), 1e-10);
  // Other ratios J / omega as well.
  for (double j : {3.0, 17.5, 250.0}) {
    const SystemParams q{j, 1, 1000, {}};
    EXPECT_LE(distance_up_to_phase(simulate(cnot12_program(q), q).matrix(), target), 1e-10);
  }
}

TEST(ReferencePrograms, Swap) {
  const PulseProgram p = swap_program(kParams);
  EXPECT_EQ(count_drives(p), 1);
  EXPECT_LE(distance_up_to_phase(simulate(p, kParams).matrix(), swap_matrix()), 1e-10);
}

TEST(Verify, Examples) {
  const PulseProgram p = cnot12_program(kParams);
  EXPECT_TRUE(verify(p, kParams, Unitary4::from_matrix(cnot12_matrix()), 1e-8).pass);
  EXPECT_TRUE(verify(PulseProgram{}, kParams, Unitary4::identity(), 1e-12).pass);
  const VerifyReport bad = verify(p, kParams, Unitary4::from_matrix(swap_matrix()), 1e-8);
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.distance, distance_up_to_phase(cnot12_matrix(), swap_matrix()), 1e-12);
  EXPECT_GT(bad.distance, 1.0);
}

TEST(Budgets, CountsAndTimes) {
  PulseProgram p;
  p.segments = {FastRotation{{1, 0, 0}, 1}, FreeEvolution{2}, SelectiveDrive{Branch::alpha, 0, 3},
                FreeEvolution{4}, FastRotation{{0, 0, 1}, 1}};
  const SystemParams q{8, 2, 100, {}};
  const Budgets b = budgets(p, q);
  EXPECT_EQ(b.fast_pulse_count, 2);
  EXPECT_DOUBLE_EQ(b.coupling_time, 6.0 / 8.0);
  EXPECT_DOUBLE_EQ(b.slow_time, 1.5);
}

TEST(Building, IzRotationIdentity) {
  Rng rng(42);
  std::uniform_real_distribution<double> uni(-10, 10);
  const auto& ob = operator_basis();
  for (int i = 0; i < 100; ++i) {
    const double w = uni(rng);
    // Direct matrix identity.
    const Matrix4 px = evolve(ob.Sx, kPi);
    const Matrix4 half = evolve(ob.Iz + ob.products[2][2], w / 2);
    EXPECT_LE((px * half * px.adjoint() * half - evolve(ob.Iz, w)).norm(), 1e-12);
    // And its program form.
    PulseProgram p;
    append_iz_rotation(p, w);
    EXPECT_LE((simulate(p, kParams).matrix() - evolve(ob.Iz, w)).norm(), 1e-12);
  }
}

TEST(Building, SlowRotations) {
  const auto& ob = operator_basis();
  for (Branch br : {Branch::alpha, Branch::beta}) {
    for (double angle : {0.7, -2.1, kPi}) {
      for (double phase : {0.0, 1.2}) {
        const SystemParams q{13, 1.7, 100, {}};
        PulseProgram p;
        append_slow_rotation(p, br, phase, angle, q);
        const Matrix4 i_phi = std::cos(phase) * ob.Ix + std::sin(phase) * ob.Iy;
        const Matrix4 proj = br == Branch::alpha ? ob.S_alpha : ob.S_beta;
        EXPECT_LE((simulate(p, q).matrix() - evolve(proj * i_phi, angle)).norm(), 1e-12);
        for (const auto& s : p.segments) {
          if (const auto* d = std::get_if<SelectiveDrive>(&s)) {
            EXPECT_EQ(d->branch, Branch::alpha);
            EXPECT_GE(d->angle, 0.0);
          }
        }
      }
    }
  }
}

TEST(Building, KElements) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const KElement k = random_k(rng, 3.0);
    PulseProgram p;
    append_k_element(p, k);
    EXPECT_EQ(count_drives(p), 0);
    EXPECT_LE((simulate(p, kParams).matrix() - k.matrix()).norm(), 1e-10);
  }
}

TEST(Simplify, MergesAndDrops) {
  PulseProgram p;
  p.segments = {FastRotation{{1, 0, 0}, 0.5}, FastRotation{{1, 0, 0}, -0.5}, FreeEvolution{7.0},
                FreeEvolution{2 * kPi - 7.0 + 2 * kPi}, SelectiveDrive{Branch::alpha, 0, 0},
                FastRotation{{0, 1, 0}, 0.3}, FastRotation{{0, 0, 1}, 0.4}, FreeEvolution{-1.0}};
  const Matrix4 before = simulate(p, kParams).matrix();
  simplify(p);
  ASSERT_EQ(p.segments.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<FastRotation>(p.segments[0]));
  const auto& f = std::get<FreeEvolution>(p.segments[1]);
  EXPECT_GE(f.angle, 0.0);
  EXPECT_LT(f.angle, 2 * kPi);
  EXPECT_LE((simulate(p, kParams).matrix() - before).norm(), 1e-12);
}

TEST(Assemble, Cnot12HasOneDriveOfAnglePi) {
  const Unitary4 g = Unitary4::special(std::exp(kI * (kPi / 4)) * cnot12_matrix());
  const PulseProgram p = assemble(kak_decompose(g), kParams);
  ASSERT_EQ(count_drives(p), 1);
  for (const auto& s : p.segments) {
    if (const auto* d = std::get_if<SelectiveDrive>(&s)) {
      EXPECT_DOUBLE_EQ(d->angle, kPi);
    }
  }
  EXPECT_LE(distance_up_to_phase(simulate(p, kParams), g), 1e-10);
  EXPECT_EQ(budgets(p, kParams).slow_time, kPi / kParams.omega_r_I);
}

TEST(Assemble, SwapHasOneDriveOfAnglePi) {
  const Unitary4 g = Unitary4::special(std::exp(kI * (kPi / 4)) * swap_matrix());
  const OptResult r = min_time(g, DriveSpec{});
  const PulseProgram p = assemble(r.factors, kParams);
  EXPECT_EQ(count_drives(p), 1);
  EXPECT_LE(distance_up_to_phase(simulate(p, kParams), g), 1e-10);
}

TEST(Assemble, RandomTargetsAndExactBudget) {
  Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    const Unitary4 g = random_su4(rng);
    const KAKFactors f = kak_decompose(g);
    const SystemParams q{10.0 + i, 1.0 + 0.01 * i, 1e4, {}};
    const PulseProgram p = assemble(f, q);
    EXPECT_LE(distance_up_to_phase(simulate(p, q), g), 1e-8);
    EXPECT_EQ(budgets(p, q).slow_time, (std::abs(f.angles.t1) + std::abs(f.angles.t2)) / q.omega_r_I);
    ASSERT_TRUE(p.assembly.has_value());
    EXPECT_GE(p.assembly->t3, 0.0);
    EXPECT_LT(p.assembly->t3, 4 * kPi);
    EXPECT_GE(p.assembly->t4, 0.0);
    EXPECT_LT(p.assembly->t4, 2 * kPi);
    for (const auto& s : p.segments) {
      if (const auto* fe = std::get_if<FreeEvolution>(&s)) {
        EXPECT_GE(fe->angle, 0.0);
        EXPECT_LT(fe->angle, 2 * kPi);
      }
      if (const auto* d = std::get_if<SelectiveDrive>(&s)) {
        EXPECT_EQ(d->branch, Branch::alpha);
      }
    }
  }
}

TEST(Assemble, NegativeAnglesAreHandled) {
  Rng rng(45);
  const KElement k1 = random_k(rng), k2 = random_k(rng);
  for (AbelianAngles a : {AbelianAngles{-1.0, 0.4}, AbelianAngles{2.0, -3.0}, AbelianAngles{-0.5, -0.5}}) {
    const KAKFactors f{k1, k2, a};
    const PulseProgram p = assemble(f, kParams);
    EXPECT_LE(distance_up_to_phase(simulate(p, kParams), f.reconstruct()), 1e-10);
  }
}

TEST(AssembleSchedule, MatchesTargetAndBudget) {
  Rng rng(46);
  std::uniform_real_distribution<double> uni(-1, 1);
  for (int i = 0; i < 100; ++i) {
    const Unitary4 g = random_su4(rng);
    DriveSpec b{1, 0, 1};
    if (i % 2) {
      b.b1 = uni(rng);
      b.b2 = (uni(rng) < 0 ? -1 : 1) * (1 - std::abs(b.b1));
    }
    const OptResult r = min_time(g, b);
    const PulseProgram p = assemble_schedule(r, kParams);
    EXPECT_LE(distance_up_to_phase(simulate(p, kParams), g), 1e-8);
    EXPECT_NEAR(budgets(p, kParams).slow_time, r.t_opt / kParams.omega_r_I, 1e-12 * (1 + r.t_opt));
  }
}

TEST(AssembleSchedule, Cnot12Budget) {
  const OptResult r = min_time(Unitary4::from_matrix(cnot12_matrix()), DriveSpec{});
  const PulseProgram p = assemble_schedule(r, kParams);
  EXPECT_EQ(count_drives(p), 1);
  EXPECT_NEAR(budgets(p, kParams).slow_time, kPi, 1e-12);
}

TEST(AssembleSchedule, TwoHalvesGiveKElement) {
  OptResult r;
  r.drive = DriveSpec{};
  r.t_opt = 2.0;
  r.factors = kak_decompose(Unitary4::identity());
  r.schedule = {{{1, 0}, 1.0, 0}, {{-1, 0}, 1.0, 2}};
  const PulseProgram p = assemble_schedule(r, kParams);
  EXPECT_TRUE(k_membership(simulate(p, kParams)));
  EXPECT_LE(distance_up_to_phase(simulate(p, kParams), Unitary4::identity()), 1e-12);
}

TEST(Truncation, FrozenValues) {
  // Reference values from an independent scipy expm evaluation.
  EXPECT_NEAR(truncation_error(10, 0, kPi), 0.0554978082896306, 1e-10);
  EXPECT_NEAR(truncation_error(100, 0, kPi), 0.005553565394730424, 1e-10);
  EXPECT_NEAR(truncation_error(3.7, 0.7, 2.0), 0.1975710936717753, 1e-10);
  EXPECT_NEAR(truncation_error(10, 0.7, 2.0), 0.07384492562912622, 1e-10);
  EXPECT_NEAR(truncation_error(100, 0.7, 2.0), 0.007111837350870813, 1e-10);
  EXPECT_NEAR(truncation_error(1e5, 0, kPi), 5.5536e-6, 1e-9);
}

TEST(Truncation, Scaling) {
  const double r = truncation_error(10, 0, kPi) / truncation_error(100, 0, kPi);
  EXPECT_GE(r, 5.0);
  EXPECT_LE(r, 20.0);
  EXPECT_LT(truncation_error(100, 0, kPi), 0.05);
  EXPECT_LE(truncation_error(1e5, 0, kPi), 1e-4);
  EXPECT_THROW(truncation_error(0, 0, 1), std::invalid_argument);
}

TEST(PositiveMod, Range) {
  EXPECT_EQ(positive_mod(-0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(positive_mod(-1.5, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(positive_mod(7.25, 2.0), 1.25);
  EXPECT_LT(positive_mod(-1e-18, 2 * kPi), 2 * kPi);
}

}  // namespace
}  // namespace qsynth
