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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "qsynth/kak.hpp"
#include "qsynth/random.hpp"

namespace qsynth {
namespace {

const Complex kEighth = std::exp(kI * (kPi / 4.0));

// Brute-force canonical form: try every lattice shift in [-3, 3]^2 and every
// signed permutation, keep the one that lands in 0 <= t2 <= t1 <= pi.
AbelianAngles brute_canonical(AbelianAngles a) {
  for (int z1 = -3; z1 <= 3; ++z1) {
    for (int z2 = -3; z2 <= 3; ++z2) {
      const double x = a.t1 + 2 * kPi * z1;
      const double y = a.t2 + 2 * kPi * z2;
      for (AbelianAngles c : {AbelianAngles{std::abs(x), std::abs(y)}, AbelianAngles{std::abs(y), std::abs(x)}}) {
        if (c.t2 <= c.t1 + 1e-12 && c.t1 <= kPi + 1e-12) return c;
      }
    }
  }
  ADD_FAILURE() << "no canonical representative";
  return a;
}

TEST(ExpAbelian, Identity) {
  EXPECT_LE((exp_abelian({0, 0}).matrix() - Matrix4::Identity()).norm(), 0.0);
}

TEST(ExpAbelian, PiOnBetaBranch) {
  // c1 = cos(pi/2) = 0 and s1 = 1 inside the beta block.
  const Matrix4 m = exp_abelian({kPi, 0}).matrix();
  EXPECT_NEAR(std::abs(m(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 0)), 1.0, 1e-15);
  EXPECT_LE((m.bottomRightCorner<2, 2>() - Matrix2::Identity()).norm(), 0.0);
}

TEST(ExpAbelian, MatchesGeneralExponential) {
  Rng rng(21);
  std::uniform_real_distribution<double> uni(-7, 7);
  for (int i = 0; i < 200; ++i) {
    const AbelianAngles a{uni(rng), uni(rng)};
    EXPECT_LE((exp_abelian(a).matrix() - expm_skew(abelian_generator(a)).matrix()).norm(), 1e-12);
  }
}

TEST(ExpAbelian, Commute) {
  Rng rng(22);
  std::uniform_real_distribution<double> uni(-4, 4);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 a = exp_abelian({uni(rng), uni(rng)}).matrix();
    const Matrix4 b = exp_abelian({uni(rng), uni(rng)}).matrix();
    EXPECT_LE((a * b - b * a).norm(), 1e-14);
  }
}

TEST(KMembership, Examples) {
  EXPECT_TRUE(k_membership(Unitary4::from_matrix(kEighth * cnot21_matrix())));
  EXPECT_FALSE(k_membership(Unitary4::from_matrix(kEighth * cnot12_matrix())));
  EXPECT_TRUE(k_membership(expm_skew(AlgebraElement::basis(Op::Sx, 1.3))));
  EXPECT_FALSE(k_membership(expm_skew(AlgebraElement::basis(Op::Ix, 0.5))));
}

TEST(KElement, RejectsNonMembers) {
  EXPECT_THROW(KElement(expm_skew(AlgebraElement::basis(Op::Ix, 0.5))), std::invalid_argument);
  EXPECT_NO_THROW(KElement(expm_skew(AlgebraElement::basis(Op::SyIz, 0.5))));
}

TEST(KakDecompose, Cnot12) {
  const Unitary4 g = Unitary4::special(kEighth * cnot12_matrix());
  const KAKFactors f = kak_decompose(g);
  EXPECT_NEAR(f.angles.t1, kPi, 1e-12);
  EXPECT_NEAR(f.angles.t2, 0.0, 1e-12);
  EXPECT_LE((f.reconstruct().matrix() - g.matrix()).norm(), 1e-12);
}

TEST(KakDecompose, Identity) {
  const KAKFactors f = kak_decompose(Unitary4::identity());
  EXPECT_EQ(f.angles.t1, 0.0);
  EXPECT_EQ(f.angles.t2, 0.0);
  EXPECT_LE((f.k1.matrix() * f.k2.matrix() - Matrix4::Identity()).norm(), 1e-14);
}

TEST(KakDecompose, RejectsNonSpecial) {
  EXPECT_THROW(kak_decompose(Unitary4::from_matrix(swap_matrix())), std::invalid_argument);
}

TEST(KakDecompose, HaarRoundtripAndCanonicalDomain) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const Unitary4 g = random_su4(rng);
    const KAKFactors f = kak_decompose(g);
    EXPECT_LE((f.reconstruct().matrix() - g.matrix()).norm(), 1e-10);
    EXPECT_TRUE(k_membership(f.k1.unitary()));
    EXPECT_TRUE(k_membership(f.k2.unitary()));
    EXPECT_GE(f.angles.t2, 0.0);
    EXPECT_LE(f.angles.t2, f.angles.t1);
    EXPECT_LE(f.angles.t1, kPi);
  }
}

TEST(KakDecompose, KnownAnglesThroughRandomDressing) {
  Rng rng(24);
  std::uniform_real_distribution<double> uni(0, kPi);
  for (int i = 0; i < 100; ++i) {
    double x = uni(rng), y = uni(rng);
    if (y > x) std::swap(x, y);
    const Unitary4 g = random_k(rng).unitary() * exp_abelian({x, y}) * random_k(rng).unitary();
    const KAKFactors f = kak_decompose(g);
    EXPECT_NEAR(f.angles.t1, x, 1e-9);
    EXPECT_NEAR(f.angles.t2, y, 1e-9);
  }
}

TEST(KakDecompose, ClassInvariant) {
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const Unitary4 g = random_su4(rng);
    const AbelianAngles a = kak_decompose(g).angles;
    const AbelianAngles b = kak_decompose(random_k(rng).unitary() * g * random_k(rng).unitary()).angles;
    EXPECT_NEAR(a.t1, b.t1, 1e-9);
    EXPECT_NEAR(a.t2, b.t2, 1e-9);
  }
}

TEST(KakDecompose, KElementsHaveZeroAngles) {
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    const AbelianAngles a = kak_decompose(random_k(rng).unitary()).angles;
    EXPECT_NEAR(a.t1, 0.0, 1e-9);
    EXPECT_NEAR(a.t2, 0.0, 1e-9);
  }
}

TEST(KakDecompose, DegenerateBlocks) {
  // Exactly diagonal and antidiagonal CS blocks.
  for (AbelianAngles a : {AbelianAngles{kPi, kPi}, AbelianAngles{kPi, 0}, AbelianAngles{0.5, 0.5},
                          AbelianAngles{kPi / 2, kPi / 2}}) {
    const Unitary4 g = exp_abelian(a);
    const KAKFactors f = kak_decompose(g);
    EXPECT_LE((f.reconstruct().matrix() - g.matrix()).norm(), 1e-12);
    EXPECT_NEAR(f.angles.t1, a.t1, 1e-12);
    EXPECT_NEAR(f.angles.t2, a.t2, 1e-12);
  }
}

TEST(EulerZxz, Examples) {
  const EulerZXZ id = euler_zxz(Matrix2::Identity());
  EXPECT_NEAR(id.theta1 + id.theta3, 0.0, 1e-15);
  EXPECT_NEAR(id.theta2, 0.0, 1e-15);
  const EulerZXZ x = euler_zxz(su2_rotation({1, 0, 0}, 0.8));
  EXPECT_NEAR(x.theta1, 0.0, 1e-15);
  EXPECT_NEAR(x.theta2, 0.8, 1e-15);
  EXPECT_NEAR(x.theta3, 0.0, 1e-15);
}

TEST(EulerZxz, Roundtrip) {
  Rng rng(27);
  for (int i = 0; i < 500; ++i) {
    const Matrix2 v = random_su2(rng);
    EXPECT_LE((euler_zxz_matrix(euler_zxz(v)) - v).norm(), 1e-12);
  }
  EXPECT_THROW(euler_zxz(2.0 * Matrix2::Identity()), std::invalid_argument);
}

TEST(KFactorize, Identity) {
  const KFactorization f = k_factorize(KElement(Unitary4::identity()));
  EXPECT_NEAR(f.tau1, 0.0, 1e-15);
  EXPECT_NEAR(f.tau2, 0.0, 1e-15);
  EXPECT_LE((f.reconstruct().matrix() - Matrix4::Identity()).norm(), 1e-14);
}

TEST(KFactorize, PureCoupling) {
  const double tau = 0.9;
  const KElement k(expm_skew(AlgebraElement::basis(Op::SzIz, tau)));
  const KFactorization f = k_factorize(k);
  EXPECT_NEAR(f.tau2, tau, 1e-12);
  EXPECT_NEAR(f.tau1, 0.0, 1e-12);
  EXPECT_LE((f.reconstruct().matrix() - k.matrix()).norm(), 1e-12);
}

TEST(KFactorize, RandomRoundtrip) {
  Rng rng(28);
  for (int i = 0; i < 500; ++i) {
    const KElement k = random_k(rng, 3.0);
    EXPECT_LE((k_factorize(k).reconstruct().matrix() - k.matrix()).norm(), 1e-10);
  }
}

TEST(KFactorize, ElectronOnly) {
  Rng rng(29);
  const KElement k(Unitary4::special(electron_operator(random_su2(rng))));
  const KFactorization f = k_factorize(k);
  EXPECT_LE((f.reconstruct().matrix() - k.matrix()).norm(), 1e-12);
}

TEST(CouplingIdentity, ZCouplingThroughFreeEvolution) {
  // exp(-i tau 2SzIz) = exp(-i(-tau) Iz) exp(-i tau H0/J)
  const auto& ob = operator_basis();
  for (double tau : {0.3, -1.2, 2.9}) {
    const Matrix4 lhs = evolve(ob.products[2][2], tau);
    const Matrix4 rhs = evolve(ob.Iz, -tau) * evolve(ob.Iz + ob.products[2][2], tau);
    EXPECT_LE((lhs - rhs).norm(), 1e-14);
  }
}

TEST(Lattice, Equivalents) {
  const auto e = lattice_equivalents({0, 0}, 1);
  EXPECT_EQ(e.size(), 9u);
  EXPECT_TRUE(std::any_of(e.begin(), e.end(), [](AbelianAngles a) {
    return std::abs(a.t1 - 2 * kPi) < 1e-15 && std::abs(a.t2 + 2 * kPi) < 1e-15;
  }));
  const auto one = lattice_equivalents({kPi, 0}, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (AbelianAngles{kPi, 0}));
}

TEST(Lattice, ShiftElementsLieInK) {
  for (int z1 = -2; z1 <= 2; ++z1) {
    for (int z2 = -2; z2 <= 2; ++z2) {
      const Matrix4 l = lattice_element({z1, z2});
      EXPECT_TRUE(k_membership(Unitary4::from_matrix(l)));
      EXPECT_LE((l - exp_abelian({2 * kPi * z1, 2 * kPi * z2}).matrix()).norm(), 1e-14);
    }
  }
}

TEST(Weyl, ConjugatorsRealizeSignedPermutations) {
  const AbelianAngles b{0.6, 0.2};
  for (int k = 0; k < kWeylOrder; ++k) {
    const Matrix4& w = weyl_conjugator(k).matrix();
    EXPECT_TRUE(k_membership(weyl_conjugator(k)));
    const Matrix4 image = w * abelian_generator(b).matrix() * w.adjoint();
    EXPECT_LE((image - abelian_generator(weyl_image(k, b)).matrix()).norm(), 1e-14);
  }
}

TEST(Canonicalize, Examples) {
  Canonicalization c = canonicalize({-kPi / 2, 3 * kPi});
  EXPECT_NEAR(c.canonical.t1, kPi, 1e-12);
  EXPECT_NEAR(c.canonical.t2, kPi / 2, 1e-12);
  c = canonicalize({kPi, 0});
  EXPECT_EQ(c.canonical, (AbelianAngles{kPi, 0}));
  c = canonicalize({0, -0.3});
  EXPECT_NEAR(c.canonical.t1, 0.3, 1e-15);
  EXPECT_NEAR(c.canonical.t2, 0.0, 1e-15);
}

TEST(Canonicalize, AgreesWithBruteForceAndRecordsMove) {
  Rng rng(30);
  std::uniform_real_distribution<double> uni(-3 * kPi, 3 * kPi);
  for (int i = 0; i < 2000; ++i) {
    const AbelianAngles a{uni(rng), uni(rng)};
    const Canonicalization c = canonicalize(a);
    const AbelianAngles ref = brute_canonical(a);
    EXPECT_NEAR(c.canonical.t1, ref.t1, 1e-9);
    EXPECT_NEAR(c.canonical.t2, ref.t2, 1e-9);
    const AbelianAngles shifted{a.t1 + 2 * kPi * c.shift.z1, a.t2 + 2 * kPi * c.shift.z2};
    const AbelianAngles moved = weyl_image(c.weyl_index, shifted);
    EXPECT_NEAR(moved.t1, c.canonical.t1, 1e-9);
    EXPECT_NEAR(moved.t2, c.canonical.t2, 1e-9);
  }
}

}  // namespace
}  // namespace qsynth
