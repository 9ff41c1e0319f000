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

// G = K1 exp(t1 (-i S^beta I_x) + t2 (-i S^alpha I_x)) K2 with K1, K2 in
// K = S[U(2) x U(2)], computed through the cosine-sine decomposition of
// SWAP G SWAP.

#include <array>
#include <vector>

#include "qsynth/su4core.hpp"

namespace qsynth {

/// Coordinates of an element of the abelian subalgebra
/// a = span{-i S^beta I_x, -i S^alpha I_x}: t1 multiplies the beta-branch
/// generator, t2 the alpha-branch one. Also used for drive vectors (b1, b2).
struct AbelianAngles {
  double t1 = 0.0;
  double t2 = 0.0;

  friend bool operator==(const AbelianAngles&, const AbelianAngles&) = default;
};

/// t1 (-i S^beta I_x) + t2 (-i S^alpha I_x).
AlgebraElement abelian_generator(AbelianAngles a);

/// exp(abelian_generator(a)), evaluated in closed form.
Unitary4 exp_abelian(AbelianAngles a);

/// An element of K: block diagonal after SWAP conjugation, determinant one.
class KElement {
 public:
  static constexpr double kBlockTol = 1e-10;

  KElement() = default;
  /// Throws std::invalid_argument if u is not in K.
  explicit KElement(const Unitary4& u);

  const Unitary4& unitary() const { return u_; }
  const Matrix4& matrix() const { return u_.matrix(); }

 private:
  Unitary4 u_;
};

/// True iff the off-diagonal 2x2 blocks of SWAP G SWAP have norm <= 1e-10 and
/// det(G) = 1.
bool k_membership(const Unitary4& g);

struct KAKFactors {
  KElement k1;
  KElement k2;
  AbelianAngles angles;

  /// k1 * exp_abelian(angles) * k2.
  Unitary4 reconstruct() const;
};

/// Throws std::invalid_argument for non-unitary or non-special input and
/// std::runtime_error if the CS completion fails.
KAKFactors kak_decompose(const Unitary4& g);

/// Euler angles of V = exp(-i t1 sz/2) exp(-i t2 sx/2) exp(-i t3 sz/2).
struct EulerZXZ {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

/// Throws std::invalid_argument if v is not in SU(2) to 1e-10.
EulerZXZ euler_zxz(const Matrix2& v);
Matrix2 euler_zxz_matrix(const EulerZXZ& e);

/// K = exp(-i tau1 I_z) L1 exp(-i tau2 2 S_z I_z) L2 with L1, L2 acting on the
/// electron only.
struct KFactorization {
  double tau1 = 0.0;
  double tau2 = 0.0;
  EulerZXZ euler1;
  EulerZXZ euler2;

  Unitary4 reconstruct() const;
};

KFactorization k_factorize(const KElement& k);

/// Electron rotation l (x) id.
Matrix4 electron_operator(const Matrix2& l);

struct LatticeShift {
  int z1 = 0;
  int z2 = 0;
};

/// All (t1 + 2 pi z1, t2 + 2 pi z2) with |z_j| <= zmax, z1 outer.
std::vector<AbelianAngles> lattice_equivalents(AbelianAngles a, int zmax);

/// exp(2 pi z1 (-i S^beta I_x) + 2 pi z2 (-i S^alpha I_x)): a diagonal sign
/// matrix in K.
Matrix4 lattice_element(LatticeShift z);

/// Number of Weyl group elements (signed coordinate permutations).
inline constexpr int kWeylOrder = 8;

/// The signed permutation induced by conjugation with weyl_conjugator(index):
/// 0:(b1,b2) 1:(b1,-b2) 2:(-b1,b2) 3:(-b1,-b2)
/// 4:(b2,b1) 5:(-b2,b1) 6:(b2,-b1) 7:(-b2,-b1).
AbelianAngles weyl_image(int index, AbelianAngles b);

/// W_k in K with W_k exp_abelian(b) W_k^dagger = exp_abelian(weyl_image(k, b)).
/// Order: id, exp(-i pi S^alpha I_z), exp(-i pi S^beta I_z), exp(-i pi I_z),
/// exp(-i pi S_x), exp(-i pi S_x) exp(-i pi S^alpha I_z),
/// exp(-i pi S_x) exp(-i pi S^beta I_z), exp(-i 2 pi S_x I_z).
const Unitary4& weyl_conjugator(int index);

struct Canonicalization {
  AbelianAngles canonical;
  /// canonical = weyl_image(weyl_index, input + 2 pi shift).
  int weyl_index = 0;
  LatticeShift shift;
};

/// Maps a into the fundamental domain 0 <= t2 <= t1 <= pi.
Canonicalization canonicalize(AbelianAngles a);

}  // namespace qsynth
