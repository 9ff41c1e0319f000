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

#include "qsynth/kak.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace qsynth {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kReconstructionFailTol = 1e-8;
constexpr double kSu2Tol = 1e-10;

using Vector2c = Eigen::Vector2cd;
using RowVector2c = Eigen::RowVector2cd;

Matrix4 block_diag(const Matrix2& a, const Matrix2& b) {
  Matrix4 m = Matrix4::Zero();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = b;
  return m;
}

Matrix4 swap_conjugate(const Matrix4& m) { return swap_matrix() * m * swap_matrix(); }

// Completes the unit column p to a unitary [p q] (or [q p]) with q aligned in
// phase to `hint` when the hint is not negligible.
Vector2c orthogonal_complement(const Vector2c& p, const Vector2c& hint) {
  Vector2c q(-std::conj(p(1)), std::conj(p(0)));
  const Complex overlap = q.dot(hint);  // q^dagger hint
  const double mag = std::abs(overlap);
  if (mag > kDegenerateTol) q *= overlap / mag;
  return q;
}

// Builds a unitary from two nearly orthogonal columns (or rows, via
// transposition), trusting the longer one.
Matrix2 unitary_from_columns(const Matrix2& cols) {
  const double n0 = cols.col(0).norm();
  const double n1 = cols.col(1).norm();
  Matrix2 out = Matrix2::Identity();
  if (std::max(n0, n1) <= kDegenerateTol) return out;
  const int primary = n0 >= n1 ? 0 : 1;
  const int other = 1 - primary;
  const Vector2c p = cols.col(primary) / (primary == 0 ? n0 : n1);
  out.col(primary) = p;
  out.col(other) = orthogonal_complement(p, cols.col(other));
  return out;
}

struct CosSin {
  Matrix2 u1, u2, u3, u4;
  double a1 = 0.0;
  double a2 = 0.0;
};

// m = diag(u1,u2) [[C, -iS], [-iS, C]] diag(u3,u4), C = diag(cos(a/2)),
// S = diag(sin(a/2)), a in [0, pi]^2.
CosSin cos_sin_decompose(const Matrix4& m) {
  const Matrix2 m11 = m.topLeftCorner<2, 2>();
  const Matrix2 m12 = m.topRightCorner<2, 2>();
  const Matrix2 m21 = m.bottomLeftCorner<2, 2>();
  const Matrix2 m22 = m.bottomRightCorner<2, 2>();
  const Matrix2 id = Matrix2::Identity();

  CosSin out;
  if (m12.norm() <= kDegenerateTol && m21.norm() <= kDegenerateTol) {
    out.u1 = m11;
    out.u2 = m22;
    out.u3 = id;
    out.u4 = id;
    return out;
  }
  if (m11.norm() <= kDegenerateTol && m22.norm() <= kDegenerateTol) {
    out.u1 = id;
    out.u2 = kI * m21;
    out.u3 = id;
    out.u4 = kI * m12;
    out.a1 = out.a2 = kPi;
    return out;
  }

  Eigen::JacobiSVD<Matrix2> svd(m11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector2d c = svd.singularValues().cwiseMin(1.0);
  const Matrix2 v = svd.matrixV();
  out.u1 = svd.matrixU();
  out.u3 = v.adjoint();

  // i m21 v = u2 S: its columns are orthogonal with norms sin(a_j/2).
  const Matrix2 x = kI * m21 * v;
  out.u2 = unitary_from_columns(x);
  Eigen::Vector2d s;
  const Matrix2 s_diag = out.u2.adjoint() * x;
  for (int j = 0; j < 2; ++j) s(j) = std::max(0.0, s_diag(j, j).real());

  // Rows of u4 from whichever of S u4 = i u1^dag m12, C u4 = u2^dag m22 has
  // the larger scale factor.
  const Matrix2 y12 = kI * out.u1.adjoint() * m12;
  const Matrix2 y22 = out.u2.adjoint() * m22;
  Matrix2 rows;
  for (int j = 0; j < 2; ++j) {
    if (s(j) > c(j)) {
      rows.row(j) = y12.row(j) / s(j);
    } else {
      rows.row(j) = y22.row(j) / c(j);
    }
  }
  out.u4 = unitary_from_columns(rows.transpose()).transpose();

  out.a1 = 2.0 * std::atan2(s(0), c(0));
  out.a2 = 2.0 * std::atan2(s(1), c(1));
  return out;
}

AbelianAngles lattice_shifted(AbelianAngles a, LatticeShift z) {
  return {a.t1 + 2.0 * kPi * z.z1, a.t2 + 2.0 * kPi * z.z2};
}

}  // namespace

// ---------------------------------------------------------------------------
// Abelian subgroup

AlgebraElement abelian_generator(AbelianAngles a) {
  // S^beta I_x = I_x/2 + S_z I_x and S^alpha I_x = I_x/2 - S_z I_x.
  AlgebraElement g;
  g[static_cast<std::size_t>(Op::Ix)] = 0.5 * (a.t1 + a.t2);
  g[static_cast<std::size_t>(Op::SzIx)] = 0.5 * (a.t1 - a.t2);
  return g;
}

Unitary4 exp_abelian(AbelianAngles a) {
  const double c1 = std::cos(a.t1 / 2.0), s1 = std::sin(a.t1 / 2.0);
  const double c2 = std::cos(a.t2 / 2.0), s2 = std::sin(a.t2 / 2.0);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = m(1, 1) = c1;
  m(0, 1) = m(1, 0) = -kI * s1;
  m(2, 2) = m(3, 3) = c2;
  m(2, 3) = m(3, 2) = -kI * s2;
  return Unitary4::trusted(m, true);
}

// ---------------------------------------------------------------------------
// K subgroup

bool k_membership(const Unitary4& g) {
  const Matrix4 m = swap_conjugate(g.matrix());
  if (m.topRightCorner<2, 2>().norm() > KElement::kBlockTol) return false;
  if (m.bottomLeftCorner<2, 2>().norm() > KElement::kBlockTol) return false;
  return std::abs(g.det() - 1.0) <= Unitary4::kDetTol;
}

KElement::KElement(const Unitary4& u) : u_(u) {
  if (!k_membership(u)) throw std::invalid_argument("unitary is not an element of K");
}

Unitary4 KAKFactors::reconstruct() const {
  return k1.unitary() * exp_abelian(angles) * k2.unitary();
}

Matrix4 lattice_element(LatticeShift z) {
  const double b = (z.z1 % 2 == 0) ? 1.0 : -1.0;
  const double a = (z.z2 % 2 == 0) ? 1.0 : -1.0;
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = m(1, 1) = b;
  m(2, 2) = m(3, 3) = a;
  return m;
}

std::vector<AbelianAngles> lattice_equivalents(AbelianAngles a, int zmax) {
  if (zmax < 0) throw std::invalid_argument("zmax must be non-negative");
  std::vector<AbelianAngles> out;
  out.reserve(static_cast<std::size_t>((2 * zmax + 1) * (2 * zmax + 1)));
  for (int z1 = -zmax; z1 <= zmax; ++z1)
    for (int z2 = -zmax; z2 <= zmax; ++z2) out.push_back(lattice_shifted(a, {z1, z2}));
  return out;
}

AbelianAngles weyl_image(int index, AbelianAngles b) {
  switch (index) {
    case 0: return {b.t1, b.t2};
    case 1: return {b.t1, -b.t2};
    case 2: return {-b.t1, b.t2};
    case 3: return {-b.t1, -b.t2};
    case 4: return {b.t2, b.t1};
    case 5: return {-b.t2, b.t1};
    case 6: return {b.t2, -b.t1};
    case 7: return {-b.t2, -b.t1};
    default: throw std::out_of_range("Weyl index must be in [0, 8)");
  }
}

const Unitary4& weyl_conjugator(int index) {
  static const std::array<Unitary4, kWeylOrder> table = [] {
    // S^alpha I_z = I_z/2 - S_z I_z, S^beta I_z = I_z/2 + S_z I_z.
    AlgebraElement alpha_iz;
    alpha_iz[static_cast<std::size_t>(Op::Iz)] = 0.5 * kPi;
    alpha_iz[static_cast<std::size_t>(Op::SzIz)] = -0.5 * kPi;
    AlgebraElement beta_iz;
    beta_iz[static_cast<std::size_t>(Op::Iz)] = 0.5 * kPi;
    beta_iz[static_cast<std::size_t>(Op::SzIz)] = 0.5 * kPi;

    const Unitary4 e_alpha = expm_skew(alpha_iz);
    const Unitary4 e_beta = expm_skew(beta_iz);
    const Unitary4 e_iz = expm_skew(AlgebraElement::basis(Op::Iz, kPi));
    const Unitary4 e_sx = expm_skew(AlgebraElement::basis(Op::Sx, kPi));
    const Unitary4 e_sxiz = expm_skew(AlgebraElement::basis(Op::SxIz, kPi));
    return std::array<Unitary4, kWeylOrder>{
        Unitary4::identity(), e_alpha, e_beta, e_iz,
        e_sx, e_sx * e_alpha, e_sx * e_beta, e_sxiz};
  }();
  if (index < 0 || index >= kWeylOrder) throw std::out_of_range("Weyl index must be in [0, 8)");
  return table[index];
}

Canonicalization canonicalize(AbelianAngles a) {
  Canonicalization out;
  out.shift.z1 = -static_cast<int>(std::lround(a.t1 / (2.0 * kPi)));
  out.shift.z2 = -static_cast<int>(std::lround(a.t2 / (2.0 * kPi)));
  const AbelianAngles x = lattice_shifted(a, out.shift);

  const bool neg1 = x.t1 < 0.0;
  const bool neg2 = x.t2 < 0.0;
  if (std::abs(x.t1) >= std::abs(x.t2)) {
    out.weyl_index = (neg1 ? 2 : 0) + (neg2 ? 1 : 0);
  } else {
    // 4:(b2,b1) 5:(-b2,b1) 6:(b2,-b1) 7:(-b2,-b1)
    out.weyl_index = 4 + (neg2 ? 1 : 0) + (neg1 ? 2 : 0);
  }
  out.canonical = weyl_image(out.weyl_index, x);
  return out;
}

KAKFactors kak_decompose(const Unitary4& g) {
  if (!is_unitary(g.matrix())) throw std::invalid_argument("KAK input is not unitary");
  if (std::abs(g.det() - 1.0) > Unitary4::kDetTol) {
    throw std::invalid_argument("KAK input does not have determinant one");
  }

  const CosSin cs = cos_sin_decompose(swap_conjugate(g.matrix()));
  Matrix4 k1 = swap_conjugate(block_diag(cs.u1, cs.u2));
  Matrix4 k2 = swap_conjugate(block_diag(cs.u3, cs.u4));

  // det(k1) det(k2) = 1; move a quarter of the phase across so both are special.
  const Complex phase = std::exp(-kI * (std::arg(k1.determinant()) / 4.0));
  k1 *= phase;
  k2 *= std::conj(phase);

  // Into the fundamental domain: A(a) = A(a + 2 pi z) L(z) and
  // A(x) = W^dag A(weyl(x)) W, so G = (k1 W^dag) A(canonical) (W L(z) k2).
  const Canonicalization canon = canonicalize({cs.a1, cs.a2});
  const Matrix4& w = weyl_conjugator(canon.weyl_index).matrix();
  k1 = k1 * w.adjoint();
  k2 = w * lattice_element(canon.shift) * k2;

  KAKFactors out{KElement(Unitary4::trusted(k1, true)), KElement(Unitary4::trusted(k2, true)),
                 canon.canonical};
  const double residual = (out.reconstruct().matrix() - g.matrix()).norm();
  if (!(residual <= kReconstructionFailTol)) {
    throw std::runtime_error("cosine-sine completion failed; input is numerically defective");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization of K elements

Matrix4 electron_operator(const Matrix2& l) { return kron(l, Matrix2::Identity()); }

EulerZXZ euler_zxz(const Matrix2& v) {
  if ((v.adjoint() * v - Matrix2::Identity()).norm() > kSu2Tol ||
      std::abs(v.determinant() - 1.0) > kSu2Tol) {
    throw std::invalid_argument("Euler decomposition requires an SU(2) matrix");
  }
  // v11 = c e^{-i(t1+t3)/2}, v21 = -i s e^{i(t1-t3)/2}, v22 = c e^{i(t1+t3)/2}.
  const double c = std::abs(v(0, 0));
  const double s = std::abs(v(1, 0));
  EulerZXZ e;
  e.theta2 = 2.0 * std::atan2(s, c);
  double sum = 0.0;
  double diff = 0.0;
  if (s <= kDegenerateTol) {
    sum = 2.0 * std::arg(v(1, 1));
  } else if (c <= kDegenerateTol) {
    diff = 2.0 * std::arg(v(1, 0)) + kPi;
  } else {
    sum = 2.0 * std::arg(v(1, 1));
    diff = 2.0 * std::arg(v(1, 0)) + kPi;
  }
  if (s <= kDegenerateTol || c <= kDegenerateTol) {
    // Gimbal lock: only one combination is defined; put it all on theta1.
    e.theta1 = sum + diff;
    e.theta3 = 0.0;
  } else {
    e.theta1 = 0.5 * (sum + diff);
    e.theta3 = 0.5 * (sum - diff);
  }
  auto wrap = [](double t) {
    while (t > 2.0 * kPi) t -= 4.0 * kPi;
    while (t <= -2.0 * kPi) t += 4.0 * kPi;
    return t;
  };
  e.theta1 = wrap(e.theta1);
  e.theta3 = wrap(e.theta3);
  return e;
}

Matrix2 euler_zxz_matrix(const EulerZXZ& e) {
  return su2_rotation({0, 0, 1}, e.theta1) * su2_rotation({1, 0, 0}, e.theta2) *
         su2_rotation({0, 0, 1}, e.theta3);
}

Unitary4 KFactorization::reconstruct() const {
  Eigen::Vector4cd iz;
  iz << std::exp(-kI * tau1 / 2.0), std::exp(kI * tau1 / 2.0), std::exp(-kI * tau1 / 2.0),
      std::exp(kI * tau1 / 2.0);
  Eigen::Vector4cd szz;
  szz << std::exp(-kI * tau2 / 2.0), std::exp(kI * tau2 / 2.0), std::exp(kI * tau2 / 2.0),
      std::exp(-kI * tau2 / 2.0);
  const Matrix4 m = iz.asDiagonal() * electron_operator(euler_zxz_matrix(euler1)) *
                    szz.asDiagonal() * electron_operator(euler_zxz_matrix(euler2));
  return Unitary4::trusted(m, true);
}

KFactorization k_factorize(const KElement& k) {
  // After SWAP conjugation the nucleus is the outer index:
  //   P = e^{-i tau1/2} l1 e^{-i tau2 sz/2} l2,  Q = e^{+i tau1/2} l1 e^{+i tau2 sz/2} l2.
  const Matrix4 m = swap_conjugate(k.matrix());
  const Matrix2 p = m.topLeftCorner<2, 2>();
  const Matrix2 q = m.bottomRightCorner<2, 2>();

  KFactorization out;
  out.tau1 = -std::arg(p.determinant());
  const Complex half = std::exp(kI * (out.tau1 / 2.0));
  const Matrix2 v_plus = half * p;
  const Matrix2 v_minus = std::conj(half) * q;

  // w = v+ v-^dag = l1 e^{-i tau2 sz} l1^dag = cos(tau2) - i sin(tau2) n.sigma.
  const Matrix2 w = v_plus * v_minus.adjoint();
  const double a0 = 0.5 * w.trace().real();
  std::array<double, 3> m_vec{};
  for (int axis = 0; axis < 3; ++axis) {
    m_vec[axis] = (0.5 * kI * (pauli(axis) * w).trace()).real();
  }
  const double m_norm = std::hypot(m_vec[0], m_vec[1], m_vec[2]);
  out.tau2 = std::atan2(m_norm, a0);

  Matrix2 l1 = Matrix2::Identity();
  if (m_norm > kDegenerateTol) {
    const double polar = std::atan2(std::hypot(m_vec[0], m_vec[1]), m_vec[2]);
    const double azimuth = std::atan2(m_vec[1], m_vec[0]);
    // Rotates the z axis onto n.
    l1 = su2_rotation({0, 0, 1}, azimuth) * su2_rotation({0, 1, 0}, polar);
  }
  const Matrix2 l2 = su2_rotation({0, 0, 1}, -out.tau2) * l1.adjoint() * v_plus;

  out.euler1 = euler_zxz(l1);
  out.euler2 = euler_zxz(l2);
  return out;
}

}  // namespace qsynth
