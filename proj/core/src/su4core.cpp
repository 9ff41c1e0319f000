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

#include "qsynth/su4core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qsynth {

namespace {

constexpr int kMaxJacobiSweeps = 30;
constexpr double kJacobiOffTol = 1e-14;
constexpr double kClosureRankTol = 1e-9;
constexpr double kProjectionTol = 1e-10;
constexpr double kBranchCutTol = 1e-9;

using Coeffs = Eigen::Matrix<double, kAlgebraDim, 1>;

Coeffs to_vector(const AlgebraElement& a) {
  Coeffs v;
  for (std::size_t k = 0; k < kAlgebraDim; ++k) v(k) = a[k];
  return v;
}

AlgebraElement from_vector(const Coeffs& v) {
  std::array<double, kAlgebraDim> c{};
  for (std::size_t k = 0; k < kAlgebraDim; ++k) c[k] = v(k);
  return AlgebraElement(c);
}

}  // namespace

const Matrix2& pauli(int axis) {
  static const std::array<Matrix2, 3> paulis = [] {
    std::array<Matrix2, 3> p;
    p[0] << 0, 1, 1, 0;
    p[1] << 0, -kI, kI, 0;
    p[2] << 1, 0, 0, -1;
    return p;
  }();
  if (axis < 0 || axis > 2) throw std::out_of_range("pauli axis must be 0, 1 or 2");
  return paulis[axis];
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

OperatorBasis build_operator_basis() {
  OperatorBasis ob;
  const Matrix2 id2 = Matrix2::Identity();
  std::array<Matrix4, 3> s, i;
  for (int mu = 0; mu < 3; ++mu) {
    s[mu] = kron(pauli(mu), id2) * 0.5;
    i[mu] = kron(id2, pauli(mu)) * 0.5;
  }
  ob.Sx = s[0];
  ob.Sy = s[1];
  ob.Sz = s[2];
  ob.Ix = i[0];
  ob.Iy = i[1];
  ob.Iz = i[2];
  ob.S_beta = Matrix4::Identity() * 0.5 + ob.Sz;
  ob.S_alpha = Matrix4::Identity() * 0.5 - ob.Sz;
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) ob.products[mu][nu] = 2.0 * s[mu] * i[nu];

  for (int mu = 0; mu < 3; ++mu) {
    ob.hermitian[mu] = s[mu];
    ob.hermitian[3 + mu] = i[mu];
    for (int nu = 0; nu < 3; ++nu) ob.hermitian[6 + 3 * mu + nu] = ob.products[mu][nu];
  }
  return ob;
}

const OperatorBasis& operator_basis() {
  static const OperatorBasis basis = build_operator_basis();
  return basis;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const std::array<double, kAlgebraDim>& coeffs) : coeffs_(coeffs) {}

AlgebraElement AlgebraElement::basis(Op op, double coeff) {
  AlgebraElement a;
  a.coeffs_[static_cast<std::size_t>(op)] = coeff;
  return a;
}

AlgebraElement AlgebraElement::from_matrix(const Matrix4& m) {
  if (!qsynth::is_finite(m)) {
    throw std::invalid_argument("algebra element has non-finite entries");
  }
  const double scale = std::max(1.0, m.norm());
  if ((m + m.adjoint()).norm() > kProjectionTol * scale) {
    throw std::invalid_argument("matrix is not skew-Hermitian");
  }
  if (std::abs(m.trace()) > kProjectionTol * scale) {
    throw std::invalid_argument("matrix is not traceless");
  }
  // The P_k are orthonormal under tr(P_k P_l), so c_k = Re tr(P_k (i m)).
  const auto& ob = operator_basis();
  AlgebraElement a;
  const Matrix4 h = kI * m;
  for (std::size_t k = 0; k < kAlgebraDim; ++k) {
    a.coeffs_[k] = (ob.hermitian[k] * h).trace().real();
  }
  return a;
}

Matrix4 AlgebraElement::matrix() const {
  const auto& ob = operator_basis();
  Matrix4 h = Matrix4::Zero();
  for (std::size_t k = 0; k < kAlgebraDim; ++k) {
    if (coeffs_[k] != 0.0) h += coeffs_[k] * ob.hermitian[k];
  }
  return -kI * h;
}

double AlgebraElement::norm() const {
  return std::sqrt(std::inner_product(coeffs_.begin(), coeffs_.end(), coeffs_.begin(), 0.0));
}

bool AlgebraElement::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double x) { return std::isfinite(x); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (std::size_t k = 0; k < kAlgebraDim; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (std::size_t k = 0; k < kAlgebraDim; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Unitary4

bool is_finite(const Matrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool is_unitary(const Matrix4& m, double tol) {
  if (!is_finite(m)) return false;
  return (m.adjoint() * m - Matrix4::Identity()).norm() <= tol;
}

Unitary4 Unitary4::from_matrix(const Matrix4& m, double tol) {
  if (!is_finite(m)) throw std::invalid_argument("matrix has non-finite entries");
  if (!is_unitary(m, tol)) throw std::invalid_argument("matrix is not unitary");
  return Unitary4(m, std::abs(m.determinant() - 1.0) <= kDetTol);
}

Unitary4 Unitary4::special(const Matrix4& m, double tol) {
  Unitary4 u = from_matrix(m, tol);
  if (!u.special_) throw std::invalid_argument("matrix does not have determinant one");
  return u;
}

Unitary4 Unitary4::phased(Complex phase) const {
  const Matrix4 m = m_ * phase;
  return Unitary4(m, std::abs(m.determinant() - 1.0) <= kDetTol);
}

// ---------------------------------------------------------------------------
// Exponential and logarithm

HermitianEigen hermitian_eigen(const Matrix4& input) {
  if (!is_finite(input)) throw std::invalid_argument("Hermitian matrix has non-finite entries");
  Matrix4 h = (input + input.adjoint()) * 0.5;
  Matrix4 v = Matrix4::Identity();
  const double scale = std::max(1.0, h.norm());

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += std::norm(h(p, q));
    if (std::sqrt(off) <= kJacobiOffTol * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex hpq = h(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        // Remove the phase of h(p,q), then apply the real symmetric rotation.
        const Complex conj_phase = std::conj(hpq) / mag;
        const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Matrix4 g = Matrix4::Identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * conj_phase;
        g(q, q) = c * conj_phase;

        h = g.adjoint() * h * g;
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        v = v * g;
      }
    }
  }

  HermitianEigen out;
  out.sweeps = sweep;
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });
  for (int k = 0; k < 4; ++k) {
    out.values(k) = h(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

Matrix4 evolve(const Matrix4& h, double t) {
  const HermitianEigen eig = hermitian_eigen(h);
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(-kI * (t * eig.values(k)));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Unitary4 expm_skew(const AlgebraElement& a) {
  if (!a.is_finite()) throw std::invalid_argument("algebra element has non-finite coefficients");
  // a = -i H with H Hermitian, so exp(a) = exp(-i H).
  const Matrix4 h = kI * a.matrix();
  return Unitary4::trusted(evolve(h, 1.0), true);
}

LogResult logm_unitary(const Unitary4& u) {
  Eigen::ComplexSchur<Matrix4> schur(u.matrix());
  const Matrix4& t = schur.matrixT();
  const Matrix4& q = schur.matrixU();

  LogResult out;
  Eigen::Vector4cd log_diag;
  double phase_sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double phi = std::arg(t(k, k));
    if (std::abs(phi) > kPi - kBranchCutTol) out.at_branch_cut = true;
    phase_sum += phi;
    log_diag(k) = kI * phi;
  }
  out.global_phase = phase_sum / 4.0;
  Matrix4 l = q * log_diag.asDiagonal() * q.adjoint();
  l -= kI * out.global_phase * Matrix4::Identity();
  // Schur vectors of a normal matrix are exact eigenvectors up to roundoff;
  // symmetrize before projecting.
  l = (l - l.adjoint()) * 0.5;
  out.generator = AlgebraElement::from_matrix(l);
  return out;
}

// ---------------------------------------------------------------------------
// Lie algebra tooling

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  const Matrix4 ma = a.matrix();
  const Matrix4 mb = b.matrix();
  return AlgebraElement::from_matrix(ma * mb - mb * ma);
}

LieClosure lie_closure(std::span<const AlgebraElement> generators) {
  std::vector<Coeffs> basis;

  auto try_add = [&basis](const AlgebraElement& candidate) {
    Coeffs r = to_vector(candidate);
    const double n0 = r.norm();
    if (n0 == 0.0 || !std::isfinite(n0)) return false;
    r /= n0;
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= b.dot(r) * b;
    const double n = r.norm();
    if (n <= kClosureRankTol) return false;
    basis.push_back(r / n);
    return true;
  };

  for (const auto& g : generators) try_add(g);

  // Every new element is commuted with everything before it; stop once a full
  // pass adds nothing.
  std::size_t processed = 0;
  while (processed < basis.size() && basis.size() < kAlgebraDim) {
    const AlgebraElement e = from_vector(basis[processed]);
    for (std::size_t j = 0; j < processed; ++j) {
      try_add(commutator(from_vector(basis[j]), e));
      if (basis.size() == kAlgebraDim) break;
    }
    ++processed;
  }

  LieClosure out;
  out.dimension = static_cast<int>(basis.size());
  out.basis.reserve(basis.size());
  for (const auto& b : basis) out.basis.push_back(from_vector(b));
  return out;
}

bool in_k(Op op) {
  switch (op) {
    case Op::Sx:
    case Op::Sy:
    case Op::Sz:
    case Op::Iz:
    case Op::SxIz:
    case Op::SyIz:
    case Op::SzIz:
      return true;
    default:
      return false;
  }
}

CartanSplit cartan_project(const AlgebraElement& a) {
  CartanSplit out;
  for (std::size_t k = 0; k < kAlgebraDim; ++k) {
    if (in_k(static_cast<Op>(k))) {
      out.k_part[k] = a[k];
    } else {
      out.p_part[k] = a[k];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Metrics and fixed gates

double distance_up_to_phase(const Matrix4& u, const Matrix4& v) {
  // The minimizing phase is arg tr(V^dagger U). Evaluating the residual
  // directly avoids the cancellation in sqrt(8 - 2|tr|).
  const Complex overlap = (v.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0, 0.0);
  return (u - phase * v).norm();
}

double distance_up_to_phase(const Unitary4& u, const Unitary4& v) {
  return distance_up_to_phase(u.matrix(), v.matrix());
}

const Matrix4& swap_matrix() {
  static const Matrix4 m = [] {
    Matrix4 s = Matrix4::Zero();
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return s;
  }();
  return m;
}

const Matrix4& cnot12_matrix() {
  static const Matrix4 m = [] {
    Matrix4 s = Matrix4::Zero();
    s(0, 0) = s(1, 1) = s(2, 3) = s(3, 2) = 1.0;
    return s;
  }();
  return m;
}

const Matrix4& cnot21_matrix() {
  static const Matrix4 m = [] {
    Matrix4 s = Matrix4::Zero();
    s(0, 0) = s(1, 3) = s(2, 2) = s(3, 1) = 1.0;
    return s;
  }();
  return m;
}

Matrix2 su2_rotation(const std::array<double, 3>& axis, double angle) {
  Matrix2 out = Matrix2::Identity() * std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  for (int k = 0; k < 3; ++k) out += -kI * s * axis[k] * pauli(k);
  return out;
}

}  // namespace qsynth
