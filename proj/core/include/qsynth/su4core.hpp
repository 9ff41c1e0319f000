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

// Fixed-size linear algebra for the electron (fast, S) / nucleus (slow, I)
// two-qubit system.
//
// Basis ordering is the tensor ordering S (x) I, i.e. the computational
// states 00, 01, 10, 11 correspond to the spin states
// beta-alpha, beta-beta, alpha-alpha, alpha-beta (electron first).

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qsynth {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Number of real coordinates of su(4).
inline constexpr std::size_t kAlgebraDim = 15;

/// Spin operators of the coupled system. All entries are exact.
struct OperatorBasis {
  Matrix4 Sx, Sy, Sz;
  Matrix4 Ix, Iy, Iz;
  Matrix4 S_alpha, S_beta;
  /// products[mu][nu] = 2 S_mu I_nu, mu,nu in {x,y,z}.
  std::array<std::array<Matrix4, 3>, 3> products;
  /// The 15 Hermitian operators P_k whose -i multiples span su(4), in the
  /// serialization order S_x,S_y,S_z, I_x,I_y,I_z, 2S_xI_x,2S_xI_y,...,2S_zI_z.
  std::array<Matrix4, kAlgebraDim> hermitian;
};

OperatorBasis build_operator_basis();

/// Shared immutable instance of build_operator_basis().
const OperatorBasis& operator_basis();

/// Index of a product operator inside the 15-element ordering.
enum class Op : std::size_t {
  Sx = 0, Sy, Sz,
  Ix, Iy, Iz,
  SxIx, SxIy, SxIz,
  SyIx, SyIy, SyIz,
  SzIx, SzIy, SzIz,
};

/// Element of su(4) stored as real coefficients c_k of -i P_k.
class AlgebraElement {
 public:
  AlgebraElement() { coeffs_.fill(0.0); }
  explicit AlgebraElement(const std::array<double, kAlgebraDim>& coeffs);

  /// coeff * (-i P_op).
  static AlgebraElement basis(Op op, double coeff = 1.0);

  /// Projects a skew-Hermitian traceless matrix onto the basis. Throws
  /// std::invalid_argument when the matrix is not (to 1e-10) skew-Hermitian
  /// and traceless, or contains non-finite entries.
  static AlgebraElement from_matrix(const Matrix4& m);

  Matrix4 matrix() const;

  double operator[](std::size_t k) const { return coeffs_[k]; }
  double& operator[](std::size_t k) { return coeffs_[k]; }
  double operator[](Op op) const { return coeffs_[static_cast<std::size_t>(op)]; }
  const std::array<double, kAlgebraDim>& coefficients() const { return coeffs_; }

  /// Euclidean norm of the coefficients (equals the Frobenius norm of matrix()).
  double norm() const;
  bool is_finite() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(double s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }

 private:
  std::array<double, kAlgebraDim> coeffs_;
};

/// A 4x4 unitary. Construction validates unitarity; `special` additionally
/// asserts det = 1.
class Unitary4 {
 public:
  static constexpr double kUnitaryTol = 1e-12;
  static constexpr double kDetTol = 1e-10;

  Unitary4() : m_(Matrix4::Identity()), special_(true) {}

  /// Throws std::invalid_argument if m is not unitary to `tol`.
  static Unitary4 from_matrix(const Matrix4& m, double tol = kUnitaryTol);
  /// As from_matrix, and also requires |det(m) - 1| <= kDetTol.
  static Unitary4 special(const Matrix4& m, double tol = kUnitaryTol);
  /// Wraps a matrix known to be unitary by construction (products of
  /// validated factors, exact exponentials). No check is performed.
  static Unitary4 trusted(const Matrix4& m, bool special) { return Unitary4(m, special); }

  static Unitary4 identity() { return Unitary4(); }

  const Matrix4& matrix() const { return m_; }
  bool is_special() const { return special_; }
  Complex det() const { return m_.determinant(); }
  Unitary4 adjoint() const { return Unitary4(m_.adjoint(), special_); }

  /// Multiplies by a unit-modulus scalar.
  Unitary4 phased(Complex phase) const;

  friend Unitary4 operator*(const Unitary4& a, const Unitary4& b) {
    return Unitary4(a.m_ * b.m_, a.special_ && b.special_);
  }

 private:
  Unitary4(const Matrix4& m, bool special) : m_(m), special_(special) {}

  Matrix4 m_;
  bool special_;
};

bool is_unitary(const Matrix4& m, double tol = Unitary4::kUnitaryTol);
bool is_finite(const Matrix4& m);

/// Eigen-decomposition of a Hermitian 4x4 matrix by cyclic complex Jacobi
/// sweeps: h = vectors * diag(values) * vectors^dagger.
struct HermitianEigen {
  Eigen::Vector4d values;
  Matrix4 vectors;
  int sweeps = 0;
};

/// Throws std::invalid_argument on non-finite input.
HermitianEigen hermitian_eigen(const Matrix4& h);

/// exp(-i t H) for Hermitian H.
Matrix4 evolve(const Matrix4& h, double t);

/// exp(A) for A in su(4). Throws std::invalid_argument on non-finite input.
Unitary4 expm_skew(const AlgebraElement& a);

struct LogResult {
  /// Principal-branch logarithm with the trace removed.
  AlgebraElement generator;
  /// expm_skew(generator) * exp(i * global_phase) == U.
  double global_phase = 0.0;
  /// Set when an eigenphase lies within 1e-9 of the branch cut at +-pi.
  bool at_branch_cut = false;
};

LogResult logm_unitary(const Unitary4& u);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

struct LieClosure {
  int dimension = 0;
  /// Orthonormal basis of the closure (coefficient space).
  std::vector<AlgebraElement> basis;
};

/// Real span of the generators closed under commutators. Candidates are
/// unit-normalized before the rank test (threshold 1e-9).
LieClosure lie_closure(std::span<const AlgebraElement> generators);

/// Split along su(4) = k + p with k = span{S_mu, 2S_nu I_z, I_z}.
struct CartanSplit {
  AlgebraElement k_part;
  AlgebraElement p_part;
};

CartanSplit cartan_project(const AlgebraElement& a);
bool in_k(Op op);

/// min over phi of ||U - e^{i phi} V||_F.
double distance_up_to_phase(const Matrix4& u, const Matrix4& v);
double distance_up_to_phase(const Unitary4& u, const Unitary4& v);

// Frequently used fixed matrices.
const Matrix4& swap_matrix();
/// CNOT with the electron as control (the paper's CNOT[1,2]).
const Matrix4& cnot12_matrix();
/// CNOT with the nucleus as control (CNOT[2,1]).
const Matrix4& cnot21_matrix();

/// a (x) b.
Matrix4 kron(const Matrix2& a, const Matrix2& b);
const Matrix2& pauli(int axis);

/// exp(-i angle/2 * n.sigma) for a unit (or zero) axis n.
Matrix2 su2_rotation(const std::array<double, 3>& axis, double angle);

}  // namespace qsynth
