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

#include "qsynth/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace qsynth {

namespace {

template <int N>
Eigen::Matrix<Complex, N, N> haar(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix<Complex, N, N> z;
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) z(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix<Complex, N, N>> qr(z);
  Eigen::Matrix<Complex, N, N> q = qr.householderQ();
  const Eigen::Matrix<Complex, N, N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the result is Haar distributed.
  for (int c = 0; c < N; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  const Complex det = q.determinant();
  return q * std::exp(-kI * (std::arg(det) / N));
}

}  // namespace

Unitary4 random_su4(Rng& rng) { return Unitary4::special(haar<4>(rng), 1e-10); }

Matrix2 random_su2(Rng& rng) { return haar<2>(rng); }

AlgebraElement random_algebra(Rng& rng, double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  std::array<double, kAlgebraDim> c{};
  for (auto& v : c) v = normal(rng);
  return AlgebraElement(c);
}

KElement random_k(Rng& rng, double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  AlgebraElement a;
  for (Op op : {Op::Sx, Op::Sy, Op::Sz, Op::Iz, Op::SxIz, Op::SyIz, Op::SzIz}) {
    a[static_cast<std::size_t>(op)] = normal(rng);
  }
  return KElement(expm_skew(a));
}

}  // namespace qsynth
