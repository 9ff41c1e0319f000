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

// Seeded samplers used by tests, benchmarks and the CLI checks.

#include <cstdint>
#include <random>

#include "qsynth/kak.hpp"
#include "qsynth/su4core.hpp"

namespace qsynth {

using Rng = std::mt19937_64;

/// Haar-distributed element of SU(4).
Unitary4 random_su4(Rng& rng);

/// Haar-distributed element of SU(2).
Matrix2 random_su2(Rng& rng);

/// Element of su(4) with independent N(0, sigma^2) coefficients.
AlgebraElement random_algebra(Rng& rng, double sigma = 1.0);

/// exp of a random element of the k subalgebra.
KElement random_k(Rng& rng, double sigma = 2.0);

}  // namespace qsynth
