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

#include <vector>

#include <benchmark/benchmark.h>

#include "qsynth/pulseprog.hpp"
#include "qsynth/random.hpp"

namespace {

using namespace qsynth;

std::vector<Unitary4> targets(std::size_t n) {
  Rng rng(99);
  std::vector<Unitary4> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_su4(rng));
  return out;
}

void BM_ExpmSkew(benchmark::State& state) {
  Rng rng(1);
  const AlgebraElement a = random_algebra(rng, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(expm_skew(a));
}
BENCHMARK(BM_ExpmSkew);

void BM_KakDecompose(benchmark::State& state) {
  const auto gs = targets(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kak_decompose(gs[i++ % gs.size()]));
}
BENCHMARK(BM_KakDecompose);

void BM_MinTime(benchmark::State& state) {
  const auto gs = targets(64);
  const DriveSpec drive{0.6, -0.4, 1.0};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(min_time(gs[i++ % gs.size()], drive));
}
BENCHMARK(BM_MinTime);

void BM_AssembleAndSimulate(benchmark::State& state) {
  const auto gs = targets(64);
  const SystemParams params;
  std::size_t i = 0;
  for (auto _ : state) {
    const PulseProgram p = assemble(kak_decompose(gs[i++ % gs.size()]), params);
    benchmark::DoNotOptimize(simulate(p, params));
  }
}
BENCHMARK(BM_AssembleAndSimulate);

void BM_TruncationError(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(truncation_error(100.0, 0.3, kPi));
}
BENCHMARK(BM_TruncationError);

}  // namespace

BENCHMARK_MAIN();
