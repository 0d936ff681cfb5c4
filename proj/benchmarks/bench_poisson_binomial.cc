// Copyright 2026 The qfd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "qfd/quasifree.h"

namespace {

qfd::ModeOccupations random_occupations(int d) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> q(d);
  for (double& x : q) x = u(rng);
  return qfd::ModeOccupations::from_values(std::move(q));
}

void BM_PoissonBinomial(benchmark::State& state) {
  const qfd::ModeOccupations o = random_occupations(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qfd::poisson_binomial(o).log_pmf.data());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonBinomial)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_TypeOneError(benchmark::State& state) {
  const qfd::ModeOccupations o = random_occupations(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qfd::type1_log_error(o).value);
}
BENCHMARK(BM_TypeOneError)->Arg(512);

}  // namespace
