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

#include <benchmark/benchmark.h>

#include "qfd/discrimination.h"
#include "qfd/toeplitz.h"

namespace {

void BM_Compress(benchmark::State& state) {
  const qfd::ScenarioConfig cfg = qfd::ScenarioConfig::canonical();
  const int n = static_cast<int>(state.range(0));
  const qfd::SpectralWindowProjection e = qfd::window_projection(n, cfg.window);
  const qfd::ToeplitzRestriction t = qfd::toeplitz_restriction(cfg.symbol_q, n);
  for (auto _ : state) benchmark::DoNotOptimize(qfd::compress(t, e).trace);
  state.SetComplexityN(n);
}
BENCHMARK(BM_Compress)->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond);

void BM_ToeplitzRestriction(benchmark::State& state) {
  const qfd::ScenarioConfig cfg = qfd::ScenarioConfig::canonical();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfd::toeplitz_restriction(cfg.symbol_q, n).coefficients.data());
}
BENCHMARK(BM_ToeplitzRestriction)->RangeMultiplier(4)->Range(64, 4096);

void BM_CesaroMean(benchmark::State& state) {
  const qfd::ScenarioConfig cfg = qfd::ScenarioConfig::canonical();
  const int n = static_cast<int>(state.range(0));
  const qfd::Angle x = qfd::Angle::pi_multiple(1);
  for (auto _ : state) benchmark::DoNotOptimize(qfd::cesaro_mean(cfg.symbol_q, n, x));
}
BENCHMARK(BM_CesaroMean)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
