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
#include "qfd/mp_spectrum.h"

namespace {

// args: n, bits, split
void BM_MpSpectrum(benchmark::State& state) {
  const qfd::ScenarioConfig cfg = qfd::ScenarioConfig::canonical();
  const int n = static_cast<int>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  const qfd::SpectralWindowProjection e = qfd::window_projection(n, cfg.window);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfd::mp_compressed_spectrum(cfg.symbol_q, n, e.mode_indices, bits, state.range(2) != 0).trace);
  }
}
BENCHMARK(BM_MpSpectrum)
    ->Args({64, 256, 1})
    ->Args({64, 256, 0})
    ->Args({128, 512, 1})
    ->Args({128, 1024, 1})
    ->Unit(benchmark::kMillisecond);

void BM_RunPoint(benchmark::State& state) {
  const qfd::ScenarioConfig cfg = qfd::ScenarioConfig::canonical();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfd::run_point(cfg, n).log_alpha);
}
BENCHMARK(BM_RunPoint)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
