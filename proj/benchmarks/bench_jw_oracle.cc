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

#include "qfd/jw_oracle.h"

namespace {

Eigen::MatrixXcd random_symbol_matrix(int d) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
  Eigen::VectorXd ev = (Eigen::VectorXd::Random(d).array() + 1.0) / 2.0;
  Eigen::MatrixXcd q = u * ev.asDiagonal() * u.adjoint();
  return 0.5 * (q + q.adjoint());
}

void BM_DenseState(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const qfd::DenseFermionOps ops = qfd::build_ops(d);
  const Eigen::MatrixXcd q = random_symbol_matrix(d);
  for (auto _ : state) benchmark::DoNotOptimize(qfd::dense_state(q, ops).density.data());
}
BENCHMARK(BM_DenseState)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildOps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qfd::build_ops(static_cast<int>(state.range(0))).d);
}
BENCHMARK(BM_BuildOps)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
