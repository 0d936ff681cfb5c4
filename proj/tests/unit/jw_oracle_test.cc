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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qfd/errors.h"
#include "qfd/jw_oracle.h"
#include "qfd/quasifree.h"

namespace qfd {
namespace {

Eigen::VectorXcd random_vector(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

std::vector<double> random_spectrum(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(d);
  for (double& x : s) x = u(rng);
  return s;
}

TEST(JordanWigner, SingleModeCreation) {
  const DenseFermionOps ops = build_ops(1);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 0, 1, 0;
  EXPECT_EQ((ops.creation_dense(0) - expected).cwiseAbs().maxCoeff(), 0.0);
}

TEST(JordanWigner, MatchesKroneckerProducts) {
  for (int d = 1; d <= 5; ++d) {
    const DenseFermionOps ops = build_ops(d);
    for (int j = 0; j < d; ++j) {
      EXPECT_EQ((ops.creation_dense(j) - oracle::kron_creation(d, j + 1)).cwiseAbs().maxCoeff(), 0.0) << d << " " << j;
    }
  }
}

TEST(JordanWigner, NumberOperatorSpectrum) {
  const DenseFermionOps ops = build_ops(3);
  std::vector<int> counts(4, 0);
  for (int x = 0; x < ops.dim(); ++x) ++counts[std::lround(ops.number_diagonal(x))];
  EXPECT_EQ(counts, (std::vector<int>{1, 3, 3, 1}));
  const Eigen::VectorXd s = ops.threshold_test_diagonal();
  EXPECT_EQ(s.sum(), 4.0);
}

TEST(JordanWigner, CanonicalAnticommutation) {
  for (int d = 1; d <= 5; ++d) {
    const DenseFermionOps ops = build_ops(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(ops.dim(), ops.dim());
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Eigen::MatrixXcd ai = ops.annihilation_dense(i);
        const Eigen::MatrixXcd cj = ops.creation_dense(j);
        const Eigen::MatrixXcd ci = ops.creation_dense(i);
        const Eigen::MatrixXcd aj = ops.annihilation_dense(j);
        const Eigen::MatrixXcd expected = i == j ? id : Eigen::MatrixXcd::Zero(ops.dim(), ops.dim());
        EXPECT_EQ((ai * cj + cj * ai - expected).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ((ai * aj + aj * ai).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ((ci * cj + cj * ci).cwiseAbs().maxCoeff(), 0.0);
      }
    }
  }
}

TEST(JordanWigner, RejectsUnsupportedSizes) {
  EXPECT_THROW(build_ops(0), ValidationError);
  EXPECT_THROW(build_ops(13), ValidationError);
}

TEST(DenseState, SingleModeIsDiagonal) {
  Eigen::MatrixXcd q(1, 1);
  q << 0.3;
  const DenseQuasifreeState s = dense_state(q);
  EXPECT_NEAR(s.density(0, 0).real(), 0.7, 1e-15);
  EXPECT_NEAR(s.density(1, 1).real(), 0.3, 1e-15);
  EXPECT_NEAR(std::abs(s.density(0, 1)), 0.0, 1e-15);
}

TEST(DenseState, DiagonalSymbolGivesProductWeights) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(2, 2);
  q(0, 0) = 0.2;
  q(1, 1) = 0.6;
  const DenseQuasifreeState s = dense_state(q);
  // |00>, |01>, |10>, |11> with site 1 the high bit.
  EXPECT_NEAR(s.density(0, 0).real(), 0.8 * 0.4, 1e-15);
  EXPECT_NEAR(s.density(1, 1).real(), 0.8 * 0.6, 1e-15);
  EXPECT_NEAR(s.density(2, 2).real(), 0.2 * 0.4, 1e-15);
  EXPECT_NEAR(s.density(3, 3).real(), 0.2 * 0.6, 1e-15);
  EXPECT_LT((s.density - s.density.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DenseState, MatchesLiteralProduct) {
  std::mt19937_64 rng(51);
  for (int d = 1; d <= 6; ++d) {
    for (int t = 0; t < 3; ++t) {
      const Eigen::MatrixXcd q = oracle::hermitian_with_spectrum(rng, random_spectrum(rng, d));
      const DenseQuasifreeState s = dense_state(q);
      EXPECT_LT((s.density - oracle::density_by_kron(q)).cwiseAbs().maxCoeff(), 1e-13) << d;
    }
  }
}

TEST(DenseState, IsAValidState) {
  std::mt19937_64 rng(52);
  for (int d = 1; d <= 8; ++d) {
    std::vector<double> spectrum = random_spectrum(rng, d);
    spectrum[0] = 0.0;
    if (d > 1) spectrum[1] = 1.0;
    const DenseQuasifreeState s = dense_state(oracle::hermitian_with_spectrum(rng, spectrum));
    const DenseQuasifreeState::Check c = s.validate();
    EXPECT_TRUE(c.ok) << d << " trace " << c.trace_error << " herm " << c.hermiticity_error << " min " << c.min_eigenvalue;
  }
}

TEST(DenseState, RejectsBadSymbols) {
  Eigen::MatrixXcd q(2, 2);
  q << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(dense_state(q), ValidationError);
  q << 1.5, 0, 0, 0.5;
  EXPECT_THROW(dense_state(q), ValidationError);
  EXPECT_THROW(dense_state(Eigen::MatrixXcd::Zero(2, 2), build_ops(3)), ValidationError);
}

TEST(DenseState, TwoPointFunctionIsTheSymbol) {
  std::mt19937_64 rng(53);
  const int d = 4;
  const Eigen::MatrixXcd q = oracle::hermitian_with_spectrum(rng, random_spectrum(rng, d));
  const DenseFermionOps ops = build_ops(d);
  const DenseQuasifreeState s = dense_state(q, ops);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd phi = random_vector(rng, d);
    const Eigen::VectorXcd psi = random_vector(rng, d);
    // omega(a(phi)^* a(psi)) = <psi, Q phi>
    const std::complex<double> lhs = (ops.creation_of(phi) * (ops.annihilation_of(psi) * s.density)).trace();
    EXPECT_LT(std::abs(lhs - psi.dot(q * phi)), 1e-12);
  }
}

TEST(DenseState, WickIdentity) {
  std::mt19937_64 rng(54);
  for (int d = 1; d <= 5; ++d) {
    const DenseFermionOps ops = build_ops(d);
    const DenseQuasifreeState s = dense_state(oracle::hermitian_with_spectrum(rng, random_spectrum(rng, d)), ops);
    std::vector<std::vector<Eigen::VectorXcd>> phis, psis;
    for (int n = 0; n <= std::min(d, 3); ++n) {
      for (int m = 0; m <= std::min(d, 3); ++m) {
        std::vector<Eigen::VectorXcd> a, b;
        for (int i = 0; i < n; ++i) a.push_back(random_vector(rng, d));
        for (int i = 0; i < m; ++i) b.push_back(random_vector(rng, d));
        phis.push_back(a);
        psis.push_back(b);
      }
    }
    EXPECT_LT(functional_check(s, ops, phis, psis), 1e-10) << d;
  }
}

TEST(DenseState, UnequalTupleLengthsVanish) {
  std::mt19937_64 rng(55);
  const int d = 3;
  const DenseFermionOps ops = build_ops(d);
  const DenseQuasifreeState s = dense_state(oracle::hermitian_with_spectrum(rng, random_spectrum(rng, d)), ops);
  const Eigen::VectorXcd v = random_vector(rng, d);
  const Eigen::VectorXcd w = random_vector(rng, d);
  const std::complex<double> one = (ops.creation_of(v) * s.density).trace();
  const std::complex<double> two = (ops.creation_of(v) * (ops.creation_of(w) * (ops.annihilation_of(v) * s.density))).trace();
  EXPECT_LT(std::abs(one), 1e-14);
  EXPECT_LT(std::abs(two), 1e-14);
  EXPECT_THROW(functional_check(s, ops, {{v, v, v, v}}, {{}}), ValidationError);
}

TEST(DenseErrors, MatchPoissonBinomial) {
  std::mt19937_64 rng(56);
  for (int d = 1; d <= 8; ++d) {
    const DenseFermionOps ops = build_ops(d);
    const std::vector<double> sq = random_spectrum(rng, d);
    const std::vector<double> sr = random_spectrum(rng, d);
    const DenseQuasifreeState q = dense_state(oracle::hermitian_with_spectrum(rng, sq), ops);
    const DenseQuasifreeState r = dense_state(oracle::hermitian_with_spectrum(rng, sr), ops);
    const DenseErrors e = dense_error_probs(q, r, ops);
    EXPECT_NEAR(e.alpha, oracle::pb_range_enumerated(sq, d / 2 + 1, d), 1e-12);
    EXPECT_NEAR(e.beta, oracle::pb_range_enumerated(sr, 0, d / 2), 1e-12);
    EXPECT_NEAR(e.alpha, type1_log_error(ModeOccupations::from_values(q.occupations)).linear(), 1e-12);
  }
}

}  // namespace
}  // namespace qfd
