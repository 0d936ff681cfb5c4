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

#ifndef QFD_TESTS_ORACLES_H
#define QFD_TESTS_ORACLES_H

// Slow, independent reference implementations. None of them calls into the routine it checks.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qfd/symbol.h"

namespace qfd::oracle {

/// pmf of the particle number by summing over all 2^d occupation patterns.
std::vector<double> pb_pmf_enumerated(const std::vector<double>& q);

/// P(N in [lo, hi]) from the enumerated pmf.
double pb_range_enumerated(const std::vector<double>& q, int lo, int hi);

/// (1/2pi) int e^{-imx} s(x) dx by adaptive Gauss-Kronrod on each segment.
std::complex<double> fourier_by_quadrature(const Symbol& s, int m);

/// Fejer mean as the convolution (1/2pi) int F_n(x - t) s(t) dt with the closed-form kernel
/// F_n(y) = (1/n) sin^2(ny/2) / sin^2(y/2).
double fejer_by_convolution(const Symbol& s, int n, double x);

/// n x n Toeplitz restriction with quadrature coefficients.
Eigen::MatrixXcd toeplitz_by_quadrature(const Symbol& s, int n);

/// <u, Q u> with u_j = e^{-2 pi i k j / n} / sqrt(n) evaluated as an explicit double sum.
double dft_quadratic_form(const Eigen::MatrixXcd& q, int k);

/// Jordan-Wigner creation operator of site j (1-based) as an explicit Kronecker product.
Eigen::MatrixXcd kron_creation(int d, int j);

/// The quasi-free density prod_j (q_j b_j^* b_j + (1 - q_j) b_j b_j^*), dense matrices throughout.
Eigen::MatrixXcd density_by_kron(const Eigen::MatrixXcd& q_small);

/// Haar-like random unitary and random Hermitian 0 <= Q <= I with a prescribed spectrum.
Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int d);
Eigen::MatrixXcd hermitian_with_spectrum(std::mt19937_64& rng, const std::vector<double>& spectrum);

/// Random piecewise-constant symbol on a grid of pi / den with values in [0, 1].
Symbol random_symbol(std::mt19937_64& rng, int den = 12);

}  // namespace qfd::oracle

#endif  // QFD_TESTS_ORACLES_H
