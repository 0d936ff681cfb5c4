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

#ifndef QFD_TOEPLITZ_H
#define QFD_TOEPLITZ_H

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfd/symbol.h"

namespace qfd {

/// n x n Hermitian Toeplitz matrix with entry (k, j) = a_{k-j}, a_{-m} = conj(a_m).
struct ToeplitzRestriction {
  int n = 0;
  std::vector<std::complex<double>> coefficients;  // a_0 .. a_{n-1}
  std::string source;

  std::complex<double> entry(int k, int j) const;
  Eigen::MatrixXcd dense() const;
};

ToeplitzRestriction toeplitz_restriction(const Symbol& s, int n);

/// <F_n^* 1_k, Q_n F_n^* 1_k> evaluated from the materialized matrix.
double dft_diagonal_entry(const ToeplitzRestriction& t, int k);
double dft_diagonal_entry(const Symbol& s, int n, int k);

/// Column j of F_n^*: u_k(j) = e^{-2 pi i k j / n} / sqrt(n).
Eigen::VectorXcd dft_mode(int n, int k);

/// Projection onto the DFT modes whose frequency 2 pi k / n lies in [alpha + delta, omega - delta].
struct SpectralWindowProjection {
  int n = 0;
  std::vector<int> mode_indices;
  FejerWindow window;

  int rank() const { return static_cast<int>(mode_indices.size()); }
  /// floor((omega - alpha - 2 delta) n / 2pi).
  int rank_lower_bound() const;
  /// n x d matrix whose columns are the selected DFT modes.
  Eigen::MatrixXcd basis() const;
  Eigen::MatrixXcd dense() const;
  /// True when k -> (n - k) mod n maps the mode set onto itself.
  bool reflection_closed() const;
};

/// Throws ValidationError naming the smallest admissible n when no mode qualifies.
SpectralWindowProjection window_projection(int n, const FejerWindow& w);

/// Eigenvalues of a Hermitian matrix, ascending, clamped to [0, 1].
struct HermitianSpectrum {
  std::vector<double> raw;
  std::vector<double> values;
  std::vector<bool> below_floor;  // raw <= floor
  std::vector<bool> above_ceiling;  // raw >= 1 - floor
  double floor = 0.0;  // d * eps * max(||M||, 1)
  double norm = 0.0;
  double max_excursion = 0.0;  // distance of raw eigenvalues outside [0, 1]

  int floored_count() const;
};

/// Throws ValidationError when the input is not Hermitian to 1e-12 relative.
HermitianSpectrum hermitian_occupations(const Eigen::MatrixXcd& m);

struct CompressedSymbol {
  int d = 0;
  Eigen::MatrixXcd matrix;
  double trace = 0.0;  // sum of diagonal entries
  HermitianSpectrum spectrum;

  const std::vector<double>& occupations() const { return spectrum.values; }
};

/// Restriction of t to the range of e in the DFT basis. Throws NumericalError if an
/// eigenvalue leaves [-floor, 1 + floor].
CompressedSymbol compress(const ToeplitzRestriction& t, const SpectralWindowProjection& e);

/// Controls the extended-precision fallback for spectra that double precision cannot resolve.
struct PrecisionPolicy {
  bool escalate = true;
  int max_bits = 16384;
};

enum class Verdict { kPositive, kNegative, kInconclusive };
const char* to_string(Verdict v);

struct PositivityReport {
  int n = 0;
  double min_eigenvalue = 0.0;  // in double; may underflow to 0 for extended-precision results
  double log10_min_eigenvalue = 0.0;
  double floor = 0.0;
  double log10_floor = 0.0;
  int bits = 53;
  Verdict verdict = Verdict::kInconclusive;
};

/// Smallest eigenvalue of Q_n against floor d * eps * max(||Q_n||, 1). A symbol that is a.e. 0
/// (a_0 = 0) is reported negative; otherwise positive only when the eigenvalue clears the floor.
PositivityReport min_eigenvalue_positivity(const ToeplitzRestriction& t);

/// Same, but an inconclusive double result is re-solved at increasing precision.
PositivityReport min_eigenvalue_positivity(const Symbol& s, int n, const PrecisionPolicy& policy);

/// Row-major dump of a complex matrix as little-endian float64 (re, im) pairs.
void write_debug_dump(const Eigen::MatrixXcd& m, const std::string& path);

}  // namespace qfd

#endif  // QFD_TOEPLITZ_H
