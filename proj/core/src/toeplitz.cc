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

#include "qfd/toeplitz.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "qfd/errors.h"

namespace qfd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<int> modes_in_window(int n, const FejerWindow& w) {
  const Angle lo = w.inner_start();
  const Angle hi = w.inner_end();
  std::vector<int> modes;
  if (lo.exact() && hi.exact()) {
    for (int k = 0; k < n; ++k) {
      const Rational x = Rational::make(2 * static_cast<std::int64_t>(k), n);
      if (compare(x, *lo.pi_fraction()) >= 0 && compare(x, *hi.pi_fraction()) <= 0) modes.push_back(k);
    }
    return modes;
  }
  for (int k = 0; k < n; ++k) {
    const double x = kTwoPi * k / n;
    if (x >= lo.radians() - 1e-12 && x <= hi.radians() + 1e-12) modes.push_back(k);
  }
  return modes;
}

}  // namespace

std::complex<double> ToeplitzRestriction::entry(int k, int j) const {
  const int m = k - j;
  return m >= 0 ? coefficients[m] : std::conj(coefficients[-m]);
}

Eigen::MatrixXcd ToeplitzRestriction::dense() const {
  Eigen::MatrixXcd q(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) q(k, j) = entry(k, j);
  }
  return q;
}

ToeplitzRestriction toeplitz_restriction(const Symbol& s, int n) {
  if (n < 1) throw ValidationError("Toeplitz restriction needs n >= 1");
  ToeplitzRestriction t;
  t.n = n;
  t.source = s.label();
  t.coefficients.resize(n);
  for (int m = 0; m < n; ++m) t.coefficients[m] = s.fourier_coefficient(m);
  t.coefficients[0] = t.coefficients[0].real();
  return t;
}

Eigen::VectorXcd dft_mode(int n, int k) {
  Eigen::VectorXcd u(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const Angle theta = Angle::pi_multiple(2 * static_cast<std::int64_t>(k), n);
  for (int j = 0; j < n; ++j) u(j) = scale * unit_phase(theta, -j);
  return u;
}

double dft_diagonal_entry(const ToeplitzRestriction& t, int k) {
  if (k < 0 || k >= t.n) throw ValidationError("mode index out of range");
  const Eigen::VectorXcd u = dft_mode(t.n, k);
  const std::complex<double> v = u.dot(t.dense() * u);
  return v.real();
}

double dft_diagonal_entry(const Symbol& s, int n, int k) { return dft_diagonal_entry(toeplitz_restriction(s, n), k); }

int SpectralWindowProjection::rank_lower_bound() const {
  return static_cast<int>(std::floor(window.inner_width() * n / kTwoPi + 1e-12));
}

Eigen::MatrixXcd SpectralWindowProjection::basis() const {
  Eigen::MatrixXcd u(n, rank());
  for (int c = 0; c < rank(); ++c) u.col(c) = dft_mode(n, mode_indices[c]);
  return u;
}

Eigen::MatrixXcd SpectralWindowProjection::dense() const {
  const Eigen::MatrixXcd u = basis();
  return u * u.adjoint();
}

bool SpectralWindowProjection::reflection_closed() const {
  for (int k : mode_indices) {
    const int mirror = (n - k) % n;
    if (!std::binary_search(mode_indices.begin(), mode_indices.end(), mirror)) return false;
  }
  return true;
}

SpectralWindowProjection window_projection(int n, const FejerWindow& w) {
  if (n < 1) throw ValidationError("window projection needs n >= 1");
  std::vector<int> modes = modes_in_window(n, w);
  if (modes.empty()) {
    int smallest = n + 1;
    while (modes_in_window(smallest, w).empty()) ++smallest;
    std::ostringstream msg;
    msg << "window too narrow for n=" << n << ": no frequency 2pi k/n lies in [" << w.inner_start().to_string()
        << ", " << w.inner_end().to_string() << "]; smallest admissible n is " << smallest;
    throw ValidationError(msg.str());
  }
  return SpectralWindowProjection{n, std::move(modes), w};
}

int HermitianSpectrum::floored_count() const {
  return static_cast<int>(std::count(below_floor.begin(), below_floor.end(), true));
}

HermitianSpectrum hermitian_occupations(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw ValidationError("occupations need a non-empty square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |M - M*| = " << asym;
    throw ValidationError(msg.str());
  }
  const int d = static_cast<int>(m.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  const Eigen::VectorXd ev = solver.eigenvalues();

  HermitianSpectrum out;
  out.norm = std::max(std::abs(ev(0)), std::abs(ev(d - 1)));
  out.floor = d * kEps * std::max(out.norm, 1.0);
  out.raw.assign(ev.data(), ev.data() + d);
  out.values.resize(d);
  out.below_floor.resize(d);
  out.above_ceiling.resize(d);
  for (int i = 0; i < d; ++i) {
    const double x = out.raw[i];
    out.values[i] = std::clamp(x, 0.0, 1.0);
    out.below_floor[i] = x <= out.floor;
    out.above_ceiling[i] = x >= 1.0 - out.floor;
    out.max_excursion = std::max({out.max_excursion, -x, x - 1.0});
  }
  return out;
}

CompressedSymbol compress(const ToeplitzRestriction& t, const SpectralWindowProjection& e) {
  if (t.n != e.n) throw ValidationError("restriction and projection dimensions differ");
  const Eigen::MatrixXcd u = e.basis();
  CompressedSymbol c;
  c.d = e.rank();
  c.matrix = u.adjoint() * (t.dense() * u);
  c.trace = c.matrix.diagonal().real().sum();
  c.spectrum = hermitian_occupations(c.matrix);
  if (c.spectrum.max_excursion > c.spectrum.floor) {
    std::ostringstream msg;
    msg << "compressed eigenvalue left [0, 1] by " << c.spectrum.max_excursion << " (floor " << c.spectrum.floor
        << ") for '" << t.source << "' at n=" << t.n;
    throw NumericalError(msg.str());
  }
  return c;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPositive: return "positive";
    case Verdict::kNegative: return "negative";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

PositivityReport min_eigenvalue_positivity(const ToeplitzRestriction& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  const Eigen::VectorXd ev = solver.eigenvalues();
  PositivityReport r;
  r.n = t.n;
  r.min_eigenvalue = ev(0);
  r.log10_min_eigenvalue = ev(0) > 0 ? std::log10(ev(0)) : -std::numeric_limits<double>::infinity();
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(t.n - 1)));
  r.floor = t.n * kEps * std::max(norm, 1.0);
  r.log10_floor = std::log10(r.floor);
  if (t.coefficients[0].real() == 0.0) {
    r.verdict = Verdict::kNegative;
  } else {
    r.verdict = r.min_eigenvalue > r.floor ? Verdict::kPositive : Verdict::kInconclusive;
  }
  return r;
}

void write_debug_dump(const Eigen::MatrixXcd& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open debug dump '" + path + "'");
  auto put = [&out](double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
  };
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put(m(r, c).real());
      put(m(r, c).imag());
    }
  }
}

}  // namespace qfd
