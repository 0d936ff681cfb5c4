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

#include "oracles.h"

#include <bit>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qfd::oracle {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kTol = 1e-14;

// Integrates f over [a, b], split into panels short enough to resolve `freq` oscillations.
template <class F>
double integrate(F f, double a, double b, double freq) {
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) * std::max(freq, 1.0) / kPi)));
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    total += gauss_kronrod<double, 31>::integrate(f, a + p * h, a + (p + 1) * h, 4, kTol);
  }
  return total;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

std::vector<double> pb_pmf_enumerated(const std::vector<double>& q) {
  const int d = static_cast<int>(q.size());
  std::vector<double> pmf(d + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    double p = 1.0;
    for (int j = 0; j < d; ++j) p *= (mask >> j & 1) ? q[j] : 1.0 - q[j];
    pmf[std::popcount(mask)] += p;
  }
  return pmf;
}

double pb_range_enumerated(const std::vector<double>& q, int lo, int hi) {
  const std::vector<double> pmf = pb_pmf_enumerated(q);
  double s = 0.0;
  for (int k = std::max(lo, 0); k <= std::min<int>(hi, static_cast<int>(q.size())); ++k) s += pmf[k];
  return s;
}

std::complex<double> fourier_by_quadrature(const Symbol& s, int m) {
  double re = 0.0;
  double im = 0.0;
  for (const Segment& seg : s.segments()) {
    const double a = seg.start.radians();
    const double b = seg.end.radians();
    re += seg.value * integrate([m](double x) { return std::cos(m * x); }, a, b, std::abs(m));
    im -= seg.value * integrate([m](double x) { return std::sin(m * x); }, a, b, std::abs(m));
  }
  return {re / kTwoPi, im / kTwoPi};
}

double fejer_by_convolution(const Symbol& s, int n, double x) {
  auto kernel = [n, x](double t) {
    const double y = std::remainder(x - t, kTwoPi);
    const double den = std::sin(y / 2.0);
    if (std::abs(den) < 1e-7) {
      // Removable singularity: F_n(y) -> n, with a second-order correction.
      const double r = 1.0 - (static_cast<double>(n) * n - 1.0) * y * y / 12.0;
      return n * r;
    }
    const double num = std::sin(n * y / 2.0);
    return num * num / (n * den * den);
  };
  double total = 0.0;
  for (const Segment& seg : s.segments()) {
    if (seg.value == 0.0) continue;
    double a = seg.start.radians();
    const double b = seg.end.radians();
    // Split at the kernel peak so each panel sees a smooth integrand.
    for (double peak : {x - kTwoPi, x, x + kTwoPi}) {
      if (peak > a && peak < b) {
        total += seg.value * integrate(kernel, a, peak, n);
        a = peak;
      }
    }
    total += seg.value * integrate(kernel, a, b, n);
  }
  return total / kTwoPi;
}

Eigen::MatrixXcd toeplitz_by_quadrature(const Symbol& s, int n) {
  std::vector<std::complex<double>> a(2 * n - 1);
  for (int m = -(n - 1); m <= n - 1; ++m) a[m + n - 1] = fourier_by_quadrature(s, m);
  Eigen::MatrixXcd q(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) q(k, j) = a[k - j + n - 1];
  }
  return q;
}

double dft_quadratic_form(const Eigen::MatrixXcd& q, int k) {
  const int n = static_cast<int>(q.rows());
  std::complex<double> total = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      const std::complex<double> uj = std::polar(1.0, -kTwoPi * k * j / n);
      const std::complex<double> ul = std::polar(1.0, -kTwoPi * k * l / n);
      total += std::conj(uj) * q(j, l) * ul;
    }
  }
  return total.real() / n;
}

Eigen::MatrixXcd kron_creation(int d, int j) {
  Eigen::MatrixXcd z(2, 2), raise(2, 2);
  z << 1, 0, 0, -1;
  raise << 0, 0, 1, 0;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int site = 1; site <= d; ++site) {
    const Eigen::MatrixXcd f = site < j ? z : (site == j ? raise : Eigen::MatrixXcd::Identity(2, 2));
    out = kron(out, f);
  }
  return out;
}

Eigen::MatrixXcd density_by_kron(const Eigen::MatrixXcd& q_small) {
  const int d = static_cast<int>(q_small.rows());
  std::vector<Eigen::MatrixXcd> cre;
  for (int j = 1; j <= d; ++j) cre.push_back(kron_creation(d, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q_small);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(1 << d, 1 << d);
  for (int j = 0; j < d; ++j) {
    const Eigen::VectorXcd e = es.eigenvectors().col(j);
    const double q = std::clamp(es.eigenvalues()(j), 0.0, 1.0);
    // b = a(e) = sum_i conj(e_i) a_i, so b^* = sum_i e_i a_i^*.
    Eigen::MatrixXcd bstar = Eigen::MatrixXcd::Zero(1 << d, 1 << d);
    for (int i = 0; i < d; ++i) bstar += e(i) * cre[i];
    const Eigen::MatrixXcd b = bstar.adjoint();
    rho = rho * (q * bstar * b + (1.0 - q) * b * bstar);
  }
  return rho;
}

Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ();
}

Eigen::MatrixXcd hermitian_with_spectrum(std::mt19937_64& rng, const std::vector<double>& spectrum) {
  const int d = static_cast<int>(spectrum.size());
  const Eigen::MatrixXcd u = random_unitary(rng, d);
  const Eigen::VectorXd ev = Eigen::Map<const Eigen::VectorXd>(spectrum.data(), d);
  const Eigen::MatrixXcd q = u * ev.asDiagonal() * u.adjoint();
  return 0.5 * (q + q.adjoint());
}

Symbol random_symbol(std::mt19937_64& rng, int den) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Segment> segs;
  std::int64_t pos = 0;
  while (pos < 2 * den) {
    const std::int64_t step = std::min<std::int64_t>(2 * den - pos, 1 + static_cast<std::int64_t>(rng() % 5));
    segs.push_back({Angle::pi_multiple(pos, den), Angle::pi_multiple(pos + step, den), u(rng)});
    pos += step;
  }
  return Symbol(std::move(segs), "random");
}

}  // namespace qfd::oracle
