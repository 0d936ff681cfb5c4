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
#include "qfd/symbol.h"

namespace qfd {
namespace {

Angle pi(std::int64_t num, std::int64_t den = 1) { return Angle::pi_multiple(num, den); }

Symbol step(double left, double right, const Angle& cut) { return Symbol({{pi(0), cut, left}, {cut, pi(2), right}}); }

// q = 0 on [pi/2, 3pi/2), 1/2 elsewhere.
Symbol canonical_q() {
  return Symbol({{pi(0), pi(1, 2), 0.5}, {pi(1, 2), pi(3, 2), 0.0}, {pi(3, 2), pi(2), 0.5}}, "q");
}

TEST(Symbol, RejectsBadPartitions) {
  EXPECT_THROW(Symbol({}), ValidationError);
  EXPECT_THROW(Symbol({{pi(1, 4), pi(2), 0.5}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(1), 0.5}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(1), 0.5}, {pi(3, 2), pi(2), 0.5}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(1), 0.5}, {pi(1, 2), pi(2), 0.5}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(2), 1.5}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(2), -0.1}}), ValidationError);
  EXPECT_THROW(Symbol({{pi(0), pi(0), 0.5}, {pi(0), pi(2), 0.5}}), ValidationError);
}

TEST(Symbol, EvaluateUsesHalfOpenSegments) {
  EXPECT_EQ(Symbol::constant(0.5).evaluate(1.0), 0.5);
  EXPECT_EQ(step(1.0, 0.0, pi(1)).evaluate(pi(1)), 0.0);
  EXPECT_EQ(step(1.0, 0.0, pi(1)).evaluate(kPi), 0.0);
  EXPECT_EQ(step(0.3, 0.7, pi(1, 2)).evaluate(pi(1, 2)), 0.7);
  EXPECT_EQ(step(0.3, 0.7, pi(1, 2)).evaluate(0.0), 0.3);
}

TEST(Symbol, EvaluateRejectsOutOfRange) {
  const Symbol s = Symbol::constant(0.5);
  EXPECT_THROW(s.evaluate(-0.1), ValidationError);
  EXPECT_THROW(s.evaluate(kTwoPi), ValidationError);
  EXPECT_THROW(s.evaluate(pi(2)), ValidationError);
}

TEST(SymbolFourier, ConstantSymbol) {
  const Symbol s = Symbol::constant(0.37);
  EXPECT_DOUBLE_EQ(s.fourier_coefficient(0).real(), 0.37);
  for (int m : {-5, -1, 1, 2, 17}) EXPECT_LT(std::abs(s.fourier_coefficient(m)), 1e-16) << m;
}

TEST(SymbolFourier, HalfIntervalIndicator) {
  const Symbol s = step(1.0, 0.0, pi(1));
  EXPECT_DOUBLE_EQ(s.fourier_coefficient(0).real(), 0.5);
  const std::complex<double> a1 = s.fourier_coefficient(1);
  EXPECT_NEAR(a1.real(), 0.0, 1e-16);
  EXPECT_NEAR(a1.imag(), -1.0 / kPi, 1e-15);
  EXPECT_NEAR(a1.imag(), -0.31831, 1e-5);
  // Independent quadrature of int_0^pi e^{-ix} dx / 2pi.
  EXPECT_LT(std::abs(a1 - oracle::fourier_by_quadrature(s, 1)), 1e-14);
}

TEST(SymbolFourier, MatchesQuadratureOnRandomSymbols) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Symbol s = oracle::random_symbol(rng);
    for (int m : {0, 1, -1, 2, 5, -7, 12, 31, 100}) {
      EXPECT_LT(std::abs(s.fourier_coefficient(m) - oracle::fourier_by_quadrature(s, m)), 1e-13) << t << " " << m;
    }
  }
}

TEST(SymbolFourier, HermitianSymmetryAndMeanValue) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const Symbol s = oracle::random_symbol(rng, 7);
    double mean = 0.0;
    for (const Segment& g : s.segments()) mean += g.value * (g.end.radians() - g.start.radians()) / kTwoPi;
    EXPECT_NEAR(s.fourier_coefficient(0).real(), mean, 1e-15);
    EXPECT_EQ(s.fourier_coefficient(0).imag(), 0.0);
    for (int m = 1; m < 200; m += 7) {
      EXPECT_LT(std::abs(s.fourier_coefficient(-m) - std::conj(s.fourier_coefficient(m))), 1e-15);
    }
  }
}

TEST(SymbolFourier, ExactReductionAtLargeIndex) {
  // At m = 10^9 a naive m * x loses every digit; the exact reduction keeps the period.
  const Symbol s = step(1.0, 0.0, pi(1));
  const std::int64_t m = 1000000000;  // even: both cut points reduce to 0
  EXPECT_LT(std::abs(s.fourier_coefficient(m)), 1e-25);
  const std::complex<double> odd = s.fourier_coefficient(m + 1);
  EXPECT_NEAR(odd.imag(), -1.0 / (kPi * static_cast<double>(m + 1)), 1e-24);
}

TEST(UnitPhase, QuarterTurnsAreExact) {
  EXPECT_EQ(unit_phase(pi(1, 2), 1), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(unit_phase(pi(1, 2), 2), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(unit_phase(pi(1, 2), -1), std::complex<double>(0.0, -1.0));
  EXPECT_EQ(unit_phase(pi(3, 2), 4), std::complex<double>(1.0, 0.0));
  EXPECT_LT(std::abs(unit_phase(pi(1, 3), 1) - std::polar(1.0, kPi / 3)), 1e-16);
}

TEST(Cesaro, ConstantSymbol) {
  const Symbol s = Symbol::constant(0.42);
  for (int n : {1, 2, 17, 300}) {
    for (double x : {0.0, 1.0, 4.5}) EXPECT_NEAR(cesaro_mean(s, n, x), 0.42, 1e-15);
  }
}

TEST(Cesaro, FirstMeanIsTheAverage) { EXPECT_DOUBLE_EQ(cesaro_mean(step(1.0, 0.0, pi(1)), 1, 0.0), 0.5); }

TEST(Cesaro, PlateauValueAtCentre) {
  const Symbol q = canonical_q();
  const double v = cesaro_mean(q, 64, pi(1));
  // For every delta that keeps pi inside the shrunk window the margin bound holds; the tightest
  // admissible delta is just below pi/2.
  const double gamma = 1.0 / std::pow(std::sin(kPi / 4 - 1e-9), 2);
  EXPECT_GE(v, -1e-12);
  EXPECT_LE(v, gamma / 64);
}

TEST(Cesaro, MatchesKernelConvolution) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 6; ++t) {
    const Symbol s = oracle::random_symbol(rng, 6);
    for (int n : {1, 3, 16, 40}) {
      for (double x : {0.0, 0.3, 2.0, 5.9}) {
        EXPECT_NEAR(cesaro_mean(s, n, x), oracle::fejer_by_convolution(s, n, x), 1e-11) << t << " n=" << n;
      }
    }
  }
}

TEST(Cesaro, StaysInUnitInterval) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const Symbol s = oracle::random_symbol(rng);
    for (int n : {1, 5, 64, 257}) {
      for (int i = 0; i < 50; ++i) {
        const double v = cesaro_mean(s, n, kTwoPi * i / 50);
        EXPECT_GE(v, -1e-12);
        EXPECT_LE(v, 1 + 1e-12);
      }
    }
  }
}

TEST(Cesaro, RejectsNonPositiveOrder) { EXPECT_THROW(cesaro_mean(Symbol::constant(0.5), 0, 0.0), ValidationError); }

TEST(FejerWindow, Validates) {
  EXPECT_THROW(FejerWindow(pi(1), pi(1, 2), pi(1, 8), 0.0), ValidationError);
  EXPECT_THROW(FejerWindow(pi(1, 2), pi(3, 2), pi(1, 2), 0.0), ValidationError);
  EXPECT_THROW(FejerWindow(pi(1, 2), pi(3, 2), pi(0), 0.0), ValidationError);
  EXPECT_THROW(FejerWindow(pi(1, 2), pi(5, 2), pi(1, 8), 0.0), ValidationError);
  EXPECT_THROW(FejerWindow(pi(1, 2), pi(3, 2), pi(1, 8), 1.5), ValidationError);
}

TEST(FejerWindow, GammaAndDefaults) {
  const FejerWindow w(pi(1, 2), pi(3, 2), pi(1, 4), 0.0);
  EXPECT_NEAR(w.gamma_delta(), 1.0 / std::pow(std::sin(kPi / 8), 2), 1e-13);
  EXPECT_NEAR(w.gamma_delta(), 6.8284, 1e-4);
  const FejerWindow d = FejerWindow::with_default_margin(pi(1, 2), pi(3, 2), 0.0);
  EXPECT_EQ(compare(d.delta(), pi(1, 8), 0.0), 0);
  EXPECT_NEAR(d.inner_width(), 3 * kPi / 4, 1e-15);
  const auto g = w.uniform_grid(101);
  EXPECT_EQ(g.size(), 101u);
  EXPECT_DOUBLE_EQ(g.front(), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(g.back(), 5 * kPi / 4);
}

TEST(FejerMargin, ConstantSymbolHasZeroMargin) {
  const FejerWindow w(pi(1, 3), pi(4, 3), pi(1, 6), 0.25);
  const FejerMargin m = fejer_bound_margin(Symbol::constant(0.25), w, 9, w.uniform_grid(33));
  EXPECT_LT(m.max_deviation, 1e-15);
  EXPECT_TRUE(m.respected);
}

TEST(FejerMargin, CanonicalSymbolRespectsBound) {
  const FejerWindow w(pi(1, 2), pi(3, 2), pi(1, 4), 0.0);
  for (int n : {128, 16}) {
    const FejerMargin m = fejer_bound_margin(canonical_q(), w, n, w.uniform_grid(101));
    EXPECT_NEAR(m.bound, w.gamma_delta() / n, 1e-15);
    EXPECT_TRUE(m.respected) << n;
    EXPECT_LE(m.max_deviation, m.bound);
  }
  EXPECT_NEAR(fejer_bound_margin(canonical_q(), w, 128, w.uniform_grid(101)).bound, 0.05335, 1e-5);
}

TEST(FejerMargin, RejectsGridOutsideShrunkInterval) {
  const FejerWindow w(pi(1, 2), pi(3, 2), pi(1, 4), 0.0);
  EXPECT_THROW(fejer_bound_margin(canonical_q(), w, 16, {kPi / 2 + 0.1}), ValidationError);
}

TEST(FejerMargin, RejectsSymbolWithoutPlateau) {
  const FejerWindow w(pi(1, 2), pi(3, 2), pi(1, 4), 0.0);
  EXPECT_THROW(fejer_bound_margin(Symbol::constant(0.5), w, 16, w.uniform_grid(5)), ValidationError);
}

TEST(SymbolShape, ComplementReflectionAndPlateau) {
  const Symbol q = canonical_q();
  EXPECT_TRUE(q.reflection_symmetric());
  EXPECT_FALSE(step(1.0, 0.0, pi(1)).reflection_symmetric());
  EXPECT_TRUE(q.constant_on(pi(1, 2), pi(3, 2), 0.0));
  EXPECT_FALSE(q.constant_on(pi(1, 4), pi(3, 2), 0.0));
  const Symbol c = q.complement();
  EXPECT_EQ(c.label(), "1-q");
  EXPECT_TRUE(c.constant_on(pi(1, 2), pi(3, 2), 1.0));
  EXPECT_TRUE(c.complement() == q);
}

}  // namespace
}  // namespace qfd
