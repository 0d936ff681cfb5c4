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

#ifndef QFD_SYMBOL_H
#define QFD_SYMBOL_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qfd/angle.h"

namespace qfd {

/// Half-open piece [start, end) carrying a constant value.
struct Segment {
  Angle start;
  Angle end;
  double value = 0.0;
};

/// Piecewise-constant function [0, 2pi) -> [0, 1].
class Symbol {
 public:
  /// Throws ValidationError unless the segments tile [0, 2pi) in order with values in [0, 1].
  explicit Symbol(std::vector<Segment> segments, std::string label = "");

  static Symbol constant(double c, std::string label = "");

  const std::vector<Segment>& segments() const { return segments_; }
  const std::string& label() const { return label_; }

  double evaluate(double x) const;
  double evaluate(const Angle& x) const;

  /// (1/2pi) int_0^{2pi} e^{-imx} s(x) dx, summed in closed form over segments.
  std::complex<double> fourier_coefficient(std::int64_t m) const;

  /// x -> 1 - s(x).
  Symbol complement(std::string label = "") const;

  /// True when s(x) = s(2pi - x) almost everywhere, i.e. all coefficients are real.
  bool reflection_symmetric() const;

  /// True when s equals c on [a, b) up to a null set (exact segment inspection).
  bool constant_on(const Angle& a, const Angle& b, double c) const;

  friend bool operator==(const Symbol& a, const Symbol& b);

 private:
  std::vector<Segment> segments_;
  std::string label_;
};

/// e^{i k x}, reducing k x modulo 2pi exactly when x is a rational multiple of pi.
std::complex<double> unit_phase(const Angle& x, std::int64_t k);

/// n-th Fejer mean sum_{|k|<n} (1 - |k|/n) e^{ikx} a_k. Both signs of k are summed
/// independently; an imaginary residue above 1e-12 raises NumericalError.
double cesaro_mean(const Symbol& s, int n, const Angle& x);
double cesaro_mean(const Symbol& s, int n, double x);

class FejerWindow {
 public:
  /// Requires 0 <= alpha < 2pi, alpha < omega <= 2pi and 0 < delta < (omega - alpha) / 2.
  FejerWindow(Angle alpha, Angle omega, Angle delta, double plateau_value);

  /// Same window with delta = (omega - alpha) / 8.
  static FejerWindow with_default_margin(Angle alpha, Angle omega, double plateau_value);

  const Angle& alpha() const { return alpha_; }
  const Angle& omega() const { return omega_; }
  const Angle& delta() const { return delta_; }
  double plateau_value() const { return plateau_; }
  double gamma_delta() const { return gamma_; }

  Angle inner_start() const { return alpha_ + delta_; }
  Angle inner_end() const { return omega_ - delta_; }

  /// Width omega - alpha - 2 delta of the shrunk interval in radians.
  double inner_width() const;

  /// `points` equally spaced angles covering [alpha + delta, omega - delta].
  std::vector<double> uniform_grid(int points) const;

  FejerWindow with_plateau(double c) const { return FejerWindow(alpha_, omega_, delta_, c); }

 private:
  Angle alpha_;
  Angle omega_;
  Angle delta_;
  double plateau_ = 0.0;
  double gamma_ = 0.0;
};

struct FejerMargin {
  double max_deviation = 0.0;
  double bound = 0.0;
  bool respected = false;
};

/// Worst |S_n s(x) - c| over the grid against gamma_delta / n.
FejerMargin fejer_bound_margin(const Symbol& s, const FejerWindow& w, int n, const std::vector<double>& grid);

}  // namespace qfd

#endif  // QFD_SYMBOL_H
