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

#ifndef QFD_ANGLE_H
#define QFD_ANGLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qfd {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend int compare(const Rational& a, const Rational& b);
};

/// An angle in radians that remembers when it is an exact rational multiple of pi.
///
/// Exactness matters for grid membership (2 pi k / n against window endpoints) and
/// for argument reduction in Fourier coefficients of piecewise-constant symbols.
class Angle {
 public:
  Angle() = default;

  static Angle pi_multiple(std::int64_t num, std::int64_t den = 1);
  static Angle pi_multiple(const Rational& r);
  static Angle from_radians(double radians);

  /// Accepts "3pi/2", "3*pi/4", "-pi", "pi", "2pi", "0", "1.25" (radians).
  static Angle parse(std::string_view text);

  double radians() const { return radians_; }
  const std::optional<Rational>& pi_fraction() const { return pi_fraction_; }
  bool exact() const { return pi_fraction_.has_value(); }

  /// Canonical text form; round-trips through parse().
  std::string to_string() const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  Angle scaled(std::int64_t num, std::int64_t den) const;

 private:
  double radians_ = 0.0;
  std::optional<Rational> pi_fraction_;
};

/// Exact comparison if both exact, otherwise floating comparison with absolute slack.
int compare(const Angle& a, const Angle& b, double slack = 1e-12);

inline bool same_angle(const Angle& a, const Angle& b, double slack = 1e-12) {
  return compare(a, b, slack) == 0;
}

}  // namespace qfd

#endif  // QFD_ANGLE_H
