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

#include "qfd/angle.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "qfd/errors.h"

namespace qfd {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError("rational angle arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Rational reduce(__int128 num, __int128 den) {
  if (den == 0) throw ValidationError("zero denominator in rational angle");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational{narrow(num / a), narrow(den / a)};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("cannot parse angle '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) { return reduce(num, den); }

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

int compare(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Angle Angle::pi_multiple(std::int64_t num, std::int64_t den) { return pi_multiple(Rational::make(num, den)); }

Angle Angle::pi_multiple(const Rational& r) {
  Angle a;
  a.pi_fraction_ = r;
  a.radians_ = kPi * static_cast<double>(r.num) / static_cast<double>(r.den);
  return a;
}

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians)) throw ValidationError("angle must be finite");
  if (radians == 0.0) return pi_multiple(0);
  Angle a;
  a.radians_ = radians;
  return a;
}

Angle Angle::parse(std::string_view text) {
  std::string lowered;
  for (char c : trim(text)) {
    if (!std::isspace(static_cast<unsigned char>(c))) lowered.push_back(static_cast<char>(std::tolower(c)));
  }
  std::string_view s = lowered;
  if (s.empty()) throw ValidationError("empty angle");

  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("cannot parse angle '" + std::string(text) + "'");
    }
    return from_radians(v);
  }

  std::string_view coef = s.substr(0, pi_pos);
  std::string_view rest = s.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  std::int64_t num = 1;
  if (coef == "-") {
    num = -1;
  } else if (coef == "+" || coef.empty()) {
    num = 1;
  } else {
    if (coef.front() == '+') coef.remove_prefix(1);
    num = parse_int(coef, text);
  }
  std::int64_t den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ValidationError("cannot parse angle '" + std::string(text) + "'");
    den = parse_int(rest.substr(1), text);
    if (den == 0) throw ValidationError("zero denominator in angle '" + std::string(text) + "'");
  }
  return pi_multiple(num, den);
}

std::string Angle::to_string() const {
  if (pi_fraction_) {
    const auto& r = *pi_fraction_;
    if (r.num == 0) return "0";
    std::string out;
    if (r.num == -1) {
      out = "-pi";
    } else if (r.num == 1) {
      out = "pi";
    } else {
      out = std::to_string(r.num) + "pi";
    }
    if (r.den != 1) out += "/" + std::to_string(r.den);
    return out;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", radians_);
  return buf;
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.exact() && b.exact()) return Angle::pi_multiple(*a.pi_fraction() + *b.pi_fraction());
  return Angle::from_radians(a.radians() + b.radians());
}

Angle operator-(const Angle& a, const Angle& b) {
  if (a.exact() && b.exact()) return Angle::pi_multiple(*a.pi_fraction() - *b.pi_fraction());
  return Angle::from_radians(a.radians() - b.radians());
}

Angle Angle::scaled(std::int64_t num, std::int64_t den) const {
  if (exact()) {
    return pi_multiple(reduce(static_cast<__int128>(pi_fraction_->num) * num,
                              static_cast<__int128>(pi_fraction_->den) * den));
  }
  return from_radians(radians_ * static_cast<double>(num) / static_cast<double>(den));
}

int compare(const Angle& a, const Angle& b, double slack) {
  if (a.exact() && b.exact()) return compare(*a.pi_fraction(), *b.pi_fraction());
  const double diff = a.radians() - b.radians();
  if (std::abs(diff) <= slack) return 0;
  return diff < 0 ? -1 : 1;
}

}  // namespace qfd
