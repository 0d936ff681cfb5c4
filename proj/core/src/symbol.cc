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

#include "qfd/symbol.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qfd/errors.h"

namespace qfd {

namespace {

const Angle kZero = Angle::pi_multiple(0);
const Angle kFull = Angle::pi_multiple(2);

constexpr double kImagResidueTolerance = 1e-12;

}  // namespace

Symbol::Symbol(std::vector<Segment> segments, std::string label)
    : segments_(std::move(segments)), label_(std::move(label)) {
  if (segments_.empty()) throw ValidationError("symbol '" + label_ + "' has no segments");
  if (compare(segments_.front().start, kZero, 0.0) != 0) {
    throw ValidationError("symbol '" + label_ + "' must start at 0, got " + segments_.front().start.to_string());
  }
  if (compare(segments_.back().end, kFull, 0.0) != 0) {
    throw ValidationError("symbol '" + label_ + "' must end at 2pi, got " + segments_.back().end.to_string());
  }
  for (size_t i = 0; i < segments_.size(); ++i) {
    const Segment& seg = segments_[i];
    if (compare(seg.start, seg.end, 0.0) >= 0) {
      throw ValidationError("symbol '" + label_ + "': empty or reversed segment [" + seg.start.to_string() + ", " +
                            seg.end.to_string() + ")");
    }
    if (!std::isfinite(seg.value) || seg.value < 0.0 || seg.value > 1.0) {
      std::ostringstream msg;
      msg << "symbol '" << label_ << "': value " << seg.value << " outside [0, 1]";
      throw ValidationError(msg.str());
    }
    if (i + 1 < segments_.size() && compare(seg.end, segments_[i + 1].start, 0.0) != 0) {
      throw ValidationError("symbol '" + label_ + "': segments leave a gap or overlap at " + seg.end.to_string());
    }
  }
}

Symbol Symbol::constant(double c, std::string label) {
  return Symbol({Segment{kZero, kFull, c}}, std::move(label));
}

double Symbol::evaluate(double x) const {
  if (!(x >= 0.0 && x < kTwoPi)) {
    std::ostringstream msg;
    msg << "evaluation point " << x << " outside [0, 2pi)";
    throw ValidationError(msg.str());
  }
  for (const Segment& seg : segments_) {
    if (x < seg.end.radians()) return seg.value;
  }
  return segments_.back().value;
}

double Symbol::evaluate(const Angle& x) const {
  if (compare(x, kZero, 0.0) < 0 || compare(x, kFull, 0.0) >= 0) {
    throw ValidationError("evaluation point " + x.to_string() + " outside [0, 2pi)");
  }
  for (const Segment& seg : segments_) {
    if (compare(x, seg.end, 0.0) < 0) return seg.value;
  }
  return segments_.back().value;
}

std::complex<double> Symbol::fourier_coefficient(std::int64_t m) const {
  if (m == 0) {
    double total = 0.0;
    for (const Segment& seg : segments_) {
      const Angle len = seg.end - seg.start;
      const double frac = len.exact() ? len.pi_fraction()->value() / 2.0 : len.radians() / kTwoPi;
      total += seg.value * frac;
    }
    return total;
  }
  // c (e^{-imu} - e^{-imv}) / (2 pi i m) = c [(sin mv - sin mu) + i (cos mv - cos mu)] / (2 pi m)
  double re = 0.0;
  double im = 0.0;
  for (const Segment& seg : segments_) {
    if (seg.value == 0.0) continue;
    const std::complex<double> pu = unit_phase(seg.start, m);
    const std::complex<double> pv = unit_phase(seg.end, m);
    re += seg.value * (pv.imag() - pu.imag());
    im += seg.value * (pv.real() - pu.real());
  }
  const double scale = 1.0 / (kTwoPi * static_cast<double>(m));
  return {re * scale, im * scale};
}

Symbol Symbol::complement(std::string label) const {
  std::vector<Segment> segs = segments_;
  for (Segment& seg : segs) seg.value = 1.0 - seg.value;
  return Symbol(std::move(segs), label.empty() ? "1-" + label_ : std::move(label));
}

bool Symbol::reflection_symmetric() const {
  std::vector<Angle> cuts;
  for (const Segment& seg : segments_) {
    cuts.push_back(seg.start);
    cuts.push_back(kFull - seg.start);
  }
  cuts.push_back(kFull);
  std::sort(cuts.begin(), cuts.end(), [](const Angle& a, const Angle& b) { return compare(a, b, 0.0) < 0; });
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (compare(cuts[i], cuts[i + 1], 0.0) == 0) continue;
    const Angle mid = (cuts[i] + cuts[i + 1]).scaled(1, 2);
    if (evaluate(mid) != evaluate(kFull - mid)) return false;
  }
  return true;
}

bool Symbol::constant_on(const Angle& a, const Angle& b, double c) const {
  for (const Segment& seg : segments_) {
    const bool overlaps = compare(seg.start, b, 0.0) < 0 && compare(seg.end, a, 0.0) > 0;
    if (overlaps && seg.value != c) return false;
  }
  return true;
}

bool operator==(const Symbol& a, const Symbol& b) {
  if (a.segments_.size() != b.segments_.size()) return false;
  for (size_t i = 0; i < a.segments_.size(); ++i) {
    const Segment& x = a.segments_[i];
    const Segment& y = b.segments_[i];
    if (x.value != y.value || compare(x.start, y.start, 0.0) != 0 || compare(x.end, y.end, 0.0) != 0) return false;
  }
  return true;
}

std::complex<double> unit_phase(const Angle& x, std::int64_t k) {
  if (x.exact()) {
    // x = pi p / q, so k x = pi r / q with r = k p mod 2q.
    const Rational& f = *x.pi_fraction();
    const __int128 period = static_cast<__int128>(2) * f.den;
    __int128 r = (static_cast<__int128>(k) * f.num) % period;
    if (r < 0) r += period;
    if (r > f.den) r -= period;  // r in (-q, q]
    if ((2 * r) % f.den == 0) {
      switch (static_cast<int>((2 * r) / f.den)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        case -1: return {0.0, -1.0};
        default: break;
      }
    }
    const double theta = kPi * static_cast<double>(r) / static_cast<double>(f.den);
    return {std::cos(theta), std::sin(theta)};
  }
  const long double two_pi = 6.283185307179586476925286766559L;
  long double t = std::fmod(static_cast<long double>(k) * static_cast<long double>(x.radians()), two_pi);
  return {static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))};
}

double cesaro_mean(const Symbol& s, int n, const Angle& x) {
  if (n < 1) throw ValidationError("Cesaro mean needs n >= 1");
  std::complex<double> total = s.fourier_coefficient(0);
  for (int k = 1; k < n; ++k) {
    const double w = static_cast<double>(n - k) / n;
    total += w * unit_phase(x, k) * s.fourier_coefficient(k);
    total += w * unit_phase(x, -k) * s.fourier_coefficient(-k);
  }
  if (std::abs(total.imag()) > kImagResidueTolerance) {
    std::ostringstream msg;
    msg << "Cesaro mean has imaginary residue " << total.imag() << " at n=" << n << ", x=" << x.to_string();
    throw NumericalError(msg.str());
  }
  return total.real();
}

double cesaro_mean(const Symbol& s, int n, double x) { return cesaro_mean(s, n, Angle::from_radians(x)); }

FejerWindow::FejerWindow(Angle alpha, Angle omega, Angle delta, double plateau_value)
    : alpha_(alpha), omega_(omega), delta_(delta), plateau_(plateau_value) {
  if (compare(alpha_, kZero, 0.0) < 0 || compare(alpha_, kFull, 0.0) >= 0) {
    throw ValidationError("window start " + alpha_.to_string() + " outside [0, 2pi)");
  }
  if (compare(alpha_, omega_, 0.0) >= 0 || compare(omega_, kFull, 0.0) > 0) {
    throw ValidationError("window end " + omega_.to_string() + " must satisfy alpha < omega <= 2pi");
  }
  if (compare(delta_, kZero, 0.0) <= 0 || compare(delta_.scaled(2, 1), omega_ - alpha_, 0.0) >= 0) {
    throw ValidationError("margin " + delta_.to_string() + " must satisfy 0 < delta < (omega - alpha) / 2");
  }
  if (!std::isfinite(plateau_) || plateau_ < 0.0 || plateau_ > 1.0) {
    throw ValidationError("plateau value outside [0, 1]");
  }
  const double s = std::sin(delta_.radians() / 2.0);
  gamma_ = 1.0 / (s * s);
}

FejerWindow FejerWindow::with_default_margin(Angle alpha, Angle omega, double plateau_value) {
  return FejerWindow(alpha, omega, (omega - alpha).scaled(1, 8), plateau_value);
}

double FejerWindow::inner_width() const {
  const Angle w = omega_ - alpha_ - delta_.scaled(2, 1);
  return w.radians();
}

std::vector<double> FejerWindow::uniform_grid(int points) const {
  const double a = inner_start().radians();
  const double b = inner_end().radians();
  if (points <= 1) return {0.5 * (a + b)};
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = a + (b - a) * i / (points - 1);
  grid.back() = b;
  return grid;
}

FejerMargin fejer_bound_margin(const Symbol& s, const FejerWindow& w, int n, const std::vector<double>& grid) {
  if (!s.constant_on(w.alpha(), w.omega(), w.plateau_value())) {
    throw ValidationError("symbol '" + s.label() + "' is not constant on [" + w.alpha().to_string() + ", " +
                          w.omega().to_string() + "]");
  }
  const double lo = w.inner_start().radians() - 1e-12;
  const double hi = w.inner_end().radians() + 1e-12;
  FejerMargin out;
  out.bound = w.gamma_delta() / n;
  for (double x : grid) {
    if (x < lo || x > hi) {
      std::ostringstream msg;
      msg << "grid point " << x << " outside the shrunk interval [" << lo << ", " << hi << "]";
      throw ValidationError(msg.str());
    }
    out.max_deviation = std::max(out.max_deviation, std::abs(cesaro_mean(s, n, x) - w.plateau_value()));
  }
  out.respected = out.max_deviation <= out.bound;
  return out;
}

}  // namespace qfd
