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

#include "qfd/mp_spectrum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <utility>

#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Core>

#include "qfd/errors.h"
#include "qfd/toeplitz.h"

using mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

namespace Eigen {
template <>
struct NumTraits<mp> : GenericNumTraits<mp> {
  using Real = mp;
  using NonInteger = mp;
  using Literal = mp;
  using Nested = mp;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 10, AddCost = 10, MulCost = 40 };
  static Real epsilon() { return std::numeric_limits<mp>::epsilon(); }
  static Real dummy_precision() { return epsilon() * 1000; }
  static Real highest() { return std::numeric_limits<mp>::max(); }
  static Real lowest() { return std::numeric_limits<mp>::lowest(); }
  static Real infinity() { return std::numeric_limits<mp>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<mp>::quiet_NaN(); }
  static int digits10() { return static_cast<int>(mp::default_precision()); }
};
}  // namespace Eigen

#include <Eigen/Eigenvalues>

namespace qfd {

namespace {

using MpMatrix = Eigen::Matrix<mp, Eigen::Dynamic, Eigen::Dynamic>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// The default precision of mpfr_float is process-wide in this Boost version, so every
// extended-precision computation holds this lock for its whole scope.
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : lock_(precision_mutex()), saved_(mp::default_precision()) {
    mp::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
  }
  ~PrecisionScope() { mp::default_precision(saved_); }

 private:
  std::lock_guard<std::recursive_mutex> lock_;
  unsigned saved_;
};

struct PhasePair {
  mp c;
  mp s;
};

class CenteredCompression {
 public:
  CenteredCompression(const Symbol& s, int n, const std::vector<int>& modes)
      : n_(n), modes_(modes), pi_(boost::multiprecision::acos(mp(-1))) {
    build_coefficients(s);
    build_phase_tables();
    build_diagonal_data();
  }

  int d() const { return static_cast<int>(modes_.size()); }
  const mp& diagonal(int a) const { return s_[a]; }

  // <v_a, Q v_b> for positions a, b in the mode list.
  mp entry(int a, int b) const {
    if (a == b) return s_[a];
    const int diff = modes_[a] - modes_[b];
    mp den = half_sin_[std::abs(diff)];
    if (diff < 0) den = -den;
    den *= n_;
    mp num = g_[a] - g_[b];
    if (diff % 2 == 0) num = -num;
    return num / den;
  }

  mp trace() const {
    mp t = 0;
    for (const mp& x : s_) t += x;
    return t;
  }

 private:
  PhasePair boundary_phase(const Angle& x, std::int64_t m) {
    if (x.exact()) {
      const Rational& f = *x.pi_fraction();
      const __int128 period = static_cast<__int128>(2) * f.den;
      __int128 r = (static_cast<__int128>(m) * f.num) % period;
      if (r < 0) r += period;
      const auto key = std::make_pair(f.den, static_cast<std::int64_t>(r));
      auto it = boundary_cache_.find(key);
      if (it == boundary_cache_.end()) {
        const mp theta = pi_ * mp(static_cast<std::int64_t>(r)) / mp(f.den);
        it = boundary_cache_.emplace(key, PhasePair{cos(theta), sin(theta)}).first;
      }
      return it->second;
    }
    const mp theta = mp(x.radians()) * mp(m);
    return PhasePair{cos(theta), sin(theta)};
  }

  void build_coefficients(const Symbol& s) {
    re_.assign(n_, mp(0));
    im_.assign(n_, mp(0));
    real_symbol_ = s.reflection_symmetric();
    for (const Segment& seg : s.segments()) {
      if (seg.value == 0.0) continue;
      const mp c(seg.value);
      const Angle len = seg.end - seg.start;
      if (len.exact()) {
        re_[0] += c * mp(len.pi_fraction()->num) / mp(2 * len.pi_fraction()->den);
      } else {
        re_[0] += c * mp(len.radians()) / (2 * pi_);
      }
      for (int m = 1; m < n_; ++m) {
        const PhasePair pu = boundary_phase(seg.start, m);
        const PhasePair pv = boundary_phase(seg.end, m);
        re_[m] += c * (pv.s - pu.s);
        im_[m] += c * (pv.c - pu.c);
      }
    }
    for (int m = 1; m < n_; ++m) {
      const mp scale = 1 / (2 * pi_ * m);
      re_[m] *= scale;
      im_[m] *= scale;
    }
  }

  void build_phase_tables() {
    cos_.resize(n_);
    sin_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      const mp theta = 2 * pi_ * j / n_;
      cos_[j] = cos(theta);
      sin_[j] = sin(theta);
    }
    int span = modes_.empty() ? 0 : modes_.back() - modes_.front();
    half_sin_.resize(span + 1);
    for (int j = 0; j <= span; ++j) half_sin_[j] = sin(pi_ * j / n_);
  }

  // G(theta) = Im sum_m a_m e^{i m theta}, S(theta) = a_0 + (2/n) sum_m (n - m) Re a_m e^{i m theta}.
  void build_diagonal_data() {
    const int d = this->d();
    g_.assign(d, mp(0));
    s_.assign(d, mp(0));
    mp t;
    for (int a = 0; a < d; ++a) {
      const std::int64_t k = modes_[a];
      mp g = 0;
      mp acc = 0;
      for (int m = 1; m < n_; ++m) {
        const int idx = static_cast<int>((k * m) % n_);
        const mp& c = cos_[idx];
        const mp& sn = sin_[idx];
        // Re: re c - im s ; Im: re s + im c
        t = re_[m];
        t *= c;
        if (!real_symbol_) {
          mp u = im_[m];
          u *= sn;
          t -= u;
        }
        t *= (n_ - m);
        acc += t;
        t = re_[m];
        t *= sn;
        g += t;
        if (!real_symbol_) {
          t = im_[m];
          t *= c;
          g += t;
        }
      }
      g_[a] = g;
      s_[a] = re_[0] + 2 * acc / n_;
    }
  }

  int n_;
  std::vector<int> modes_;
  mp pi_;
  bool real_symbol_ = false;
  std::vector<mp> re_, im_;
  std::vector<mp> cos_, sin_, half_sin_;
  std::vector<mp> g_, s_;
  std::map<std::pair<std::int64_t, std::int64_t>, PhasePair> boundary_cache_;
};

std::vector<mp> solve_symmetric(const MpMatrix& m) {
  std::vector<mp> out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<MpMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("extended-precision eigensolver did not converge");
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Split M along the signed reflection P e_k = e_{n-k} (k != 0), P e_0 = (-1)^{n+1} e_0.
std::vector<mp> split_spectrum(const CenteredCompression& c, int n, const std::vector<int>& modes) {
  const int d = static_cast<int>(modes.size());
  std::vector<int> pos(n, -1);
  for (int a = 0; a < d; ++a) pos[modes[a]] = a;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> even_fixed, odd_fixed;
  for (int a = 0; a < d; ++a) {
    const int k = modes[a];
    const int mirror = (n - k) % n;
    if (mirror == k) {
      if (k == 0 && n % 2 == 0) {
        odd_fixed.push_back(a);
      } else {
        even_fixed.push_back(a);
      }
    } else if (k < mirror) {
      pairs.emplace_back(a, pos[mirror]);
    }
  }
  const mp root2 = sqrt(mp(2));
  auto block = [&](const std::vector<int>& fixed, int sign) {
    const int p = static_cast<int>(pairs.size());
    const int size = p + static_cast<int>(fixed.size());
    MpMatrix m(size, size);
    for (int i = 0; i < p; ++i) {
      for (int j = i; j < p; ++j) {
        mp v = c.entry(pairs[i].first, pairs[j].first);
        if (sign > 0) {
          v += c.entry(pairs[i].first, pairs[j].second);
        } else {
          v -= c.entry(pairs[i].first, pairs[j].second);
        }
        m(i, j) = v;
        m(j, i) = v;
      }
      for (size_t f = 0; f < fixed.size(); ++f) {
        const mp v = root2 * c.entry(pairs[i].first, fixed[f]);
        m(i, p + f) = v;
        m(p + f, i) = v;
      }
    }
    for (size_t f = 0; f < fixed.size(); ++f) {
      for (size_t g = f; g < fixed.size(); ++g) {
        const mp v = c.entry(fixed[f], fixed[g]);
        m(p + f, p + g) = v;
        m(p + g, p + f) = v;
      }
    }
    return solve_symmetric(m);
  };
  std::vector<mp> ev = block(even_fixed, +1);
  std::vector<mp> odd = block(odd_fixed, -1);
  ev.insert(ev.end(), odd.begin(), odd.end());
  return ev;
}

bool reflection_closed(int n, const std::vector<int>& modes) {
  for (int k : modes) {
    if (!std::binary_search(modes.begin(), modes.end(), (n - k) % n)) return false;
  }
  return true;
}

void check_modes(int n, const std::vector<int>& modes) {
  if (modes.empty()) throw ValidationError("extended-precision compression needs at least one mode");
  for (size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] < 0 || modes[i] >= n || (i > 0 && modes[i] <= modes[i - 1])) {
      throw ValidationError("mode indices must be sorted, distinct and in [0, n)");
    }
  }
}

double to_log(const mp& x) { return x > 0 ? static_cast<double>(log(x)) : kNegInf; }

}  // namespace

int MpSpectrum::floored_count() const {
  return static_cast<int>(std::count(below_floor.begin(), below_floor.end(), true));
}

int initial_bits_for(int d) { return std::max(128, 3 * d + 64); }

MpSpectrum mp_compressed_spectrum(const Symbol& s, int n, const std::vector<int>& modes, int bits, bool allow_split) {
  check_modes(n, modes);
  if (bits < 64) throw ValidationError("extended precision needs at least 64 bits");
  PrecisionScope scope(bits);
  const CenteredCompression c(s, n, modes);
  const int d = c.d();

  MpSpectrum out;
  out.bits = bits;
  out.d = d;
  out.split = allow_split && s.reflection_symmetric() && reflection_closed(n, modes);

  std::vector<mp> ev;
  if (out.split) {
    ev = split_spectrum(c, n, modes);
  } else {
    MpMatrix m(d, d);
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        const mp v = c.entry(a, b);
        m(a, b) = v;
        m(b, a) = v;
      }
    }
    ev = solve_symmetric(m);
  }
  std::sort(ev.begin(), ev.end());

  const mp norm = std::max(abs(ev.front()), abs(ev.back()));
  const mp floor = mp(n) * d * pow(mp(2), 1 - bits) * std::max(norm, mp(1));
  out.norm = static_cast<double>(norm);
  out.log_floor = static_cast<double>(log(floor));
  out.trace = static_cast<double>(c.trace());
  out.min_value = static_cast<double>(ev.front());
  out.excursion = ev.front() < -floor || ev.back() > 1 + floor;
  for (const mp& x : ev) {
    out.log_values.push_back(to_log(x));
    out.log_one_minus.push_back(to_log(1 - x));
    out.below_floor.push_back(x <= floor);
    out.above_ceiling.push_back(x >= 1 - floor);
  }
  return out;
}

Eigen::MatrixXd mp_centered_compression(const Symbol& s, int n, const std::vector<int>& modes, int bits) {
  check_modes(n, modes);
  PrecisionScope scope(bits);
  const CenteredCompression c(s, n, modes);
  const int d = c.d();
  Eigen::MatrixXd out(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) out(a, b) = static_cast<double>(c.entry(a, b));
  }
  return out;
}

PositivityReport min_eigenvalue_positivity(const Symbol& s, int n, const PrecisionPolicy& policy) {
  PositivityReport r = min_eigenvalue_positivity(toeplitz_restriction(s, n));
  if (r.verdict != Verdict::kInconclusive || !policy.escalate) return r;
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k;
  for (int bits = 128; bits <= policy.max_bits; bits *= 2) {
    const MpSpectrum sp = mp_compressed_spectrum(s, n, all, bits);
    r.bits = bits;
    r.log10_floor = sp.log_floor / std::log(10.0);
    r.floor = std::exp(sp.log_floor);
    r.min_eigenvalue = sp.min_value;
    r.log10_min_eigenvalue = sp.log_values.front() / std::log(10.0);
    if (!sp.below_floor.front()) {
      r.verdict = Verdict::kPositive;
      return r;
    }
  }
  return r;
}

}  // namespace qfd
