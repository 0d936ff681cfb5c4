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

#include "qfd/quasifree.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qfd/errors.h"

namespace qfd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }
double safe_log1m(double x) { return x < 1.0 ? std::log1p(-x) : kNegInf; }

}  // namespace

double LogProb::linear() const { return std::exp(value); }
bool LogProb::is_zero() const { return value == kNegInf; }

double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(-std::abs(a - b)));
}

double log_sum_exp(const std::vector<double>& xs, size_t begin, size_t end) {
  double hi = kNegInf;
  for (size_t i = begin; i < end; ++i) hi = std::max(hi, xs[i]);
  if (hi == kNegInf) return kNegInf;
  double s = 0.0;
  for (size_t i = begin; i < end; ++i) s += std::exp(xs[i] - hi);
  return hi + std::log(s);
}

ModeOccupations ModeOccupations::from_values(std::vector<double> values) {
  const size_t d = values.size();
  return from_values(std::move(values), std::vector<bool>(d, false), std::vector<bool>(d, false));
}

ModeOccupations ModeOccupations::from_values(std::vector<double> values, std::vector<bool> below_floor,
                                             std::vector<bool> above_ceiling) {
  if (values.empty()) throw ValidationError("occupations need at least one mode");
  if (below_floor.size() != values.size() || above_ceiling.size() != values.size()) {
    throw ValidationError("floor flags do not match the number of modes");
  }
  ModeOccupations o;
  for (double x : values) {
    if (!(x >= 0.0 && x <= 1.0)) {
      std::ostringstream msg;
      msg << "occupation " << x << " outside [0, 1]";
      throw ValidationError(msg.str());
    }
    o.log_q.push_back(safe_log(x));
    o.log_1mq.push_back(safe_log1m(x));
  }
  o.q = std::move(values);
  o.below_floor = std::move(below_floor);
  o.above_ceiling = std::move(above_ceiling);
  return o;
}

ModeOccupations ModeOccupations::from_logs(std::vector<double> log_q, std::vector<double> log_1mq) {
  if (log_q.empty() || log_q.size() != log_1mq.size()) throw ValidationError("mismatched log occupations");
  ModeOccupations o;
  for (size_t j = 0; j < log_q.size(); ++j) {
    if (log_q[j] > 1e-12 || log_1mq[j] > 1e-12 || std::isnan(log_q[j]) || std::isnan(log_1mq[j])) {
      throw ValidationError("log occupation outside [-inf, 0]");
    }
    log_q[j] = std::min(log_q[j], 0.0);
    log_1mq[j] = std::min(log_1mq[j], 0.0);
    o.q.push_back(std::exp(log_q[j]));
  }
  o.log_q = std::move(log_q);
  o.log_1mq = std::move(log_1mq);
  o.below_floor.assign(o.q.size(), false);
  o.above_ceiling.assign(o.q.size(), false);
  return o;
}

int ModeOccupations::floored_count() const {
  return static_cast<int>(std::count(below_floor.begin(), below_floor.end(), true));
}

int ModeOccupations::ceiling_count() const {
  return static_cast<int>(std::count(above_ceiling.begin(), above_ceiling.end(), true));
}

ModeOccupations ModeOccupations::without_floored() const {
  ModeOccupations o = *this;
  for (int j = 0; j < d(); ++j) {
    if (!below_floor[j]) continue;
    o.q[j] = 0.0;
    o.log_q[j] = kNegInf;
    o.log_1mq[j] = 0.0;
  }
  return o;
}

ModeOccupations ModeOccupations::without_ceiling() const {
  ModeOccupations o = *this;
  for (int j = 0; j < d(); ++j) {
    if (!above_ceiling[j]) continue;
    o.q[j] = 1.0;
    o.log_q[j] = 0.0;
    o.log_1mq[j] = kNegInf;
  }
  return o;
}

ModeOccupations ModeOccupations::floored_raised() const {
  ModeOccupations o = *this;
  for (int j = 0; j < d(); ++j) {
    if (!below_floor[j]) continue;
    o.log_q[j] = std::min(0.0, log_sum_exp(log_q[j], log_floor));
    o.q[j] = std::exp(o.log_q[j]);
    o.log_1mq[j] = safe_log1m(o.q[j]);
  }
  return o;
}

ModeOccupations ModeOccupations::ceiling_lowered() const {
  ModeOccupations o = *this;
  for (int j = 0; j < d(); ++j) {
    if (!above_ceiling[j]) continue;
    o.log_1mq[j] = std::min(0.0, log_sum_exp(log_1mq[j], log_floor));
    o.q[j] = -std::expm1(o.log_1mq[j]);
    o.log_q[j] = safe_log(o.q[j]);
  }
  return o;
}

ModeOccupations ModeOccupations::flipped() const {
  ModeOccupations o;
  for (int j = 0; j < d(); ++j) o.q.push_back(1.0 - q[j]);
  o.log_q = log_1mq;
  o.log_1mq = log_q;
  o.below_floor = above_ceiling;
  o.above_ceiling = below_floor;
  o.log_floor = log_floor;
  return o;
}

NumberThresholdTest NumberThresholdTest::for_modes(int d) {
  if (d < 1) throw ValidationError("threshold test needs d >= 1");
  return NumberThresholdTest{d, d / 2};
}

double PoissonBinomialDist::pmf(int k) const { return std::exp(log_pmf.at(k)); }

double PoissonBinomialDist::log_range(int lo, int hi) const {
  lo = std::max(lo, 0);
  hi = std::min(hi, d);
  if (lo > hi) return kNegInf;
  return log_sum_exp(log_pmf, lo, hi + 1);
}

PoissonBinomialDist poisson_binomial(const ModeOccupations& q) {
  PoissonBinomialDist dist;
  dist.d = q.d();
  std::vector<double> cur(dist.d + 1, kNegInf);
  std::vector<double> next(dist.d + 1, kNegInf);
  cur[0] = 0.0;
  for (int j = 0; j < dist.d; ++j) {
    const double lq = q.log_q[j];
    const double lp = q.log_1mq[j];
    next[0] = cur[0] + lp;
    for (int k = 1; k <= j + 1; ++k) {
      const double stay = cur[k] == kNegInf || lp == kNegInf ? kNegInf : cur[k] + lp;
      const double move = cur[k - 1] == kNegInf || lq == kNegInf ? kNegInf : cur[k - 1] + lq;
      next[k] = log_sum_exp(stay, move);
    }
    std::swap(cur, next);
  }
  dist.log_pmf = std::move(cur);
  return dist;
}

LogProb type1_log_error(const ModeOccupations& q) {
  const PoissonBinomialDist dist = poisson_binomial(q);
  const NumberThresholdTest test = NumberThresholdTest::for_modes(q.d());
  return LogProb{dist.log_range(test.threshold + 1, test.d)};
}

LogProb type2_log_error(const ModeOccupations& r) {
  const PoissonBinomialDist dist = poisson_binomial(r);
  const NumberThresholdTest test = NumberThresholdTest::for_modes(r.d());
  return LogProb{dist.log_range(0, test.threshold)};
}

double lemma_main_log_bound(double trace, int d) {
  if (trace < 0.0) throw ValidationError("trace must be non-negative");
  if (d < 1) throw ValidationError("dimension must be positive");
  if (trace == 0.0) return kNegInf;
  return 0.5 * d * std::log(8.0 * trace / d);
}

}  // namespace qfd
