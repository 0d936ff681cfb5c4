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

#ifndef QFD_QUASIFREE_H
#define QFD_QUASIFREE_H

#include <limits>
#include <vector>

namespace qfd {

/// Natural logarithm of a probability; -inf encodes an exact zero.
struct LogProb {
  double value = 0.0;

  double linear() const;
  bool is_zero() const;
};

double log_sum_exp(double a, double b);
double log_sum_exp(const std::vector<double>& xs, size_t begin, size_t end);

/// Mode occupations with their logarithms kept separately, so that occupations closer to
/// 0 or 1 than double precision can represent still carry their exact magnitude.
struct ModeOccupations {
  std::vector<double> q;
  std::vector<double> log_q;  // log q_j
  std::vector<double> log_1mq;  // log(1 - q_j)
  std::vector<bool> below_floor;
  std::vector<bool> above_ceiling;
  /// Absolute accuracy of the flagged modes; -inf when unknown.
  double log_floor = -std::numeric_limits<double>::infinity();

  /// Throws ValidationError for values outside [0, 1] or an empty list.
  static ModeOccupations from_values(std::vector<double> values);
  static ModeOccupations from_values(std::vector<double> values, std::vector<bool> below_floor,
                                     std::vector<bool> above_ceiling);
  /// Occupations given through log q and log(1 - q).
  static ModeOccupations from_logs(std::vector<double> log_q, std::vector<double> log_1mq);

  int d() const { return static_cast<int>(q.size()); }
  int floored_count() const;
  int ceiling_count() const;

  /// Copy with every below-floor mode set to 0.
  ModeOccupations without_floored() const;
  /// Copy with every above-ceiling mode set to 1.
  ModeOccupations without_ceiling() const;
  /// Copy with every below-floor mode raised by the floor, the largest value it may take.
  ModeOccupations floored_raised() const;
  /// Copy with every above-ceiling mode lowered by the floor.
  ModeOccupations ceiling_lowered() const;
  /// q_j -> 1 - q_j.
  ModeOccupations flipped() const;
};

/// The projection S onto particle numbers 0 .. floor(d/2).
struct NumberThresholdTest {
  int d = 0;
  int threshold = 0;

  static NumberThresholdTest for_modes(int d);
};

struct PoissonBinomialDist {
  int d = 0;
  std::vector<double> log_pmf;  // size d + 1

  double pmf(int k) const;
  /// log P(N in [lo, hi]).
  double log_range(int lo, int hi) const;
};

PoissonBinomialDist poisson_binomial(const ModeOccupations& q);

/// alpha = P(N > floor(d/2)) under q.
LogProb type1_log_error(const ModeOccupations& q);
/// beta = P(N <= floor(d/2)) under r.
LogProb type2_log_error(const ModeOccupations& r);

/// (d/2) log(8 trace / d). Positive values mean the bound is vacuous; returned as is.
double lemma_main_log_bound(double trace, int d);

}  // namespace qfd

#endif  // QFD_QUASIFREE_H
