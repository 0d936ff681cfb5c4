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

#ifndef QFD_DISCRIMINATION_H
#define QFD_DISCRIMINATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "qfd/symbol.h"
#include "qfd/toeplitz.h"

namespace qfd {

/// A pair of symbols with a common window on which q = 0 and r = 1.
struct ScenarioConfig {
  std::string name = "scenario";
  Symbol symbol_q = Symbol::constant(0.0, "q");
  Symbol symbol_r = Symbol::constant(1.0, "r");
  FejerWindow window = FejerWindow(Angle::pi_multiple(1, 2), Angle::pi_multiple(3, 2), Angle::pi_multiple(1, 8), 0.0);
  std::vector<int> n_values = default_n_values();
  bool bound_only = false;
  PrecisionPolicy precision;

  static std::vector<int> default_n_values();
  /// q = 1/2 off [pi/2, 3pi/2) and 0 on it; r = 1/2 off it and 1 on it; delta = pi/8.
  static ScenarioConfig canonical();
};

/// Throws ValidationError naming the violated precondition.
void validate(const ScenarioConfig& cfg);

/// Outcome for one error type at one n.
struct SideResult {
  double log_error = 0.0;
  double double_log_error = 0.0;  // value from the double-precision spectrum
  bool confident = false;
  int bits = 53;  // working precision of the accepted spectrum
  int floored = 0;  // modes at the numerical floor (or ceiling for type II)
};

struct ExponentRow {
  int n = 0;
  int rank = 0;
  int rank_lower_bound = 0;
  double trace_q = 0.0;
  double trace_r_def = 0.0;
  double trace_bound = 0.0;  // rank gamma_delta / n
  double log_alpha = 0.0;
  double log_beta = 0.0;
  double exact_exp_alpha = 0.0;
  double exact_exp_beta = 0.0;
  double bound_exp_alpha = 0.0;
  double bound_exp_beta = 0.0;
  double growth_floor = 0.0;  // (rank / 2n) log(n / (8 gamma_delta))
  SideResult alpha;
  SideResult beta;
  bool bound_only = false;

  /// "high", "low-alpha", "low-beta", "low" or "bound-only".
  std::string confidence() const;
  bool vacuous_alpha() const { return !(bound_exp_alpha > 0.0); }
  bool vacuous_beta() const { return !(bound_exp_beta > 0.0); }
};

ExponentRow run_point(const ScenarioConfig& cfg, int n);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
};

struct SweepReport {
  std::vector<ExponentRow> rows;
  std::vector<int> fitted_n;  // largest half of the n values
  FitResult fit_alpha;  // exact exponent against log n
  FitResult fit_beta;
  FitResult bound_fit_alpha;
  FitResult bound_fit_beta;
  // min over the fitted range of exponent / log n, using the exact exponent where it is
  // high-confidence and the bound exponent elsewhere.
  double certified_envelope_alpha = 0.0;
  double certified_envelope_beta = 0.0;
  double bound_envelope_alpha = 0.0;
  double bound_envelope_beta = 0.0;
  bool increasing_alpha = false;
  bool increasing_beta = false;
  bool super_exponential = false;

  std::string verdict() const;
};

/// Runs every n on `jobs` worker threads; the report does not depend on scheduling.
SweepReport run_sweep(const ScenarioConfig& cfg, int jobs = 1);

/// Least squares fit of y against log n; non-finite y are skipped.
FitResult fit_against_log_n(const std::vector<int>& n, const std::vector<double>& y);

struct RunMetadata {
  std::string version;
  std::string config_hash;
  std::uint64_t seed = 0;
};

const char* tool_version();

/// CSV with a leading '#' metadata line and the fixed column order.
std::string sweep_csv(const SweepReport& report, const RunMetadata& meta);
/// JSON summary: metadata, scenario echo, per-row details, fits, envelopes and verdict.
std::string sweep_json(const ScenarioConfig& cfg, const SweepReport& report, const RunMetadata& meta);
std::string point_json(const ScenarioConfig& cfg, const ExponentRow& row, const RunMetadata& meta);

/// Shortest round-trip text for a double, with inf, -inf and nan spelled out.
std::string format_double(double x);

}  // namespace qfd

#endif  // QFD_DISCRIMINATION_H
