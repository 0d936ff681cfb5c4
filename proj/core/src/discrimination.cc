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

#include "qfd/discrimination.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "qfd/errors.h"
#include "qfd/mp_spectrum.h"
#include "qfd/quasifree.h"
#include "qfd/scenario_io.h"

#ifndef QFD_VERSION_STRING
#define QFD_VERSION_STRING "0.0.0"
#endif

namespace qfd {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kContributionTolerance = 1e-6;
constexpr int kPlateauGrid = 4096;

enum class ErrorType { kTypeI, kTypeII };

bool negligible_change(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= kContributionTolerance;
}

double log_error(const ModeOccupations& occ, ErrorType type) {
  return type == ErrorType::kTypeI ? type1_log_error(occ).value : type2_log_error(occ).value;
}

// A floored mode is only known to lie within the floor of 0 (type I) or of 1 (type II). Both
// errors are monotone in each occupation, so evaluating at the two ends of that range brackets
// the true value; a bracket wider than the tolerance means the spectrum is not resolved.
SideResult assess(const ModeOccupations& occ, ErrorType type, int bits) {
  SideResult s;
  s.bits = bits;
  s.log_error = log_error(occ, type);
  s.double_log_error = s.log_error;
  if (type == ErrorType::kTypeI) {
    s.floored = occ.floored_count();
    s.confident = s.floored == 0 ||
                  negligible_change(log_error(occ.floored_raised(), type), log_error(occ.without_floored(), type));
  } else {
    s.floored = occ.ceiling_count();
    s.confident = s.floored == 0 ||
                  negligible_change(log_error(occ.ceiling_lowered(), type), log_error(occ.without_ceiling(), type));
  }
  return s;
}

ModeOccupations occupations_from(const HermitianSpectrum& sp) {
  ModeOccupations o = ModeOccupations::from_values(sp.values, sp.below_floor, sp.above_ceiling);
  o.log_floor = std::log(sp.floor);
  return o;
}

// For type II the complement symbol 1 - r is diagonalized, so occupations close to 1 keep
// their deficit 1 - r exactly.
ModeOccupations occupations_from(const MpSpectrum& sp, bool complement) {
  ModeOccupations o = complement ? ModeOccupations::from_logs(sp.log_one_minus, sp.log_values)
                                 : ModeOccupations::from_logs(sp.log_values, sp.log_one_minus);
  o.below_floor = complement ? sp.above_ceiling : sp.below_floor;
  o.above_ceiling = complement ? sp.below_floor : sp.above_ceiling;
  o.log_floor = sp.log_floor;
  return o;
}

class SpectrumCache {
 public:
  const MpSpectrum& get(const Symbol& s, int n, const std::vector<int>& modes, int bits) {
    for (const auto& [sym, b, sp] : entries_) {
      if (b == bits && sym == s) return sp;
    }
    MpSpectrum sp = mp_compressed_spectrum(s, n, modes, bits);
    if (sp.excursion) {
      std::ostringstream msg;
      msg << "extended-precision eigenvalue left [0, 1] for '" << s.label() << "' at n=" << n << ", " << bits
          << " bits";
      throw NumericalError(msg.str());
    }
    entries_.emplace_back(s, bits, std::move(sp));
    return std::get<2>(entries_.back());
  }

 private:
  std::vector<std::tuple<Symbol, int, MpSpectrum>> entries_;
};

SideResult escalate(const SideResult& coarse, const Symbol& target, bool complement, ErrorType type, int n,
                    const SpectralWindowProjection& e, const PrecisionPolicy& policy, SpectrumCache& cache) {
  SideResult best = coarse;
  int bits = std::min(initial_bits_for(e.rank()), policy.max_bits);
  while (true) {
    const MpSpectrum& sp = cache.get(target, n, e.mode_indices, bits);
    SideResult s = assess(occupations_from(sp, complement), type, bits);
    s.double_log_error = coarse.double_log_error;
    best = s;
    if (s.confident || bits >= policy.max_bits) break;
    bits = std::min(policy.max_bits, bits + bits / 2);
  }
  return best;
}

// A symbol that vanishes identically has an exactly zero compression, nothing to resolve.
bool vanishes(const Symbol& s) {
  return std::all_of(s.segments().begin(), s.segments().end(), [](const Segment& g) { return g.value == 0.0; });
}

SideResult exact_zero(int bits) {
  SideResult s;
  s.bits = bits;
  s.log_error = s.double_log_error = -kInf;
  s.confident = true;
  return s;
}

double exponent_of(double log_err, int n) { return log_err == -kInf ? kInf : -log_err / n; }

double bound_exponent(double trace, int d, int n) { return -lemma_main_log_bound(trace, d) / n; }

bool strictly_increasing(const std::vector<double>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return !v.empty();
}

ojson num(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

ojson row_json(const ExponentRow& r) {
  auto side = [](const SideResult& s) {
    ojson j;
    j["confident"] = s.confident;
    j["bits"] = s.bits;
    j["floored_modes"] = s.floored;
    j["double_log_error"] = num(s.double_log_error);
    return j;
  };
  ojson j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["rank_lower_bound"] = r.rank_lower_bound;
  j["trace_q"] = num(r.trace_q);
  j["trace_r_def"] = num(r.trace_r_def);
  j["trace_bound"] = num(r.trace_bound);
  j["log_alpha"] = num(r.log_alpha);
  j["log_beta"] = num(r.log_beta);
  j["exact_exp_alpha"] = num(r.exact_exp_alpha);
  j["exact_exp_beta"] = num(r.exact_exp_beta);
  j["bound_exp_alpha"] = num(r.bound_exp_alpha);
  j["bound_exp_beta"] = num(r.bound_exp_beta);
  j["growth_floor"] = num(r.growth_floor);
  j["confidence"] = r.confidence();
  j["vacuous_alpha"] = r.vacuous_alpha();
  j["vacuous_beta"] = r.vacuous_beta();
  if (!r.bound_only) {
    j["alpha"] = side(r.alpha);
    j["beta"] = side(r.beta);
  }
  return j;
}

ojson fit_json(const FitResult& f) {
  ojson j;
  j["slope"] = num(f.slope);
  j["intercept"] = num(f.intercept);
  j["points"] = f.points;
  return j;
}

ojson meta_json(const RunMetadata& meta) {
  ojson j;
  j["tool"] = "qfd";
  j["version"] = meta.version;
  j["config_hash"] = meta.config_hash;
  j["seed"] = meta.seed;
  return j;
}

}  // namespace

std::vector<int> ScenarioConfig::default_n_values() { return {64, 128, 256, 512, 1024, 2048}; }

ScenarioConfig ScenarioConfig::canonical() {
  const Angle a = Angle::pi_multiple(1, 2);
  const Angle b = Angle::pi_multiple(3, 2);
  const Angle zero = Angle::pi_multiple(0);
  const Angle full = Angle::pi_multiple(2);
  ScenarioConfig cfg;
  cfg.name = "canonical";
  cfg.symbol_q = Symbol({{zero, a, 0.5}, {a, b, 0.0}, {b, full, 0.5}}, "q");
  cfg.symbol_r = Symbol({{zero, a, 0.5}, {a, b, 1.0}, {b, full, 0.5}}, "r");
  cfg.window = FejerWindow(a, b, Angle::pi_multiple(1, 8), 0.0);
  return cfg;
}

void validate(const ScenarioConfig& cfg) {
  const FejerWindow& w = cfg.window;
  const std::string where = "[" + w.alpha().to_string() + ", " + w.omega().to_string() + ")";
  auto check_plateau = [&](const Symbol& s, const char* name, double c) {
    bool ok = s.constant_on(w.alpha(), w.omega(), c);
    const double a = w.alpha().radians();
    const double b = w.omega().radians();
    for (int i = 0; ok && i < kPlateauGrid; ++i) {
      const double x = a + (b - a) * i / kPlateauGrid;
      ok = x >= b || s.evaluate(x) == c;
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "plateau hypothesis violated: " << name << " must equal " << c << " on " << where
          << " (q constant 0 and r constant 1 on a common non-trivial interval)";
      throw ValidationError(msg.str());
    }
  };
  check_plateau(cfg.symbol_q, "symbol_q", 0.0);
  check_plateau(cfg.symbol_r, "symbol_r", 1.0);
  if (cfg.n_values.empty()) throw ValidationError("n_values must not be empty");
  for (size_t i = 0; i < cfg.n_values.size(); ++i) {
    const int n = cfg.n_values[i];
    if (n < 1) throw ValidationError("n_values must be positive");
    if (i > 0 && n <= cfg.n_values[i - 1]) throw ValidationError("n_values must be strictly increasing");
    window_projection(n, w);
  }
  if (cfg.precision.max_bits < 64) throw ValidationError("precision.max_bits must be at least 64");
}

std::string ExponentRow::confidence() const {
  if (bound_only) return "bound-only";
  if (alpha.confident && beta.confident) return "high";
  if (alpha.confident) return "low-beta";
  if (beta.confident) return "low-alpha";
  return "low";
}

ExponentRow run_point(const ScenarioConfig& cfg, int n) {
  const SpectralWindowProjection e = window_projection(n, cfg.window);
  const int d = e.rank();
  const double gamma = cfg.window.gamma_delta();

  ExponentRow row;
  row.n = n;
  row.rank = d;
  row.rank_lower_bound = e.rank_lower_bound();
  row.trace_bound = d * gamma / n;
  row.growth_floor = d / (2.0 * n) * std::log(n / (8.0 * gamma));
  row.bound_only = cfg.bound_only;

  if (cfg.bound_only) {
    // Traces from the diagonal identity; no matrix is formed.
    for (int k : e.mode_indices) {
      const Angle theta = Angle::pi_multiple(2 * static_cast<std::int64_t>(k), n);
      row.trace_q += cesaro_mean(cfg.symbol_q, n, theta);
      row.trace_r_def += 1.0 - cesaro_mean(cfg.symbol_r, n, theta);
    }
    row.trace_q = std::max(row.trace_q, 0.0);
    row.trace_r_def = std::max(row.trace_r_def, 0.0);
    row.log_alpha = row.log_beta = std::numeric_limits<double>::quiet_NaN();
    row.exact_exp_alpha = row.exact_exp_beta = std::numeric_limits<double>::quiet_NaN();
  } else {
    const CompressedSymbol cq = compress(toeplitz_restriction(cfg.symbol_q, n), e);
    const CompressedSymbol cr = compress(toeplitz_restriction(cfg.symbol_r, n), e);
    row.trace_q = std::max(cq.trace, 0.0);
    double def = 0.0;
    for (int k = 0; k < d; ++k) def += 1.0 - cr.matrix(k, k).real();
    row.trace_r_def = std::max(def, 0.0);

    row.alpha = assess(occupations_from(cq.spectrum), ErrorType::kTypeI, 53);
    row.beta = assess(occupations_from(cr.spectrum), ErrorType::kTypeII, 53);
    if (vanishes(cfg.symbol_q)) row.alpha = exact_zero(53);
    if (vanishes(cfg.symbol_r.complement())) row.beta = exact_zero(53);
    if (cfg.precision.escalate && (!row.alpha.confident || !row.beta.confident)) {
      SpectrumCache cache;
      if (!row.alpha.confident) {
        row.alpha = escalate(row.alpha, cfg.symbol_q, false, ErrorType::kTypeI, n, e, cfg.precision, cache);
      }
      if (!row.beta.confident) {
        row.beta = escalate(row.beta, cfg.symbol_r.complement(), true, ErrorType::kTypeII, n, e, cfg.precision,
                            cache);
      }
    }
    row.log_alpha = row.alpha.log_error;
    row.log_beta = row.beta.log_error;
    row.exact_exp_alpha = exponent_of(row.log_alpha, n);
    row.exact_exp_beta = exponent_of(row.log_beta, n);
  }
  row.bound_exp_alpha = bound_exponent(row.trace_q, d, n);
  row.bound_exp_beta = bound_exponent(row.trace_r_def, d, n);
  return row;
}

FitResult fit_against_log_n(const std::vector<int>& n, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  FitResult f;
  for (size_t i = 0; i < n.size(); ++i) {
    if (!std::isfinite(y[i])) continue;
    const double x = std::log(static_cast<double>(n[i]));
    sx += x;
    sy += y[i];
    sxx += x * x;
    sxy += x * y[i];
    ++f.points;
  }
  const double den = f.points * sxx - sx * sx;
  if (f.points < 2 || den == 0.0) {
    f.slope = f.intercept = std::numeric_limits<double>::quiet_NaN();
    return f;
  }
  f.slope = (f.points * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / f.points;
  return f;
}

std::string SweepReport::verdict() const {
  return super_exponential ? "super-exponential behavior observed" : "super-exponential behavior not observed";
}

SweepReport run_sweep(const ScenarioConfig& cfg, int jobs) {
  validate(cfg);
  const size_t count = cfg.n_values.size();
  if (count < 3) throw ValidationError("a sweep needs at least 3 n-values for the fit");

  std::vector<std::optional<ExponentRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = run_point(cfg, cfg.n_values[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int width = std::clamp(jobs, 1, static_cast<int>(count));
  std::vector<std::thread> pool;
  for (int t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SweepReport rep;
  for (auto& r : rows) rep.rows.push_back(std::move(*r));

  const size_t fitted = std::max<size_t>(2, (count + 1) / 2);
  std::vector<int> fn;
  std::vector<double> ea, eb, ba, bb, ca, cb;
  for (size_t i = count - fitted; i < count; ++i) {
    const ExponentRow& r = rep.rows[i];
    fn.push_back(r.n);
    ea.push_back(r.exact_exp_alpha);
    eb.push_back(r.exact_exp_beta);
    ba.push_back(r.bound_exp_alpha);
    bb.push_back(r.bound_exp_beta);
    ca.push_back(!cfg.bound_only && r.alpha.confident ? r.exact_exp_alpha : r.bound_exp_alpha);
    cb.push_back(!cfg.bound_only && r.beta.confident ? r.exact_exp_beta : r.bound_exp_beta);
  }
  rep.fitted_n = fn;
  rep.fit_alpha = fit_against_log_n(fn, ea);
  rep.fit_beta = fit_against_log_n(fn, eb);
  rep.bound_fit_alpha = fit_against_log_n(fn, ba);
  rep.bound_fit_beta = fit_against_log_n(fn, bb);

  auto envelope = [&](const std::vector<double>& v) {
    double m = kInf;
    for (size_t i = 0; i < v.size(); ++i) m = std::min(m, v[i] / std::log(static_cast<double>(fn[i])));
    return m;
  };
  rep.certified_envelope_alpha = envelope(ca);
  rep.certified_envelope_beta = envelope(cb);
  rep.bound_envelope_alpha = envelope(ba);
  rep.bound_envelope_beta = envelope(bb);
  rep.increasing_alpha = strictly_increasing(cfg.bound_only ? ba : ea);
  rep.increasing_beta = strictly_increasing(cfg.bound_only ? bb : eb);
  rep.super_exponential = rep.increasing_alpha && rep.increasing_beta && rep.certified_envelope_alpha > 0.0 &&
                          rep.certified_envelope_beta > 0.0;
  return rep;
}

const char* tool_version() { return QFD_VERSION_STRING; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string sweep_csv(const SweepReport& report, const RunMetadata& meta) {
  std::ostringstream out;
  out << "# tool=qfd version=" << meta.version << " config_hash=" << meta.config_hash << " seed=" << meta.seed
      << "\n";
  out << "n,rank,trace_q,trace_r_def,log_alpha,log_beta,exact_exp_alpha,exact_exp_beta,bound_exp_alpha,"
         "bound_exp_beta,confidence\n";
  for (const ExponentRow& r : report.rows) {
    out << r.n << ',' << r.rank << ',' << format_double(r.trace_q) << ',' << format_double(r.trace_r_def) << ','
        << format_double(r.log_alpha) << ',' << format_double(r.log_beta) << ','
        << format_double(r.exact_exp_alpha) << ',' << format_double(r.exact_exp_beta) << ','
        << format_double(r.bound_exp_alpha) << ',' << format_double(r.bound_exp_beta) << ',' << r.confidence()
        << "\n";
  }
  return out.str();
}

std::string sweep_json(const ScenarioConfig& cfg, const SweepReport& report, const RunMetadata& meta) {
  ojson j = meta_json(meta);
  j["scenario"] = ojson::parse(scenario_to_json(cfg));
  ojson rows = ojson::array();
  ojson vacuous = ojson::array();
  for (const ExponentRow& r : report.rows) {
    rows.push_back(row_json(r));
    if (r.vacuous_alpha() || r.vacuous_beta()) vacuous.push_back(r.n);
  }
  j["rows"] = rows;
  ojson fit;
  fit["range_n"] = report.fitted_n;
  fit["alpha"] = fit_json(report.fit_alpha);
  fit["beta"] = fit_json(report.fit_beta);
  fit["bound_alpha"] = fit_json(report.bound_fit_alpha);
  fit["bound_beta"] = fit_json(report.bound_fit_beta);
  j["fit"] = fit;
  j["certified_envelope"] = {{"alpha", num(report.certified_envelope_alpha)},
                             {"beta", num(report.certified_envelope_beta)}};
  j["bound_envelope"] = {{"alpha", num(report.bound_envelope_alpha)}, {"beta", num(report.bound_envelope_beta)}};
  j["increasing"] = {{"alpha", report.increasing_alpha}, {"beta", report.increasing_beta}};
  j["vacuous_rows"] = vacuous;
  j["verdict"] = report.verdict();
  return j.dump(2) + "\n";
}

std::string point_json(const ScenarioConfig& cfg, const ExponentRow& row, const RunMetadata& meta) {
  ojson j = meta_json(meta);
  j["scenario"] = ojson::parse(scenario_to_json(cfg));
  j["row"] = row_json(row);
  return j.dump(2) + "\n";
}

}  // namespace qfd
