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

#include "verify_suites.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "qfd/discrimination.h"
#include "qfd/jw_oracle.h"
#include "qfd/mp_spectrum.h"
#include "qfd/quasifree.h"
#include "qfd/symbol.h"
#include "qfd/toeplitz.h"

namespace qfd::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

Eigen::VectorXcd random_vector(Rng& rng, int d) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

Eigen::MatrixXcd random_unitary(Rng& rng, int d) {
  Eigen::MatrixXcd a(d, d);
  for (int j = 0; j < d; ++j) a.col(j) = random_vector(rng, d);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ();
}

// Hermitian 0 <= Q <= I with the given spectrum.
Eigen::MatrixXcd with_spectrum(Rng& rng, const std::vector<double>& ev) {
  const int d = static_cast<int>(ev.size());
  const Eigen::MatrixXcd u = random_unitary(rng, d);
  const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(ev.data(), d);
  Eigen::MatrixXcd q = u * diag.asDiagonal() * u.adjoint();
  return 0.5 * (q + q.adjoint());
}

// Occupations in [0, 1], occasionally pinned to the endpoints.
std::vector<double> random_occupations(Rng& rng, int d) {
  std::vector<double> q(d);
  for (double& x : q) {
    const double u = uniform(rng);
    x = u < 0.05 ? 0.0 : (u > 0.95 ? 1.0 : uniform(rng));
  }
  return q;
}

// Random piecewise-constant symbol with a plateau of value c on [alpha, omega).
Symbol random_plateau_symbol(Rng& rng, const Angle& alpha, const Angle& omega, double c) {
  std::vector<Segment> segs;
  const int den = 16;
  const auto a = alpha.pi_fraction()->num * (den / alpha.pi_fraction()->den);
  const auto b = omega.pi_fraction()->num * (den / omega.pi_fraction()->den);
  std::int64_t pos = 0;
  auto cut = [&](std::int64_t end, bool plateau) {
    while (pos < end) {
      const std::int64_t step = plateau ? end - pos : std::min<std::int64_t>(end - pos, 1 + rng() % 4);
      segs.push_back({Angle::pi_multiple(pos, den), Angle::pi_multiple(pos + step, den), plateau ? c : uniform(rng)});
      pos += step;
    }
  };
  cut(a, false);
  cut(b, true);
  cut(2 * den, false);
  return Symbol(std::move(segs), "random");
}

Symbol random_symbol(Rng& rng) {
  std::vector<Segment> segs;
  const int den = 12;
  std::int64_t pos = 0;
  while (pos < 2 * den) {
    const std::int64_t step = std::min<std::int64_t>(2 * den - pos, 1 + rng() % 6);
    segs.push_back({Angle::pi_multiple(pos, den), Angle::pi_multiple(pos + step, den), uniform(rng)});
    pos += step;
  }
  return Symbol(std::move(segs), "random");
}

SuiteResult finish(std::string name, int cases, double dev, double tol, std::string note = "") {
  return SuiteResult{std::move(name), cases, dev, tol, dev <= tol, std::move(note)};
}

SuiteResult jw_equivalence(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;
  for (int d : opt.sizes) {
    const DenseFermionOps ops = build_ops(d);
    for (int t = 0; t < opt.instances; ++t) {
      const std::vector<double> qv = random_occupations(rng, d);
      const std::vector<double> rv = random_occupations(rng, d);
      const DenseErrors dense = dense_error_probs(dense_state(with_spectrum(rng, qv), ops),
                                                  dense_state(with_spectrum(rng, rv), ops), ops);
      std::vector<double> fast_q = qv;
      if (opt.inject_fault) fast_q[0] = std::min(1.0, fast_q[0] + 1e-3);
      const double alpha = type1_log_error(ModeOccupations::from_values(fast_q)).linear();
      const double beta = type2_log_error(ModeOccupations::from_values(rv)).linear();
      worst = std::max({worst, std::abs(dense.alpha - alpha), std::abs(dense.beta - beta)});
      ++cases;
    }
  }
  return finish("jw_equivalence", cases, worst, 1e-10);
}

SuiteResult state_validity(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;
  bool ok = true;
  for (int d : opt.sizes) {
    if (d > 7) continue;
    const DenseFermionOps ops = build_ops(d);
    for (int t = 0; t < std::max(1, opt.instances / 10); ++t) {
      const auto check = dense_state(with_spectrum(rng, random_occupations(rng, d)), ops).validate();
      worst = std::max({worst, check.trace_error, check.hermiticity_error, -check.min_eigenvalue});
      ok = ok && check.ok;
      ++cases;
    }
  }
  SuiteResult r = finish("state_validity", cases, worst, 1e-12);
  r.passed = r.passed && ok;
  return r;
}

SuiteResult car_relations(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;
  for (int d : opt.sizes) {
    if (d > 8) continue;
    const DenseFermionOps ops = build_ops(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(ops.dim(), ops.dim());
    for (int t = 0; t < 5; ++t) {
      const Eigen::VectorXcd phi = random_vector(rng, d);
      const Eigen::VectorXcd psi = random_vector(rng, d);
      const Eigen::MatrixXcd a = ops.annihilation_of(phi);
      const Eigen::MatrixXcd b = ops.annihilation_of(psi);
      const Eigen::MatrixXcd bs = ops.creation_of(psi);
      worst = std::max(worst, (a * bs + bs * a - phi.dot(psi) * id).cwiseAbs().maxCoeff());
      worst = std::max(worst, (a * b + b * a).cwiseAbs().maxCoeff());
      ++cases;
    }
  }
  return finish("car_relations", cases, worst, 1e-12);
}

SuiteResult wick_identity(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;
  for (int d : opt.sizes) {
    if (d > 8) continue;
    const DenseFermionOps ops = build_ops(d);
    for (int t = 0; t < std::max(1, opt.instances / 10); ++t) {
      const DenseQuasifreeState st = dense_state(with_spectrum(rng, random_occupations(rng, d)), ops);
      std::vector<std::vector<Eigen::VectorXcd>> phis, psis;
      for (int s = 0; s < 6; ++s) {
        const int longest = std::min(3, d);
        const int n = static_cast<int>(rng() % (longest + 1));
        const int m = s % 3 == 0 ? static_cast<int>(rng() % (longest + 1)) : n;
        std::vector<Eigen::VectorXcd> phi, psi;
        for (int i = 0; i < n; ++i) phi.push_back(random_vector(rng, d).normalized());
        for (int i = 0; i < m; ++i) psi.push_back(random_vector(rng, d).normalized());
        phis.push_back(std::move(phi));
        psis.push_back(std::move(psi));
        ++cases;
      }
      worst = std::max(worst, functional_check(st, ops, phis, psis));
    }
  }
  return finish("wick_identity", cases, worst, 1e-10);
}

SuiteResult occupation_bound(const VerifyOptions& opt, Rng& rng) {
  int violations = 0;
  int cases = 0;
  double worst = -std::numeric_limits<double>::infinity();  // max of log alpha - log bound over non-vacuous cases
  const int count = std::max(50, 5 * opt.instances);
  for (int t = 0; t < count; ++t) {
    const int d = 4 + static_cast<int>(rng() % 61);
    const double scale = std::pow(10.0, -4.0 * uniform(rng));
    std::vector<double> q(d);
    double trace = 0.0;
    for (double& x : q) {
      x = scale * uniform(rng);
      trace += x;
    }
    const double bound = lemma_main_log_bound(trace, d);
    if (!(bound < 0.0)) continue;
    const double la = type1_log_error(ModeOccupations::from_values(q)).value;
    ++cases;
    worst = std::max(worst, la - bound);
    if (la > bound) ++violations;
  }
  SuiteResult r = finish("occupation_bound", cases, std::max(0.0, worst), 0.0);
  r.note = "violations=" + std::to_string(violations);
  return r;
}

SuiteResult fejer_estimate(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;  // max over cases of deviation * n / gamma, must stay <= 1
  for (int t = 0; t < std::max(5, opt.instances / 4); ++t) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 16);
    const std::int64_t b = a + 4 + static_cast<std::int64_t>(rng() % (29 - a));
    const Angle alpha = Angle::pi_multiple(a, 16);
    const Angle omega = Angle::pi_multiple(std::min<std::int64_t>(b, 32), 16);
    const double c = uniform(rng) < 0.5 ? 0.0 : 1.0;
    const Symbol s = random_plateau_symbol(rng, alpha, omega, c);
    const FejerWindow w = FejerWindow::with_default_margin(alpha, omega, c);
    for (int n : {16, 64, 256}) {
      const FejerMargin m = fejer_bound_margin(s, w, n, w.uniform_grid(129));
      worst = std::max(worst, m.max_deviation / m.bound);
      ++cases;
    }
  }
  return finish("fejer_estimate", cases, worst, 1.0, "deviation relative to gamma/n");
}

SuiteResult dft_diagonal(const VerifyOptions& opt, Rng& rng) {
  int cases = 0;
  double worst = 0.0;
  for (int t = 0; t < std::max(3, opt.instances / 20); ++t) {
    const Symbol s = random_symbol(rng);
    for (int n : {1, 7, 16, 64}) {
      const ToeplitzRestriction tr = toeplitz_restriction(s, n);
      for (int k = 0; k < n; ++k) {
        const double theta = cesaro_mean(s, n, Angle::pi_multiple(2 * static_cast<std::int64_t>(k), n));
        worst = std::max(worst, std::abs(dft_diagonal_entry(tr, k) - theta));
        ++cases;
      }
    }
  }
  return finish("dft_diagonal", cases, worst, 1e-10);
}

SuiteResult rank_and_trace(const ScenarioConfig& cfg) {
  int cases = 0;
  double worst = 0.0;  // max of (trace - rank gamma / n) and (floor bound - rank), must stay <= 0
  for (int n : {16, 32, 64, 128, 256}) {
    const SpectralWindowProjection e = window_projection(n, cfg.window);
    const double trace = compress(toeplitz_restriction(cfg.symbol_q, n), e).trace;
    worst = std::max({worst, trace - e.rank() * cfg.window.gamma_delta() / n,
                      static_cast<double>(e.rank_lower_bound() - e.rank())});
    ++cases;
  }
  return finish("rank_and_trace", cases, worst, 0.0);
}

SuiteResult dual_route(const ScenarioConfig& cfg) {
  int cases = 0;
  double worst = 0.0;
  for (int n : {8, 32, 96}) {
    const SpectralWindowProjection e = window_projection(n, cfg.window);
    for (const Symbol& s : {cfg.symbol_q, cfg.symbol_r}) {
      const CompressedSymbol c = compress(toeplitz_restriction(s, n), e);
      Eigen::VectorXcd phase(e.rank());
      for (int a = 0; a < e.rank(); ++a) {
        const Angle theta = Angle::pi_multiple(static_cast<std::int64_t>(e.mode_indices[a]) * (n - 1), n);
        phase(a) = unit_phase(theta, 1);
      }
      const Eigen::MatrixXcd centered = phase.conjugate().asDiagonal() * c.matrix * phase.asDiagonal();
      const Eigen::MatrixXd mp = mp_centered_compression(s, n, e.mode_indices, 128);
      worst = std::max(worst, (centered - mp.cast<std::complex<double>>()).cwiseAbs().maxCoeff());
      ++cases;
    }
  }
  return finish("dual_route", cases, worst, 1e-12);
}

SuiteResult mirror_symmetry(const ScenarioConfig& cfg) {
  ScenarioConfig mirrored = cfg;
  mirrored.symbol_q = cfg.symbol_r.complement("1-r");
  mirrored.symbol_r = cfg.symbol_q.complement("1-q");
  int cases = 0;
  double worst = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const ExponentRow a = run_point(cfg, n);
    if (a.rank % 2 == 0) continue;
    const ExponentRow b = run_point(mirrored, n);
    worst = std::max({worst, std::abs(a.log_alpha - b.log_beta), std::abs(a.log_beta - b.log_alpha)});
    ++cases;
  }
  return finish("mirror_symmetry", cases, worst, 1e-8, "odd ranks only");
}

SuiteResult bound_chain(const ScenarioConfig& cfg) {
  int cases = 0;
  double worst = 0.0;  // max of bound - exact over high-confidence sides
  for (int n : {16, 32, 64, 128}) {
    const ExponentRow r = run_point(cfg, n);
    if (r.alpha.confident) worst = std::max(worst, r.bound_exp_alpha - r.exact_exp_alpha);
    if (r.beta.confident) worst = std::max(worst, r.bound_exp_beta - r.exact_exp_beta);
    ++cases;
  }
  return finish("bound_chain", cases, worst, 1e-8);
}

// Min eigenvalue of Q_n and of I - R_n must clear the numerical floor.
SuiteResult positivity(const ScenarioConfig& cfg) {
  int cases = 0;
  int failures = 0;
  const Symbol deficit = cfg.symbol_r.complement();
  for (int n : {4, 8, 16, 32}) {
    for (const Symbol* s : {&cfg.symbol_q, &deficit}) {
      if (min_eigenvalue_positivity(*s, n, cfg.precision).verdict != Verdict::kPositive) ++failures;
      ++cases;
    }
  }
  return finish("positivity", cases, failures, 0.0, "non-positive verdicts");
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opt) {
  for (int d : opt.sizes) {
    if (d < 1 || d > 12) throw std::invalid_argument("oracle sizes must lie in 1..12");
  }
  const ScenarioConfig canonical = ScenarioConfig::canonical();
  std::vector<SuiteResult> out;
  // Each suite draws from its own stream so that adding cases to one leaves the others unchanged.
  auto stream = [&](std::uint64_t k) { return Rng(opt.seed * 0x9e3779b97f4a7c15ull + k); };
  Rng r1 = stream(1), r2 = stream(2), r3 = stream(3), r4 = stream(4), r5 = stream(5), r6 = stream(6), r7 = stream(7);
  out.push_back(jw_equivalence(opt, r1));
  out.push_back(state_validity(opt, r2));
  out.push_back(car_relations(opt, r3));
  out.push_back(wick_identity(opt, r4));
  out.push_back(occupation_bound(opt, r5));
  out.push_back(fejer_estimate(opt, r6));
  out.push_back(dft_diagonal(opt, r7));
  out.push_back(rank_and_trace(canonical));
  out.push_back(dual_route(canonical));
  out.push_back(mirror_symmetry(canonical));
  out.push_back(bound_chain(canonical));
  out.push_back(positivity(canonical));
  return out;
}

std::string format_verify_report(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  int passed = 0;
  for (const SuiteResult& r : results) {
    passed += r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " max_dev=" << format_number(r.max_deviation)
        << " tol=" << format_number(r.tolerance);
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  out << passed << "/" << results.size() << " suites passed\n";
  return out.str();
}

}  // namespace qfd::cli
