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

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfd/discrimination.h"
#include "qfd/errors.h"
#include "qfd/jw_oracle.h"
#include "qfd/quasifree.h"
#include "qfd/scenario_io.h"
#include "verify_suites.h"

namespace qfd::cli {

namespace {

struct Common {
  std::string config_path;
  std::string out_dir;
  int jobs = 1;
  std::uint64_t seed = 1;
};

struct ScenarioFlags {
  bool bound_only = false;
  bool no_escalate = false;
  int max_bits = 0;
  std::vector<int> n_values;
};

ScenarioConfig load(const Common& c, const ScenarioFlags& f) {
  ScenarioConfig cfg = c.config_path.empty() ? ScenarioConfig::canonical() : load_scenario(c.config_path);
  if (f.bound_only) cfg.bound_only = true;
  if (f.no_escalate) cfg.precision.escalate = false;
  if (f.max_bits > 0) cfg.precision.max_bits = f.max_bits;
  if (!f.n_values.empty()) cfg.n_values = f.n_values;
  return cfg;
}

RunMetadata metadata(const std::string& hash, std::uint64_t seed) { return RunMetadata{tool_version(), hash, seed}; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path.string() + "'");
  f << text;
  if (!f.flush()) throw ValidationError("failed writing '" + path.string() + "'");
}

std::string fixed(double x, int digits) {
  if (!std::isfinite(x)) return format_double(x);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

int cmd_sweep(const Common& c, const ScenarioFlags& f, std::ostream& out) {
  const ScenarioConfig cfg = load(c, f);
  const SweepReport rep = run_sweep(cfg, c.jobs);
  const RunMetadata meta = metadata(config_hash(cfg), c.seed);
  const std::filesystem::path dir = c.out_dir.empty() ? "." : c.out_dir;
  write_file(dir / "sweep.csv", sweep_csv(rep, meta));
  write_file(dir / "summary.json", sweep_json(cfg, rep, meta));
  out << "scenario " << cfg.name << " config_hash=" << meta.config_hash << "\n";
  out << "       n  rank   exact_a   exact_b   bound_a   bound_b  confidence\n";
  for (const ExponentRow& r : rep.rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%8d %5d %9s %9s %9s %9s  %s\n", r.n, r.rank, fixed(r.exact_exp_alpha, 3).c_str(),
                  fixed(r.exact_exp_beta, 3).c_str(), fixed(r.bound_exp_alpha, 3).c_str(),
                  fixed(r.bound_exp_beta, 3).c_str(), r.confidence().c_str());
    out << line;
  }
  out << "fitted slope alpha " << fixed(rep.fit_alpha.slope, 4) << ", beta " << fixed(rep.fit_beta.slope, 4) << "\n";
  out << "certified envelope alpha " << fixed(rep.certified_envelope_alpha, 4) << ", beta "
      << fixed(rep.certified_envelope_beta, 4) << "\n";
  out << rep.verdict() << "\n";
  out << "wrote " << (dir / "sweep.csv").string() << " and " << (dir / "summary.json").string() << "\n";
  return kExitOk;
}

int cmd_point(const Common& c, const ScenarioFlags& f, int n, std::ostream& out) {
  const ScenarioConfig cfg = load(c, f);
  validate(cfg);
  const ExponentRow row = run_point(cfg, n);
  const std::string text = point_json(cfg, row, metadata(config_hash(cfg), c.seed));
  if (c.out_dir.empty()) {
    out << text;
  } else {
    const auto path = std::filesystem::path(c.out_dir) / ("point_n" + std::to_string(n) + ".json");
    write_file(path, text);
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

Eigen::MatrixXcd random_symbol_matrix(std::mt19937_64& rng, int d, std::vector<double>& spectrum) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXcd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  const Eigen::MatrixXcd v = qr.householderQ();
  spectrum.resize(d);
  for (double& x : spectrum) x = u(rng);
  const Eigen::VectorXd ev = Eigen::Map<Eigen::VectorXd>(spectrum.data(), d);
  const Eigen::MatrixXcd q = v * ev.asDiagonal() * v.adjoint();
  return 0.5 * (q + q.adjoint());
}

// One random pair of symbol matrices, solved densely and through the Poisson binomial.
int cmd_oracle(const Common& c, int d, std::ostream& out) {
  if (d < 1 || d > 12) throw ValidationError("oracle supports 1 <= d <= 12, got " + std::to_string(d));
  std::mt19937_64 rng(c.seed);
  std::vector<double> qs, rs;
  const Eigen::MatrixXcd q = random_symbol_matrix(rng, d, qs);
  const Eigen::MatrixXcd r = random_symbol_matrix(rng, d, rs);
  const DenseFermionOps ops = build_ops(d);
  const DenseQuasifreeState sq = dense_state(q, ops);
  const DenseQuasifreeState sr = dense_state(r, ops);
  const DenseErrors dense = dense_error_probs(sq, sr, ops);
  const double alpha = type1_log_error(ModeOccupations::from_values(qs)).linear();
  const double beta = type2_log_error(ModeOccupations::from_values(rs)).linear();
  const auto check_q = sq.validate();
  const auto check_r = sr.validate();

  nlohmann::ordered_json j;
  j["tool"] = "qfd";
  j["version"] = tool_version();
  j["config_hash"] = fnv1a_hex("oracle d=" + std::to_string(d));
  j["seed"] = c.seed;
  j["d"] = d;
  j["threshold"] = d / 2;
  j["occupations_q"] = qs;
  j["occupations_r"] = rs;
  j["dense"] = {{"alpha", dense.alpha}, {"beta", dense.beta}};
  j["poisson_binomial"] = {{"alpha", alpha}, {"beta", beta}};
  j["max_abs_difference"] = std::max(std::abs(dense.alpha - alpha), std::abs(dense.beta - beta));
  j["state_q_valid"] = check_q.ok;
  j["state_r_valid"] = check_r.ok;
  const std::string text = j.dump(2) + "\n";
  if (c.out_dir.empty()) {
    out << text;
  } else {
    const auto path = std::filesystem::path(c.out_dir) / ("oracle_d" + std::to_string(d) + ".json");
    write_file(path, text);
    out << "wrote " << path.string() << "\n";
  }
  return check_q.ok && check_r.ok ? kExitOk : kExitNumerical;
}

int cmd_verify(const Common& c, VerifyOptions opt, std::ostream& out) {
  opt.seed = c.seed;
  std::ostringstream head;
  head << "sizes=";
  for (size_t i = 0; i < opt.sizes.size(); ++i) head << (i ? "," : "") << opt.sizes[i];
  head << " instances=" << opt.instances << " inject_fault=" << (opt.inject_fault ? 1 : 0);
  std::ostringstream text;
  text << "# tool=qfd version=" << tool_version() << " config_hash=" << fnv1a_hex("verify " + head.str())
       << " seed=" << opt.seed << " " << head.str() << "\n";
  const auto results = run_verify_suites(opt);
  text << format_verify_report(results);
  out << text.str();
  if (!c.out_dir.empty()) write_file(std::filesystem::path(c.out_dir) / "verify.txt", text.str());
  for (const auto& r : results) {
    if (!r.passed) return kExitVerifyFailed;
  }
  return kExitOk;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "Scenario JSON (default: built-in canonical scenario)");
  app->add_option("--out", c.out_dir, "Output directory");
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Seed, recorded in every output");
}

void add_scenario_flags(CLI::App* app, ScenarioFlags& f) {
  app->add_flag("--bound-only", f.bound_only, "Skip eigensolves; traces and bounds only");
  app->add_flag("--no-escalate", f.no_escalate, "Never leave double precision");
  app->add_option("--max-bits", f.max_bits, "Precision cap for escalation")->check(CLI::Range(64, 1 << 20));
  app->add_option("--n-values", f.n_values, "Override the n values")->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super-exponential discrimination of quasi-free fermionic states"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1, 1);
  Common common;
  ScenarioFlags flags;
  VerifyOptions verify;
  int point_n = 0;
  int oracle_d = 0;

  CLI::App* sweep = app.add_subcommand("sweep", "Run every n of a scenario; write sweep.csv and summary.json");
  add_common(sweep, common);
  add_scenario_flags(sweep, flags);

  CLI::App* point = app.add_subcommand("point", "Run a single n and print its report");
  add_common(point, common);
  add_scenario_flags(point, flags);
  point->add_option("--n", point_n, "Matrix size")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Compare the dense fermionic oracle with the fast path");
  add_common(oracle, common);
  oracle->add_option("--d", oracle_d, "Number of modes (1..12)")->required();

  CLI::App* ver = app.add_subcommand("verify", "Run the randomized verification suites");
  add_common(ver, common);
  ver->add_option("--sizes", verify.sizes, "Mode counts for the oracle suites")->delimiter(',');
  ver->add_option("--instances", verify.instances, "Random instances per size")->check(CLI::PositiveNumber);
  ver->add_flag("--inject-fault", verify.inject_fault, "Perturb the fast path; verify must then fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*sweep) return cmd_sweep(common, flags, out);
    if (*point) return cmd_point(common, flags, point_n, out);
    if (*oracle) return cmd_oracle(common, oracle_d, out);
    return cmd_verify(common, verify, out);
  } catch (const std::exception& e) {
    return report_failure(e, err);
  }
}

int report_failure(const std::exception& e, std::ostream& err) {
  if (dynamic_cast<const NumericalError*>(&e)) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) {
    err << "i/o error: " << e.what() << "\n";
    return kExitValidation;
  }
  // Anything else (allocation failure, multiprecision faults) is a failure of the computation.
  err << "error: " << e.what() << "\n";
  return kExitNumerical;
}

}  // namespace qfd::cli
