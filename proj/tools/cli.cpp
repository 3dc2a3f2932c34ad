// Copyright 2026 The metroscale Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metroscale/checks.hpp"
#include "metroscale/error.hpp"
#include "metroscale/estimation.hpp"
#include "metroscale/harness.hpp"
#include "metroscale/protocols.hpp"

namespace metroscale::cli {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Generator flags shared by several subcommands.
struct GeneratorFlags {
  std::string preset = "qubit-z";
  std::vector<double> real;
  std::vector<double> imag;
  CLI::Option* preset_opt = nullptr;
  CLI::Option* real_opt = nullptr;
  CLI::Option* imag_opt = nullptr;

  void attach(CLI::App* app) {
    preset_opt = app->add_option("--generator", preset, "qubit-z, qutrit or custom");
    real_opt = app->add_option("--generator-real", real, "custom: row-major real parts")->delimiter(',');
    imag_opt = app->add_option("--generator-imag", imag, "custom: row-major imaginary parts")->delimiter(',');
  }

  void apply(GeneratorSpec& spec) const {
    if (preset_opt->count()) spec.preset = preset;
    if (real_opt->count()) spec.real = real;
    if (imag_opt->count()) spec.imag = imag;
  }
};

struct SweepFlags {
  std::string config;
  std::string strategies;
  std::vector<std::uint64_t> n_values;
  std::uint64_t nu = 0;
  double phi = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::string output;
  std::string format;
  std::size_t workers = 0;
  GeneratorFlags generator;
  CLI::App* app = nullptr;
};

struct SingleFlags {
  std::string protocol = "cc";
  std::uint64_t n = 1;
  std::uint64_t nu = 1;
  double phi = 0.0;
  CLI::Option* phi_opt = nullptr;
  std::uint64_t seed = 0;
  std::uint64_t trials = 400;
  std::string operating_point = "MaxSlope";
  std::string ghz_path = "Auto";
  std::size_t workers = 0;
  GeneratorFlags generator;
};

struct BoundsFlags {
  std::uint64_t n = 1;
  std::uint64_t nu = 1;
  double gap = 1.0;
};

struct DigitFlags {
  std::uint64_t base = 2;
  std::uint64_t count = 6;
  std::uint64_t nu = 400;
  double phi = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::string engine = "Sequential";
  std::size_t workers = 0;
  bool verbose = false;
  GeneratorFlags generator;
};

int run_sweep_command(const SweepFlags& f, std::ostream& out) {
  SweepConfig cfg = f.config.empty() ? SweepConfig{} : load_sweep_config(f.config);
  const CLI::App& a = *f.app;
  if (a.count("--strategies")) {
    cfg.strategies.clear();
    std::string rest = f.strategies;
    std::size_t pos = 0;
    while ((pos = rest.find(',')) != std::string::npos || !rest.empty()) {
      const std::string item = rest.substr(0, pos);
      if (!item.empty()) cfg.strategies.push_back(parse_protocol(item));
      rest = pos == std::string::npos ? "" : rest.substr(pos + 1);
    }
  }
  if (a.count("--N")) cfg.n_values = f.n_values;
  if (a.count("--nu")) cfg.nu = f.nu;
  if (a.count("--phi")) cfg.phi_true = f.phi;
  if (a.count("--seed")) cfg.seed = f.seed;
  if (a.count("--trials")) cfg.trials = f.trials;
  if (a.count("--output")) cfg.output = f.output;
  if (a.count("--format")) cfg.format = parse_report_format(f.format);
  if (a.count("--workers")) cfg.workers = f.workers;
  f.generator.apply(cfg.generator);

  const ScalingReport report = run_sweep(cfg);
  if (cfg.output.empty()) {
    out << (cfg.format == ReportFormat::Csv ? to_csv(report) : to_json(report));
  } else {
    emit_report(report, cfg.output, cfg.format);
    out << human_summary(report, false);
  }
  return report.partial ? kExitNumerical : kExitOk;
}

void print_result(const EstimationResult& r, std::ostream& out) {
  const StrategyConfig& c = r.protocol_echo;
  out << "protocol: " << to_string(c.protocol) << "\n"
      << "N: " << c.probes << "\n"
      << "nu: " << c.nu << "\n"
      << "phi_true: " << format_double(c.phi_true) << "\n"
      << "seed: " << c.seed << "\n"
      << "trials: " << c.trials << "\n"
      << "gap: " << format_double(c.generator.gap()) << "\n"
      << "mean_estimate: " << format_double(r.mean_estimate) << "\n"
      << "slope: " << format_double(r.slope) << "\n"
      << "delta_phi_empirical: " << format_double(r.delta_phi_empirical) << "\n"
      << "theoretical_bound: " << format_double(r.theoretical_bound) << "\n"
      << "bound_kind: " << to_string(r.bound_kind) << "\n"
      << "ratio: " << format_double(r.delta_phi_empirical / r.theoretical_bound) << "\n";
  if (r.probe_delta_h) {
    const auto u = uncertainty_relation_check(r.delta_phi_empirical, *r.probe_delta_h, c.nu);
    out << "delta_h: " << format_double(*r.probe_delta_h) << "\n"
        << "uncertainty_ratio: " << format_double(u.ratio) << "\n";
  }
  out << "plus_probability: " << format_double(r.plus_probability) << "\n"
      << "u_phi_applications: " << r.u_phi_applications << "\n"
      << "total_u_phi_applications: " << r.total_u_phi_applications << "\n"
      << "clipped_trials: " << r.clipped_trials.size() << "\n";
}

int run_single_command(const SingleFlags& f, std::ostream& out) {
  StrategyConfig cfg;
  cfg.protocol = parse_protocol(f.protocol);
  if (cfg.protocol == Protocol::DigitByDigit) {
    throw Error(ErrorCode::InvalidConfig, "use the `digits` subcommand for the digit-by-digit schedule");
  }
  GeneratorSpec spec;
  f.generator.apply(spec);
  cfg.generator = spec.build();
  cfg.probes = f.n;
  cfg.nu = f.nu;
  cfg.phi_true = f.phi_opt->count() ? f.phi : quadrature_phase(cfg.protocol, f.n, cfg.generator.gap());
  cfg.seed = f.seed;
  cfg.trials = f.trials;
  cfg.operating_point = parse_operating_point(f.operating_point);
  cfg.ghz_path = parse_ghz_path(f.ghz_path);
  cfg.workers = f.workers;
  print_result(run_protocol(cfg), out);
  return kExitOk;
}

int run_bounds_command(const BoundsFlags& f, std::ostream& out) {
  if (f.n == 0 || f.nu == 0) throw Error(ErrorCode::InvalidConfig, "N and nu must be >= 1");
  if (!(f.gap > 0.0)) throw Error(ErrorCode::InvalidConfig, "gap must be positive");
  out << "N = " << f.n << ", nu = " << f.nu << ", gap = " << fmt("%.10g", f.gap) << "\n"
      << "strategy            bound\n"
      << "CC/CQ (parallel)    " << fmt("%.10g", bound_cc(f.n, f.nu, f.gap)) << "\n"
      << "QC/QQ (parallel)    " << fmt("%.10g", bound_qc(f.n, f.nu, f.gap)) << "\n"
      << "Sequential          " << fmt("%.10g", bound_sequential(f.n, f.nu, f.gap)) << "\n";
  return kExitOk;
}

int run_digits_command(const DigitFlags& f, std::ostream& out) {
  StrategyConfig cfg;
  cfg.protocol = Protocol::DigitByDigit;
  GeneratorSpec spec;
  f.generator.apply(spec);
  cfg.generator = spec.build();
  cfg.digit_base = f.base;
  cfg.digit_count = f.count;
  cfg.nu = f.nu;
  cfg.phi_true = f.phi;
  cfg.seed = f.seed;
  cfg.trials = f.trials;
  cfg.digit_engine = parse_digit_engine(f.engine);
  cfg.workers = f.workers;
  const EstimationResult r = run_digit_by_digit(cfg);
  const DigitReport& d = *r.digits;

  out << "base: " << d.base << "\n"
      << "digits: " << d.digit_count << "\n"
      << "engine: " << to_string(cfg.digit_engine) << "\n"
      << "phi_true: " << format_double(cfg.phi_true) << "\n"
      << "true_fraction: " << format_double(d.true_fraction) << "\n"
      << "probes_per_level:";
  for (auto p : d.probes_per_level) out << ' ' << p;
  out << "\n"
      << "probes_per_batch: " << d.probes_per_batch << "\n"
      << "inclusive_sum: " << d.inclusive_sum << "\n"
      << "u_phi_applications: " << r.u_phi_applications << "\n"
      << "trials: " << d.trials.size() << "\n"
      << "successes: " << d.successes << "\n"
      << "tolerance: " << format_double(0.5 / std::pow(static_cast<double>(d.base),
                                                       static_cast<double>(d.digit_count)))
      << "\n"
      << "delta_phi_empirical: " << format_double(r.delta_phi_empirical) << "\n"
      << "theoretical_bound: " << format_double(r.theoretical_bound) << "\n";
  if (f.verbose) {
    for (std::size_t t = 0; t < d.trials.size(); ++t) {
      const DigitTrial& trial = d.trials[t];
      out << "trial " << t << ":";
      if (trial.ambiguous) {
        out << " ambiguous (" << trial.failure << ")\n";
        continue;
      }
      for (auto digit : trial.digits) out << ' ' << digit;
      out << "  error " << format_double(trial.error) << "\n";
    }
  }
  return kExitOk;
}

int run_check_command(std::uint64_t seed, std::ostream& out) {
  bool ok = true;
  for (const CheckResult& r : run_invariant_suite(seed)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " ["
        << fmt("%.2f", r.seconds) << " s]\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"metroscale: phase-estimation strategies and their precision bounds"};
  app.require_subcommand(1);

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run strategies over a grid of N and fit exponents");
  sweep.app = sweep_cmd;
  sweep_cmd->add_option("--config", sweep.config, "JSON config file; flags override its values");
  sweep_cmd->add_option("--strategies", sweep.strategies, "comma-separated, e.g. cc,ghz,seq");
  sweep_cmd->add_option("--N", sweep.n_values, "probe counts, strictly increasing")->delimiter(',');
  sweep_cmd->add_option("--nu", sweep.nu, "repetitions per experiment");
  sweep_cmd->add_option("--phi", sweep.phi, "pin phi_true for every cell");
  sweep_cmd->add_option("--seed", sweep.seed, "root seed");
  sweep_cmd->add_option("--trials", sweep.trials, "experiments per cell");
  sweep_cmd->add_option("--output", sweep.output, "output path; stdout when absent");
  sweep_cmd->add_option("--format", sweep.format, "csv or json");
  sweep_cmd->add_option("--workers", sweep.workers, "worker threads (default: METROSCALE_WORKERS or all cores)");
  sweep.generator.attach(sweep_cmd);

  SingleFlags single;
  CLI::App* single_cmd = app.add_subcommand("single", "one run of one strategy");
  single_cmd->add_option("--protocol", single.protocol, "cc, ghz or seq");
  single_cmd->add_option("--N", single.n, "probes (uses of U_phi per repetition)");
  single_cmd->add_option("--nu", single.nu, "repetitions per experiment");
  single.phi_opt = single_cmd->add_option("--phi", single.phi, "true phase (default: quadrature)");
  single_cmd->add_option("--seed", single.seed, "seed");
  single_cmd->add_option("--trials", single.trials, "experiments");
  single_cmd->add_option("--operating-point", single.operating_point, "MaxSlope or AtTrueValue");
  single_cmd->add_option("--ghz-path", single.ghz_path, "Auto, Statevector or Analytic");
  single_cmd->add_option("--workers", single.workers, "worker threads");
  single.generator.attach(single_cmd);

  BoundsFlags bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form precision bounds");
  bounds_cmd->add_option("--N", bounds.n, "probes");
  bounds_cmd->add_option("--nu", bounds.nu, "repetitions");
  bounds_cmd->add_option("--gap", bounds.gap, "lambda_max - lambda_min");

  DigitFlags digits;
  CLI::App* digits_cmd = app.add_subcommand("digits", "digit-by-digit recovery of the full phase");
  digits_cmd->add_option("--base", digits.base, "digit base b");
  digits_cmd->add_option("--digits", digits.count, "number of digits l");
  digits_cmd->add_option("--nu", digits.nu, "repetitions per digit level");
  digits_cmd->add_option("--phi", digits.phi, "true phase");
  digits_cmd->add_option("--seed", digits.seed, "seed");
  digits_cmd->add_option("--trials", digits.trials, "independent runs");
  digits_cmd->add_option("--engine", digits.engine, "Sequential or Ghz");
  digits_cmd->add_option("--workers", digits.workers, "worker threads");
  digits_cmd->add_flag("--verbose", digits.verbose, "print per-trial digits");
  digits.generator.attach(digits_cmd);

  std::uint64_t check_seed = 2026;
  CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suite");
  check_cmd->add_option("--seed", check_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sweep_cmd) return run_sweep_command(sweep, out);
    if (*single_cmd) return run_single_command(single, out);
    if (*bounds_cmd) return run_bounds_command(bounds, out);
    if (*digits_cmd) return run_digits_command(digits, out);
    if (*check_cmd) return run_check_command(check_seed, out);
  } catch (const Error& e) {
    err << "metroscale: " << e.what() << "\n";
    return is_config_error(e.code()) ? kExitConfig : kExitNumerical;
  } catch (const std::exception& e) {
    err << "metroscale: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace metroscale::cli
