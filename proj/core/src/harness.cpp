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

#include "metroscale/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metroscale/error.hpp"
#include "metroscale/parallel.hpp"
#include "metroscale/random.hpp"

namespace metroscale {

namespace {

using nlohmann::json;

std::vector<Protocol> parse_strategy_list(const json& value) {
  std::vector<std::string> names;
  if (value.is_string()) {
    std::stringstream ss(value.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) names.push_back(item);
    }
  } else if (value.is_array()) {
    for (const auto& v : value) names.push_back(v.get<std::string>());
  } else {
    throw Error(ErrorCode::InvalidConfig, "strategies must be a list or a comma-separated string");
  }
  std::vector<Protocol> out;
  for (const auto& n : names) out.push_back(parse_protocol(n));
  return out;
}

template <typename T>
T get_as(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(ReportFormat f) { return f == ReportFormat::Csv ? "csv" : "json"; }

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorCode::InvalidConfig, "unknown format '" + std::string(name) + "' (csv, json)");
}

Generator GeneratorSpec::build() const {
  if (preset == "qubit-z") return Generator::qubit_z();
  if (preset == "qutrit") return Generator::qutrit();
  if (preset != "custom") {
    throw Error(ErrorCode::InvalidConfig,
                "unknown generator '" + preset + "' (qubit-z, qutrit, custom)");
  }
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(real.size()))));
  if (d < 2 || d * d != real.size()) {
    throw Error(ErrorCode::InvalidConfig, "custom generator needs d*d real entries with d >= 2");
  }
  if (!imag.empty() && imag.size() != real.size()) {
    throw Error(ErrorCode::InvalidConfig, "generator_imag must match generator_real in length");
  }
  std::vector<Complex> entries(real.size());
  for (std::size_t k = 0; k < real.size(); ++k) {
    entries[k] = Complex(real[k], imag.empty() ? 0.0 : imag[k]);
  }
  return Generator(ComplexMatrix(d, entries));
}

void SweepConfig::validate() const {
  if (strategies.empty()) throw Error(ErrorCode::InvalidConfig, "no strategies given");
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (strategies[i] == Protocol::DigitByDigit) {
      throw Error(ErrorCode::InvalidConfig, "sweeps run fringe protocols only; use `digits`");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (strategies[i] == strategies[j]) {
        throw Error(ErrorCode::InvalidConfig, "strategy listed twice");
      }
    }
  }
  if (n_values.size() < 3) {
    throw Error(ErrorCode::InvalidConfig, "at least 3 N values are needed for an exponent fit");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] == 0) throw Error(ErrorCode::InvalidConfig, "N must be >= 1");
    if (i > 0 && n_values[i] <= n_values[i - 1]) {
      throw Error(ErrorCode::InvalidConfig, "N values must be strictly increasing");
    }
  }
  if (nu == 0) throw Error(ErrorCode::InvalidConfig, "nu must be >= 1");
  if (trials < 2) throw Error(ErrorCode::InvalidConfig, "trials must be >= 2");
  if (phi_true && !std::isfinite(*phi_true)) throw Error(ErrorCode::InvalidConfig, "phi is not finite");
  generator.build().require_gap();
}

SweepConfig parse_sweep_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");

  SweepConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "strategies") {
      cfg.strategies = parse_strategy_list(value);
    } else if (key == "N") {
      cfg.n_values = get_as<std::vector<std::uint64_t>>(doc, "N");
    } else if (key == "nu") {
      cfg.nu = get_as<std::uint64_t>(doc, "nu");
    } else if (key == "phi") {
      if (!value.is_null()) cfg.phi_true = get_as<double>(doc, "phi");
    } else if (key == "generator") {
      cfg.generator.preset = get_as<std::string>(doc, "generator");
    } else if (key == "generator_real") {
      cfg.generator.real = get_as<std::vector<double>>(doc, "generator_real");
    } else if (key == "generator_imag") {
      cfg.generator.imag = get_as<std::vector<double>>(doc, "generator_imag");
    } else if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(doc, "seed");
    } else if (key == "trials") {
      cfg.trials = get_as<std::uint64_t>(doc, "trials");
    } else if (key == "output") {
      cfg.output = get_as<std::string>(doc, "output");
    } else if (key == "format") {
      cfg.format = parse_report_format(get_as<std::string>(doc, "format"));
    } else if (key == "workers") {
      cfg.workers = get_as<std::size_t>(doc, "workers");
    } else {
      throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
    }
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::ConfigNotFound, "config file not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

ExponentFit fit_exponent(std::span<const double> n, std::span<const double> delta_phi) {
  if (n.size() != delta_phi.size()) throw Error(ErrorCode::DegenerateFit, "mismatched point lists");
  if (n.size() < 3) throw Error(ErrorCode::DegenerateFit, "fewer than 3 points");
  const std::size_t m = n.size();
  std::vector<double> x(m);
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(n[i] > 0.0) || !(delta_phi[i] > 0.0) || !std::isfinite(n[i]) ||
        !std::isfinite(delta_phi[i])) {
      throw Error(ErrorCode::DegenerateFit, "non-positive or non-finite value");
    }
    x[i] = std::log(n[i]);
    y[i] = std::log(delta_phi[i]);
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 1e-300)) throw Error(ErrorCode::DegenerateFit, "all N equal");

  ExponentFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += r * r;
  }
  fit.residual = std::sqrt(sse / static_cast<double>(m));
  fit.standard_error = std::sqrt(sse / static_cast<double>(m - 2) / sxx);
  return fit;
}

std::uint64_t cell_seed(std::uint64_t root, Protocol strategy, std::uint64_t n) {
  return derive_seed(derive_seed(root, static_cast<std::uint64_t>(strategy)), n);
}

ScalingCell run_cell(const SweepConfig& cfg, Protocol strategy, std::uint64_t n,
                     std::size_t trial_workers) {
  ScalingCell cell;
  cell.strategy = strategy;
  cell.n = n;
  cell.nu = cfg.nu;
  cell.seed = cell_seed(cfg.seed, strategy, n);
  try {
    const double gap = cfg.generator.build().gap();
    cell.phi_true = cfg.phi_true ? *cfg.phi_true : quadrature_phase(strategy, n, gap);
    cell.bound = strategy == Protocol::RamseyCC ? bound_cc(n, cfg.nu, gap)
                 : strategy == Protocol::GhzQC  ? bound_qc(n, cfg.nu, gap)
                                                : bound_sequential(n, cfg.nu, gap);
    StrategyConfig sc;
    sc.protocol = strategy;
    sc.generator = cfg.generator.build();
    sc.probes = n;
    sc.nu = cfg.nu;
    sc.phi_true = cell.phi_true;
    sc.seed = cell.seed;
    sc.operating_point = OperatingPoint::MaxSlope;
    sc.trials = cfg.trials;
    sc.workers = trial_workers;
    const EstimationResult r = run_protocol(sc);
    cell.delta_phi = r.delta_phi_empirical;
    cell.bound = r.theoretical_bound;
    cell.ratio = cell.delta_phi / cell.bound;
    cell.delta_h = r.probe_delta_h.value_or(0.0);
    cell.u_phi_uses = r.u_phi_applications;
  } catch (const std::exception& e) {
    cell.failed = true;
    cell.failure = e.what();
    cell.delta_phi = std::nan("");
    cell.ratio = std::nan("");
  }
  return cell;
}

ScalingReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  ScalingReport report;
  report.config = cfg;

  // Canonical order: strategy enum order, then ascending N.
  std::vector<Protocol> strategies = cfg.strategies;
  std::sort(strategies.begin(), strategies.end());
  for (Protocol s : strategies) {
    for (std::uint64_t n : cfg.n_values) {
      ScalingCell cell;
      cell.strategy = s;
      cell.n = n;
      report.cells.push_back(cell);
    }
  }

  const std::size_t workers = cfg.workers == 0 ? default_worker_count() : cfg.workers;
  const std::size_t outer = std::max<std::size_t>(1, std::min(workers, report.cells.size()));
  const std::size_t inner = std::max<std::size_t>(1, workers / outer);
  parallel_for(report.cells.size(), outer, [&](std::size_t i) {
    report.cells[i] = run_cell(cfg, report.cells[i].strategy, report.cells[i].n, inner);
  });

  for (Protocol s : strategies) {
    std::vector<double> ns;
    std::vector<double> dphi;
    for (const auto& c : report.cells) {
      if (c.strategy != s) continue;
      if (c.failed) {
        report.partial = true;
        continue;
      }
      ns.push_back(static_cast<double>(c.n));
      dphi.push_back(c.delta_phi);
    }
    if (ns.size() < 3) continue;
    try {
      report.fits.push_back({s, fit_exponent(ns, dphi)});
    } catch (const Error&) {
      report.partial = true;
    }
  }
  return report;
}

}  // namespace metroscale
