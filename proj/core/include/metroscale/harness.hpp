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

/**
 * @file
 * Sweeps over N, log-log exponent fits and report emission.
 *
 * Config files are flat JSON objects. Keys:
 *
 *   strategies       list of protocol names, or one comma-separated string
 *   N                list of probe counts, strictly increasing
 *   nu, seed, trials, workers
 *   phi              optional; pins phi_true for every cell. When absent
 *                    each cell runs at quadrature_phase(strategy, N, gap)
 *   generator        "qubit-z" | "qutrit" | "custom"
 *   generator_real   row-major real parts (custom only)
 *   generator_imag   row-major imaginary parts (custom only, optional)
 *   output, format   output path and "csv" | "json"
 *
 * Unknown keys are rejected. Command-line flags override file values.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metroscale/genspec.hpp"
#include "metroscale/protocols.hpp"

namespace metroscale {

enum class ReportFormat { Csv, Json };

std::string_view to_string(ReportFormat f);
ReportFormat parse_report_format(std::string_view name);

struct GeneratorSpec {
  std::string preset = "qubit-z";
  std::vector<double> real;  // custom: d*d entries, row-major
  std::vector<double> imag;  // custom: empty or d*d entries

  /// Throws InvalidConfig or NonHermitian.
  Generator build() const;
};

struct SweepConfig {
  std::vector<Protocol> strategies{Protocol::RamseyCC, Protocol::GhzQC};
  std::vector<std::uint64_t> n_values{4, 8, 16, 32, 64};
  std::uint64_t nu = 10000;
  std::optional<double> phi_true;  // absent: per-cell quadrature phase
  GeneratorSpec generator;
  std::uint64_t seed = 1;
  std::uint64_t trials = 400;
  std::string output;
  ReportFormat format = ReportFormat::Csv;
  std::size_t workers = 0;

  /// Throws InvalidConfig.
  void validate() const;
};

/// Parses a config document. Throws InvalidConfig.
SweepConfig parse_sweep_config(std::string_view json_text);
/// Throws ConfigNotFound when the file does not exist.
SweepConfig load_sweep_config(const std::string& path);

struct ScalingCell {
  Protocol strategy = Protocol::RamseyCC;
  std::uint64_t n = 0;
  std::uint64_t nu = 0;
  double phi_true = 0.0;
  std::uint64_t seed = 0;
  double delta_phi = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // delta_phi / bound
  double delta_h = 0.0;
  std::uint64_t u_phi_uses = 0;  // per experiment
  bool failed = false;
  std::string failure;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double standard_error = 0.0;  // of the slope
  double residual = 0.0;        // RMS residual in log space
  std::size_t points = 0;
};

struct StrategyFit {
  Protocol strategy = Protocol::RamseyCC;
  ExponentFit fit;
};

struct ScalingReport {
  SweepConfig config;
  std::vector<ScalingCell> cells;  // strategy order, then ascending N
  std::vector<StrategyFit> fits;
  bool partial = false;
};

/// Ordinary least squares of log(delta_phi) on log(N). Throws DegenerateFit
/// for fewer than 3 points, mismatched lengths, all-equal N, or any
/// non-positive value.
ExponentFit fit_exponent(std::span<const double> n, std::span<const double> delta_phi);

/// Seed of cell (strategy, N), independent of scheduling.
std::uint64_t cell_seed(std::uint64_t root, Protocol strategy, std::uint64_t n);

/// Runs one cell. Errors are caught and recorded on the cell.
ScalingCell run_cell(const SweepConfig& cfg, Protocol strategy, std::uint64_t n,
                     std::size_t trial_workers);

/// Runs every (strategy, N) cell and fits one exponent per strategy with at
/// least 3 successful cells. Failed cells mark the report partial.
ScalingReport run_sweep(const SweepConfig& cfg);

// ---------------------------------------------------------------------------
// Emission

/// %.17g
std::string format_double(double v);

/// Header `strategy,N,nu,delta_phi,bound,ratio`, LF endings. Failed cells
/// write `nan` for delta_phi and ratio. Throws InvalidConfig on an empty
/// report.
std::string to_csv(const ScalingReport& report);
std::string to_json(const ScalingReport& report);
/// Inverse of to_json. Throws InvalidConfig on malformed input.
ScalingReport report_from_json(std::string_view json_text);

struct CsvRow {
  std::string strategy;
  std::uint64_t n = 0;
  std::uint64_t nu = 0;
  double delta_phi = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};
std::vector<CsvRow> parse_csv(std::string_view text);

/// Human-readable table with bound-saturation ratios and fits. The
/// timestamp, when requested, appears only here.
std::string human_summary(const ScalingReport& report, bool with_timestamp);

/// Writes the table to `path` and the summary to `path + ".summary.txt"`.
/// Throws IoFailure.
void emit_report(const ScalingReport& report, const std::string& path, ReportFormat format);

}  // namespace metroscale
