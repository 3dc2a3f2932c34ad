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

// Report serialization. Floats are always written with 17 significant
// digits so that a parse of the output reproduces every bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metroscale/error.hpp"
#include "metroscale/harness.hpp"

namespace metroscale {

namespace {

using nlohmann::json;

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

/// JSON has no NaN; failed cells carry null.
std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

template <typename T, typename F>
std::string json_list(const std::vector<T>& items, F&& each) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += each(items[i]);
  }
  return out + "]";
}

void require_cells(const ScalingReport& report) {
  if (report.cells.empty()) throw Error(ErrorCode::InvalidConfig, "empty sweep: nothing to emit");
}

double number_or_nan(const json& v) { return v.is_null() ? std::nan("") : v.get<double>(); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const ScalingReport& report) {
  require_cells(report);
  std::string out = "strategy,N,nu,delta_phi,bound,ratio\n";
  for (const auto& c : report.cells) {
    out += std::string(to_string(c.strategy)) + ',' + std::to_string(c.n) + ',' +
           std::to_string(c.nu) + ',' + format_double(c.delta_phi) + ',' + format_double(c.bound) +
           ',' + format_double(c.ratio) + '\n';
  }
  return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "strategy,N,nu,delta_phi,bound,ratio") {
    throw Error(ErrorCode::InvalidConfig, "unexpected csv header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string f[6];
    for (auto& s : f) {
      if (!std::getline(fields, s, ',')) throw Error(ErrorCode::InvalidConfig, "short csv row: " + line);
    }
    CsvRow r;
    r.strategy = f[0];
    r.n = std::stoull(f[1]);
    r.nu = std::stoull(f[2]);
    r.delta_phi = std::strtod(f[3].c_str(), nullptr);
    r.bound = std::strtod(f[4].c_str(), nullptr);
    r.ratio = std::strtod(f[5].c_str(), nullptr);
    rows.push_back(r);
  }
  return rows;
}

std::string to_json(const ScalingReport& report) {
  require_cells(report);
  const SweepConfig& cfg = report.config;
  std::ostringstream out;
  out << "{\n  \"config\": {\n"
      << "    \"strategies\": "
      << json_list(cfg.strategies, [](Protocol p) { return json_string(to_string(p)); }) << ",\n"
      << "    \"N\": "
      << json_list(cfg.n_values, [](std::uint64_t n) { return std::to_string(n); }) << ",\n"
      << "    \"nu\": " << cfg.nu << ",\n"
      << "    \"phi\": " << (cfg.phi_true ? format_double(*cfg.phi_true) : "null") << ",\n"
      << "    \"generator\": " << json_string(cfg.generator.preset) << ",\n"
      << "    \"generator_real\": " << json_list(cfg.generator.real, format_double) << ",\n"
      << "    \"generator_imag\": " << json_list(cfg.generator.imag, format_double) << ",\n"
      << "    \"seed\": " << cfg.seed << ",\n"
      << "    \"trials\": " << cfg.trials << ",\n"
      << "    \"format\": " << json_string(to_string(cfg.format)) << "\n"
      << "  },\n  \"partial\": " << (report.partial ? "true" : "false") << ",\n  \"cells\": [";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const auto& c = report.cells[i];
    out << (i ? ",\n" : "\n") << "    {\"strategy\": " << json_string(to_string(c.strategy))
        << ", \"N\": " << c.n << ", \"nu\": " << c.nu
        << ", \"phi_true\": " << format_double(c.phi_true) << ", \"seed\": " << c.seed
        << ", \"delta_phi\": " << json_number(c.delta_phi) << ", \"bound\": " << json_number(c.bound)
        << ", \"ratio\": " << json_number(c.ratio) << ", \"delta_h\": " << json_number(c.delta_h)
        << ", \"u_phi_uses\": " << c.u_phi_uses << ", \"failed\": " << (c.failed ? "true" : "false")
        << ", \"failure\": " << json_string(c.failure) << "}";
  }
  out << "\n  ],\n  \"fits\": [";
  for (std::size_t i = 0; i < report.fits.size(); ++i) {
    const auto& f = report.fits[i];
    out << (i ? ",\n" : "\n") << "    {\"strategy\": " << json_string(to_string(f.strategy))
        << ", \"slope\": " << format_double(f.fit.slope)
        << ", \"intercept\": " << format_double(f.fit.intercept)
        << ", \"standard_error\": " << json_number(f.fit.standard_error)
        << ", \"residual\": " << format_double(f.fit.residual) << ", \"points\": " << f.fit.points
        << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

ScalingReport report_from_json(std::string_view json_text) {
  ScalingReport r;
  try {
    const json doc = json::parse(json_text);
    const json& c = doc.at("config");
    r.config.strategies.clear();
    for (const auto& s : c.at("strategies")) {
      r.config.strategies.push_back(parse_protocol(s.get<std::string>()));
    }
    r.config.n_values = c.at("N").get<std::vector<std::uint64_t>>();
    r.config.nu = c.at("nu").get<std::uint64_t>();
    if (!c.at("phi").is_null()) r.config.phi_true = c.at("phi").get<double>();
    r.config.generator.preset = c.at("generator").get<std::string>();
    r.config.generator.real = c.at("generator_real").get<std::vector<double>>();
    r.config.generator.imag = c.at("generator_imag").get<std::vector<double>>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.trials = c.at("trials").get<std::uint64_t>();
    r.config.format = parse_report_format(c.at("format").get<std::string>());
    r.partial = doc.at("partial").get<bool>();
    for (const auto& j : doc.at("cells")) {
      ScalingCell cell;
      cell.strategy = parse_protocol(j.at("strategy").get<std::string>());
      cell.n = j.at("N").get<std::uint64_t>();
      cell.nu = j.at("nu").get<std::uint64_t>();
      cell.phi_true = j.at("phi_true").get<double>();
      cell.seed = j.at("seed").get<std::uint64_t>();
      cell.delta_phi = number_or_nan(j.at("delta_phi"));
      cell.bound = number_or_nan(j.at("bound"));
      cell.ratio = number_or_nan(j.at("ratio"));
      cell.delta_h = number_or_nan(j.at("delta_h"));
      cell.u_phi_uses = j.at("u_phi_uses").get<std::uint64_t>();
      cell.failed = j.at("failed").get<bool>();
      cell.failure = j.at("failure").get<std::string>();
      r.cells.push_back(cell);
    }
    for (const auto& j : doc.at("fits")) {
      StrategyFit f;
      f.strategy = parse_protocol(j.at("strategy").get<std::string>());
      f.fit.slope = j.at("slope").get<double>();
      f.fit.intercept = j.at("intercept").get<double>();
      f.fit.standard_error = number_or_nan(j.at("standard_error"));
      f.fit.residual = j.at("residual").get<double>();
      f.fit.points = j.at("points").get<std::size_t>();
      r.fits.push_back(f);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string human_summary(const ScalingReport& report, bool with_timestamp) {
  require_cells(report);
  std::ostringstream out;
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "generated " << stamp << "\n";
  }
  out << "nu = " << report.config.nu << ", trials = " << report.config.trials
      << ", seed = " << report.config.seed << (report.partial ? "  [PARTIAL]" : "") << "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %6s %14s %14s %10s %12s\n", "strategy", "N", "delta_phi",
                "bound", "ratio", "dphi*dh*2rn");
  out << line;
  for (const auto& c : report.cells) {
    if (c.failed) {
      out << to_string(c.strategy) << " N=" << c.n << " FAILED: " << c.failure << "\n";
      continue;
    }
    // Saturation of the uncertainty relation: 1 means delta_phi dh = 1/(2 sqrt nu).
    const double saturation = c.delta_phi * c.delta_h * 2.0 * std::sqrt(static_cast<double>(c.nu));
    std::snprintf(line, sizeof line, "%-12s %6llu %14.6e %14.6e %10.4f %12.4f\n",
                  std::string(to_string(c.strategy)).c_str(), static_cast<unsigned long long>(c.n),
                  c.delta_phi, c.bound, c.ratio, saturation);
    out << line;
  }
  if (!report.fits.empty()) out << "\nlog-log fits of delta_phi against N\n";
  for (const auto& f : report.fits) {
    std::snprintf(line, sizeof line, "%-12s exponent %+.4f +/- %.4f  (residual %.3g, %zu points)\n",
                  std::string(to_string(f.strategy)).c_str(), f.fit.slope, f.fit.standard_error,
                  f.fit.residual, f.fit.points);
    out << line;
  }
  return out.str();
}

void emit_report(const ScalingReport& report, const std::string& path, ReportFormat format) {
  require_cells(report);
  write_file(path, format == ReportFormat::Csv ? to_csv(report) : to_json(report));
  write_file(path + ".summary.txt", human_summary(report, true));
}

}  // namespace metroscale
