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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and ensemble sizes are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "metroscale/checks.hpp"
#include "metroscale/estimation.hpp"
#include "metroscale/genspec.hpp"
#include "metroscale/harness.hpp"
#include "metroscale/protocols.hpp"
#include "metroscale/random.hpp"
#include "metroscale/sampling.hpp"

namespace ms = metroscale;

namespace {

constexpr std::uint64_t kNu = 10000;
constexpr std::uint64_t kTrials = 1000;
constexpr std::uint64_t kSequentialTrials = 2000;
constexpr double kTargetTolerance = 0.10;
constexpr double kCcTarget = 3.162e-3;
constexpr double kQcTarget = 1.25e-3;
constexpr double kSeqOverGhzLow = 0.85;
constexpr double kSeqOverGhzHigh = 1.18;
constexpr double kExponentTolerance = 0.10;
constexpr double kSequentialExponentTolerance = 0.05;
constexpr double kSeparation = -0.5;
constexpr double kSeparationTolerance = 0.15;
constexpr double kSpectrumFdTolerance = 1e-4;
constexpr double kExtremalTolerance = 1e-9;

struct Experiment {
  std::string label;
  std::uint64_t nu = 0;
  double delta_phi = 0.0;
  double delta_h = 0.0;
  bool ghz = false;
};

// Every fringe experiment run below feeds the uncertainty-relation check.
std::vector<Experiment> g_ensemble;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * target;
}

ms::StrategyConfig fringe(ms::Protocol p, std::uint64_t n, std::uint64_t trials, std::uint64_t seed) {
  ms::StrategyConfig cfg;
  cfg.protocol = p;
  cfg.probes = n;
  cfg.nu = kNu;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.phi_true = ms::quadrature_phase(p, n, cfg.generator.gap());
  cfg.operating_point = ms::OperatingPoint::MaxSlope;
  return cfg;
}

ms::EstimationResult run_recorded(const ms::StrategyConfig& cfg, const std::string& label) {
  ms::EstimationResult r = ms::run_protocol(cfg);
  g_ensemble.push_back({label, cfg.nu, r.delta_phi_empirical, r.probe_delta_h.value_or(0.0),
                        cfg.protocol == ms::Protocol::GhzQC});
  return r;
}

void record_sweep(const ms::ScalingReport& report) {
  for (const auto& c : report.cells) {
    if (c.failed) continue;
    g_ensemble.push_back({std::string(ms::to_string(c.strategy)) + " N=" + std::to_string(c.n), c.nu,
                          c.delta_phi, c.delta_h, c.strategy == ms::Protocol::GhzQC});
  }
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void report(int id, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  std::printf("C%d %s %s [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
  if (!o.pass) ++g_failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double g_ghz_delta_phi = 0.0;

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_recorded(fringe(ms::Protocol::RamseyCC, 10, kTrials, 101), "RamseyCC N=10");
  const double secs = seconds_since(t0);
  const bool ok = within(r.delta_phi_empirical, kCcTarget, kTargetTolerance) && secs < 10.0;
  return {ok, "RamseyCC N=10 delta_phi=" + fmt("%.5g", r.delta_phi_empirical) + " target=" +
                  fmt("%.4g", kCcTarget) + " run=" + fmt("%.2f", secs) + "s (limit 10s)"};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  ms::StrategyConfig cfg = fringe(ms::Protocol::GhzQC, 8, kTrials, 202);
  cfg.ghz_path = ms::GhzPath::Statevector;
  const auto sv = run_recorded(cfg, "GhzQC N=8 statevector");
  cfg.ghz_path = ms::GhzPath::Analytic;
  const auto an = run_recorded(cfg, "GhzQC N=8 analytic");
  const bool same_streams = ms::ghz_outcome_stream(cfg, ms::GhzPath::Statevector, 7) ==
                            ms::ghz_outcome_stream(cfg, ms::GhzPath::Analytic, 7);
  const bool same_estimates = sv.phi_estimates == an.phi_estimates;
  const double secs = seconds_since(t0);
  g_ghz_delta_phi = an.delta_phi_empirical;
  const bool ok = within(sv.delta_phi_empirical, kQcTarget, kTargetTolerance) &&
                  within(an.delta_phi_empirical, kQcTarget, kTargetTolerance) && same_streams &&
                  same_estimates && secs < 30.0;
  return {ok, "GhzQC N=8 statevector=" + fmt("%.5g", sv.delta_phi_empirical) +
                  " analytic=" + fmt("%.5g", an.delta_phi_empirical) + " target=" +
                  fmt("%.4g", kQcTarget) + " streams " + (same_streams ? "identical" : "DIFFER") +
                  ", estimates " + (same_estimates ? "identical" : "DIFFER") + " run=" +
                  fmt("%.2f", secs) + "s (limit 30s)"};
}

Outcome criterion3() {
  const auto r = run_recorded(fringe(ms::Protocol::Sequential, 8, kTrials, 202), "Sequential N=8");
  const double ratio = r.delta_phi_empirical / g_ghz_delta_phi;
  const bool ok = within(r.delta_phi_empirical, kQcTarget, kTargetTolerance) &&
                  ratio >= kSeqOverGhzLow && ratio <= kSeqOverGhzHigh;
  return {ok, "Sequential N=8 delta_phi=" + fmt("%.5g", r.delta_phi_empirical) +
                  " ratio to GhzQC=" + fmt("%.4f", ratio) + " window [0.85, 1.18]"};
}

double fitted(const ms::ScalingReport& r, ms::Protocol p) {
  for (const auto& f : r.fits)
    if (f.strategy == p) return f.fit.slope;
  return std::nan("");
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  ms::SweepConfig cfg;
  cfg.strategies = {ms::Protocol::RamseyCC, ms::Protocol::GhzQC};
  cfg.n_values = {4, 8, 16, 32, 64};
  cfg.nu = kNu;
  cfg.trials = kTrials;
  cfg.seed = 404;
  const ms::ScalingReport main = ms::run_sweep(cfg);
  record_sweep(main);

  ms::SweepConfig seq = cfg;
  seq.strategies = {ms::Protocol::Sequential};
  seq.n_values = {4, 8, 16, 32, 64, 128, 256, 512, 1024};
  seq.trials = kSequentialTrials;
  const ms::ScalingReport long_run = ms::run_sweep(seq);
  record_sweep(long_run);
  const double secs = seconds_since(t0);

  const double cc = fitted(main, ms::Protocol::RamseyCC);
  const double ghz = fitted(main, ms::Protocol::GhzQC);
  const double sq = fitted(long_run, ms::Protocol::Sequential);
  const bool ok = !main.partial && !long_run.partial &&
                  std::abs(cc + 0.5) <= kExponentTolerance &&
                  std::abs(ghz + 1.0) <= kExponentTolerance &&
                  std::abs(sq + 1.0) <= kSequentialExponentTolerance &&
                  std::abs((ghz - cc) - kSeparation) <= kSeparationTolerance && secs < 300.0;
  return {ok, "exponents RamseyCC=" + fmt("%.4f", cc) + " GhzQC=" + fmt("%.4f", ghz) +
                  " Sequential(4..1024)=" + fmt("%.4f", sq) + " separation=" +
                  fmt("%.4f", ghz - cc) + " run=" + fmt("%.1f", secs) + "s (limit 300s)"};
}

Outcome criterion5() {
  double worst = 1e300;
  std::string worst_label;
  double worst_ghz = 0.0;
  bool ok = !g_ensemble.empty();
  for (const auto& e : g_ensemble) {
    const auto u = ms::uncertainty_relation_check(e.delta_phi, e.delta_h, e.nu);
    if (!u.satisfied_with_slack) ok = false;
    if (u.ratio < worst) {
      worst = u.ratio;
      worst_label = e.label;
    }
    if (e.ghz) {
      worst_ghz = std::max(worst_ghz, u.ratio);
      if (u.ratio >= ms::kSaturationEnvelope) ok = false;
    }
  }
  return {ok, std::to_string(g_ensemble.size()) + " experiments, min delta_phi*delta_h*2sqrt(nu)=" +
                  fmt("%.4f", worst) + " (" + worst_label + ", floor 0.9), GhzQC max=" +
                  fmt("%.4f", worst_ghz) + " (limit 2)"};
}

Outcome criterion6() {
  ms::Rng rng(606);
  const ms::Generator q = ms::Generator::qubit_z();
  int passed = 0;
  double worst_fd = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto circuit = ms::random_sequential_circuit(q, 4, 2, rng);
    const double phi = 2.0 * rng.uniform() - 1.0;
    const auto spec = ms::spectrum_bound_check(circuit, phi);
    const double fd = ms::sequential_generator(circuit, phi)
                          .max_abs_diff(ms::finite_difference_generator(circuit, phi));
    worst_fd = std::max(worst_fd, fd);
    if (spec.within_bounds && fd <= kSpectrumFdTolerance) ++passed;
  }
  return {passed == 100, std::to_string(passed) + "/100 circuits within [N l_m, N l_M], worst FD deviation " +
                             fmt("%.3g", worst_fd) + " (limit 1e-4)"};
}

Outcome criterion7() {
  ms::Rng rng(707);
  const ms::Generator q = ms::Generator::qubit_z();
  constexpr std::size_t n = 6;
  const double product_cap = std::sqrt(6.0) * q.gap() / 2.0;
  const double any_cap = 3.0 * q.gap();
  double max_product = 0.0;
  double max_any = 0.0;
  for (int k = 0; k < 1000; ++k) {
    ms::StateVector psi = ms::random_state(2, rng);
    for (std::size_t s = 1; s < n; ++s) psi = ms::tensor(psi, ms::random_state(2, rng));
    max_product = std::max(max_product, ms::delta_h(psi, q, n));
    max_any = std::max(max_any, ms::delta_h(ms::random_state(64, rng), q, n));
  }
  const double extremal = ms::delta_h(ms::product_state(ms::extremal_superposition(q), n), q, n);
  const double ghz = ms::delta_h(ms::ghz_state(q, n), q, n);
  const bool ok = max_product <= product_cap + kExtremalTolerance &&
                  max_any <= any_cap + kExtremalTolerance &&
                  std::abs(extremal - product_cap) <= kExtremalTolerance &&
                  std::abs(ghz - any_cap) <= kExtremalTolerance;
  return {ok, "product max=" + fmt("%.6f", max_product) + " extremal=" + fmt("%.12f", extremal) +
                  " cap=" + fmt("%.12f", product_cap) + "; entangled max=" + fmt("%.6f", max_any) +
                  " ghz=" + fmt("%.12f", ghz) + " cap=" + fmt("%.1f", any_cap)};
}

Outcome criterion8() {
  ms::StrategyConfig cfg;
  cfg.protocol = ms::Protocol::DigitByDigit;
  cfg.digit_base = 2;
  cfg.digit_count = 6;
  cfg.nu = 400;
  cfg.phi_true = 1.0;
  cfg.trials = 100;
  cfg.seed = 808;
  cfg.digit_engine = ms::DigitEngine::Sequential;
  const auto r = ms::run_protocol(cfg);
  cfg.digit_base = 10;
  cfg.digit_count = 2;
  cfg.trials = 2;
  const auto r10 = ms::run_protocol(cfg);
  const bool ok = r.digits->successes >= 95 && r.digits->probes_per_batch == 63 &&
                  r10.digits->inclusive_sum == 111;
  return {ok, "base 2, 6 digits: " + std::to_string(r.digits->successes) +
                  "/100 within 2^-7 (need 95), probes per batch " +
                  std::to_string(r.digits->probes_per_batch) + "; base 10, 2 digits: " +
                  std::to_string(r10.digits->inclusive_sum)};
}

Outcome criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = ms::run_invariant_suite();
  const double secs = seconds_since(t0);
  std::string failed;
  for (const auto& c : results)
    if (!c.passed) failed += " " + c.name;
  const bool ok = failed.empty() && !results.empty() && secs < 60.0;
  return {ok, std::to_string(results.size()) + " invariant checks" +
                  (failed.empty() ? std::string(" green") : " failing:" + failed) + " run=" +
                  fmt("%.2f", secs) + "s (limit 60s)"};
}

}  // namespace

int main() {
  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  report(9, criterion9);
  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
