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

#include "metroscale/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>

#include "metroscale/estimation.hpp"
#include "metroscale/genspec.hpp"
#include "metroscale/harness.hpp"
#include "metroscale/protocols.hpp"
#include "metroscale/sampling.hpp"

namespace metroscale {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome verdict(bool passed, const std::string& what, double worst, double tol) {
  std::ostringstream s;
  s << what << " worst " << worst << " (tol " << tol << ")";
  return {passed, s.str()};
}

bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

std::vector<Generator> sample_generators(Rng& rng) {
  std::vector<Generator> gs{Generator::qubit_z(), Generator::qutrit()};
  for (std::size_t d = 2; d <= 5; ++d) gs.emplace_back(random_hermitian(d, rng));
  return gs;
}

Outcome check_unitarity(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (const auto& g : sample_generators(rng)) {
    for (double phi : {-3.0, -0.7, 0.0, 0.3, 1.0, 6.5, 40.0}) {
      const ComplexMatrix u = phase_unitary(g.eigen(), phi);
      const ComplexMatrix eye = ComplexMatrix::identity(g.dim());
      worst = std::max(worst, (u.adjoint() * u).max_abs_diff(eye));
    }
  }
  constexpr double tol = 1e-12;
  return verdict(worst <= tol, "|U^dagger U - I|", worst, tol);
}

Outcome check_group_law(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (const auto& g : sample_generators(rng)) {
    for (int k = 0; k < 10; ++k) {
      const double a = 4.0 * rng.uniform() - 2.0;
      const double b = 4.0 * rng.uniform() - 2.0;
      const ComplexMatrix lhs = phase_unitary(g.eigen(), a) * phase_unitary(g.eigen(), b);
      worst = std::max(worst, lhs.max_abs_diff(phase_unitary(g.eigen(), a + b)));
    }
  }
  constexpr double tol = 1e-12;
  return verdict(worst <= tol, "|U(a)U(b) - U(a+b)|", worst, tol);
}

Outcome check_normalization(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t d = 2; d <= 16; d *= 2) {
    for (int k = 0; k < 10; ++k) {
      const StateVector psi = random_state(d, rng);
      // apply() renormalizes, so test the raw product.
      const Eigen::VectorXcd out = random_unitary(d, rng).eigen() * psi.eigen();
      worst = std::max(worst, std::abs(psi.eigen().norm() - 1.0));
      worst = std::max(worst, std::abs(out.norm() - 1.0));
    }
  }
  const Generator g = Generator::qubit_z();
  PhaseImprint imprint(g, 0.37);
  const StateVector reg = imprint.parallel(ghz_state(g, 6), 6, 1);
  worst = std::max(worst, std::abs(reg.eigen().norm() - 1.0));
  constexpr double tol = 1e-12;
  return verdict(worst <= tol, "| |psi| - 1 |", worst, tol);
}

Outcome check_qfi_identity(std::uint64_t seed) {
  Rng rng(seed);
  const Generator g = Generator::qubit_z();
  const Generator q = Generator::qutrit();
  struct Case {
    StateVector psi;
    const Generator* gen;
    std::size_t probes;
  };
  std::vector<Case> cases{
      {product_state(extremal_superposition(g), 4), &g, 4},
      {ghz_state(g, 6), &g, 6},
      {ghz_state(q, 3), &q, 3},
      {random_state(32, rng), &g, 5},
      {random_state(27, rng), &q, 3},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    for (std::uint64_t nu : {1ULL, 100ULL, 10000ULL}) {
      const double lhs = 1.0 / std::sqrt(static_cast<double>(nu) * qfi_pure(c.psi, *c.gen, c.probes));
      const double rhs = bound_cramer_rao(delta_h(c.psi, *c.gen, c.probes), nu);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
  }
  constexpr double tol = 1e-12;
  return verdict(worst <= tol, "relative |1/sqrt(nu F) - 1/(2 sqrt(nu) dh)|", worst, tol);
}

Outcome check_bound_identity(std::uint64_t) {
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= 1024; n = n * 2 + 1) {
    for (std::uint64_t nu : {1ULL, 7ULL, 10000ULL}) {
      for (double gap : {0.5, 1.0, 2.0}) {
        const double qc = bound_qc(n, nu, gap);
        const double via_cc = bound_cc(n, nu, gap) / std::sqrt(static_cast<double>(n));
        worst = std::max(worst, std::abs(qc - via_cc) / qc);
        worst = std::max(worst, std::abs(bound_sequential(n, nu, gap) - qc) / qc);
      }
    }
  }
  constexpr double tol = 1e-12;
  return verdict(worst <= tol, "relative |bound_qc - bound_cc/sqrt(N)|", worst, tol);
}

Outcome check_spectrum_bound(std::uint64_t seed) {
  Rng rng(seed);
  const Generator g = Generator::qubit_z();
  double worst_fd = 0.0;
  std::size_t violations = 0;
  constexpr int circuits = 25;
  for (int k = 0; k < circuits; ++k) {
    const auto c = random_sequential_circuit(g, 4, 2, rng);
    const double phi = 2.0 * rng.uniform() - 1.0;
    if (!spectrum_bound_check(c, phi).within_bounds) ++violations;
    const ComplexMatrix h = sequential_generator(c, phi);
    worst_fd = std::max(worst_fd, h.max_abs_diff(finite_difference_generator(c, phi)));
  }
  constexpr double tol = 1e-4;
  Outcome o = verdict(violations == 0 && worst_fd <= tol, "|h - i dW W^dagger|", worst_fd, tol);
  o.detail += ", " + std::to_string(violations) + "/" + std::to_string(circuits) + " outside [N l_m, N l_M]";
  return o;
}

Outcome check_uncertainty(std::uint64_t seed) {
  double worst = std::numeric_limits<double>::infinity();
  for (Protocol p : {Protocol::RamseyCC, Protocol::GhzQC, Protocol::Sequential}) {
    StrategyConfig cfg;
    cfg.protocol = p;
    cfg.probes = 4;
    cfg.nu = 400;
    cfg.trials = 200;
    cfg.phi_true = 0.3;
    cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(p));
    const EstimationResult r = run_protocol(cfg);
    const auto u = uncertainty_relation_check(r.delta_phi_empirical, r.probe_delta_h.value(), cfg.nu);
    worst = std::min(worst, u.ratio);
  }
  constexpr double floor = 1.0 - kUncertaintySlack;
  return verdict(worst >= floor, "min dphi dh 2 sqrt(nu)", worst, floor);
}

Outcome check_fast_path(std::uint64_t seed) {
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (std::uint64_t n : {2ULL, 4ULL, 6ULL, 8ULL}) {
    for (const Generator& g : {Generator::qubit_z(), Generator::qutrit()}) {
      if (checked_power(g.dim(), static_cast<std::size_t>(n), kAutoStatevectorCap) == 0) continue;
      StrategyConfig cfg;
      cfg.protocol = Protocol::GhzQC;
      cfg.generator = g;
      cfg.probes = n;
      cfg.nu = 2000;
      cfg.phi_true = 0.21;
      const std::uint64_t s = derive_seed(seed, n);
      const auto a = ghz_outcome_stream(cfg, GhzPath::Statevector, s);
      const auto b = ghz_outcome_stream(cfg, GhzPath::Analytic, s);
      if (a != b) ++mismatches;
      worst = std::max(worst, std::abs(ghz_plus_probability(cfg, GhzPath::Statevector, 0.21) -
                                       ghz_plus_probability(cfg, GhzPath::Analytic, 0.21)));
    }
  }
  constexpr double tol = 1e-12;
  Outcome o = verdict(mismatches == 0 && worst <= tol, "|P+ statevector - P+ analytic|", worst, tol);
  o.detail += ", " + std::to_string(mismatches) + " stream mismatches";
  return o;
}

ScalingReport synthetic_report(std::uint64_t seed) {
  Rng rng(seed);
  ScalingReport r;
  r.config.strategies = {Protocol::RamseyCC, Protocol::GhzQC};
  r.config.phi_true = 0.1 + rng.uniform();
  r.config.generator.preset = "custom";
  r.config.generator.real = {-0.5, 0.1 * rng.uniform(), 0.1 * rng.uniform(), 0.5};
  r.config.generator.imag = {0.0, rng.uniform(), -rng.uniform(), 0.0};
  for (Protocol p : r.config.strategies) {
    for (std::uint64_t n : r.config.n_values) {
      ScalingCell c;
      c.strategy = p;
      c.n = n;
      c.nu = r.config.nu;
      c.phi_true = *r.config.phi_true;
      c.seed = rng.next();
      c.delta_phi = rng.uniform() * 1e-3 / 3.0;
      c.bound = 1.0 / (std::sqrt(static_cast<double>(c.nu)) * static_cast<double>(n) * 0.7);
      c.ratio = c.delta_phi / c.bound;
      c.delta_h = std::sqrt(static_cast<double>(n)) / 3.0;
      c.u_phi_uses = n * c.nu;
      r.cells.push_back(c);
    }
    r.fits.push_back({p, {-0.5 - 1e-3 * rng.uniform(), std::log(rng.uniform()), rng.uniform() / 7.0,
                          rng.uniform() * 1e-17, 5}});
  }
  r.cells[3].failed = true;
  r.cells[3].failure = "ZeroGap: \"quoted\" reason";
  r.cells[3].delta_phi = std::nan("");
  r.cells[3].ratio = std::nan("");
  r.partial = true;
  return r;
}

Outcome check_round_trip(std::uint64_t seed) {
  const ScalingReport r = synthetic_report(seed);
  const std::string js = to_json(r);
  const ScalingReport back = report_from_json(js);
  std::size_t bad = 0;
  if (back.cells.size() != r.cells.size() || back.fits.size() != r.fits.size()) ++bad;
  for (std::size_t i = 0; bad == 0 && i < r.cells.size(); ++i) {
    const auto& a = r.cells[i];
    const auto& b = back.cells[i];
    bad += !same_bits(a.delta_phi, b.delta_phi) + !same_bits(a.bound, b.bound) +
           !same_bits(a.ratio, b.ratio) + !same_bits(a.delta_h, b.delta_h) +
           !same_bits(a.phi_true, b.phi_true) + (a.seed != b.seed) + (a.failure != b.failure);
  }
  for (std::size_t i = 0; bad == 0 && i < r.fits.size(); ++i) {
    const auto& a = r.fits[i].fit;
    const auto& b = back.fits[i].fit;
    bad += !same_bits(a.slope, b.slope) + !same_bits(a.intercept, b.intercept) +
           !same_bits(a.standard_error, b.standard_error) + !same_bits(a.residual, b.residual);
  }
  if (to_json(back) != js) ++bad;

  const std::string csv = to_csv(r);
  const auto rows = parse_csv(csv);
  if (rows.size() != r.cells.size()) ++bad;
  for (std::size_t i = 0; bad == 0 && i < rows.size(); ++i) {
    bad += !same_bits(rows[i].delta_phi, r.cells[i].delta_phi) +
           !same_bits(rows[i].bound, r.cells[i].bound) + !same_bits(rows[i].ratio, r.cells[i].ratio);
  }
  if (csv.find('\r') != std::string::npos) ++bad;
  return {bad == 0, std::to_string(bad) + " mismatched fields over " +
                        std::to_string(r.cells.size()) + " cells (csv and json)"};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  const std::vector<std::pair<const char*, std::function<Outcome(std::uint64_t)>>> checks{
      {"unitarity", check_unitarity},
      {"group-law", check_group_law},
      {"normalization", check_normalization},
      {"qfi-identity", check_qfi_identity},
      {"bound-identity", check_bound_identity},
      {"spectrum-bound", check_spectrum_bound},
      {"uncertainty-relation", check_uncertainty},
      {"ghz-fast-path", check_fast_path},
      {"csv-json-round-trip", check_round_trip},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckResult r;
    r.name = checks[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = checks[i].second(derive_seed(seed, i));
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace metroscale
