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

#include "metroscale/protocols.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "metroscale/error.hpp"
#include "metroscale/parallel.hpp"
#include "metroscale/random.hpp"

namespace metroscale {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinFringeSlope = 1e-6;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

std::size_t workers_for(const StrategyConfig& cfg) {
  return cfg.workers == 0 ? default_worker_count() : cfg.workers;
}

GhzPath resolve_path(const StrategyConfig& cfg, GhzPath requested) {
  const std::size_t d = cfg.generator.dim();
  const std::size_t n = static_cast<std::size_t>(cfg.probes);
  switch (requested) {
    case GhzPath::Analytic: return GhzPath::Analytic;
    case GhzPath::Statevector:
      if (checked_power(d, n) == 0) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "GHZ statevector of " + std::to_string(n) + " probes exceeds the register cap");
      }
      return GhzPath::Statevector;
    case GhzPath::Auto:
      return checked_power(d, n, kAutoStatevectorCap) != 0 ? GhzPath::Statevector
                                                           : GhzPath::Analytic;
  }
  return GhzPath::Analytic;
}

/// Sampling table: cumulative probabilities and the signal value (+1, -1 or
/// 0) attached to each slot.
struct SignalTable {
  std::vector<double> cdf;
  std::vector<int> value;

  double plus_probability() const {
    double p = 0.0;
    double prev = 0.0;
    for (std::size_t k = 0; k < cdf.size(); ++k) {
      if (value[k] == 1) p += cdf[k] - prev;
      prev = cdf[k];
    }
    return p;
  }

  int draw(double u) const {
    if (cdf.size() == 2) return u < cdf[0] ? value[0] : value[1];
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return value[static_cast<std::size_t>(it - cdf.begin())];
  }
};

SignalTable binary_table(double plus) {
  return SignalTable{{plus, 1.0}, {1, -1}};
}

int signal_value(double eigenvalue) {
  if (eigenvalue > 0.5) return 1;
  if (eigenvalue < -0.5) return -1;
  return 0;
}

/// Everything about a fringe run that does not depend on the trial.
struct FringeContext {
  const StrategyConfig* cfg = nullptr;
  FringeSetting setting;
  GhzPath path = GhzPath::Analytic;
  StateVector probe;        // single-probe input
  EigenSystem readout;      // eigenbasis of X on one probe
  ComplexMatrix reference;  // readout offset on one probe
  // GhzQC only
  StateVector ghz_register;
  Generator restricted = Generator::qubit_z();
  StateVector restricted_probe;
  EigenSystem restricted_readout;
  ComplexMatrix restricted_reference;
};

FringeContext make_context(const StrategyConfig& cfg, const FringeSetting& setting, GhzPath path) {
  FringeContext ctx;
  ctx.cfg = &cfg;
  ctx.setting = setting;
  const Generator& g = cfg.generator;
  const double gap = g.gap();
  ctx.probe = extremal_superposition(g);
  ctx.readout = eigensystem(g.swap_observable());
  ctx.reference = phase_unitary(g.eigen(), setting.offset / gap);
  if (cfg.protocol == Protocol::GhzQC) {
    ctx.path = resolve_path(cfg, path);
    ctx.restricted = g.restricted();
    ctx.restricted_probe = extremal_superposition(ctx.restricted);
    ctx.restricted_readout = eigensystem(ctx.restricted.swap_observable());
    ctx.restricted_reference = phase_unitary(ctx.restricted.eigen(), setting.offset / gap);
    if (ctx.path == GhzPath::Statevector) {
      ctx.ghz_register = ghz_state(g, static_cast<std::size_t>(cfg.probes));
    }
  }
  return ctx;
}

double plus_probability_of(const StateVector& psi, const EigenSystem& readout) {
  const auto p = outcome_probabilities(psi, readout);
  double plus = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (signal_value(readout.eigenvalues[k]) == 1) plus += p[k];
  return plus;
}

/// Builds the outcome table for one experiment, routing every use of U_phi
/// through `imprint`.
SignalTable signal_table(const FringeContext& ctx, PhaseImprint& imprint, PhaseImprint& reduced) {
  const StrategyConfig& cfg = *ctx.cfg;
  const auto n = cfg.probes;
  switch (cfg.protocol) {
    case Protocol::RamseyCC: {
      const StateVector out = apply(ctx.reference, imprint.product(ctx.probe, n, cfg.nu));
      return binary_table(plus_probability_of(out, ctx.readout));
    }
    case Protocol::Sequential: {
      const StateVector out = apply(ctx.reference, imprint.sequential(ctx.probe, n, cfg.nu));
      return binary_table(plus_probability_of(out, ctx.readout));
    }
    case Protocol::GhzQC: {
      if (ctx.path == GhzPath::Analytic) {
        // On span{|m..m>, |M..M>} U_phi^{(x)N} acts as the restricted U_phi
        // applied N times.
        const StateVector out =
            apply(ctx.restricted_reference, reduced.sequential(ctx.restricted_probe, n, cfg.nu));
        return binary_table(plus_probability_of(out, ctx.restricted_readout));
      }
      const auto sites = static_cast<std::size_t>(n);
      StateVector reg = imprint.parallel(ctx.ghz_register, sites, cfg.nu);
      reg = StateVector(apply_local(ctx.reference, 0, sites, reg.eigen()), 1e-9);
      const Eigen::VectorXcd amps = to_local_basis(reg, ctx.readout, sites);

      // Order outcomes by the product of local eigenvalues: +1 block, then
      // -1, then 0, so one uniform resolves the product the same way the
      // analytic path does.
      const std::size_t d = ctx.readout.dim();
      std::vector<int> product(static_cast<std::size_t>(amps.size()));
      for (std::size_t idx = 0; idx < product.size(); ++idx) {
        int value = 1;
        std::size_t rest = idx;
        for (std::size_t s = 0; s < sites; ++s) {
          value *= signal_value(ctx.readout.eigenvalues[rest % d]);
          rest /= d;
        }
        product[idx] = value;
      }
      SignalTable table;
      table.cdf.reserve(product.size());
      table.value.reserve(product.size());
      double acc = 0.0;
      for (int cls : {1, -1, 0}) {
        for (std::size_t idx = 0; idx < product.size(); ++idx) {
          if (product[idx] != cls) continue;
          acc += std::norm(amps(static_cast<Eigen::Index>(idx)));
          table.cdf.push_back(acc);
          table.value.push_back(cls);
        }
      }
      table.cdf.back() = 1.0;
      return table;
    }
    case Protocol::DigitByDigit: break;
  }
  throw Error(ErrorCode::InvalidConfig, "not a fringe protocol");
}

std::uint64_t shots_per_trial(const StrategyConfig& cfg) {
  return cfg.protocol == Protocol::RamseyCC ? cfg.nu * cfg.probes : cfg.nu;
}

TrialOutcome fringe_trial(const FringeContext& ctx, double phi_actual, std::uint64_t seed) {
  const StrategyConfig& cfg = *ctx.cfg;
  PhaseImprint imprint(cfg.generator, phi_actual);
  PhaseImprint reduced(ctx.restricted, phi_actual);
  const SignalTable table = signal_table(ctx, imprint, reduced);

  TrialOutcome out;
  Rng rng(seed);
  const std::uint64_t shots = shots_per_trial(cfg);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const int v = table.draw(rng.uniform());
    out.plus_count += v == 1;
    out.minus_count += v == -1;
  }
  out.u_phi_uses = imprint.uses() + reduced.uses();

  const double n = static_cast<double>(shots);
  // Ramsey readout records "unchanged" vs not, so its signal is 2 p - 1;
  // GHZ records the +/-1 product directly.
  out.signal_mean = cfg.protocol == Protocol::GhzQC
                        ? (static_cast<double>(out.plus_count) - static_cast<double>(out.minus_count)) / n
                        : 2.0 * static_cast<double>(out.plus_count) / n - 1.0;
  out.clipped = out.signal_mean < -1.0 || out.signal_mean > 1.0 ||
                (std::abs(out.signal_mean) == 1.0);
  out.phi_estimate = ctx.setting.invert(out.signal_mean);
  return out;
}

std::vector<TrialOutcome> fringe_trials(const FringeContext& ctx, double phi_actual,
                                        std::uint64_t seed) {
  const StrategyConfig& cfg = *ctx.cfg;
  std::vector<TrialOutcome> outcomes(cfg.trials);
  parallel_for(outcomes.size(), workers_for(cfg), [&](std::size_t t) {
    outcomes[t] = fringe_trial(ctx, phi_actual, derive_seed(seed, t));
  });
  return outcomes;
}

/// Exact mean of the pooled estimator at phi: the expectation of
/// invert(signal) over the binomial distribution of the +1 count. Terms
/// beyond 12 standard deviations are dropped.
double expected_estimate(const FringeContext& ctx, double phi) {
  const StrategyConfig& cfg = *ctx.cfg;
  PhaseImprint imprint(cfg.generator, phi);
  PhaseImprint reduced(ctx.restricted, phi);
  const SignalTable table = signal_table(ctx, imprint, reduced);
  double plus = 0.0;
  double zero = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < table.cdf.size(); ++k) {
    if (table.value[k] == 1) plus += table.cdf[k] - prev;
    if (table.value[k] == 0) zero += table.cdf[k] - prev;
    prev = table.cdf[k];
  }
  if (zero > 1e-12) {
    throw Error(ErrorCode::NumericalFailure, "readout leaves the +/-1 subspace; no binomial mean");
  }
  plus = std::clamp(plus, 0.0, 1.0);

  const std::uint64_t n = shots_per_trial(cfg);
  const double nd = static_cast<double>(n);
  const double sigma = std::sqrt(nd * plus * (1.0 - plus));
  const double centre = nd * plus;
  const auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(centre - 12.0 * sigma - 2.0)));
  const auto hi = static_cast<std::uint64_t>(std::min(nd, std::ceil(centre + 12.0 * sigma + 2.0)));
  const double log_norm = std::lgamma(nd + 1.0);
  double weight_sum = 0.0;
  double acc = 0.0;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    const double kd = static_cast<double>(k);
    double log_w = log_norm - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
    if (k > 0) log_w += kd * std::log(plus);
    if (k < n) log_w += (nd - kd) * std::log1p(-plus);
    const double w = std::exp(log_w);
    weight_sum += w;
    acc += w * ctx.setting.invert(2.0 * kd / nd - 1.0);
  }
  return acc / weight_sum;
}

EstimationResult run_fringe(const StrategyConfig& cfg, Protocol expected) {
  if (cfg.protocol != expected) {
    throw Error(ErrorCode::InvalidConfig, "config protocol is " + std::string(to_string(cfg.protocol)) +
                                              ", expected " + std::string(to_string(expected)));
  }
  cfg.validate();
  const FringeSetting setting = fringe_setting(cfg);
  const FringeContext ctx = make_context(cfg, setting, cfg.ghz_path);

  const auto outcomes = fringe_trials(ctx, cfg.phi_true, cfg.seed);
  EstimationResult r;
  r.protocol_echo = cfg;
  r.phi_estimates.reserve(outcomes.size());
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    r.phi_estimates.push_back(outcomes[t].phi_estimate);
    if (outcomes[t].clipped) r.clipped_trials.push_back(t);
    if (outcomes[t].u_phi_uses != outcomes.front().u_phi_uses) {
      throw Error(ErrorCode::NumericalFailure, "trials used U_phi a different number of times");
    }
    r.total_u_phi_applications += outcomes[t].u_phi_uses;
  }
  r.u_phi_applications = outcomes.front().u_phi_uses;
  r.mean_estimate = mean(r.phi_estimates);

  // The mean estimate is evaluated exactly rather than by resampling, so
  // both sides of the difference are noise-free and the slope is accurate
  // far below delta_phi / phi_true.
  const MeanRunner runner = [&](double phi, std::uint64_t, std::uint64_t) {
    return expected_estimate(ctx, phi);
  };
  r.slope = slope_of_mean(runner, cfg.phi_true,
                          default_slope_step(setting.multiplier, setting.gap), cfg.nu, cfg.seed);
  r.delta_phi_empirical = delta_phi(r.phi_estimates, cfg.phi_true, r.slope);

  const double gap = cfg.generator.gap();
  switch (cfg.protocol) {
    case Protocol::RamseyCC:
      r.theoretical_bound = bound_cc(cfg.probes, cfg.nu, gap);
      r.bound_kind = BoundKind::CC_CQ;
      break;
    case Protocol::GhzQC:
      r.theoretical_bound = bound_qc(cfg.probes, cfg.nu, gap);
      r.bound_kind = BoundKind::QC_QQ;
      break;
    default:
      r.theoretical_bound = bound_sequential(cfg.probes, cfg.nu, gap);
      r.bound_kind = BoundKind::Sequential;
      break;
  }
  r.probe_delta_h = probe_delta_h(cfg.protocol, cfg.generator, cfg.probes);

  PhaseImprint imprint(cfg.generator, cfg.phi_true);
  PhaseImprint reduced(ctx.restricted, cfg.phi_true);
  r.plus_probability = signal_table(ctx, imprint, reduced).plus_probability();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::RamseyCC: return "RamseyCC";
    case Protocol::GhzQC: return "GhzQC";
    case Protocol::Sequential: return "Sequential";
    case Protocol::DigitByDigit: return "DigitByDigit";
  }
  return "Unknown";
}

std::string_view to_string(OperatingPoint p) {
  return p == OperatingPoint::AtTrueValue ? "AtTrueValue" : "MaxSlope";
}

std::string_view to_string(GhzPath p) {
  switch (p) {
    case GhzPath::Auto: return "Auto";
    case GhzPath::Statevector: return "Statevector";
    case GhzPath::Analytic: return "Analytic";
  }
  return "Unknown";
}

std::string_view to_string(DigitEngine e) {
  return e == DigitEngine::Sequential ? "Sequential" : "Ghz";
}

Protocol parse_protocol(std::string_view name) {
  const std::string s = lower(name);
  if (s == "ramseycc" || s == "ramsey" || s == "cc") return Protocol::RamseyCC;
  if (s == "ghzqc" || s == "ghz" || s == "qc") return Protocol::GhzQC;
  if (s == "sequential" || s == "seq") return Protocol::Sequential;
  if (s == "digitbydigit" || s == "digits" || s == "digit-by-digit") return Protocol::DigitByDigit;
  throw Error(ErrorCode::InvalidConfig, "unknown protocol '" + std::string(name) + "'");
}

OperatingPoint parse_operating_point(std::string_view name) {
  const std::string s = lower(name);
  if (s == "attruevalue" || s == "at-true-value" || s == "true") return OperatingPoint::AtTrueValue;
  if (s == "maxslope" || s == "max-slope" || s == "quadrature") return OperatingPoint::MaxSlope;
  throw Error(ErrorCode::InvalidConfig, "unknown operating point '" + std::string(name) + "'");
}

GhzPath parse_ghz_path(std::string_view name) {
  const std::string s = lower(name);
  if (s == "auto") return GhzPath::Auto;
  if (s == "statevector") return GhzPath::Statevector;
  if (s == "analytic") return GhzPath::Analytic;
  throw Error(ErrorCode::InvalidConfig, "unknown GHZ path '" + std::string(name) + "'");
}

DigitEngine parse_digit_engine(std::string_view name) {
  const std::string s = lower(name);
  if (s == "sequential" || s == "seq") return DigitEngine::Sequential;
  if (s == "ghz") return DigitEngine::Ghz;
  throw Error(ErrorCode::InvalidConfig, "unknown digit engine '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Config

void StrategyConfig::validate() const {
  if (probes == 0) throw Error(ErrorCode::InvalidConfig, "N must be >= 1");
  if (nu == 0) throw Error(ErrorCode::InvalidConfig, "nu must be >= 1");
  if (!std::isfinite(phi_true)) throw Error(ErrorCode::InvalidConfig, "phi must be finite");
  if (protocol == Protocol::DigitByDigit) {
    if (trials == 0) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
    if (digit_base < 2) throw Error(ErrorCode::InvalidConfig, "digit base must be >= 2");
    if (digit_count == 0) throw Error(ErrorCode::InvalidConfig, "digit count must be >= 1");
    if (checked_power(digit_base, digit_count - 1, kMaxDigitLevelPasses) == 0) {
      throw Error(ErrorCode::DimensionTooLarge, "finest digit level exceeds " +
                                                    std::to_string(kMaxDigitLevelPasses) +
                                                    " uses of U_phi per repetition");
    }
  } else if (trials < 2) {
    throw Error(ErrorCode::InvalidConfig, "fringe protocols need trials >= 2 to measure delta_phi");
  }
  generator.require_gap();
}

// ---------------------------------------------------------------------------
// PhaseImprint

PhaseImprint::PhaseImprint(const Generator& g, double phi) : unitary_(phase_unitary(g.eigen(), phi)) {}

StateVector PhaseImprint::product(const StateVector& probe, std::uint64_t probes,
                                  std::uint64_t repetitions) {
  uses_ += probes * repetitions;
  return apply(unitary_, probe);
}

StateVector PhaseImprint::parallel(const StateVector& reg, std::size_t probes,
                                   std::uint64_t repetitions) {
  Eigen::VectorXcd v = reg.eigen();
  for (std::size_t site = 0; site < probes; ++site) v = apply_local(unitary_, site, probes, v);
  uses_ += probes * repetitions;
  return StateVector(v, 1e-9);
}

StateVector PhaseImprint::sequential(const StateVector& probe, std::uint64_t passes,
                                     std::uint64_t repetitions) {
  if (probe.dim() != unitary_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "probe does not match the generator dimension");
  }
  Eigen::VectorXcd v = probe.eigen();
  for (std::uint64_t k = 0; k < passes; ++k) v = unitary_.eigen() * v;
  uses_ += passes * repetitions;
  v /= v.norm();
  return StateVector(v);
}

// ---------------------------------------------------------------------------
// Fringe inversion

double FringeSetting::total_phase(double phi) const {
  return static_cast<double>(multiplier) * gap * phi + offset;
}

double FringeSetting::invert(double signal) const {
  const double s = std::clamp(signal, -1.0, 1.0);
  double r = std::fmod(reference_phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  const double wraps = reference_phase - r;
  const double arc = std::acos(s);
  const double phase = r <= std::numbers::pi ? wraps + arc : wraps + kTwoPi - arc;
  return (phase - offset) / (static_cast<double>(multiplier) * gap);
}

double quadrature_phase(Protocol protocol, std::uint64_t probes, double gap) {
  if (!(gap > 0.0)) throw Error(ErrorCode::ZeroGap, "no quadrature point without a spectral gap");
  const double m = protocol == Protocol::RamseyCC ? 1.0 : static_cast<double>(probes);
  return 0.5 * std::numbers::pi / (m * gap);
}

FringeSetting fringe_setting(const StrategyConfig& cfg) {
  cfg.generator.require_gap();
  FringeSetting s;
  s.multiplier = cfg.protocol == Protocol::RamseyCC ? 1 : cfg.probes;
  s.gap = cfg.generator.gap();
  const double bare = static_cast<double>(s.multiplier) * s.gap * cfg.phi_true;
  s.offset = cfg.operating_point == OperatingPoint::MaxSlope
                 ? std::remainder(std::numbers::pi / 2.0 - bare, kTwoPi)
                 : 0.0;
  s.reference_phase = bare + s.offset;
  s.slope = -0.5 * static_cast<double>(s.multiplier) * s.gap * std::sin(s.reference_phase);
  if (std::abs(s.slope) < kMinFringeSlope) {
    throw Error(ErrorCode::DegenerateOperatingPoint,
                "fringe slope " + std::to_string(s.slope) +
                    " at the operating point; use the MaxSlope policy or move phi");
  }
  return s;
}

TrialOutcome run_fringe_trial(const StrategyConfig& cfg, const FringeSetting& setting,
                              double phi_actual, std::uint64_t seed) {
  const FringeContext ctx = make_context(cfg, setting, cfg.ghz_path);
  return fringe_trial(ctx, phi_actual, seed);
}

double ghz_plus_probability(const StrategyConfig& cfg, GhzPath path, double phi) {
  const FringeContext ctx = make_context(cfg, fringe_setting(cfg), path);
  PhaseImprint imprint(cfg.generator, phi);
  PhaseImprint reduced(ctx.restricted, phi);
  return signal_table(ctx, imprint, reduced).plus_probability();
}

std::vector<int> ghz_outcome_stream(const StrategyConfig& cfg, GhzPath path, std::uint64_t seed) {
  if (cfg.protocol != Protocol::GhzQC) throw Error(ErrorCode::InvalidConfig, "GhzQC config required");
  const FringeContext ctx = make_context(cfg, fringe_setting(cfg), path);
  PhaseImprint imprint(cfg.generator, cfg.phi_true);
  PhaseImprint reduced(ctx.restricted, cfg.phi_true);
  const SignalTable table = signal_table(ctx, imprint, reduced);
  std::vector<int> stream(cfg.nu);
  Rng rng(seed);
  for (auto& v : stream) v = table.draw(rng.uniform());
  return stream;
}

double probe_delta_h(Protocol protocol, const Generator& g, std::uint64_t probes) {
  switch (protocol) {
    case Protocol::RamseyCC:
      // Separable input: variances of the independent probes add.
      return std::sqrt(static_cast<double>(probes)) * delta_h(extremal_superposition(g), g, 1);
    case Protocol::GhzQC: {
      const auto n = static_cast<std::size_t>(probes);
      if (checked_power(g.dim(), n, kAutoStatevectorCap) != 0) return delta_h(ghz_state(g, n), g, n);
      // h restricted to span{|m..m>, |M..M>} is diag(N l_m, N l_M).
      const double nd = static_cast<double>(probes);
      const std::array<double, 2> collective{nd * g.lambda_min(), nd * g.lambda_max()};
      const Generator h(ComplexMatrix::diagonal(collective));
      return delta_h(extremal_superposition(h), h, 1);
    }
    case Protocol::Sequential: {
      // Sum of the conjugated terms directly: the finite-difference cross-check
      // inside sequential_generator loses accuracy as N^3 on long circuits.
      const auto circuit = SequentialCircuit::plain(g, static_cast<std::size_t>(probes));
      ComplexMatrix sum(g.dim());
      for (const auto& term : sequential_generator_terms(circuit, 0.0)) sum = sum + term;
      const Generator h(sum, Tolerances{.hermitian = 1e-8});
      return delta_h(extremal_superposition(g), h, 1);
    }
    case Protocol::DigitByDigit: break;
  }
  throw Error(ErrorCode::InvalidConfig, "delta h is not defined for the digit-by-digit schedule");
}

EstimationResult run_ramsey_cc(const StrategyConfig& cfg) { return run_fringe(cfg, Protocol::RamseyCC); }
EstimationResult run_ghz_qc(const StrategyConfig& cfg) { return run_fringe(cfg, Protocol::GhzQC); }
EstimationResult run_sequential(const StrategyConfig& cfg) { return run_fringe(cfg, Protocol::Sequential); }

EstimationResult run_protocol(const StrategyConfig& cfg) {
  switch (cfg.protocol) {
    case Protocol::RamseyCC: return run_ramsey_cc(cfg);
    case Protocol::GhzQC: return run_ghz_qc(cfg);
    case Protocol::Sequential: return run_sequential(cfg);
    case Protocol::DigitByDigit: return run_digit_by_digit(cfg);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown protocol");
}

}  // namespace metroscale
