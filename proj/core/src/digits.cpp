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

// Digit-by-digit recovery of the full phase. Level j applies U_phi b^j times
// per repetition, which exposes frac(b^j x) with x = gap phi / (2 pi), so the
// phase observed at level j starts with digit j of x.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "metroscale/error.hpp"
#include "metroscale/parallel.hpp"
#include "metroscale/protocols.hpp"
#include "metroscale/random.hpp"

namespace metroscale {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kPhaseGrid = 4096;
constexpr double kAmbiguityLog10 = 1.0;  // likelihood ratio 10

double wrap_unit(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap_unit(a) - wrap_unit(b));
  return std::min(d, 1.0 - d);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

double binomial_ll(std::uint64_t plus, std::uint64_t reps, double p) {
  constexpr double eps = 1e-12;
  p = std::clamp(p, eps, 1.0 - eps);
  return static_cast<double>(plus) * std::log(p) +
         static_cast<double>(reps - plus) * std::log1p(-p);
}

struct Ranked {
  std::uint64_t best = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  double second_ll = -std::numeric_limits<double>::infinity();

  void offer(std::uint64_t candidate, double ll) {
    if (ll > best_ll) {
      second_ll = best_ll;
      best_ll = ll;
      best = candidate;
    } else if (ll > second_ll) {
      second_ll = ll;
    }
  }

  double log10_ratio() const {
    if (!std::isfinite(second_ll)) return std::numeric_limits<double>::max();
    return (best_ll - second_ll) / std::numbers::ln10;
  }
};

/// Continuous maximum-likelihood phase (in turns) of the finest level,
/// plus the per-digit profile likelihood.
struct FinestFit {
  double t = 0.0;
  Ranked digits;
};

FinestFit fit_finest(const LevelCounts& counts, std::uint64_t base) {
  std::vector<double> profile(base, -std::numeric_limits<double>::infinity());
  auto digit_of = [base](double t) {
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(t * static_cast<double>(base)), base - 1);
  };

  double best_t = 0.0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kPhaseGrid; ++k) {
    const double t = static_cast<double>(k) / kPhaseGrid;
    const double ll = level_log_likelihood(counts, t);
    auto& slot = profile[digit_of(t)];
    slot = std::max(slot, ll);
    if (ll > best_ll) {
      best_ll = ll;
      best_t = t;
    }
  }

  // Golden-section refinement within one grid cell either side.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_t - 1.0 / kPhaseGrid;
  double hi = best_t + 1.0 / kPhaseGrid;
  auto f = [&](double t) { return level_log_likelihood(counts, wrap_unit(t)); };
  double a = hi - invphi * (hi - lo);
  double b = lo + invphi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  for (int it = 0; it < 80; ++it) {
    if (fa > fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - invphi * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + invphi * (hi - lo);
      fb = f(b);
    }
  }
  const double refined = wrap_unit(0.5 * (lo + hi));
  const double refined_ll = level_log_likelihood(counts, refined);

  FinestFit fit;
  fit.t = refined_ll >= best_ll ? refined : best_t;
  auto& slot = profile[digit_of(fit.t)];
  slot = std::max(slot, std::max(refined_ll, best_ll));
  for (std::uint64_t c = 0; c < base; ++c) fit.digits.offer(c, profile[c]);
  return fit;
}

}  // namespace

double level_log_likelihood(const LevelCounts& counts, double t) {
  const double phase = kTwoPi * t;
  const double p_cos = 0.5 * (1.0 + std::cos(phase));
  const double p_sin = 0.5 * (1.0 - std::sin(phase));
  return binomial_ll(counts.cos_plus, counts.cos_reps, p_cos) +
         binomial_ll(counts.sin_plus, counts.sin_reps, p_sin);
}

std::vector<std::uint64_t> rounded_digits(double fraction, std::uint64_t base,
                                          std::uint64_t count) {
  const std::uint64_t scale = ipow(base, count);
  const double scaled = wrap_unit(fraction) * static_cast<double>(scale);
  std::uint64_t value = static_cast<std::uint64_t>(std::llround(scaled)) % scale;
  std::vector<std::uint64_t> digits(count);
  for (std::uint64_t k = count; k-- > 0;) {
    digits[k] = value % base;
    value /= base;
  }
  return digits;
}

DigitTrial decode_digits(std::span<const LevelCounts> levels, std::uint64_t base,
                         double true_fraction) {
  if (levels.empty()) throw Error(ErrorCode::InvalidConfig, "no digit levels to decode");
  if (base < 2) throw Error(ErrorCode::InvalidConfig, "digit base must be >= 2");
  const std::size_t count = levels.size();

  DigitTrial trial;
  trial.levels.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    trial.levels[j].level = j;
    trial.levels[j].probes = levels[j].passes;
  }

  const FinestFit finest = fit_finest(levels.back(), base);
  trial.levels.back().ml_candidate = finest.digits.best;
  trial.levels.back().log10_likelihood_ratio = finest.digits.log10_ratio();
  double t = finest.t;

  for (std::size_t j = count - 1; j-- > 0;) {
    Ranked ranked;
    for (std::uint64_t c = 0; c < base; ++c) {
      ranked.offer(c, level_log_likelihood(levels[j], (static_cast<double>(c) + t) /
                                                          static_cast<double>(base)));
    }
    trial.levels[j].ml_candidate = ranked.best;
    trial.levels[j].log10_likelihood_ratio = ranked.log10_ratio();
    if (ranked.log10_ratio() < kAmbiguityLog10) {
      throw Error(ErrorCode::DigitAmbiguous,
                  "digit " + std::to_string(j) + ": likelihood ratio " +
                      std::to_string(std::pow(10.0, ranked.log10_ratio())) + " < 10");
    }
    t = (static_cast<double>(ranked.best) + t) / static_cast<double>(base);
  }

  trial.continuous_fraction = t;
  trial.digits = rounded_digits(t, base, count);
  const auto truth = rounded_digits(true_fraction, base, count);
  double assembled = 0.0;
  double weight = 1.0;
  for (std::size_t j = 0; j < count; ++j) {
    weight /= static_cast<double>(base);
    assembled += static_cast<double>(trial.digits[j]) * weight;
    trial.levels[j].digit = trial.digits[j];
    trial.levels[j].true_digit = truth[j];
    trial.levels[j].success = trial.digits[j] == truth[j];
  }
  trial.fraction_estimate = assembled;
  trial.error = circular_distance(assembled, true_fraction);
  return trial;
}

EstimationResult run_digit_by_digit(const StrategyConfig& cfg) {
  if (cfg.protocol != Protocol::DigitByDigit) {
    throw Error(ErrorCode::InvalidConfig, "config protocol is " + std::string(to_string(cfg.protocol)) +
                                              ", expected DigitByDigit");
  }
  cfg.validate();
  const Generator& g = cfg.generator;
  const double gap = g.gap();
  const std::uint64_t base = cfg.digit_base;
  const std::uint64_t count = cfg.digit_count;
  const double period = kTwoPi / gap;
  const double true_fraction = wrap_unit(cfg.phi_true / period);

  DigitReport report;
  report.base = base;
  report.digit_count = count;
  report.true_fraction = true_fraction;
  for (std::uint64_t j = 0; j < count; ++j) {
    report.probes_per_level.push_back(ipow(base, j));
    report.probes_per_batch += ipow(base, j);
  }
  report.inclusive_sum = (ipow(base, count + 1) - 1) / (base - 1);

  const bool ghz = cfg.digit_engine == DigitEngine::Ghz;
  const Generator engine_generator = ghz ? g.restricted() : g;
  const StateVector probe = extremal_superposition(engine_generator);
  const EigenSystem readout = eigensystem(engine_generator.swap_observable());
  const ComplexMatrix cos_reference = ComplexMatrix::identity(engine_generator.dim());
  const ComplexMatrix sin_reference =
      phase_unitary(engine_generator.eigen(), 0.5 * std::numbers::pi / gap);

  auto plus_probability = [&](const StateVector& psi) {
    const auto p = outcome_probabilities(psi, readout);
    return p.back();  // X = +1 is the largest eigenvalue
  };

  std::vector<DigitTrial> trials(cfg.trials);
  std::vector<std::uint64_t> uses(cfg.trials, 0);
  parallel_for(trials.size(), cfg.workers == 0 ? default_worker_count() : cfg.workers,
               [&](std::size_t t) {
                 Rng rng(derive_seed(cfg.seed, t));
                 // On the GHZ engine the b^j-probe register is simulated on
                 // span{|m..m>, |M..M>}, where U_phi^{(x)b^j} acts as the
                 // restricted U_phi applied b^j times.
                 PhaseImprint imprint(engine_generator, cfg.phi_true);
                 std::vector<LevelCounts> levels(count);
                 for (std::uint64_t j = 0; j < count; ++j) {
                   LevelCounts& lc = levels[j];
                   lc.passes = ipow(base, j);
                   const StateVector evolved = imprint.sequential(probe, lc.passes, cfg.nu);
                   const double p_cos = plus_probability(apply(cos_reference, evolved));
                   const double p_sin = plus_probability(apply(sin_reference, evolved));
                   for (std::uint64_t r = 0; r < cfg.nu; ++r) {
                     const double u = rng.uniform();
                     if (r % 2 == 0) {
                       ++lc.cos_reps;
                       lc.cos_plus += u < p_cos;
                     } else {
                       ++lc.sin_reps;
                       lc.sin_plus += u < p_sin;
                     }
                   }
                 }
                 uses[t] = imprint.uses();
                 try {
                   trials[t] = decode_digits(levels, base, true_fraction);
                 } catch (const Error& e) {
                   if (e.code() != ErrorCode::DigitAmbiguous) throw;
                   trials[t].ambiguous = true;
                   trials[t].failure = e.what();
                 }
               });

  if (cfg.trials == 1 && trials.front().ambiguous) {
    throw Error(ErrorCode::DigitAmbiguous, trials.front().failure);
  }

  EstimationResult r;
  r.protocol_echo = cfg;
  r.u_phi_applications = uses.front();
  const double half_ulp = 0.5 / static_cast<double>(ipow(base, count));
  for (std::size_t t = 0; t < trials.size(); ++t) {
    r.total_u_phi_applications += uses[t];
    if (trials[t].ambiguous) continue;
    if (trials[t].error <= half_ulp * (1.0 + 1e-12)) ++report.successes;
    // Unwrap to the period copy nearest phi_true.
    double estimate = trials[t].fraction_estimate * period;
    estimate += period * std::round((cfg.phi_true - estimate) / period);
    r.phi_estimates.push_back(estimate);
  }
  report.trials = std::move(trials);

  r.slope = 1.0;
  if (!r.phi_estimates.empty()) r.mean_estimate = mean(r.phi_estimates);
  if (r.phi_estimates.size() >= 2) {
    r.delta_phi_empirical = delta_phi(r.phi_estimates, cfg.phi_true, r.slope);
  } else if (r.phi_estimates.size() == 1) {
    r.delta_phi_empirical = std::abs(r.phi_estimates.front() - cfg.phi_true);
  }
  r.theoretical_bound = bound_sequential(report.probes_per_batch, cfg.nu, gap);
  r.bound_kind = ghz ? BoundKind::QC_QQ : BoundKind::Sequential;
  r.plus_probability = 0.5 * (1.0 + std::cos(gap * cfg.phi_true));
  r.digits = std::move(report);
  return r;
}

}  // namespace metroscale
