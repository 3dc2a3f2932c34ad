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
 * Runnable phase-estimation experiments.
 *
 * A run consists of `trials` independent experiments. Each experiment uses
 * U_phi N times per repetition for nu repetitions and produces one pooled
 * estimate of phi; the spread of those estimates across trials is the
 * empirical delta_phi. Trial t draws from Rng(derive_seed(seed, t)), so a
 * run is bit-reproducible regardless of how trials are scheduled.
 *
 * Fringe protocols (RamseyCC, GhzQC, Sequential) observe a binary signal
 * with P(+1) = (1 + cos Phi) / 2, Phi = M gap phi + offset, where M = 1 for
 * RamseyCC (each probe sees U_phi once) and M = N for GhzQC and Sequential.
 * The offset is a known reference phase applied on the readout side; it is
 * not a use of U_phi and is not counted.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metroscale/estimation.hpp"
#include "metroscale/genspec.hpp"
#include "metroscale/qcore.hpp"

namespace metroscale {

enum class Protocol { RamseyCC, GhzQC, Sequential, DigitByDigit };
enum class OperatingPoint { AtTrueValue, MaxSlope };
/// GhzQC simulation route. Auto uses the statevector when d^N <= 4096.
enum class GhzPath { Auto, Statevector, Analytic };
enum class DigitEngine { Sequential, Ghz };

std::string_view to_string(Protocol p);
std::string_view to_string(OperatingPoint p);
std::string_view to_string(GhzPath p);
std::string_view to_string(DigitEngine e);
/// Accepts canonical names and the CLI aliases (cc, ramsey, ghz, qc, seq,
/// digits, ...). Throws InvalidConfig.
Protocol parse_protocol(std::string_view name);
OperatingPoint parse_operating_point(std::string_view name);
GhzPath parse_ghz_path(std::string_view name);
DigitEngine parse_digit_engine(std::string_view name);

inline constexpr std::size_t kAutoStatevectorCap = 4096;
/// Largest per-repetition U_phi count a digit level may use.
inline constexpr std::uint64_t kMaxDigitLevelPasses = std::uint64_t{1} << 20;

struct StrategyConfig {
  Protocol protocol = Protocol::RamseyCC;
  Generator generator = Generator::qubit_z();
  std::uint64_t probes = 1;  // N: uses of U_phi per repetition
  std::uint64_t nu = 1;      // repetitions per experiment
  double phi_true = 0.0;
  std::uint64_t seed = 0;
  OperatingPoint operating_point = OperatingPoint::MaxSlope;
  std::uint64_t digit_base = 2;
  std::uint64_t digit_count = 1;
  std::uint64_t trials = 400;
  GhzPath ghz_path = GhzPath::Auto;
  DigitEngine digit_engine = DigitEngine::Sequential;
  /// 0 selects default_worker_count().
  std::size_t workers = 0;

  /// Throws InvalidConfig / ZeroGap.
  void validate() const;
};

/// The black box U_phi. Every evolution routed through it increments a use
/// counter by the number of U_phi applications the physical experiment
/// performs; resource figures in results are read from this counter.
class PhaseImprint {
 public:
  PhaseImprint(const Generator& g, double phi);

  /// N independent probes in `probe`, each hit once, for `repetitions`
  /// repetitions. Returns the single-probe output state.
  StateVector product(const StateVector& probe, std::uint64_t probes, std::uint64_t repetitions);
  /// U_phi on every site of an N-probe register.
  StateVector parallel(const StateVector& reg, std::size_t probes, std::uint64_t repetitions);
  /// U_phi applied `passes` times in sequence to one probe.
  StateVector sequential(const StateVector& probe, std::uint64_t passes,
                         std::uint64_t repetitions);

  std::uint64_t uses() const { return uses_; }

 private:
  ComplexMatrix unitary_;
  std::uint64_t uses_ = 0;
};

/// Known readout offset and inversion branch of a fringe protocol.
struct FringeSetting {
  std::uint64_t multiplier = 1;  // M
  double gap = 1.0;
  double offset = 0.0;           // reference phase theta
  double reference_phase = 0.0;  // Phi at phi_true
  /// d P(+1) / d phi at phi_true.
  double slope = 0.0;

  double total_phase(double phi) const;
  /// Inverts a clipped mean signal <X> on the monotonic branch that contains
  /// reference_phase.
  double invert(double signal) const;
};

/// The phase at which the bare fringe already sits at quadrature,
/// M gap phi = pi / 2 with M = 1 for RamseyCC and M = N otherwise. Small
/// phi keeps the slope correction of the estimator from adding a bias that
/// grows with phi.
double quadrature_phase(Protocol protocol, std::uint64_t probes, double gap);

/// Throws DegenerateOperatingPoint when |slope| < 1e-6 under AtTrueValue.
FringeSetting fringe_setting(const StrategyConfig& cfg);

struct TrialOutcome {
  double phi_estimate = 0.0;
  double signal_mean = 0.0;  // pooled <X>, before clipping
  bool clipped = false;
  std::uint64_t plus_count = 0;
  std::uint64_t minus_count = 0;
  std::uint64_t u_phi_uses = 0;
};

/// One experiment of a fringe protocol with the channel set to phi_actual;
/// the offset and branch come from cfg.phi_true.
TrialOutcome run_fringe_trial(const StrategyConfig& cfg, const FringeSetting& setting,
                              double phi_actual, std::uint64_t seed);

/// P(product of local X outcomes = +1) for GhzQC at `phi`, via `path`.
double ghz_plus_probability(const StrategyConfig& cfg, GhzPath path, double phi);

/// The nu per-repetition products (+1 / -1 / 0) of one GhzQC experiment at
/// cfg.phi_true, via `path`.
std::vector<int> ghz_outcome_stream(const StrategyConfig& cfg, GhzPath path, std::uint64_t seed);

/// Delta h of the protocol's input state under its collective generator.
double probe_delta_h(Protocol protocol, const Generator& g, std::uint64_t probes);

// ---------------------------------------------------------------------------
// Digit-by-digit

/// Counts observed at one digit level. Even repetitions read out with offset
/// 0 (cosine quadrature), odd ones with offset pi/2 (sine quadrature).
struct LevelCounts {
  std::uint64_t passes = 1;  // b^j
  std::uint64_t cos_reps = 0;
  std::uint64_t cos_plus = 0;
  std::uint64_t sin_reps = 0;
  std::uint64_t sin_plus = 0;
};

struct DigitLevel {
  std::uint64_t level = 0;
  std::uint64_t probes = 0;        // b^j uses of U_phi per repetition
  std::uint64_t ml_candidate = 0;  // likelihood-maximizing digit
  double log10_likelihood_ratio = 0.0;  // best vs runner-up candidate
  std::uint64_t digit = 0;       // reported (rounded) digit
  std::uint64_t true_digit = 0;  // from phi_true, evaluation only
  bool success = false;
};

struct DigitTrial {
  std::vector<DigitLevel> levels;
  std::vector<std::uint64_t> digits;  // most significant first
  double continuous_fraction = 0.0;   // decoded phase / 2 pi before rounding
  double fraction_estimate = 0.0;     // 0.d_0 d_1 ... d_{l-1} in base b
  double error = 0.0;                 // circular |fraction_estimate - truth|
  bool ambiguous = false;
  std::string failure;
};

struct DigitReport {
  std::uint64_t base = 2;
  std::uint64_t digit_count = 1;
  std::vector<std::uint64_t> probes_per_level;
  /// sum_{j<l} b^j: U_phi uses per repetition batch of this run.
  std::uint64_t probes_per_batch = 0;
  /// sum_{j=0}^{l} b^j = (b^{l+1} - 1) / (b - 1).
  std::uint64_t inclusive_sum = 0;
  double true_fraction = 0.0;
  std::vector<DigitTrial> trials;
  std::uint64_t successes = 0;  // trials with error <= b^-l / 2
};

/// Log-likelihood of the two-quadrature counts at level phase 2 pi t.
double level_log_likelihood(const LevelCounts& counts, double t);

/// Decodes digits from the finest level down: the finest level's phase is
/// the continuous maximum-likelihood estimate, and each coarser digit is the
/// maximum-likelihood choice among b candidates conditioned on the digits
/// already fixed below it. The assembled estimate rounds the decoded phase to
/// l base-b digits. Throws DigitAmbiguous when a conditioned decision has a
/// likelihood ratio below 10.
DigitTrial decode_digits(std::span<const LevelCounts> levels, std::uint64_t base,
                         double true_fraction);

/// Digits of round(fraction * b^l) mod b^l, most significant first.
std::vector<std::uint64_t> rounded_digits(double fraction, std::uint64_t base,
                                          std::uint64_t count);

// ---------------------------------------------------------------------------
// Results

struct EstimationResult {
  std::vector<double> phi_estimates;  // one per trial
  std::vector<std::uint64_t> clipped_trials;
  double mean_estimate = 0.0;
  double slope = 1.0;  // d<phi_est>/dphi
  double delta_phi_empirical = 0.0;
  std::uint64_t u_phi_applications = 0;  // per experiment
  std::uint64_t total_u_phi_applications = 0;
  double theoretical_bound = 0.0;
  BoundKind bound_kind = BoundKind::CC_CQ;
  std::optional<double> probe_delta_h;
  double plus_probability = 0.0;  // P(+1) at phi_true
  StrategyConfig protocol_echo;
  std::optional<DigitReport> digits;
};

EstimationResult run_ramsey_cc(const StrategyConfig& cfg);
EstimationResult run_ghz_qc(const StrategyConfig& cfg);
EstimationResult run_sequential(const StrategyConfig& cfg);
EstimationResult run_digit_by_digit(const StrategyConfig& cfg);
/// Dispatches on cfg.protocol.
EstimationResult run_protocol(const StrategyConfig& cfg);

}  // namespace metroscale
