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
 * Estimator error, error propagation, and the closed-form precision bounds
 * for parallel and sequential phase estimation.
 *
 * All errors are root quantities: delta_phi is the square root of the mean
 * squared deviation of the slope-corrected estimator, so it carries the same
 * units as the bounds.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "metroscale/genspec.hpp"
#include "metroscale/qcore.hpp"

namespace metroscale {

enum class BoundKind { CC_CQ, QC_QQ, Sequential, CramerRao };

std::string_view to_string(BoundKind kind);

/// Default slack of the uncertainty-relation check (finite-nu noise).
inline constexpr double kUncertaintySlack = 0.1;
/// Fringe-inversion experiments at quadrature must sit within this factor of
/// saturating delta_phi * delta_h >= 1 / (2 sqrt(nu)).
inline constexpr double kSaturationEnvelope = 2.0;

struct ErrorEvaluation {
  double delta_phi = 0.0;
  double mean_estimate = 0.0;
  double slope_d_mean_d_phi = 1.0;
  std::uint64_t nu = 1;
  double bound = 0.0;
  BoundKind bound_kind = BoundKind::CramerRao;
};

/// sqrt(mean((phi_est / |slope| - phi_true)^2)).
/// Throws InsufficientSamples for fewer than two samples and ZeroSlope for
/// |slope| <= 1e-9.
double delta_phi(std::span<const double> samples, double phi_true, double slope);

double mean(std::span<const double> samples);

/// Mean estimate of a protocol as a function of the true phase:
/// runner(phi, nu_probe, seed).
using MeanRunner = std::function<double(double phi, std::uint64_t nu_probe, std::uint64_t seed)>;

/// Central difference of the mean estimate at phi +/- step, both sides
/// evaluated with the same seed (common random numbers).
double slope_of_mean(const MeanRunner& runner, double phi, double step, std::uint64_t nu_probe,
                     std::uint64_t seed);

/// Default finite-difference step: 1e-3 of the fringe period 2 pi / (N gap).
double default_slope_step(std::uint64_t probes, double gap);

struct SignalMoments {
  double expectation = 0.0;
  double variance = 0.0;
  double derivative = 0.0;  // d<signal>/dphi
};

/// sqrt(variance) / (sqrt(nu) |derivative|). Throws ZeroDerivative at fringe
/// nodes (|derivative| <= 1e-12).
double error_propagation(const SignalMoments& signal, std::uint64_t nu);

/// 1 / (sqrt(nu N) gap)
double bound_cc(std::uint64_t probes, std::uint64_t nu, double gap);
/// 1 / (sqrt(nu) N gap)
double bound_qc(std::uint64_t probes, std::uint64_t nu, double gap);
/// Sequential use of U_phi N times on one probe: identical to bound_qc.
double bound_sequential(std::uint64_t passes, std::uint64_t nu, double gap);
/// 1 / (2 sqrt(nu) delta_h)
double bound_cramer_rao(double delta_h, std::uint64_t nu);

struct UncertaintyReport {
  double lhs = 0.0;    // delta_phi * delta_h
  double rhs = 0.0;    // 1 / (2 sqrt(nu))
  double ratio = 0.0;  // lhs / rhs
  bool satisfied_with_slack = false;
};

UncertaintyReport uncertainty_relation_check(double delta_phi, double delta_h, std::uint64_t nu,
                                             double slack = kUncertaintySlack);

/// Quantum Fisher information of a pure state under exp(-i phi h):
/// 4 (delta h)^2.
double qfi_pure(const StateVector& psi, const Generator& g, std::size_t probes);

}  // namespace metroscale
