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

#include "metroscale/estimation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "metroscale/error.hpp"

namespace metroscale {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::CC_CQ: return "CC_CQ";
    case BoundKind::QC_QQ: return "QC_QQ";
    case BoundKind::Sequential: return "Sequential";
    case BoundKind::CramerRao: return "CramerRao";
  }
  return "Unknown";
}

double mean(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InsufficientSamples, "mean of an empty sample");
  double acc = 0.0;
  for (double s : samples) acc += s;
  return acc / static_cast<double>(samples.size());
}

double delta_phi(std::span<const double> samples, double phi_true, double slope) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::InsufficientSamples, "delta_phi needs at least two estimates");
  }
  if (!(std::abs(slope) > 1e-9)) {
    throw Error(ErrorCode::ZeroSlope, "d<phi_est>/dphi vanishes; the estimator is insensitive to phi");
  }
  const double inv = 1.0 / std::abs(slope);
  double acc = 0.0;
  for (double s : samples) {
    const double dev = s * inv - phi_true;
    acc += dev * dev;
  }
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

double slope_of_mean(const MeanRunner& runner, double phi, double step, std::uint64_t nu_probe,
                     std::uint64_t seed) {
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidConfig, "slope step must be positive");
  const double up = runner(phi + step, nu_probe, seed);
  const double down = runner(phi - step, nu_probe, seed);
  return (up - down) / (2.0 * step);
}

double default_slope_step(std::uint64_t probes, double gap) {
  return 1e-3 * 2.0 * std::numbers::pi / (static_cast<double>(probes) * gap);
}

double error_propagation(const SignalMoments& signal, std::uint64_t nu) {
  if (signal.variance < 0.0) throw Error(ErrorCode::InvalidConfig, "negative variance");
  if (nu == 0) throw Error(ErrorCode::InvalidConfig, "nu must be >= 1");
  if (!(std::abs(signal.derivative) > 1e-12)) {
    throw Error(ErrorCode::ZeroDerivative, "signal slope vanishes at a fringe node");
  }
  return std::sqrt(signal.variance) /
         (std::sqrt(static_cast<double>(nu)) * std::abs(signal.derivative));
}

double bound_cc(std::uint64_t probes, std::uint64_t nu, double gap) {
  return 1.0 / (std::sqrt(static_cast<double>(nu) * static_cast<double>(probes)) * gap);
}

double bound_qc(std::uint64_t probes, std::uint64_t nu, double gap) {
  return 1.0 / (std::sqrt(static_cast<double>(nu)) * static_cast<double>(probes) * gap);
}

double bound_sequential(std::uint64_t passes, std::uint64_t nu, double gap) {
  return bound_qc(passes, nu, gap);
}

double bound_cramer_rao(double delta_h, std::uint64_t nu) {
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(nu)) * delta_h);
}

UncertaintyReport uncertainty_relation_check(double delta_phi, double delta_h, std::uint64_t nu,
                                             double slack) {
  UncertaintyReport r;
  r.lhs = delta_phi * delta_h;
  r.rhs = 1.0 / (2.0 * std::sqrt(static_cast<double>(nu)));
  r.ratio = r.lhs / r.rhs;
  r.satisfied_with_slack = r.lhs >= (1.0 - slack) * r.rhs;
  return r;
}

double qfi_pure(const StateVector& psi, const Generator& g, std::size_t probes) {
  return 4.0 * collective_moments(psi, g, probes).variance;
}

}  // namespace metroscale
