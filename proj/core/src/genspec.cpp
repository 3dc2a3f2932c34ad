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

#include "metroscale/genspec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "metroscale/error.hpp"

namespace metroscale {

namespace {

constexpr double kSpectrumSlack = 1e-6;
constexpr double kFiniteDifferenceTolerance = 1e-4;

std::vector<Complex> product_amplitudes(const StateVector& probe, std::size_t probes,
                                        std::size_t cap) {
  const std::size_t total = checked_power(probe.dim(), probes, cap);
  if (total == 0) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(probe.dim()) + "^" + std::to_string(probes) +
                    " exceeds the statevector cap of " + std::to_string(cap));
  }
  std::vector<Complex> amps{1.0};
  amps.reserve(total);
  for (std::size_t site = 0; site < probes; ++site) {
    std::vector<Complex> next(amps.size() * probe.dim());
    for (std::size_t i = 0; i < amps.size(); ++i)
      for (std::size_t k = 0; k < probe.dim(); ++k) next[i * probe.dim() + k] = amps[i] * probe[k];
    amps = std::move(next);
  }
  return amps;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(ComplexMatrix h, const Tolerances& tol)
    : matrix_(std::move(h)), eigen_(eigensystem(matrix_, tol)) {
  const auto& ev = eigen_.eigenvalues;
  min_index_ = 0;
  const double top = ev.back();
  const double tie = 1e-9 * std::max(1.0, std::abs(top));
  max_index_ = ev.size() - 1;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    if (ev[k] >= top - tie) {
      max_index_ = k;
      break;
    }
  }
}

Generator Generator::qubit_z() {
  const std::array<double, 2> d{-0.5, 0.5};
  return Generator(ComplexMatrix::diagonal(d));
}

Generator Generator::qutrit() {
  const std::array<double, 3> d{0.0, 1.0, 2.0};
  return Generator(ComplexMatrix::diagonal(d));
}

void Generator::require_gap() const {
  const double scale = std::max(1.0, matrix_.frobenius_norm());
  if (!(gap() > 1e-12 * scale)) {
    throw Error(ErrorCode::ZeroGap, "lambda_max == lambda_min; the phase is unobservable");
  }
}

ComplexMatrix Generator::swap_observable() const {
  const Eigen::VectorXcd m = min_eigenvector().eigen();
  const Eigen::VectorXcd M = max_eigenvector().eigen();
  return ComplexMatrix(Eigen::MatrixXcd(m * M.adjoint() + M * m.adjoint()));
}

Generator Generator::restricted() const {
  const std::array<double, 2> d{lambda_min(), lambda_max()};
  return Generator(ComplexMatrix::diagonal(d));
}

// ---------------------------------------------------------------------------
// Probe states

StateVector extremal_superposition(const Generator& g) {
  g.require_gap();
  const Eigen::VectorXcd v = (g.max_eigenvector().eigen() + g.min_eigenvector().eigen()) / std::sqrt(2.0);
  return StateVector(v);
}

StateVector ghz_state(const Generator& g, std::size_t probes, std::size_t cap) {
  g.require_gap();
  if (probes == 0) throw Error(ErrorCode::DimensionMismatch, "GHZ state needs at least one probe");
  auto low = product_amplitudes(g.min_eigenvector(), probes, cap);
  const auto high = product_amplitudes(g.max_eigenvector(), probes, cap);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < low.size(); ++i) low[i] = s * (low[i] + high[i]);
  return StateVector(std::move(low), 1e-9);
}

StateVector product_state(const StateVector& probe, std::size_t probes, std::size_t cap) {
  if (probes == 0) throw Error(ErrorCode::DimensionMismatch, "product state needs at least one probe");
  return StateVector(product_amplitudes(probe, probes, cap), 1e-9);
}

CollectiveMoments collective_moments(const StateVector& psi, const Generator& g,
                                     std::size_t probes) {
  const std::size_t expected = checked_power(g.dim(), probes, psi.dim());
  if (probes == 0 || expected != psi.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state of dim " + std::to_string(psi.dim()) + " is not " +
                    std::to_string(probes) + " probes of dim " + std::to_string(g.dim()));
  }
  const Eigen::VectorXcd v = psi.eigen();
  Eigen::VectorXcd hv = Eigen::VectorXcd::Zero(v.size());
  for (std::size_t site = 0; site < probes; ++site) hv += apply_local(g.matrix(), site, probes, v);

  CollectiveMoments out;
  out.mean = v.dot(hv).real();  // Eigen's dot conjugates the left operand
  out.second_moment = hv.squaredNorm();
  out.variance = std::max(0.0, out.second_moment - out.mean * out.mean);
  return out;
}

double delta_h(const StateVector& psi, const Generator& g, std::size_t probes) {
  return std::sqrt(collective_moments(psi, g, probes).variance);
}

// ---------------------------------------------------------------------------
// Sequential circuits

SequentialCircuit::SequentialCircuit(Generator g, std::vector<ComplexMatrix> interleaved,
                                     std::size_t ancilla_dim, const Tolerances& tol)
    : generator_(std::move(g)), interleaved_(std::move(interleaved)), ancilla_dim_(ancilla_dim) {
  if (ancilla_dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "ancilla dimension must be >= 1");
  if (interleaved_.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "a sequential circuit needs V_0 ... V_N with N >= 1");
  }
  for (std::size_t j = 0; j < interleaved_.size(); ++j) {
    if (interleaved_[j].dim() != dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "V_" + std::to_string(j) + " has dim " + std::to_string(interleaved_[j].dim()) +
                      ", expected " + std::to_string(dim()));
    }
    if (!interleaved_[j].is_unitary(tol.unitary)) {
      throw Error(ErrorCode::NonUnitaryInterleave, "V_" + std::to_string(j) + " is not unitary");
    }
  }
}

SequentialCircuit SequentialCircuit::plain(Generator g, std::size_t passes, std::size_t ancilla_dim) {
  const std::size_t dim = g.dim() * ancilla_dim;
  return SequentialCircuit(std::move(g),
                           std::vector<ComplexMatrix>(passes + 1, ComplexMatrix::identity(dim)),
                           ancilla_dim);
}

ComplexMatrix SequentialCircuit::lifted_generator() const {
  return tensor(generator_.matrix(), ComplexMatrix::identity(ancilla_dim_));
}

ComplexMatrix SequentialCircuit::evolution(double phi) const {
  const EigenSystem spectrum = eigensystem(lifted_generator());
  const ComplexMatrix u = phase_unitary(spectrum, phi);
  ComplexMatrix w = interleaved_.front();
  for (std::size_t j = 1; j < interleaved_.size(); ++j) w = interleaved_[j] * (u * w);
  return w;
}

std::vector<ComplexMatrix> sequential_generator_terms(const SequentialCircuit& c, double phi) {
  const ComplexMatrix h = c.lifted_generator();
  const ComplexMatrix u = phase_unitary(eigensystem(h), phi);
  const std::size_t n = c.passes();
  const auto& v = c.interleaved();

  // after[j] = V_N U V_{N-1} ... U V_j
  std::vector<ComplexMatrix> after(n + 1);
  after[n] = v[n];
  for (std::size_t j = n; j-- > 1;) after[j] = after[j + 1] * (u * v[j]);

  std::vector<ComplexMatrix> terms;
  terms.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) terms.push_back(after[j] * h * after[j].adjoint());
  return terms;
}

ComplexMatrix finite_difference_generator(const SequentialCircuit& c, double phi, double step) {
  const ComplexMatrix plus = c.evolution(phi + step);
  const ComplexMatrix minus = c.evolution(phi - step);
  const ComplexMatrix dw = Complex(1.0 / (2.0 * step), 0.0) * (plus - minus);
  return Complex(0.0, 1.0) * (dw * c.evolution(phi).adjoint());
}

ComplexMatrix sequential_generator(const SequentialCircuit& c, double phi) {
  const auto terms = sequential_generator_terms(c, phi);
  ComplexMatrix h(c.dim());
  for (const auto& t : terms) h = h + t;

  if (!h.is_hermitian(1e-8)) {
    throw Error(ErrorCode::NumericalFailure, "sequential generator is not Hermitian");
  }
  const double mismatch = h.max_abs_diff(finite_difference_generator(c, phi));
  if (mismatch > kFiniteDifferenceTolerance) {
    throw Error(ErrorCode::NumericalFailure,
                "sequential generator disagrees with i(dW/dphi)W^dagger by " +
                    std::to_string(mismatch));
  }
  return h;
}

SpectrumReport spectrum_bound_check(const SequentialCircuit& c, double phi) {
  const EigenSystem spectrum = eigensystem(sequential_generator(c, phi), Tolerances{.hermitian = 1e-8});
  const auto n = static_cast<double>(c.passes());
  SpectrumReport r;
  r.max_eig = spectrum.eigenvalues.back();
  r.min_eig = spectrum.eigenvalues.front();
  r.upper_bound = n * c.generator().lambda_max();
  r.lower_bound = n * c.generator().lambda_min();
  r.within_bounds = r.max_eig <= r.upper_bound + kSpectrumSlack &&
                    r.min_eig >= r.lower_bound - kSpectrumSlack;
  return r;
}

}  // namespace metroscale
