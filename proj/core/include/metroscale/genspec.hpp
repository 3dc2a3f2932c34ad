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
 * Generator analysis: extremal eigenpairs, optimal probe states, the
 * collective-generator spread, and the generator of a sequential circuit.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "metroscale/qcore.hpp"

namespace metroscale {

/// A Hermitian generator H of U_phi = exp(-i phi H) with its cached spectrum.
///
/// When an extremal eigenvalue is degenerate, the extremal eigenvector is the
/// lowest-index column of the sorted eigensystem among the tied values.
class Generator {
 public:
  explicit Generator(ComplexMatrix h, const Tolerances& tol = {});

  /// diag(-1/2, +1/2)
  static Generator qubit_z();
  /// diag(0, 1, 2)
  static Generator qutrit();

  const ComplexMatrix& matrix() const { return matrix_; }
  const EigenSystem& eigen() const { return eigen_; }
  std::size_t dim() const { return matrix_.dim(); }

  double lambda_max() const { return eigen_.eigenvalues[max_index_]; }
  double lambda_min() const { return eigen_.eigenvalues[min_index_]; }
  double gap() const { return lambda_max() - lambda_min(); }
  /// Throws ZeroGap when the phase is unobservable.
  void require_gap() const;

  StateVector max_eigenvector() const { return eigen_.vector(max_index_); }
  StateVector min_eigenvector() const { return eigen_.vector(min_index_); }

  /// X = |l_m><l_M| + |l_M><l_m|
  ComplexMatrix swap_observable() const;

  /// diag(lambda_min, lambda_max): H restricted to span{|l_m>, |l_M>}.
  Generator restricted() const;

 private:
  ComplexMatrix matrix_;
  EigenSystem eigen_;
  std::size_t min_index_ = 0;
  std::size_t max_index_ = 0;
};

/// (|l_M> + |l_m>) / sqrt(2)
StateVector extremal_superposition(const Generator& g);

/// (|l_m>^{(x)N} + |l_M>^{(x)N}) / sqrt(2); DimensionTooLarge when d^N
/// exceeds `cap`.
StateVector ghz_state(const Generator& g, std::size_t probes,
                      std::size_t cap = kMaxRegisterDim);

/// Product state psi^{(x)N}.
StateVector product_state(const StateVector& probe, std::size_t probes,
                          std::size_t cap = kMaxRegisterDim);

/// Mean and variance of h = sum_j H_j on an N-probe state, computed by
/// applying single-site terms; h is never materialized.
struct CollectiveMoments {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};
CollectiveMoments collective_moments(const StateVector& psi, const Generator& g,
                                     std::size_t probes);

/// Standard deviation of h = sum_j H_j on `psi`.
double delta_h(const StateVector& psi, const Generator& g, std::size_t probes);

/// W_phi = V_N U V_{N-1} ... V_1 U V_0 with U = U_phi (x) I_ancilla.
class SequentialCircuit {
 public:
  /// `interleaved` holds V_0 ... V_N; the number of U_phi passes is
  /// interleaved.size() - 1.
  SequentialCircuit(Generator g, std::vector<ComplexMatrix> interleaved,
                    std::size_t ancilla_dim, const Tolerances& tol = {});

  /// Every V_j = identity.
  static SequentialCircuit plain(Generator g, std::size_t passes, std::size_t ancilla_dim = 1);

  const Generator& generator() const { return generator_; }
  const std::vector<ComplexMatrix>& interleaved() const { return interleaved_; }
  std::size_t passes() const { return interleaved_.size() - 1; }
  std::size_t ancilla_dim() const { return ancilla_dim_; }
  std::size_t dim() const { return generator_.dim() * ancilla_dim_; }

  /// H (x) I_ancilla
  ComplexMatrix lifted_generator() const;
  ComplexMatrix evolution(double phi) const;

 private:
  Generator generator_;
  std::vector<ComplexMatrix> interleaved_;
  std::size_t ancilla_dim_;
};

/// The conjugated copies H'_j(phi), j = 1..N, whose sum is
/// i (dW/dphi) W^dagger. The j-th term conjugates H by everything applied
/// after the j-th use of U_phi: H'_j = A_j H A_j^dagger with
/// A_j = V_N U ... U V_j.
std::vector<ComplexMatrix> sequential_generator_terms(const SequentialCircuit& c, double phi);

/// i (dW/dphi) W^dagger by central differences.
ComplexMatrix finite_difference_generator(const SequentialCircuit& c, double phi,
                                          double step = 1e-5);

/// Sum of sequential_generator_terms. Cross-checked against the
/// finite-difference construction; a disagreement above 1e-4 throws
/// NumericalFailure.
ComplexMatrix sequential_generator(const SequentialCircuit& c, double phi);

struct SpectrumReport {
  double max_eig = 0.0;
  double min_eig = 0.0;
  double upper_bound = 0.0;  // N lambda_M
  double lower_bound = 0.0;  // N lambda_m
  bool within_bounds = false;
};

/// Checks N lambda_m - 1e-6 <= spectrum(h) <= N lambda_M + 1e-6.
SpectrumReport spectrum_bound_check(const SequentialCircuit& c, double phi);

}  // namespace metroscale
