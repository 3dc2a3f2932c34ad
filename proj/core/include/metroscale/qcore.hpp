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
 * Dense complex linear algebra for finite-dimensional probe registers.
 *
 * A register of N probes of local dimension d is a vector of d^N amplitudes.
 * Site 0 is the most significant digit of the basis index, so that
 * tensor(a, b) places `a` on site 0 and `b` on site 1.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace metroscale {

using Complex = std::complex<double>;

/// Precondition and invariant tolerances. Defaults are used everywhere unless
/// a caller passes an explicit instance.
struct Tolerances {
  double hermitian = 1e-10;   // max |H - H^dagger| entrywise
  double unitary = 1e-8;      // max |U^dagger U - I| entrywise
  double normalized = 1e-10;  // |sum |a|^2 - 1|
};

/// Largest register dimension the statevector paths will allocate (2^20).
inline constexpr std::size_t kMaxRegisterDim = std::size_t{1} << 20;

/// d^n, or 0 if the result would exceed `cap`.
std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap = kMaxRegisterDim);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; size must be dim * dim.
  ComplexMatrix(std::size_t dim, std::span<const Complex> row_major);
  explicit ComplexMatrix(Eigen::MatrixXcd m);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Eigen::MatrixXcd& eigen() const { return m_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  /// max_ij |this_ij - other_ij|
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol = Tolerances{}.hermitian) const;
  bool is_unitary(double tol = Tolerances{}.unitary) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  Eigen::MatrixXcd m_;
};

/// Normalized pure state. Construction validates the norm.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes,
                       double tol = Tolerances{}.normalized);
  explicit StateVector(const Eigen::VectorXcd& amplitudes,
                       double tol = Tolerances{}.normalized);

  /// Rescales `amplitudes` to unit norm; throws NotNormalized on a zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  Complex operator[](std::size_t k) const { return amps_[k]; }
  std::span<const Complex> amplitudes() const { return amps_; }
  double norm() const;
  /// <this|other>
  Complex inner(const StateVector& other) const;
  Eigen::VectorXcd eigen() const;

 private:
  std::vector<Complex> amps_;
};

/// Spectral decomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvectors as the matching orthonormal columns.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  StateVector vector(std::size_t k) const;
  /// V diag(f(lambda)) V^dagger for a complex spectral function.
  template <typename F>
  ComplexMatrix spectral(F&& f) const {
    const auto& v = eigenvectors.eigen();
    Eigen::VectorXcd d(static_cast<Eigen::Index>(dim()));
    for (std::size_t k = 0; k < dim(); ++k) d(static_cast<Eigen::Index>(k)) = f(eigenvalues[k]);
    return ComplexMatrix(Eigen::MatrixXcd(v * d.asDiagonal() * v.adjoint()));
  }
};

EigenSystem eigensystem(const ComplexMatrix& h, const Tolerances& tol = {});

/// exp(-i phi H) via the spectral form.
ComplexMatrix phase_unitary(const ComplexMatrix& h, double phi, const Tolerances& tol = {});
ComplexMatrix phase_unitary(const EigenSystem& spectrum, double phi);

StateVector apply(const ComplexMatrix& u, const StateVector& psi, const Tolerances& tol = {});

StateVector tensor(const StateVector& a, const StateVector& b);
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Applies a single-site operator `op` (d x d) to `site` of an N-probe
/// register. No unitarity or normalization is assumed, so this also serves
/// H_j |psi> for generator sums.
Eigen::VectorXcd apply_local(const ComplexMatrix& op, std::size_t site, std::size_t probes,
                             const Eigen::VectorXcd& psi);

/// Born probabilities |<basis_k|psi>|^2, indexed like basis.eigenvalues.
std::vector<double> outcome_probabilities(const StateVector& psi, const EigenSystem& basis);

/// Multinomial sample of `shots` projective measurements in `basis`.
/// Each shot consumes one uniform variate and is resolved by inverse CDF
/// over the basis index order.
std::vector<std::uint64_t> measure_projective(const StateVector& psi, const EigenSystem& basis,
                                              std::uint64_t shots, std::uint64_t seed);

/// Same, measuring every site of an N-probe register in the same local
/// basis. Returns per-site outcome counts, counts[site][k].
std::vector<std::vector<std::uint64_t>> measure_local(const StateVector& psi,
                                                      const EigenSystem& local_basis,
                                                      std::size_t probes, std::uint64_t shots,
                                                      std::uint64_t seed);

/// Rotates every site into `local_basis`: returns amplitudes
/// <b_{k_0} ... b_{k_{N-1}} | psi>.
Eigen::VectorXcd to_local_basis(const StateVector& psi, const EigenSystem& local_basis,
                                std::size_t probes);

}  // namespace metroscale
