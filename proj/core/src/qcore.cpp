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

#include "metroscale/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "metroscale/error.hpp"
#include "metroscale/random.hpp"

namespace metroscale {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

// Cumulative distribution with the last entry pinned to 1 so that every
// uniform in [0, 1) resolves to a valid index.
std::vector<double> cumulative(std::span<const double> p) {
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  if (!cdf.empty()) cdf.back() = 1.0;
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
      it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

}  // namespace

std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (result > cap / std::max<std::size_t>(d, 1)) return 0;
    result *= d;
  }
  return result <= cap ? result : 0;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : m_(Eigen::MatrixXcd::Zero(idx(dim), idx(dim))) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::span<const Complex> row_major)
    : ComplexMatrix(dim) {
  if (row_major.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix entries " + dims(row_major.size(), dim * dim));
  }
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m_(idx(r), idx(c)) = row_major[r * dim + c];
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return ComplexMatrix(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(idx(dim), idx(dim))));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out.m_(idx(k), idx(k)) = values[k];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Eigen::MatrixXcd(m_.adjoint())); }

double ComplexMatrix::frobenius_norm() const { return m_.norm(); }

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "max_abs_diff " + dims(dim(), other.dim()));
  }
  if (dim() == 0) return 0.0;
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (dim() == 0) return true;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (dim() == 0) return true;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return (m_.adjoint() * m_ - id).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "product " + dims(a.dim(), b.dim()));
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ * b.m_));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "sum " + dims(a.dim(), b.dim()));
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "difference " + dims(a.dim(), b.dim()));
  return ComplexMatrix(Eigen::MatrixXcd(a.m_ - b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix(Eigen::MatrixXcd(s * a.m_));
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Complex> amplitudes, double tol) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw Error(ErrorCode::DimensionMismatch, "empty state");
  if (std::abs(norm() * norm() - 1.0) > tol) {
    throw Error(ErrorCode::NotNormalized,
                "squared norm deviates from 1 by " + std::to_string(norm() * norm() - 1.0));
  }
}

StateVector::StateVector(const Eigen::VectorXcd& amplitudes, double tol)
    : StateVector(std::vector<Complex>(amplitudes.data(), amplitudes.data() + amplitudes.size()),
                  tol) {}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double sq = 0.0;
  for (const auto& a : amplitudes) sq += std::norm(a);
  if (!(sq > 0.0) || !std::isfinite(sq)) throw Error(ErrorCode::NotNormalized, "zero-norm vector");
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& a : amplitudes) a *= inv;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  std::vector<Complex> amps(dim, 0.0);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const auto& a : amps_) sq += std::norm(a);
  return std::sqrt(sq);
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw Error(ErrorCode::DimensionMismatch, "inner " + dims(dim(), other.dim()));
  Complex acc = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) acc += std::conj(amps_[k]) * other.amps_[k];
  return acc;
}

Eigen::VectorXcd StateVector::eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), idx(amps_.size()));
}

// ---------------------------------------------------------------------------
// Spectra

StateVector EigenSystem::vector(std::size_t k) const {
  return StateVector(Eigen::VectorXcd(eigenvectors.eigen().col(idx(k))));
}

EigenSystem eigensystem(const ComplexMatrix& h, const Tolerances& tol) {
  if (h.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  if (!h.is_hermitian(tol.hermitian)) {
    throw Error(ErrorCode::NonHermitian, "max |H - H^dagger| exceeds " + std::to_string(tol.hermitian));
  }
  const Eigen::MatrixXcd sym = 0.5 * (h.eigen() + h.eigen().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  }

  Eigen::MatrixXcd v = solver.eigenvectors();
  // Fix the phase of each eigenvector: its largest component is real positive.
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index best = 0;
    v.col(c).cwiseAbs().maxCoeff(&best);
    const Complex pivot = v(best, c);
    v.col(c) *= std::conj(pivot) / std::abs(pivot);
    v(best, c) = std::abs(v(best, c));
  }

  EigenSystem out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  out.eigenvectors = ComplexMatrix(std::move(v));

  const double scale = std::max(1.0, h.frobenius_norm());
  const ComplexMatrix rebuilt = out.spectral([](double l) { return Complex(l, 0.0); });
  if ((rebuilt - h).frobenius_norm() > 1e-9 * scale) {
    throw Error(ErrorCode::NumericalFailure, "eigendecomposition fails reconstruction");
  }
  return out;
}

ComplexMatrix phase_unitary(const EigenSystem& spectrum, double phi) {
  return spectrum.spectral([phi](double l) { return std::polar(1.0, -phi * l); });
}

ComplexMatrix phase_unitary(const ComplexMatrix& h, double phi, const Tolerances& tol) {
  return phase_unitary(eigensystem(h, tol), phi);
}

// ---------------------------------------------------------------------------
// Register operations

StateVector apply(const ComplexMatrix& u, const StateVector& psi, const Tolerances& tol) {
  if (u.dim() != psi.dim()) throw Error(ErrorCode::DimensionMismatch, "apply " + dims(u.dim(), psi.dim()));
  if (!u.is_unitary(tol.unitary)) throw Error(ErrorCode::NonUnitary, "apply requires a unitary");
  // Renormalize away the <= 1e-8 drift a near-unitary may introduce.
  Eigen::VectorXcd out = u.eigen() * psi.eigen();
  out /= out.norm();
  return StateVector(out);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(out), 1e-9);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Eigen::MatrixXcd out(idx(da * db), idx(da * db));
  for (std::size_t r1 = 0; r1 < da; ++r1)
    for (std::size_t c1 = 0; c1 < da; ++c1)
      out.block(idx(r1 * db), idx(c1 * db), idx(db), idx(db)) = a(r1, c1) * b.eigen();
  return ComplexMatrix(std::move(out));
}

Eigen::VectorXcd apply_local(const ComplexMatrix& op, std::size_t site, std::size_t probes,
                             const Eigen::VectorXcd& psi) {
  const std::size_t d = op.dim();
  if (site >= probes) throw Error(ErrorCode::DimensionMismatch, "site out of range");
  const std::size_t total = checked_power(d, probes, std::numeric_limits<std::size_t>::max());
  if (total != static_cast<std::size_t>(psi.size())) {
    throw Error(ErrorCode::DimensionMismatch, "register " + dims(psi.size(), total));
  }
  const std::size_t stride = checked_power(d, probes - 1 - site, total);
  const std::size_t block = stride * d;
  const auto& m = op.eigen();

  Eigen::VectorXcd out(psi.size());
  std::vector<Complex> column(d);
  for (std::size_t base = 0; base < total; base += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t offset = base + inner;
      for (std::size_t c = 0; c < d; ++c) column[c] = psi(idx(offset + c * stride));
      for (std::size_t r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += m(idx(r), idx(c)) * column[c];
        out(idx(offset + r * stride)) = acc;
      }
    }
  }
  return out;
}

Eigen::VectorXcd to_local_basis(const StateVector& psi, const EigenSystem& local_basis,
                                std::size_t probes) {
  const ComplexMatrix to_basis = local_basis.eigenvectors.adjoint();
  Eigen::VectorXcd amps = psi.eigen();
  for (std::size_t site = 0; site < probes; ++site) amps = apply_local(to_basis, site, probes, amps);
  return amps;
}

std::vector<double> outcome_probabilities(const StateVector& psi, const EigenSystem& basis) {
  if (psi.dim() != basis.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "measurement " + dims(psi.dim(), basis.dim()));
  }
  const Eigen::VectorXcd amps = basis.eigenvectors.eigen().adjoint() * psi.eigen();
  std::vector<double> p(basis.dim());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(amps(idx(k)));
  return p;
}

std::vector<std::uint64_t> measure_projective(const StateVector& psi, const EigenSystem& basis,
                                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::InsufficientSamples, "shots must be >= 1");
  const auto cdf = cumulative(outcome_probabilities(psi, basis));
  std::vector<std::uint64_t> counts(basis.dim(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[draw(cdf, rng.uniform())];
  return counts;
}

std::vector<std::vector<std::uint64_t>> measure_local(const StateVector& psi,
                                                      const EigenSystem& local_basis,
                                                      std::size_t probes, std::uint64_t shots,
                                                      std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::InsufficientSamples, "shots must be >= 1");
  const std::size_t d = local_basis.dim();
  const Eigen::VectorXcd amps = to_local_basis(psi, local_basis, probes);
  std::vector<double> p(static_cast<std::size_t>(amps.size()));
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(amps(idx(k)));
  const auto cdf = cumulative(p);

  std::vector<std::vector<std::uint64_t>> counts(probes, std::vector<std::uint64_t>(d, 0));
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::size_t outcome = draw(cdf, rng.uniform());
    for (std::size_t site = probes; site-- > 0;) {
      ++counts[site][outcome % d];
      outcome /= d;
    }
  }
  return counts;
}

}  // namespace metroscale
