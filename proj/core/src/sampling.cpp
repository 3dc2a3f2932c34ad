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

#include "metroscale/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/QR>

namespace metroscale {

namespace {

Eigen::MatrixXcd ginibre(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = standard_normal(rng);
      g(r, c) = Complex(re, standard_normal(rng));
    }
  }
  return g;
}

}  // namespace

double standard_normal(Rng& rng) {
  const double u1 = 1.0 - rng.uniform();  // (0, 1]
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

StateVector random_state(std::size_t dim, Rng& rng) {
  std::vector<Complex> amps(dim);
  for (auto& a : amps) {
    const double re = standard_normal(rng);
    a = Complex(re, standard_normal(rng));
  }
  return StateVector::normalized(std::move(amps));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so Q is Haar distributed.
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rng);
  return ComplexMatrix(Eigen::MatrixXcd(0.5 * (g + g.adjoint())));
}

SequentialCircuit random_sequential_circuit(const Generator& g, std::size_t passes,
                                            std::size_t ancilla_dim, Rng& rng) {
  std::vector<ComplexMatrix> vs;
  vs.reserve(passes + 1);
  for (std::size_t j = 0; j <= passes; ++j) vs.push_back(random_unitary(g.dim() * ancilla_dim, rng));
  return SequentialCircuit(g, std::move(vs), ancilla_dim);
}

}  // namespace metroscale
