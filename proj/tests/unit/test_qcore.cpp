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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "metroscale/error.hpp"
#include "metroscale/qcore.hpp"
#include "metroscale/sampling.hpp"
#include "oracles.hpp"

namespace metroscale {
namespace {

using C = Complex;

ComplexMatrix pauli_x() { return ComplexMatrix(2, std::vector<C>{0, 1, 1, 0}); }

TEST(CheckedPower, OverflowAndCap) {
  EXPECT_EQ(checked_power(2, 10), 1024U);
  EXPECT_EQ(checked_power(3, 0), 1U);
  EXPECT_EQ(checked_power(2, 21), 0U);
  EXPECT_EQ(checked_power(2, 12, 4096), 4096U);
  EXPECT_EQ(checked_power(2, 13, 4096), 0U);
  EXPECT_EQ(checked_power(1000, 1000), 0U);
}

TEST(StateVector, RejectsUnnormalizedInput) {
  EXPECT_THROW(StateVector(std::vector<C>{1.0, 1.0}), Error);
  try {
    StateVector(std::vector<C>{1.0, 1.0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
  EXPECT_THROW(StateVector::normalized({0.0, 0.0}), Error);
  const auto s = StateVector::normalized({3.0, C(0.0, 4.0)});
  EXPECT_NEAR(std::abs(s[1]), 0.8, 1e-15);
}

TEST(Eigensystem, RejectsNonHermitian) {
  const ComplexMatrix m(2, std::vector<C>{0, 1, 0, 0});
  try {
    eigensystem(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHermitian);
  }
}

TEST(Eigensystem, PauliXByHand) {
  const EigenSystem es = eigensystem(pauli_x());
  EXPECT_NEAR(es.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues[1], 1.0, 1e-14);
  // Phase convention: largest component real and positive.
  for (std::size_t k = 0; k < 2; ++k) {
    const StateVector v = es.vector(k);
    const C big = std::abs(v[0]) >= std::abs(v[1]) - 1e-12 ? v[0] : v[1];
    EXPECT_NEAR(big.imag(), 0.0, 1e-14);
    EXPECT_GT(big.real(), 0.0);
  }
}

// Property: eigenvalues agree with the roots of the characteristic
// polynomial, and V diag(l) V^dagger reconstructs H.
TEST(Eigensystem, MatchesCharacteristicPolynomialRoots) {
  Rng rng(101);
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      const ComplexMatrix h = random_hermitian(d, rng);
      const EigenSystem es = eigensystem(h);
      const auto roots = oracle::real_roots(oracle::characteristic_polynomial(oracle::from(h)));
      ASSERT_EQ(roots.size(), d);
      for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(es.eigenvalues[k], roots[k], 1e-8) << d;
      const ComplexMatrix back = es.spectral([](double l) { return C(l, 0.0); });
      EXPECT_LT(back.max_abs_diff(h), 1e-12);
    }
  }
}

TEST(PhaseUnitary, MatchesTaylorSeries) {
  Rng rng(7);
  for (std::size_t d = 2; d <= 5; ++d) {
    const ComplexMatrix h = random_hermitian(d, rng);
    for (double phi : {-2.5, -0.1, 0.0, 0.3, 1.7, 9.0}) {
      const ComplexMatrix u = phase_unitary(h, phi);
      EXPECT_LT(oracle::max_diff(oracle::taylor_phase_unitary(oracle::from(h), phi), u), 1e-11)
          << "d=" << d << " phi=" << phi;
    }
  }
}

TEST(PhaseUnitary, QubitZClosedForm) {
  const ComplexMatrix h = ComplexMatrix::diagonal(std::vector<double>{-0.5, 0.5});
  const double phi = 0.77;
  const ComplexMatrix u = phase_unitary(h, phi);
  EXPECT_LT(std::abs(u(0, 0) - std::exp(C(0, 0.5 * phi))), 1e-15);
  EXPECT_LT(std::abs(u(1, 1) - std::exp(C(0, -0.5 * phi))), 1e-15);
  EXPECT_LT(std::abs(u(0, 1)), 1e-15);
}

// Properties: unitarity and the group law U(a) U(b) = U(a + b).
TEST(PhaseUnitary, UnitaryAndGroupLaw) {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix h = random_hermitian(2 + rep % 4, rng);
    const double a = 6.0 * rng.uniform() - 3.0;
    const double b = 6.0 * rng.uniform() - 3.0;
    const ComplexMatrix ua = phase_unitary(h, a);
    EXPECT_TRUE(ua.is_unitary(1e-12));
    EXPECT_LT((ua * phase_unitary(h, b)).max_abs_diff(phase_unitary(h, a + b)), 1e-12);
  }
}

TEST(Apply, ChecksDimensionsAndUnitarity) {
  const StateVector psi = StateVector::basis(3, 0);
  try {
    apply(pauli_x(), psi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  const ComplexMatrix not_unitary(2, std::vector<C>{1, 1, 0, 1});
  try {
    apply(not_unitary, StateVector::basis(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitary);
  }
}

TEST(Apply, PreservesNorm) {
  Rng rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t d = 2 + rep % 7;
    const StateVector psi = random_state(d, rng);
    const Eigen::VectorXcd raw = random_unitary(d, rng).eigen() * psi.eigen();
    EXPECT_NEAR(raw.norm(), 1.0, 1e-13);
  }
}

TEST(Tensor, MatchesIndexLoopKronecker) {
  Rng rng(10);
  const ComplexMatrix a = random_unitary(2, rng);
  const ComplexMatrix b = random_unitary(3, rng);
  EXPECT_LT(oracle::max_diff(oracle::kron(oracle::from(a), oracle::from(b)), tensor(a, b)), 1e-15);

  const StateVector x = random_state(2, rng);
  const StateVector y = random_state(3, rng);
  const StateVector xy = tensor(x, y);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_LT(std::abs(xy[i * 3 + j] - x[i] * y[j]), 1e-15);
}

TEST(ApplyLocal, MatchesExplicitKronecker) {
  Rng rng(11);
  for (std::size_t d : {2U, 3U}) {
    const std::size_t n = 3;
    const ComplexMatrix op = random_hermitian(d, rng);
    const StateVector psi = random_state(checked_power(d, n), rng);
    for (std::size_t site = 0; site < n; ++site) {
      oracle::Mat full = site == 0 ? oracle::from(op) : oracle::identity(d);
      for (std::size_t s = 1; s < n; ++s)
        full = oracle::kron(full, s == site ? oracle::from(op) : oracle::identity(d));
      const Eigen::VectorXcd got = apply_local(op, site, n, psi.eigen());
      for (std::size_t i = 0; i < psi.dim(); ++i) {
        C want = 0.0;
        for (std::size_t j = 0; j < psi.dim(); ++j) want += full[i][j] * psi[j];
        EXPECT_LT(std::abs(got(static_cast<Eigen::Index>(i)) - want), 1e-13);
      }
    }
  }
}

TEST(Measurement, BornProbabilities) {
  const EigenSystem xb = eigensystem(pauli_x());
  const StateVector plus = StateVector::normalized({1.0, 1.0});
  const auto p = outcome_probabilities(plus, xb);
  EXPECT_NEAR(p[0], 0.0, 1e-15);
  EXPECT_NEAR(p[1], 1.0, 1e-15);
}

// Binomial statistics: a 4-sigma window on the count of a p = 0.3 outcome.
TEST(Measurement, ProjectiveCountsFollowBinomial) {
  const EigenSystem zb = eigensystem(ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0}));
  const StateVector psi(std::vector<Complex>{std::sqrt(0.3), std::sqrt(0.7)});
  const std::uint64_t shots = 200000;
  const auto counts = measure_projective(psi, zb, shots, 77);
  EXPECT_EQ(counts[0] + counts[1], shots);
  const double sigma = std::sqrt(shots * 0.3 * 0.7);
  EXPECT_NEAR(static_cast<double>(counts[0]), shots * 0.3, 4.0 * sigma);
  EXPECT_EQ(counts, measure_projective(psi, zb, shots, 77));
}

TEST(Measurement, LocalCountsOnProductState) {
  const EigenSystem xb = eigensystem(pauli_x());
  const StateVector plus = StateVector::normalized({1.0, 1.0});
  const StateVector reg = tensor(tensor(plus, plus), StateVector::basis(2, 0));
  const auto counts = measure_local(reg, xb, 3, 4000, 5);
  EXPECT_EQ(counts[0][1], 4000U);
  EXPECT_EQ(counts[1][1], 4000U);
  const double sigma = std::sqrt(4000 * 0.25);
  EXPECT_NEAR(static_cast<double>(counts[2][1]), 2000.0, 4.0 * sigma);
}

}  // namespace
}  // namespace metroscale
