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
#include "metroscale/genspec.hpp"
#include "metroscale/sampling.hpp"
#include "oracles.hpp"

namespace metroscale {
namespace {

using C = Complex;

std::vector<C> amplitudes(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::NumericalFailure;
}

TEST(Generator, Presets) {
  const Generator q = Generator::qubit_z();
  EXPECT_DOUBLE_EQ(q.lambda_min(), -0.5);
  EXPECT_DOUBLE_EQ(q.lambda_max(), 0.5);
  EXPECT_DOUBLE_EQ(q.gap(), 1.0);
  EXPECT_DOUBLE_EQ(Generator::qutrit().gap(), 2.0);
}

TEST(Generator, ZeroGapAndNonHermitian) {
  const Generator flat(ComplexMatrix::identity(3));
  EXPECT_EQ(code_of([&] { flat.require_gap(); }), ErrorCode::ZeroGap);
  EXPECT_EQ(code_of([&] { extremal_superposition(flat); }), ErrorCode::ZeroGap);
  EXPECT_EQ(code_of([] { Generator(ComplexMatrix(2, std::vector<C>{0, C(0, 1), C(0, 1), 0})); }),
            ErrorCode::NonHermitian);
}

TEST(ExtremalSuperposition, QubitAndQutrit) {
  const StateVector s = extremal_superposition(Generator::qubit_z());
  EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  const StateVector t = extremal_superposition(Generator::qutrit());
  EXPECT_NEAR(std::abs(t[0]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(t[1]), 0.0, 1e-15);
  EXPECT_NEAR(delta_h(t, Generator::qutrit(), 1), 1.0, 1e-12);
}

// Direct <H^2> - <H>^2 on a random generator.
TEST(ExtremalSuperposition, VarianceIsQuarterGapSquared) {
  Rng rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const Generator g(random_hermitian(4, rng));
    const StateVector s = extremal_superposition(g);
    const double spread = oracle::spread(oracle::from(g.matrix()), amplitudes(s));
    EXPECT_NEAR(spread * spread, g.gap() * g.gap() / 4.0, 1e-9);
  }
}

TEST(GhzState, AmplitudesAndLimits) {
  const Generator q = Generator::qubit_z();
  const StateVector g3 = ghz_state(q, 3);
  for (std::size_t i = 0; i < 8; ++i) {
    const double want = (i == 0 || i == 7) ? 1.0 / std::sqrt(2.0) : 0.0;
    EXPECT_NEAR(std::abs(g3[i]), want, 1e-15);
  }
  const StateVector g1 = ghz_state(q, 1);
  const StateVector e = extremal_superposition(q);
  EXPECT_NEAR(std::abs(g1.inner(e)), 1.0, 1e-15);
  EXPECT_EQ(code_of([&] { ghz_state(q, 21); }), ErrorCode::DimensionTooLarge);
}

TEST(DeltaH, ClosedFormCases) {
  const Generator q = Generator::qubit_z();
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_NEAR(delta_h(product_state(extremal_superposition(q), n), q, n), std::sqrt(n) / 2.0, 1e-12);
  }
  EXPECT_NEAR(delta_h(ghz_state(q, 5), q, 5), 2.5, 1e-12);
  EXPECT_NEAR(delta_h(ghz_state(Generator::qutrit(), 2), Generator::qutrit(), 2), 2.0, 1e-9);
  EXPECT_NEAR(delta_h(product_state(q.max_eigenvector(), 4), q, 4), 0.0, 1e-12);
}

TEST(DeltaH, MatchesMaterializedCollectiveGenerator) {
  Rng rng(12);
  for (std::size_t d : {2U, 3U}) {
    const Generator g(random_hermitian(d, rng));
    const std::size_t n = 3;
    const oracle::Mat h = oracle::collective(oracle::from(g.matrix()), n);
    for (int rep = 0; rep < 5; ++rep) {
      const StateVector psi = random_state(checked_power(d, n), rng);
      EXPECT_NEAR(delta_h(psi, g, n), oracle::spread(h, amplitudes(psi)), 1e-11);
    }
  }
}

TEST(DeltaH, DimensionMismatch) {
  EXPECT_EQ(code_of([] { delta_h(StateVector::basis(6, 0), Generator::qubit_z(), 3); }),
            ErrorCode::DimensionMismatch);
}

// Randomized bounds: sqrt(N) gap / 2 on products, N gap / 2 on anything.
TEST(DeltaH, ProductAndEntangledBounds) {
  Rng rng(13);
  const Generator q = Generator::qubit_z();
  const std::size_t n = 4;
  for (int rep = 0; rep < 200; ++rep) {
    StateVector prod = random_state(2, rng);
    for (std::size_t k = 1; k < n; ++k) prod = tensor(prod, random_state(2, rng));
    EXPECT_LE(delta_h(prod, q, n), std::sqrt(4.0) / 2.0 + 1e-9);
    EXPECT_LE(delta_h(random_state(16, rng), q, n), 4.0 / 2.0 + 1e-9);
  }
}

TEST(SequentialCircuit, ValidatesInterleaves) {
  const Generator q = Generator::qubit_z();
  const ComplexMatrix bad(2, std::vector<C>{1, 1, 0, 1});
  EXPECT_EQ(code_of([&] {
              SequentialCircuit(q, {ComplexMatrix::identity(2), bad}, 1);
            }),
            ErrorCode::NonUnitaryInterleave);
  EXPECT_EQ(code_of([&] {
              SequentialCircuit(q, {ComplexMatrix::identity(2), ComplexMatrix::identity(3)}, 1);
            }),
            ErrorCode::DimensionMismatch);
}

TEST(SequentialGenerator, IdentityInterleavesGiveNH) {
  const Generator q = Generator::qutrit();
  for (std::size_t n : {1U, 2U, 5U}) {
    const auto c = SequentialCircuit::plain(q, n);
    const ComplexMatrix h = sequential_generator(c, 0.4);
    EXPECT_LT(h.max_abs_diff(static_cast<double>(n) * q.matrix()), 1e-12);
    const SpectrumReport r = spectrum_bound_check(c, 0.4);
    EXPECT_NEAR(r.max_eig, static_cast<double>(n) * q.lambda_max(), 1e-12);
    EXPECT_TRUE(r.within_bounds);
  }
}

TEST(SequentialGenerator, AncillaLiftAndRandomCircuits) {
  Rng rng(14);
  const Generator q = Generator::qubit_z();
  for (int rep = 0; rep < 20; ++rep) {
    const auto c = random_sequential_circuit(q, 3, 2, rng);
    const double phi = 2.0 * rng.uniform() - 1.0;
    const ComplexMatrix h = sequential_generator(c, phi);
    EXPECT_TRUE(h.is_hermitian(1e-8));
    EXPECT_LT(h.max_abs_diff(finite_difference_generator(c, phi)), 1e-4);
    EXPECT_TRUE(spectrum_bound_check(c, phi).within_bounds);
    // Each conjugated copy keeps the spectrum of H (x) I.
    const auto lifted = eigensystem(c.lifted_generator()).eigenvalues;
    for (const ComplexMatrix& term : sequential_generator_terms(c, phi)) {
      const auto ev = eigensystem(term).eigenvalues;
      for (std::size_t k = 0; k < ev.size(); ++k) EXPECT_NEAR(ev[k], lifted[k], 1e-8);
    }
  }
}

TEST(SequentialGenerator, FlipInterleaveCancelsPhase) {
  const Generator q = Generator::qubit_z();
  const ComplexMatrix flip(2, std::vector<C>{0, 1, 1, 0});
  const SequentialCircuit c(q, {ComplexMatrix::identity(2), flip, ComplexMatrix::identity(2)}, 1);
  const SpectrumReport r = spectrum_bound_check(c, 0.3);
  EXPECT_TRUE(r.within_bounds);
  // X U X = U^dagger, so the two uses cancel and the phase drops out.
  EXPECT_LT(sequential_generator(c, 0.3).frobenius_norm(), 1e-12);
}

}  // namespace
}  // namespace metroscale
