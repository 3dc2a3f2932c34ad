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

// Seeded random instances for invariant checks: Haar states and unitaries,
// GUE-like Hermitians and random sequential circuits.

#pragma once

#include <cstddef>

#include "metroscale/genspec.hpp"
#include "metroscale/qcore.hpp"
#include "metroscale/random.hpp"

namespace metroscale {

/// Box-Muller on Rng::uniform, so the stream is toolchain-independent.
double standard_normal(Rng& rng);

StateVector random_state(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// `passes` uses of U_phi with Haar-random V_0 ... V_N on probe (x) ancilla.
SequentialCircuit random_sequential_circuit(const Generator& g, std::size_t passes,
                                            std::size_t ancilla_dim, Rng& rng);

}  // namespace metroscale
