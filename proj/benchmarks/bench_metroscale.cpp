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

#include <benchmark/benchmark.h>

#include "metroscale/genspec.hpp"
#include "metroscale/harness.hpp"
#include "metroscale/protocols.hpp"
#include "metroscale/random.hpp"
#include "metroscale/sampling.hpp"

namespace ms = metroscale;

static void BM_PhaseUnitary(benchmark::State& state) {
  ms::Rng rng(1);
  const auto h = ms::random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ms::phase_unitary(h, 0.3));
}
BENCHMARK(BM_PhaseUnitary)->Arg(2)->Arg(8)->Arg(64);

static void BM_DeltaHGhz(benchmark::State& state) {
  const auto q = ms::Generator::qubit_z();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto psi = ms::ghz_state(q, n);
  for (auto _ : state) benchmark::DoNotOptimize(ms::delta_h(psi, q, n));
}
BENCHMARK(BM_DeltaHGhz)->Arg(4)->Arg(10)->Arg(16);

static void BM_FringeTrial(benchmark::State& state) {
  ms::StrategyConfig cfg;
  cfg.protocol = ms::Protocol::GhzQC;
  cfg.probes = 8;
  cfg.nu = static_cast<std::uint64_t>(state.range(0));
  cfg.phi_true = ms::quadrature_phase(cfg.protocol, cfg.probes, 1.0);
  const auto setting = ms::fringe_setting(cfg);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ms::run_fringe_trial(cfg, setting, cfg.phi_true, ++seed));
}
BENCHMARK(BM_FringeTrial)->Arg(100)->Arg(10000);

static void BM_SweepCell(benchmark::State& state) {
  ms::SweepConfig cfg;
  cfg.nu = 1000;
  cfg.trials = 50;
  for (auto _ : state)
    benchmark::DoNotOptimize(ms::run_cell(cfg, ms::Protocol::Sequential,
                                          static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_SweepCell)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
