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

#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "metroscale/parallel.hpp"
#include "metroscale/random.hpp"

namespace metroscale {
namespace {

// Values from an independent SplitMix64 implementation.
TEST(DeriveSeed, MatchesReferenceFinalizer) {
  EXPECT_EQ(derive_seed(0, 0), 16294208416658607535ULL);
  EXPECT_EQ(derive_seed(1, 0), 10451216379200822465ULL);
  EXPECT_EQ(derive_seed(42, 7), 14769051326987775908ULL);
  EXPECT_EQ(derive_seed(~0ULL, 3), 7862637804313477842ULL);
}

TEST(DeriveSeed, ChildrenAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_seed(99, i));
  EXPECT_EQ(seen.size(), 10000U);
}

// The 10000th output for the default seed is fixed by the C++ standard.
TEST(Rng, EngineIsStandardMt19937_64) {
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(Rng, UniformUsesTop53Bits) {
  Rng rng(12345);
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.35762972288842587);
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.40044261704406114);
  EXPECT_DOUBLE_EQ(rng.uniform(), 0.6893833170027684);
}

TEST(Rng, UniformStaysInHalfOpenUnitInterval) {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
  try {
    parallel_for(100, 3, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
}

TEST(ParallelFor, ZeroCountIsANoOp) {
  parallel_for(0, 8, [](std::size_t) { FAIL(); });
}

TEST(Workers, EnvironmentOverride) {
  ::setenv("METROSCALE_WORKERS", "3", 1);
  EXPECT_EQ(default_worker_count(), 3U);
  ::setenv("METROSCALE_WORKERS", "junk", 1);
  EXPECT_GE(default_worker_count(), 1U);
  ::unsetenv("METROSCALE_WORKERS");
  EXPECT_GE(default_worker_count(), 1U);
}

}  // namespace
}  // namespace metroscale
