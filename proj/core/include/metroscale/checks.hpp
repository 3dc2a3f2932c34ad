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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metroscale {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst observed deviation or failure reason
  double seconds = 0.0;
};

/// Self-contained invariant suite behind the `check` subcommand: unitarity,
/// group law and normalization of U_phi; the QFI identity; the bound
/// identity between the parallel bounds; the sequential spectrum bound;
/// uncertainty-relation sanity of short runs; GHZ fast-path equivalence; and
/// csv/json round trips. Every check is seeded by `seed`.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 2026);

}  // namespace metroscale
