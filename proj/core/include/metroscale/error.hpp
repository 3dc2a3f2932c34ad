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

#include <stdexcept>
#include <string>
#include <string_view>

namespace metroscale {

enum class ErrorCode {
  // linear algebra
  NonHermitian,
  NonUnitary,
  NotNormalized,
  DimensionMismatch,
  DimensionTooLarge,
  NumericalFailure,
  // generator analysis
  ZeroGap,
  NonUnitaryInterleave,
  // protocols
  DegenerateOperatingPoint,
  DigitAmbiguous,
  // statistics
  ZeroSlope,
  ZeroDerivative,
  InsufficientSamples,
  DegenerateFit,
  // harness
  InvalidConfig,
  ConfigNotFound,
  IoFailure,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by user input (bad config, missing file) rather
/// than by the numerics. The CLI maps these to exit code 1.
bool is_config_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metroscale
