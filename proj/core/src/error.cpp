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

#include "metroscale/error.hpp"

namespace metroscale {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ZeroGap: return "ZeroGap";
    case ErrorCode::NonUnitaryInterleave: return "NonUnitaryInterleave";
    case ErrorCode::DegenerateOperatingPoint: return "DegenerateOperatingPoint";
    case ErrorCode::DigitAmbiguous: return "DigitAmbiguous";
    case ErrorCode::ZeroSlope: return "ZeroSlope";
    case ErrorCode::ZeroDerivative: return "ZeroDerivative";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ConfigNotFound: return "ConfigNotFound";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

bool is_config_error(ErrorCode code) {
  return code == ErrorCode::InvalidConfig || code == ErrorCode::ConfigNotFound ||
         code == ErrorCode::IoFailure;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace metroscale
