// Copyright 2026 The bell_lab Authors
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

#include "bell_lab/error.h"

namespace bell_lab {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kOutOfRange:
            return "OutOfRange";
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kCapExceeded:
            return "CapExceeded";
        case ErrorCode::kNumericalFailure:
            return "NumericalFailure";
        case ErrorCode::kNotCovariant:
            return "NotCovariant";
        case ErrorCode::kSeedStarvation:
            return "SeedStarvation";
        case ErrorCode::kParse:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
}

SeedStarvation::SeedStarvation(std::size_t stage, double demanded, double available)
    : Error(
          ErrorCode::kSeedStarvation,
          "stage " + std::to_string(stage) + " demands " + std::to_string(demanded) + " input bits but only " +
              std::to_string(available) + " are available"),
      stage_(stage) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace bell_lab
