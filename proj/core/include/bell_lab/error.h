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

#ifndef BELL_LAB_ERROR_H
#define BELL_LAB_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bell_lab {

enum class ErrorCode {
    kInvalidArgument,
    kOutOfRange,
    kDimensionMismatch,
    kCapExceeded,
    kNumericalFailure,
    kNotCovariant,
    kSeedStarvation,
    kParse,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// A chain stage asked for more input bits than were available. `stage()` is 1-based.
class SeedStarvation : public Error {
   public:
    SeedStarvation(std::size_t stage, double demanded, double available);
    std::size_t stage() const noexcept { return stage_; }

   private:
    std::size_t stage_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace bell_lab

#endif
