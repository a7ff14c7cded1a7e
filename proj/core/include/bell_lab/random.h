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

#ifndef BELL_LAB_RANDOM_H
#define BELL_LAB_RANDOM_H

#include <cstdint>
#include <random>

#include "bell_lab/linalg.h"

namespace bell_lab {

/// SplitMix64 finalizer applied to (seed, stream): independent seeds for
/// counter-indexed streams, so results never depend on how work is split.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(stream_seed(seed, stream)) {
    }

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform point on the unit sphere (z uniform in [-1,1], azimuth uniform).
    Vec3 sphere();
    /// Standard exponential variate.
    double exponential();

   private:
    std::mt19937_64 engine_;
};

}  // namespace bell_lab

#endif
