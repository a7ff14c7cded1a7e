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

#ifndef BELL_LAB_STATS_H
#define BELL_LAB_STATS_H

#include <cstddef>
#include <span>

namespace bell_lab {

inline constexpr std::size_t kBatchCount = 100;

/// A Monte Carlo point estimate with its standard error.
struct Estimate {
    double mean = 0.0;
    double standardError = 0.0;

    /// |mean - target| <= sigmas * standardError.
    bool within(double target, double sigmas = 3.0) const;
};

/// Mean of the batch values and sd/sqrt(count) of their spread.
Estimate batch_means(std::span<const double> batch_values);

}  // namespace bell_lab

#endif
