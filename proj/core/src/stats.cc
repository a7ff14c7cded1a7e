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

#include "bell_lab/stats.h"

#include <cmath>
#include <limits>

namespace bell_lab {

bool Estimate::within(double target, double sigmas) const {
    return std::abs(mean - target) <= sigmas * standardError;
}

Estimate batch_means(std::span<const double> values) {
    Estimate e;
    const std::size_t n = values.size();
    if (n == 0) {
        e.mean = std::numeric_limits<double>::quiet_NaN();
        e.standardError = std::numeric_limits<double>::quiet_NaN();
        return e;
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    e.mean = sum / static_cast<double>(n);
    if (n < 2) {
        e.standardError = std::numeric_limits<double>::infinity();
        return e;
    }
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    e.standardError = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    return e;
}

}  // namespace bell_lab
