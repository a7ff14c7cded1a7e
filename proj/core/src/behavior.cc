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

#include "bell_lab/behavior.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bell_lab/error.h"

namespace bell_lab {

void Scenario::validate() const {
    if (nX < 1 || nY < 1 || nA < 2 || nB < 2) {
        fail(
            ErrorCode::kInvalidArgument,
            "invalid scenario (" + std::to_string(nX) + "," + std::to_string(nY) + "," + std::to_string(nA) + "," +
                std::to_string(nB) + "): need nX,nY >= 1 and nA,nB >= 2");
    }
}

Behavior::Behavior(Scenario scenario, std::vector<double> table) : scenario_(scenario), table_(std::move(table)) {
    scenario_.validate();
    if (table_.size() != scenario_.table_size()) {
        fail(ErrorCode::kDimensionMismatch, "behavior table has wrong size for its scenario");
    }
    for (double &p : table_) {
        if (!std::isfinite(p)) {
            fail(ErrorCode::kInvalidArgument, "behavior entry is not finite");
        }
        if (p < 0.0) {
            if (p < -kNegativityTolerance) {
                fail(ErrorCode::kOutOfRange, "behavior entry " + std::to_string(p) + " is negative");
            }
            p = 0.0;
        }
    }
    const std::size_t block = static_cast<std::size_t>(scenario_.nA) * scenario_.nB;
    for (std::size_t start = 0; start < table_.size(); start += block) {
        double sum = 0.0;
        for (std::size_t k = 0; k < block; ++k) {
            sum += table_[start + k];
        }
        if (std::abs(sum - 1.0) > kNormalizationTolerance) {
            fail(ErrorCode::kInvalidArgument, "behavior block is not normalized (sum " + std::to_string(sum) + ")");
        }
    }
}

Behavior Behavior::uniform(const Scenario &scenario) {
    scenario.validate();
    return Behavior(scenario, std::vector<double>(scenario.table_size(), 1.0 / (scenario.nA * scenario.nB)));
}

Behavior mixture(std::span<const Behavior> parts, std::span<const double> weights) {
    if (parts.empty() || parts.size() != weights.size()) {
        fail(ErrorCode::kDimensionMismatch, "mixture needs one weight per behavior");
    }
    const Scenario &s = parts.front().scenario();
    std::vector<double> table(s.table_size(), 0.0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].scenario() != s) {
            fail(ErrorCode::kDimensionMismatch, "mixture of behaviors from different scenarios");
        }
        auto t = parts[i].table();
        for (std::size_t k = 0; k < table.size(); ++k) {
            table[k] += weights[i] * t[k];
        }
    }
    return Behavior(s, std::move(table));
}

double correlator(const Behavior &behavior, int x, int y) {
    const Scenario &s = behavior.scenario();
    double e = 0.0;
    for (int a = 0; a < s.nA; ++a) {
        for (int b = 0; b < s.nB; ++b) {
            e += outcome_sign(a) * outcome_sign(b) * behavior(x, y, a, b);
        }
    }
    return e;
}

double alice_marginal(const Behavior &behavior, int x, int y, int a) {
    double m = 0.0;
    for (int b = 0; b < behavior.scenario().nB; ++b) {
        m += behavior(x, y, a, b);
    }
    return m;
}

double bob_marginal(const Behavior &behavior, int x, int y, int b) {
    double m = 0.0;
    for (int a = 0; a < behavior.scenario().nA; ++a) {
        m += behavior(x, y, a, b);
    }
    return m;
}

double signaling_deviation(const Behavior &behavior) {
    const Scenario &s = behavior.scenario();
    double worst = 0.0;
    for (int x = 0; x < s.nX; ++x) {
        for (int a = 0; a < s.nA; ++a) {
            const double ref = alice_marginal(behavior, x, 0, a);
            for (int y = 1; y < s.nY; ++y) {
                worst = std::max(worst, std::abs(alice_marginal(behavior, x, y, a) - ref));
            }
        }
    }
    for (int y = 0; y < s.nY; ++y) {
        for (int b = 0; b < s.nB; ++b) {
            const double ref = bob_marginal(behavior, 0, y, b);
            for (int x = 1; x < s.nX; ++x) {
                worst = std::max(worst, std::abs(bob_marginal(behavior, x, y, b) - ref));
            }
        }
    }
    return worst;
}

BellExpression::BellExpression(Scenario scenario, std::vector<double> coeffs)
    : scenario_(scenario), coeffs_(std::move(coeffs)) {
    scenario_.validate();
    if (coeffs_.size() != scenario_.table_size()) {
        fail(ErrorCode::kDimensionMismatch, "coefficient table has wrong size for its scenario");
    }
}

void BellExpression::check_bounds() const {
    if (localBound && algebraicBound && *localBound > *algebraicBound) {
        fail(ErrorCode::kInvalidArgument, "local bound exceeds algebraic bound");
    }
}

BellExpression BellExpression::zero(const Scenario &scenario) {
    scenario.validate();
    return BellExpression(scenario, std::vector<double>(scenario.table_size(), 0.0));
}

BellExpression BellExpression::scaled(double factor) const {
    std::vector<double> c = coeffs_;
    for (double &v : c) {
        v *= factor;
    }
    BellExpression out(scenario_, std::move(c));
    if (factor >= 0.0) {
        if (localBound) out.localBound = *localBound * factor;
        if (algebraicBound) out.algebraicBound = *algebraicBound * factor;
    }
    return out;
}

}  // namespace bell_lab
