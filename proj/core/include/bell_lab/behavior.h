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

#ifndef BELL_LAB_BEHAVIOR_H
#define BELL_LAB_BEHAVIOR_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bell_lab {

/// Input and outcome cardinalities of a two-party Bell scenario.
///
/// Every table in the library (behaviors, expression coefficients) is stored
/// flat in row-major (x, y, a, b) order; `index` is the single source of that
/// layout.
struct Scenario {
    int nX = 2;
    int nY = 2;
    int nA = 2;
    int nB = 2;

    /// Throws InvalidArgument unless nX, nY >= 1 and nA, nB >= 2.
    void validate() const;

    std::size_t table_size() const {
        return static_cast<std::size_t>(nX) * nY * nA * nB;
    }
    std::size_t index(int x, int y, int a, int b) const {
        return ((static_cast<std::size_t>(x) * nY + y) * nA + a) * nB + b;
    }

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

/// The (2,2,2,2) scenario.
inline constexpr Scenario kChshScenario{2, 2, 2, 2};

/// Maps outcome index to the +-1 value used by correlators: 0 -> +1, 1 -> -1.
/// Outcomes beyond 1 map to 0 (they do not enter two-outcome correlators).
inline int outcome_sign(int outcome) {
    return outcome == 0 ? 1 : (outcome == 1 ? -1 : 0);
}

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kNegativityTolerance = 1e-12;

/// Conditional distribution p(a,b|x,y). Immutable once constructed.
class Behavior {
   public:
    /// Validates the table: entries in [-1e-12, 0) are clamped to zero, anything
    /// more negative is rejected, and every (x,y) block must sum to 1 within
    /// 1e-12.
    Behavior(Scenario scenario, std::vector<double> table);

    const Scenario &scenario() const { return scenario_; }
    std::span<const double> table() const { return table_; }
    double operator()(int x, int y, int a, int b) const {
        return table_[scenario_.index(x, y, a, b)];
    }

    /// Uniform behavior p = 1/(nA nB).
    static Behavior uniform(const Scenario &scenario);

   private:
    Scenario scenario_;
    std::vector<double> table_;
};

/// Convex combination sum_i weights[i] * parts[i]; all parts must share a scenario.
Behavior mixture(std::span<const Behavior> parts, std::span<const double> weights);

/// Sum over (a,b) of outcome_sign(a) outcome_sign(b) p(a,b|x,y).
double correlator(const Behavior &behavior, int x, int y);

/// Largest deviation from no-signaling over both parties' marginals.
double signaling_deviation(const Behavior &behavior);

/// Alice marginal p(a|x) as seen with Bob's input y.
double alice_marginal(const Behavior &behavior, int x, int y, int a);
double bob_marginal(const Behavior &behavior, int x, int y, int b);

/// Deterministic local response functions: Alice answers alice[x], Bob bob[y].
struct DeterministicStrategy {
    std::vector<int> alice;
    std::vector<int> bob;

    friend bool operator==(const DeterministicStrategy &, const DeterministicStrategy &) = default;
};

/// Linear functional sum coeffs(x,y,a,b) p(a,b|x,y) with optional cached bounds.
class BellExpression {
   public:
    BellExpression(Scenario scenario, std::vector<double> coeffs);

    const Scenario &scenario() const { return scenario_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator()(int x, int y, int a, int b) const {
        return coeffs_[scenario_.index(x, y, a, b)];
    }

    std::optional<double> localBound;
    std::optional<double> algebraicBound;

    /// Throws InvalidArgument when both bounds are present and local > algebraic.
    void check_bounds() const;

    static BellExpression zero(const Scenario &scenario);
    BellExpression scaled(double factor) const;

   private:
    Scenario scenario_;
    std::vector<double> coeffs_;
};

}  // namespace bell_lab

#endif
