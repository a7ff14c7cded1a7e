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

#ifndef BELL_LAB_LOCAL_POLYTOPE_H
#define BELL_LAB_LOCAL_POLYTOPE_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bell_lab/behavior.h"

namespace bell_lab {

inline constexpr std::uint64_t kDefaultStrategyCap = 10'000'000;
inline constexpr double kMembershipTolerance = 1e-9;

/// nA^nX * nB^nY, or CapExceeded when it is larger than `cap`.
std::uint64_t strategy_count(const Scenario &scenario, std::uint64_t cap = kDefaultStrategyCap);

/// Strategy number `index` in lexicographic order of (alice[0..nX), bob[0..nY)),
/// alice[0] being the most significant digit.
DeterministicStrategy strategy_at(const Scenario &scenario, std::uint64_t index);

/// All deterministic strategies, in the lexicographic order of `strategy_at`.
std::vector<DeterministicStrategy> enumerate_strategies(
    const Scenario &scenario, std::uint64_t cap = kDefaultStrategyCap);

/// p(a,b|x,y) = [a = alice[x]] [b = bob[y]].
Behavior strategy_behavior(const DeterministicStrategy &strategy, const Scenario &scenario);

double evaluate(const BellExpression &expr, const Behavior &behavior);
double evaluate(const BellExpression &expr, const DeterministicStrategy &strategy);

/// Maximum of `expr` over the local polytope (attained at a deterministic strategy).
double local_bound(const BellExpression &expr, std::uint64_t cap = kDefaultStrategyCap);

/// Maximum over all behaviors: per (x,y), the largest coefficient.
double algebraic_bound(const BellExpression &expr);

/// Per (x,y), the first (a,b) in row-major order holding the largest coefficient.
std::vector<std::pair<int, int>> algebraic_maximizers(const BellExpression &expr);

struct WeightedStrategy {
    DeterministicStrategy strategy;
    std::uint64_t index = 0;
    double weight = 0.0;
};

struct LocalMembershipResult {
    bool isLocal = false;
    /// Convex decomposition (only strategies with positive weight), when local.
    std::vector<WeightedStrategy> weights;
    /// Separating inequality with its local bound attached, when not local.
    std::optional<BellExpression> witness;
    double witnessValue = 0.0;
    /// Largest per-entry mismatch of the decomposition, or the phase-1 optimum
    /// when not local.
    double residual = 0.0;
};

struct MembershipOptions {
    double tolerance = kMembershipTolerance;
    std::uint64_t cap = kDefaultStrategyCap;
};

/// Decides whether `behavior` is a convex mixture of deterministic strategies.
/// Returns a decomposition or a separating witness from the LP dual. Throws
/// NumericalFailure when neither certificate clears the tolerance.
LocalMembershipResult is_local(const Behavior &behavior, const MembershipOptions &options = {});

/// E(0,0) + E(0,1) + E(1,0) - E(1,1) in coefficient form, bounds 2 and 4 attached.
BellExpression chsh_expression();

/// The 8 relabelings of CHSH: one correlator term negated (4 choices) times a
/// global sign. Entry 0 is chsh_expression().
std::vector<BellExpression> chsh_symmetries();

/// Maximum CHSH value over the 8 relabelings.
double max_chsh(const Behavior &behavior);

}  // namespace bell_lab

#endif
