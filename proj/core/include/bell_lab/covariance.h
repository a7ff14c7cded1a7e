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

#ifndef BELL_LAB_COVARIANCE_H
#define BELL_LAB_COVARIANCE_H

#include <cstdint>
#include <vector>

#include "bell_lab/behavior.h"
#include "bell_lab/random.h"

namespace bell_lab {

/// Deterministic hidden-variable model described in two time orderings over a
/// finite alphabet of lambdaCount values.
///
/// In the AB frame Alice measures first: a = aliceFirst(x, l), b = bobSecond(x, y, l).
/// In the BA frame Bob measures first:   b = bobFirst(y, l),   a = aliceSecond(x, y, l).
/// Tables are flat with lambda fastest: (x, l), (x, y, l), (y, l), (x, y, l).
struct CovariantModel {
    Scenario scenario;
    int lambdaCount = 1;
    std::vector<double> prior;
    std::vector<int> aliceFirst;   // F_AB
    std::vector<int> bobSecond;    // S_AB
    std::vector<int> bobFirst;     // F_BA
    std::vector<int> aliceSecond;  // S_BA

    int F_AB(int x, int l) const { return aliceFirst[static_cast<std::size_t>(x) * lambdaCount + l]; }
    int S_AB(int x, int y, int l) const { return bobSecond[pair_index(x, y, l)]; }
    int F_BA(int y, int l) const { return bobFirst[static_cast<std::size_t>(y) * lambdaCount + l]; }
    int S_BA(int x, int y, int l) const { return aliceSecond[pair_index(x, y, l)]; }

    /// Throws InvalidArgument/DimensionMismatch on malformed tables or prior.
    void validate() const;

   private:
    std::size_t pair_index(int x, int y, int l) const {
        return (static_cast<std::size_t>(x) * scenario.nY + y) * lambdaCount + l;
    }
};

enum class Party { kAlice, kBob };

/// One (x, y, lambda) where an outcome changes with the frame.
struct CovarianceViolation {
    int x = 0;
    int y = 0;
    int lambda = 0;
    Party party = Party::kAlice;
    int firstValue = 0;   // F_AB(x,l) for Alice, F_BA(y,l) for Bob
    int secondValue = 0;  // S_BA(x,y,l) for Alice, S_AB(x,y,l) for Bob
};

struct CovarianceCheck {
    bool covariant = true;
    std::vector<CovarianceViolation> violations;
};

/// Covariant iff F_AB(x,l) = S_BA(x,y,l) and F_BA(y,l) = S_AB(x,y,l) for all (x,y,l).
CovarianceCheck check_covariance(const CovariantModel &model);

/// The model's behavior. Both frames are tallied as integer indicator counts
/// and must agree exactly before prior weighting. Throws NotCovariant.
Behavior induced_behavior(const CovariantModel &model);

/// Covariant model whose second-measurer tables copy the first-measurer ones.
CovariantModel covariant_completion(
    const Scenario &scenario, std::vector<double> prior, std::vector<int> alice_first, std::vector<int> bob_first);

/// Uniform tables, Dirichlet(1) prior, covariant by construction.
CovariantModel random_covariant_model(const Scenario &scenario, int lambda_count, Rng &rng);

/// Uniform tables with independent second-measurer tables (usually not covariant).
CovariantModel random_model(const Scenario &scenario, int lambda_count, Rng &rng);

enum class SearchMode { kAuto, kExhaustive, kSampled };

struct LocalityReport {
    SearchMode mode = SearchMode::kAuto;
    std::uint64_t modelsChecked = 0;
    std::uint64_t localityFailures = 0;
    /// Only filled in the (2,2,2,2) scenario.
    bool chshApplicable = false;
    std::uint64_t chshViolations = 0;
    double maxChsh = 0.0;
    double minChsh = 0.0;
    /// Largest value over the 8 CHSH relabelings.
    double maxChshAnyLabeling = 0.0;
};

struct LocalityOptions {
    SearchMode mode = SearchMode::kAuto;
    /// Auto mode exhausts when (table combinations x prior grid) is at most this.
    std::uint64_t exhaustiveCap = 1'000'000;
    /// Exhaustive priors are compositions of priorGrid into lambdaCount parts, weights k/priorGrid.
    int priorGrid = 10;
};

/// Checks that every covariant model (exhaustively or sampled, seeded by
/// (seed, trial)) induces a behavior that passes is_local and, in CHSH, stays
/// at or below 2 + 1e-9.
LocalityReport covariance_forces_locality(
    const Scenario &scenario,
    int lambda_count,
    std::uint64_t trials,
    std::uint64_t seed,
    const LocalityOptions &options = {});

}  // namespace bell_lab

#endif
