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

#ifndef BELL_LAB_FREEWILL_H
#define BELL_LAB_FREEWILL_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bell_lab/behavior.h"
#include "bell_lab/linalg.h"
#include "bell_lab/quantum.h"
#include "bell_lab/stats.h"

namespace bell_lab {

/// Support measure of missing free choice: log2(N) - log2(M) bits when only M
/// of N nominal inputs are actually available.
struct FreeWillDeficit {
    std::uint64_t nChoices = 1;
    std::uint64_t mChoices = 1;
    double bits = 0.0;
};

/// Throws OutOfRange unless 1 <= M <= N.
FreeWillDeficit deficit(std::uint64_t n_choices, std::uint64_t m_choices);

inline constexpr std::uint64_t kMinimumSamples = 10'000;

// Local response rules shared by the detection and measurement-dependent models.
// lambda is a unit vector; outcome index 0 means +1.
inline int alice_response(const Vec3 &x, const Vec3 &lambda) {
    return dot(x, lambda) >= 0.0 ? 0 : 1;
}
inline int bob_response(const Vec3 &y, const Vec3 &lambda) {
    return dot(y, lambda) >= 0.0 ? 1 : 0;
}

/// Detection-loophole local model: lambda uniform on the sphere, Alice outputs
/// sign(x.lambda) but only fires with probability |x.lambda|, Bob always
/// outputs -sign(y.lambda).
struct DetectionRun {
    /// p(a,b|x,y, Alice detected).
    Behavior conditional;
    /// Detection rate over all x, and per x.
    Estimate detectionRate;
    std::vector<Estimate> detectionRatePerInput;
    /// Conditional correlators, row-major (x, y).
    std::vector<Estimate> correlators;
    std::uint64_t samples = 0;
    /// log2(1/detectionRate): a 50% usable-input rate reads as one missing bit.
    double deficitBits = 0.0;
};

/// Every sample draws one lambda and evaluates every (x, y) pair. Throws
/// InvalidArgument when samples < 1e4.
DetectionRun simulate_detection_model(const MeasurementSettings &settings, std::uint64_t samples, std::uint64_t seed);

/// Measurement-dependent model: lambda is drawn conditionally on Alice's input
/// with density q(lambda|x) = 2|x.lambda| relative to the uniform sphere, and
/// Alice always answers. Bob's directions can be re-expressed through a local
/// unitary so any maximally entangled state is covered.
struct MeasurementDependentModel {
    std::vector<BlochVector> inputSet;
    /// When set, Bob's direction y is replaced by the Heisenberg-picture direction
    /// U^dagger (y.sigma) U, reproducing maximally_entangled_state(U).
    std::optional<ComplexMatrix> bobUnitary;
};

/// One recorded run, for checking that responses depend only on local data.
struct RunTrace {
    Vec3 lambda;
    int x = 0;
    int y = 0;
    int a = 0;
    int b = 0;
};

inline constexpr int kLambdaBins = 8;

struct MeasurementDependentRun {
    Behavior behavior;
    std::vector<Estimate> correlators;
    /// Rejection-sampling acceptance rate; 1/2 in expectation.
    Estimate acceptanceRate;
    /// log2(1/acceptance).
    double acceptanceDeficitBits = 0.0;
    /// Counts of (lambda octant, y) and (lambda octant, x); octant bit k is set when lambda_k < 0.
    std::vector<std::uint64_t> bobInputByLambdaBin;
    std::vector<std::uint64_t> aliceInputByLambdaBin;
    std::vector<RunTrace> trace;
    std::uint64_t samples = 0;
};

/// Per sample: x uniform over the input set, lambda ~ q(.|x) by rejection with
/// acceptance |x.lambda|, y uniform and independent of lambda. The first
/// `trace_length` runs of the first batch are recorded (at most samples/100).
/// Throws InvalidArgument when samples < 1e4.
MeasurementDependentRun simulate_measurement_dependent(
    const MeasurementDependentModel &model,
    const std::vector<BlochVector> &bob_settings,
    std::uint64_t samples,
    std::uint64_t seed,
    std::size_t trace_length = 0);

/// Predetermined inputs: lambda fixes (x, y) and the outcome pair, which lets
/// the model reach the algebraic maximum.
struct PredeterminedWitness {
    double value = 0.0;
    /// One entry per (x, y) in row-major order: the outcomes lambda assigns.
    std::vector<std::array<int, 4>> table;  // {x, y, a, b}
};

PredeterminedWitness predetermined_inputs_value(const BellExpression &expr);

/// Shannon entropy (bits) of p(x|lambda) proportional to |x.lambda| over the
/// input set; nullopt when lambda is orthogonal to every input.
std::optional<double> conditional_input_entropy(const MeasurementDependentModel &model, const Vec3 &lambda);

struct EntropyDeficit {
    double bits = 0.0;
    std::size_t gridPoints = 0;
    Vec3 worstLambda{0, 0, 1};
};

/// log2 N minus the minimum of conditional_input_entropy over a Fibonacci sphere grid.
EntropyDeficit entropy_deficit(const MeasurementDependentModel &model, std::size_t grid_points = 20'000);

}  // namespace bell_lab

#endif
