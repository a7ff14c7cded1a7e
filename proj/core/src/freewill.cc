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

#include "bell_lab/freewill.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/parallel.h"
#include "bell_lab/random.h"

namespace bell_lab {

namespace {

std::uint64_t batch_size(std::uint64_t samples, std::size_t batch) {
    return samples / kBatchCount + (batch < samples % kBatchCount ? 1 : 0);
}

void require_samples(std::uint64_t samples) {
    if (samples < kMinimumSamples) {
        fail(ErrorCode::kInvalidArgument, "at least " + std::to_string(kMinimumSamples) + " samples are required");
    }
}

int lambda_bin(const Vec3 &lambda) {
    return (lambda[0] < 0 ? 1 : 0) | (lambda[1] < 0 ? 2 : 0) | (lambda[2] < 0 ? 4 : 0);
}

/// Correlator per (x,y) from a count table laid out like a (nX,nY,2,2) behavior.
double count_correlator(const std::vector<std::uint64_t> &counts, const Scenario &s, int x, int y) {
    double total = 0.0, signed_sum = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double c = static_cast<double>(counts[s.index(x, y, a, b)]);
            total += c;
            signed_sum += outcome_sign(a) * outcome_sign(b) * c;
        }
    }
    return total > 0 ? signed_sum / total : std::numeric_limits<double>::quiet_NaN();
}

std::vector<Estimate> batch_correlators(const std::vector<std::vector<std::uint64_t>> &batches, const Scenario &s) {
    std::vector<Estimate> out;
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            std::vector<double> values;
            values.reserve(batches.size());
            for (const auto &counts : batches) {
                const double e = count_correlator(counts, s, x, y);
                if (!std::isnan(e)) values.push_back(e);
            }
            out.push_back(batch_means(values));
        }
    }
    return out;
}

Behavior behavior_from_counts(const std::vector<std::vector<std::uint64_t>> &batches, const Scenario &s) {
    std::vector<double> total(s.table_size(), 0.0);
    for (const auto &counts : batches) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += static_cast<double>(counts[k]);
    }
    for (std::size_t start = 0; start < total.size(); start += 4) {
        const double n = total[start] + total[start + 1] + total[start + 2] + total[start + 3];
        if (n == 0) fail(ErrorCode::kNumericalFailure, "an input pair received no samples; increase the sample count");
        for (std::size_t k = 0; k < 4; ++k) total[start + k] /= n;
    }
    return Behavior(s, std::move(total));
}

}  // namespace

FreeWillDeficit deficit(std::uint64_t n_choices, std::uint64_t m_choices) {
    if (m_choices < 1 || m_choices > n_choices) {
        fail(ErrorCode::kOutOfRange, "deficit needs 1 <= M <= N");
    }
    FreeWillDeficit d;
    d.nChoices = n_choices;
    d.mChoices = m_choices;
    d.bits = std::log2(static_cast<double>(n_choices)) - std::log2(static_cast<double>(m_choices));
    return d;
}

DetectionRun simulate_detection_model(const MeasurementSettings &settings, std::uint64_t samples, std::uint64_t seed) {
    require_samples(samples);
    const Scenario s = settings.scenario();

    struct Batch {
        std::vector<std::uint64_t> counts;
        std::vector<std::uint64_t> detections;
        std::uint64_t samples = 0;
    };
    std::vector<Batch> batches(kBatchCount);
    parallel_for(kBatchCount, [&](std::size_t bi) {
        Batch &batch = batches[bi];
        batch.counts.assign(s.table_size(), 0);
        batch.detections.assign(s.nX, 0);
        batch.samples = batch_size(samples, bi);
        Rng rng(seed, bi);
        std::vector<int> bob(s.nY);
        for (std::uint64_t i = 0; i < batch.samples; ++i) {
            const Vec3 lambda = rng.sphere();
            for (int y = 0; y < s.nY; ++y) bob[y] = bob_response(settings.bob[y].vec(), lambda);
            for (int x = 0; x < s.nX; ++x) {
                const Vec3 &dir = settings.alice[x].vec();
                if (rng.uniform() >= std::abs(dot(dir, lambda))) continue;
                ++batch.detections[x];
                const int a = alice_response(dir, lambda);
                for (int y = 0; y < s.nY; ++y) ++batch.counts[s.index(x, y, a, bob[y])];
            }
        }
    });

    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<double> rate;
    std::vector<std::vector<double>> rate_x(s.nX);
    for (const Batch &b : batches) {
        counts.push_back(b.counts);
        if (b.samples == 0) continue;
        std::uint64_t det = 0;
        for (int x = 0; x < s.nX; ++x) {
            det += b.detections[x];
            rate_x[x].push_back(static_cast<double>(b.detections[x]) / static_cast<double>(b.samples));
        }
        rate.push_back(static_cast<double>(det) / static_cast<double>(b.samples * s.nX));
    }

    DetectionRun run{behavior_from_counts(counts, s), batch_means(rate), {}, batch_correlators(counts, s), samples, 0.0};
    for (int x = 0; x < s.nX; ++x) run.detectionRatePerInput.push_back(batch_means(rate_x[x]));
    run.deficitBits = std::log2(1.0 / run.detectionRate.mean);
    return run;
}

MeasurementDependentRun simulate_measurement_dependent(
    const MeasurementDependentModel &model,
    const std::vector<BlochVector> &bob_settings,
    std::uint64_t samples,
    std::uint64_t seed,
    std::size_t trace_length) {
    require_samples(samples);
    if (model.inputSet.empty() || bob_settings.empty()) {
        fail(ErrorCode::kInvalidArgument, "input set and Bob settings must be nonempty");
    }
    const Scenario s{static_cast<int>(model.inputSet.size()), static_cast<int>(bob_settings.size()), 2, 2};
    std::vector<Vec3> bob_dirs;
    for (const auto &y : bob_settings) {
        bob_dirs.push_back(model.bobUnitary ? heisenberg_direction(*model.bobUnitary, y).vec() : y.vec());
    }
    if (trace_length > batch_size(samples, 0)) trace_length = static_cast<std::size_t>(batch_size(samples, 0));

    struct Batch {
        std::vector<std::uint64_t> counts;
        std::vector<std::uint64_t> bobBins;
        std::vector<std::uint64_t> aliceBins;
        std::uint64_t proposals = 0;
        std::uint64_t accepted = 0;
        std::vector<RunTrace> trace;
    };
    std::vector<Batch> batches(kBatchCount);
    parallel_for(kBatchCount, [&](std::size_t bi) {
        Batch &batch = batches[bi];
        batch.counts.assign(s.table_size(), 0);
        batch.bobBins.assign(static_cast<std::size_t>(kLambdaBins) * s.nY, 0);
        batch.aliceBins.assign(static_cast<std::size_t>(kLambdaBins) * s.nX, 0);
        Rng rng(seed, bi);
        const std::uint64_t n = batch_size(samples, bi);
        for (std::uint64_t i = 0; i < n; ++i) {
            const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.nX)));
            const Vec3 &dir = model.inputSet[x].vec();
            Vec3 lambda;
            while (true) {
                lambda = rng.sphere();
                ++batch.proposals;
                if (rng.uniform() < std::abs(dot(dir, lambda))) break;
            }
            ++batch.accepted;
            const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.nY)));
            const int a = alice_response(dir, lambda);
            const int b = bob_response(bob_dirs[y], lambda);
            ++batch.counts[s.index(x, y, a, b)];
            const int bin = lambda_bin(lambda);
            ++batch.bobBins[static_cast<std::size_t>(bin) * s.nY + y];
            ++batch.aliceBins[static_cast<std::size_t>(bin) * s.nX + x];
            if (bi == 0 && batch.trace.size() < trace_length) batch.trace.push_back({lambda, x, y, a, b});
        }
    });

    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<double> acceptance;
    MeasurementDependentRun run{
        Behavior::uniform(s), {}, {}, 0.0, std::vector<std::uint64_t>(static_cast<std::size_t>(kLambdaBins) * s.nY, 0),
        std::vector<std::uint64_t>(static_cast<std::size_t>(kLambdaBins) * s.nX, 0), std::move(batches[0].trace),
        samples};
    for (const Batch &b : batches) {
        counts.push_back(b.counts);
        if (b.proposals > 0) acceptance.push_back(static_cast<double>(b.accepted) / static_cast<double>(b.proposals));
        for (std::size_t k = 0; k < b.bobBins.size(); ++k) run.bobInputByLambdaBin[k] += b.bobBins[k];
        for (std::size_t k = 0; k < b.aliceBins.size(); ++k) run.aliceInputByLambdaBin[k] += b.aliceBins[k];
    }
    run.behavior = behavior_from_counts(counts, s);
    run.correlators = batch_correlators(counts, s);
    run.acceptanceRate = batch_means(acceptance);
    run.acceptanceDeficitBits = std::log2(1.0 / run.acceptanceRate.mean);
    return run;
}

PredeterminedWitness predetermined_inputs_value(const BellExpression &expr) {
    const Scenario &s = expr.scenario();
    const auto args = algebraic_maximizers(expr);
    PredeterminedWitness w;
    std::vector<double> p(s.table_size(), 0.0);
    std::size_t k = 0;
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y, ++k) {
            w.table.push_back({x, y, args[k].first, args[k].second});
            p[s.index(x, y, args[k].first, args[k].second)] = 1.0;
        }
    }
    w.value = evaluate(expr, Behavior(s, std::move(p)));
    return w;
}

std::optional<double> conditional_input_entropy(const MeasurementDependentModel &model, const Vec3 &lambda) {
    double total = 0.0;
    std::vector<double> w;
    for (const auto &x : model.inputSet) {
        w.push_back(std::abs(dot(x.vec(), lambda)));
        total += w.back();
    }
    if (!(total > 1e-300)) return std::nullopt;
    double h = 0.0;
    for (double v : w) {
        const double p = v / total;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

EntropyDeficit entropy_deficit(const MeasurementDependentModel &model, std::size_t grid_points) {
    if (model.inputSet.empty()) fail(ErrorCode::kInvalidArgument, "input set must be nonempty");
    if (grid_points == 0) fail(ErrorCode::kInvalidArgument, "grid must have at least one point");
    EntropyDeficit out;
    out.gridPoints = grid_points;
    const double log_n = std::log2(static_cast<double>(model.inputSet.size()));
    if (model.inputSet.size() == 1) return out;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    double min_h = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(grid_points);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(i);
        const Vec3 lambda{r * std::cos(phi), r * std::sin(phi), z};
        const auto h = conditional_input_entropy(model, lambda);
        if (h && *h < min_h) {
            min_h = *h;
            out.worstLambda = lambda;
        }
    }
    out.bits = std::isfinite(min_h) ? std::max(0.0, log_n - min_h) : 0.0;
    return out;
}

}  // namespace bell_lab
