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

#include "bell_lab/randomness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/parallel.h"
#include "bell_lab/random.h"

namespace bell_lab {

double minentropy_bound(double chsh_value) {
    const double tsirelson = 2.0 * std::numbers::sqrt2;
    if (!(chsh_value >= 0.0) || chsh_value > tsirelson + 1e-9) {
        fail(ErrorCode::kOutOfRange, "CHSH value must lie in [0, 2 sqrt2]");
    }
    if (chsh_value <= 2.0) return 0.0;
    const double inner = std::max(0.0, 2.0 - chsh_value * chsh_value / 4.0);
    return std::max(0.0, 1.0 - std::log2(1.0 + std::sqrt(inner)));
}

double binary_entropy(double q) {
    if (q <= 0.0 || q >= 1.0) return 0.0;
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

ExpansionStage make_stage(
    std::uint64_t input_alphabet, std::uint64_t output_alphabet, std::uint64_t rounds, double chsh_value,
    double test_fraction) {
    if (input_alphabet < 1 || output_alphabet < 2) {
        fail(ErrorCode::kInvalidArgument, "input alphabet must be >= 1 and output alphabet >= 2");
    }
    if (!(test_fraction > 0.0 && test_fraction <= 1.0)) {
        fail(ErrorCode::kInvalidArgument, "test fraction must lie in (0, 1]");
    }
    ExpansionStage s;
    s.inputAlphabet = input_alphabet;
    s.outputAlphabet = output_alphabet;
    s.rounds = rounds;
    s.chshValue = chsh_value;
    s.testFraction = test_fraction;
    const double r = static_cast<double>(rounds);
    const double input_bits = 2.0 * std::log2(static_cast<double>(input_alphabet));
    s.inputBitsConsumed = r * (binary_entropy(test_fraction) + test_fraction * input_bits);
    s.certifiedBitsProduced = r * minentropy_bound(chsh_value);
    return s;
}

ExpansionReport expansion_accounting(const ExpansionStage &stage) {
    ExpansionReport r;
    r.consumed = stage.inputBitsConsumed;
    r.certified = stage.certifiedBitsProduced;
    r.net = r.certified - r.consumed;
    r.expanding = r.net > 0.0;
    return r;
}

ChainReport serial_composition(const std::vector<ExpansionStage> &stages, double seed_bits) {
    if (stages.empty()) fail(ErrorCode::kInvalidArgument, "chain must contain at least one stage");
    if (!(seed_bits > 0.0)) fail(ErrorCode::kInvalidArgument, "seed must be a positive number of bits");
    ChainReport report;
    report.totalIn = seed_bits;
    double pool = seed_bits;
    for (std::size_t k = 0; k < stages.size(); ++k) {
        const ExpansionStage &s = stages[k];
        if (s.inputBitsConsumed < 0.0 || s.certifiedBitsProduced < 0.0) {
            fail(ErrorCode::kInvalidArgument, "stage bit counts must be nonnegative");
        }
        if (s.inputBitsConsumed > pool + 1e-9) throw SeedStarvation(k + 1, s.inputBitsConsumed, pool);
        LedgerEntry e;
        e.stage = k + 1;
        e.consumed = s.inputBitsConsumed;
        e.certified = s.certifiedBitsProduced;
        e.poolBefore = pool;
        pool = std::max(0.0, pool - s.inputBitsConsumed) + s.certifiedBitsProduced;
        e.poolAfter = pool;
        report.totalConsumed += e.consumed;
        report.totalCertified += e.certified;
        report.stages.push_back(e);
    }
    report.totalOut = pool;
    report.factor = report.totalOut / report.totalIn;
    return report;
}

QrngRun simulate_qrng_rounds(
    const MeasurementSettings &settings, const TwoQubitState &state, std::uint64_t rounds, std::uint64_t seed) {
    if (rounds < 1) fail(ErrorCode::kInvalidArgument, "rounds must be >= 1");
    const Behavior behavior = quantum_behavior(state, settings);
    const Scenario s = behavior.scenario();

    QrngRun run;
    run.bits.resize(2 * rounds);
    run.aliceInputs.resize(rounds);
    run.bobInputs.resize(rounds);

    // Fixed-size chunks with their own streams; the chunking does not depend on the worker count.
    constexpr std::uint64_t kChunk = 1 << 14;
    const std::size_t chunks = static_cast<std::size_t>((rounds + kChunk - 1) / kChunk);
    parallel_for(chunks, [&](std::size_t c) {
        Rng rng(seed, c);
        const std::uint64_t end = std::min(rounds, (c + 1) * kChunk);
        for (std::uint64_t r = c * kChunk; r < end; ++r) {
            const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.nX)));
            const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.nY)));
            double u = rng.uniform();
            int a = 1, b = 1;
            for (int k = 0; k < 4; ++k) {
                const double p = behavior(x, y, k >> 1, k & 1);
                if (u < p) {
                    a = k >> 1;
                    b = k & 1;
                    break;
                }
                u -= p;
            }
            run.aliceInputs[r] = static_cast<std::uint8_t>(x);
            run.bobInputs[r] = static_cast<std::uint8_t>(y);
            run.bits[2 * r] = static_cast<std::uint8_t>(a);
            run.bits[2 * r + 1] = static_cast<std::uint8_t>(b);
        }
    });

    // Correlators over all rounds, and the CHSH combination per contiguous batch.
    auto tally = [&](std::uint64_t begin, std::uint64_t end, std::vector<double> &e) {
        std::vector<double> sum(static_cast<std::size_t>(s.nX) * s.nY, 0.0), n(sum.size(), 0.0);
        for (std::uint64_t r = begin; r < end; ++r) {
            const std::size_t k = static_cast<std::size_t>(run.aliceInputs[r]) * s.nY + run.bobInputs[r];
            sum[k] += outcome_sign(run.bits[2 * r]) * outcome_sign(run.bits[2 * r + 1]);
            n[k] += 1.0;
        }
        e.resize(sum.size());
        bool complete = true;
        for (std::size_t k = 0; k < sum.size(); ++k) {
            e[k] = n[k] > 0 ? sum[k] / n[k] : std::numeric_limits<double>::quiet_NaN();
            complete = complete && n[k] > 0;
        }
        return complete;
    };
    tally(0, rounds, run.correlators);
    if (s.nX == 2 && s.nY == 2) {
        std::vector<double> values;
        const std::uint64_t batches = std::min<std::uint64_t>(kBatchCount, rounds);
        std::vector<double> e;
        for (std::uint64_t b = 0; b < batches; ++b) {
            if (tally(b * rounds / batches, (b + 1) * rounds / batches, e)) values.push_back(e[0] + e[1] + e[2] - e[3]);
        }
        const auto &t = run.correlators;
        run.chsh = batch_means(values);
        run.chsh.mean = t[0] + t[1] + t[2] - t[3];
    } else {
        run.chsh.mean = std::numeric_limits<double>::quiet_NaN();
        run.chsh.standardError = std::numeric_limits<double>::quiet_NaN();
    }
    return run;
}

void write_bits_text(std::ostream &out, const std::vector<std::uint8_t> &bits) {
    std::string line;
    line.reserve(bits.size() + 1);
    for (auto b : bits) line.push_back(b ? '1' : '0');
    line.push_back('\n');
    out << line;
}

void write_bits_packed(std::ostream &out, const std::vector<std::uint8_t> &bits) {
    std::string bytes((bits.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (0x80 >> (i % 8)));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace bell_lab
