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

#ifndef BELL_LAB_RANDOMNESS_H
#define BELL_LAB_RANDOMNESS_H

#include <cstdint>
#include <ostream>
#include <vector>

#include "bell_lab/quantum.h"
#include "bell_lab/stats.h"

namespace bell_lab {

/// Certified min-entropy per round from a CHSH value S:
/// 1 - log2(1 + sqrt(2 - S^2/4)) for S > 2, and 0 for S <= 2.
/// Throws OutOfRange for S < 0 or S > 2 sqrt2 + 1e-9.
double minentropy_bound(double chsh_value);

/// Binary Shannon entropy h(q) in bits.
double binary_entropy(double q);

/// One round-based expansion stage. Inputs are uniform on test rounds, which
/// occur with probability testFraction; the remaining rounds use a fixed input
/// pair. Per round the stage consumes h(testFraction) bits to pick the round type
/// plus testFraction * 2 log2(inputAlphabet) bits for the inputs; with
/// testFraction = 1 that is exactly rounds * 2 log2(inputAlphabet).
struct ExpansionStage {
    std::uint64_t inputAlphabet = 2;
    std::uint64_t outputAlphabet = 2;
    std::uint64_t rounds = 0;
    double chshValue = 0.0;
    double testFraction = 1.0;
    double inputBitsConsumed = 0.0;
    double certifiedBitsProduced = 0.0;
};

/// Fills in the consumed and certified bit counts. Throws InvalidArgument for
/// alphabets below 1 (inputs) or 2 (outputs), or testFraction outside (0, 1].
ExpansionStage make_stage(
    std::uint64_t input_alphabet, std::uint64_t output_alphabet, std::uint64_t rounds, double chsh_value,
    double test_fraction = 1.0);

struct ExpansionReport {
    double consumed = 0.0;
    double certified = 0.0;
    double net = 0.0;
    bool expanding = false;
};

ExpansionReport expansion_accounting(const ExpansionStage &stage);

struct LedgerEntry {
    std::size_t stage = 0;  // 1-based
    double consumed = 0.0;
    double certified = 0.0;
    double poolBefore = 0.0;
    double poolAfter = 0.0;
};

/// Pure bit-counting ledger. Stages draw from a pool that starts at the seed and
/// is refilled with each stage's certified output.
struct ChainReport {
    std::vector<LedgerEntry> stages;
    double totalIn = 0.0;         // the seed
    double totalOut = 0.0;        // pool left after the last stage
    double totalConsumed = 0.0;
    double totalCertified = 0.0;  // sum of per-stage certified bits
    double factor = 0.0;          // totalOut / totalIn
};

/// Throws SeedStarvation(k) when stage k needs more bits than the pool holds,
/// InvalidArgument for an empty chain or a nonpositive seed.
ChainReport serial_composition(const std::vector<ExpansionStage> &stages, double seed_bits);

struct QrngRun {
    /// Interleaved outcome bits a_0 b_0 a_1 b_1 ... (outcome index, 0 <-> +1).
    std::vector<std::uint8_t> bits;
    std::vector<std::uint8_t> aliceInputs;
    std::vector<std::uint8_t> bobInputs;
    /// E(x,y) row-major and the CHSH combination with batch-means errors.
    std::vector<double> correlators;
    Estimate chsh;
};

/// Samples rounds with uniform inputs from the Born-rule behavior of `state`.
/// Needs 2x2 settings for the CHSH estimate. Throws InvalidArgument for rounds < 1.
QrngRun simulate_qrng_rounds(
    const MeasurementSettings &settings, const TwoQubitState &state, std::uint64_t rounds, std::uint64_t seed);

/// Bits as '0'/'1' text, or packed MSB-first bytes with zero padding.
void write_bits_text(std::ostream &out, const std::vector<std::uint8_t> &bits);
void write_bits_packed(std::ostream &out, const std::vector<std::uint8_t> &bits);

}  // namespace bell_lab

#endif
