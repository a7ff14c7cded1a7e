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

#include "bell_lab/quantum.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/random.h"
#include "oracles.h"

using namespace bell_lab;

namespace {

MeasurementSettings random_settings(Rng &rng, int nx = 2, int ny = 2) {
    MeasurementSettings m;
    for (int i = 0; i < nx; ++i) m.alice.push_back(BlochVector::normalized(rng.sphere()));
    for (int i = 0; i < ny; ++i) m.bob.push_back(BlochVector::normalized(rng.sphere()));
    return m;
}

void expect_spectrum(const TwoQubitState &state, const std::array<double, 4> &expected) {
    const auto eig = hermitian_eigenvalues(state.rho());
    ASSERT_EQ(eig.size(), 4u);
    const auto got = oracle::power_sums({eig[0], eig[1], eig[2], eig[3]});
    const auto want = oracle::power_sums(expected);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-12) << "power " << k + 1;
    // Independent of the eigen solver: tr(rho^k) from matrix products.
    ComplexMatrix power = state.rho();
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(power.trace().real(), want[k], 1e-12);
        power = power * state.rho();
    }
}

void expect_no_signaling(const Behavior &b) {
    EXPECT_LE(signaling_deviation(b), 1e-12);
}

}  // namespace

TEST(BlochVector, enforces_unit_norm) {
    EXPECT_THROW(BlochVector(1, 1, 0), Error);
    EXPECT_NO_THROW(BlochVector(0, 0, 1));
    const BlochVector n = BlochVector::normalized({3, 0, 4});
    EXPECT_DOUBLE_EQ(n.x(), 0.6);
    EXPECT_DOUBLE_EQ(n.z(), 0.8);
    EXPECT_THROW(BlochVector::normalized({0, 0, 0}), Error);
}

TEST(TwoQubitState, rejects_invalid_density_matrices) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    EXPECT_THROW(TwoQubitState{m}, Error);  // trace 4
    ComplexMatrix neg(4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(TwoQubitState{neg}, Error);
    ComplexMatrix skew = ComplexMatrix::identity(4) * Complex(0.25);
    skew(0, 1) = Complex(0.1, 0.0);
    EXPECT_THROW(TwoQubitState{skew}, Error);
    EXPECT_THROW(TwoQubitState{ComplexMatrix(2)}, Error);
}

TEST(Werner, spectra) {
    expect_spectrum(werner_state(0.0), {0.25, 0.25, 0.25, 0.25});
    expect_spectrum(werner_state(1.0), {1.0, 0.0, 0.0, 0.0});
    expect_spectrum(werner_state(0.5), {0.625, 0.125, 0.125, 0.125});
}

TEST(Werner, visibility_out_of_range) {
    EXPECT_THROW(werner_state(-0.1), Error);
    EXPECT_THROW(werner_state(1.1), Error);
    try {
        werner_state(2.0);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
}

TEST(QuantumBehavior, singlet_same_direction_is_perfectly_anticorrelated) {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const BlochVector n = BlochVector::normalized(rng.sphere());
        const Behavior b = quantum_behavior(werner_state(1.0), {{n}, {n}});
        EXPECT_NEAR(b(0, 0, 0, 0), 0.0, 1e-12);
        EXPECT_NEAR(b(0, 0, 1, 1), 0.0, 1e-12);
        EXPECT_NEAR(correlator(b, 0, 0), -1.0, 1e-12);
    }
}

TEST(QuantumBehavior, maximally_mixed_gives_uniform_table) {
    Rng rng(4);
    const Behavior b = quantum_behavior(werner_state(0.0), random_settings(rng, 3, 2));
    for (double p : b.table()) EXPECT_NEAR(p, 0.25, 1e-12);
}

TEST(QuantumBehavior, werner_correlator_law_and_no_signaling) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const double v = rng.uniform();
        const MeasurementSettings m = random_settings(rng, 3, 3);
        const Behavior b = quantum_behavior(werner_state(v), m);
        expect_no_signaling(b);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) EXPECT_NEAR(correlator(b, x, y) + v * dot(m.alice[x], m.bob[y]), 0.0, 1e-10);
    }
}

TEST(QuantumBehavior, correlation_matrix_of_singlet_is_minus_identity) {
    const auto t = correlation_matrix(werner_state(1.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(t[i][j], i == j ? -1.0 : 0.0, 1e-12);
}

TEST(Chsh, tsirelson_point) {
    const Behavior b = quantum_behavior(werner_state(1.0), chsh_optimal_settings());
    EXPECT_NEAR(evaluate(chsh_expression(), b), 2 * std::numbers::sqrt2, 1e-9);
    EXPECT_NEAR(werner_chsh_value(1.0), 2 * std::numbers::sqrt2, 1e-9);
}

TEST(Chsh, werner_at_inverse_sqrt2_sits_on_the_bound) {
    const Behavior b = quantum_behavior(werner_state(1.0 / std::numbers::sqrt2), chsh_optimal_settings());
    EXPECT_NEAR(evaluate(chsh_expression(), b), 2.0, 1e-9);
    EXPECT_NEAR(evaluate(chsh_expression(), quantum_behavior(werner_state(0.0), chsh_optimal_settings())), 0.0, 1e-12);
}

TEST(Chsh, optimal_settings_shape) {
    const MeasurementSettings m = chsh_optimal_settings();
    ASSERT_EQ(m.alice.size(), 2u);
    ASSERT_EQ(m.bob.size(), 2u);
    EXPECT_NEAR(dot(m.alice[0], m.alice[1]), 0.0, 1e-15);
    EXPECT_NEAR(dot(m.bob[0], m.bob[1]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(dot(m.alice[0], m.bob[0])), 1 / std::numbers::sqrt2, 1e-15);
}

TEST(Chsh, violation_threshold) {
    const double t = chsh_violation_threshold();
    EXPECT_NEAR(t, std::sqrt(0.5), 1e-6);
    EXPECT_GT(werner_chsh_value(t + 0.01), 2.0);
    const Behavior below = quantum_behavior(werner_state(t - 0.01), chsh_optimal_settings());
    EXPECT_TRUE(is_local(below).isLocal);
    const Behavior above = quantum_behavior(werner_state(t + 0.01), chsh_optimal_settings());
    EXPECT_FALSE(is_local(above).isLocal);
}

TEST(Chsh, singlet_never_exceeds_tsirelson) {
    Rng rng(6);
    double best = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const double v = max_chsh(quantum_behavior(werner_state(1.0), random_settings(rng)));
        EXPECT_LE(v, 2 * std::numbers::sqrt2 + 1e-9);
        best = std::max(best, v);
    }
    EXPECT_GT(best, 2.0);
}

TEST(ProductStates, are_always_local) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = BlochVector::normalized(rng.sphere());
        const auto b = BlochVector::normalized(rng.sphere());
        const Behavior p = quantum_behavior(product_state(a, b), random_settings(rng, 2, 3));
        expect_no_signaling(p);
        EXPECT_TRUE(is_local(p).isLocal);
    }
    EXPECT_TRUE(is_local(quantum_behavior(werner_state(0.0), chsh_optimal_settings())).isLocal);
}

TEST(RotatedStates, match_singlet_with_rotated_bob_directions) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix u = rotation_unitary(rng.sphere(), 2 * std::numbers::pi * rng.uniform());
        const MeasurementSettings m = random_settings(rng);
        const Behavior direct = quantum_behavior(maximally_entangled_state(u), m);
        MeasurementSettings rotated{m.alice, {}};
        for (const auto &y : m.bob) rotated.bob.push_back(heisenberg_direction(u, y));
        const Behavior via_singlet = quantum_behavior(werner_state(1.0), rotated);
        for (std::size_t k = 0; k < direct.table().size(); ++k) {
            EXPECT_NEAR(direct.table()[k], via_singlet.table()[k], 1e-12);
        }
    }
}

TEST(Settings, validation) {
    MeasurementSettings empty;
    EXPECT_THROW(empty.validate(), Error);
    const MeasurementSettings m = chsh_optimal_settings();
    EXPECT_EQ(m.scenario(), kChshScenario);
}
