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

#include "bell_lab/json_io.h"

#include <gtest/gtest.h>

#include "bell_lab/error.h"
#include "bell_lab/random.h"
#include "oracles.h"

using namespace bell_lab;
using nlohmann::json;

namespace {

std::vector<double> values(std::span<const double> s) {
    return {s.begin(), s.end()};
}

/// Serialize, print, reparse: the path a file takes through the CLI.
json through_text(const json &j) {
    return json::parse(j.dump());
}

}  // namespace

TEST(Json, behavior_round_trip_is_exact) {
    Rng rng(1);
    const auto settings = MeasurementSettings{{BlochVector::normalized(rng.sphere()), BlochVector::normalized(rng.sphere())},
                                              {BlochVector::normalized(rng.sphere())}};
    const Behavior b = quantum_behavior(werner_state(0.37), settings);
    const Behavior back = behavior_from_json(through_text(to_json(b)));
    EXPECT_EQ(back.scenario(), b.scenario());
    EXPECT_EQ(values(back.table()), values(b.table()));
}

TEST(Json, behavior_nesting_order) {
    const json j = to_json(Behavior(kChshScenario, oracle::pr_box()));
    EXPECT_EQ(j.at("scenario").at("nX"), 2);
    // p[x][y][a][b]: x = y = 1 anticorrelates.
    EXPECT_EQ(j.at("p")[1][1][0][1].get<double>(), 0.5);
    EXPECT_EQ(j.at("p")[1][1][0][0].get<double>(), 0.0);
    EXPECT_EQ(j.at("p")[0][1][0][0].get<double>(), 0.5);
}

TEST(Json, expression_round_trip_keeps_bounds) {
    BellExpression e = chsh_expression();
    const BellExpression back = expression_from_json(through_text(to_json(e)));
    EXPECT_EQ(values(back.coeffs()), values(e.coeffs()));
    EXPECT_EQ(back.localBound, e.localBound);
    EXPECT_EQ(back.algebraicBound, e.algebraicBound);
    const BellExpression bare = expression_from_json(through_text(to_json(BellExpression::zero(kChshScenario))));
    EXPECT_FALSE(bare.localBound.has_value());
}

TEST(Json, membership_round_trip) {
    for (const Behavior &b : {Behavior(kChshScenario, oracle::pr_box()), Behavior::uniform(kChshScenario)}) {
        const auto r = is_local(b);
        const auto back = membership_from_json(through_text(to_json(r)));
        EXPECT_EQ(back.isLocal, r.isLocal);
        ASSERT_EQ(back.weights.size(), r.weights.size());
        for (std::size_t k = 0; k < r.weights.size(); ++k) {
            EXPECT_EQ(back.weights[k].strategy, r.weights[k].strategy);
            EXPECT_EQ(back.weights[k].weight, r.weights[k].weight);
            EXPECT_EQ(back.weights[k].index, r.weights[k].index);
        }
        EXPECT_EQ(back.witness.has_value(), r.witness.has_value());
        if (r.witness) {
            EXPECT_EQ(values(back.witness->coeffs()), values(r.witness->coeffs()));
            EXPECT_EQ(back.witnessValue, r.witnessValue);
        }
    }
}

TEST(Json, settings_and_state_round_trip) {
    const MeasurementSettings m = chsh_optimal_settings();
    const MeasurementSettings back = settings_from_json(through_text(to_json(m)));
    ASSERT_EQ(back.alice.size(), 2u);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(back.alice[i].vec(), m.alice[i].vec());
        EXPECT_EQ(back.bob[i].vec(), m.bob[i].vec());
    }
    const TwoQubitState rho = maximally_entangled_state(rotation_unitary({1, 2, 3}, 0.4));
    const TwoQubitState rho_back = state_from_json(through_text(to_json(rho)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(rho_back.rho()(i, j), rho.rho()(i, j));
}

TEST(Json, covariant_model_round_trip) {
    Rng rng(2);
    const CovariantModel m = random_model(Scenario{2, 3, 2, 2}, 3, rng);
    const CovariantModel back = covariant_model_from_json(through_text(to_json(m)));
    EXPECT_EQ(back.scenario, m.scenario);
    EXPECT_EQ(back.prior, m.prior);
    EXPECT_EQ(back.aliceFirst, m.aliceFirst);
    EXPECT_EQ(back.bobSecond, m.bobSecond);
    EXPECT_EQ(back.bobFirst, m.bobFirst);
    EXPECT_EQ(back.aliceSecond, m.aliceSecond);
}

TEST(Json, stage_round_trip) {
    const ExpansionStage s = make_stage(2, 3, 1234, 2.7, 0.1);
    const ExpansionStage back = stage_from_json(through_text(to_json(s)));
    EXPECT_EQ(back.rounds, s.rounds);
    EXPECT_EQ(back.inputBitsConsumed, s.inputBitsConsumed);
    EXPECT_EQ(back.certifiedBitsProduced, s.certifiedBitsProduced);
}

TEST(Json, malformed_input_raises_parse_error) {
    const auto expect_parse = [](const json &j) {
        try {
            behavior_from_json(j);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::kParse);
        }
    };
    expect_parse(json::object());
    expect_parse(json{{"scenario", {{"nX", 1}, {"nY", 1}, {"nA", 2}, {"nB", 2}}}, {"p", {{{1, 0}}}}});
    expect_parse(json{{"scenario", {{"nX", "two"}}}});
}
