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

#include <gtest/gtest.h>

#include <set>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/quantum.h"
#include "bell_lab/random.h"
#include "oracles.h"

using namespace bell_lab;

namespace {

Behavior random_mixture(const Scenario &s, Rng &rng, int parts) {
    const auto count = strategy_count(s);
    std::vector<Behavior> bs;
    std::vector<double> w;
    double total = 0;
    for (int i = 0; i < parts; ++i) {
        const auto k = rng.below(count);
        bs.push_back(strategy_behavior(strategy_at(s, k), s));
        w.push_back(rng.exponential());
        total += w.back();
    }
    for (double &v : w) v /= total;
    return mixture(bs, w);
}

BellExpression random_expression(const Scenario &s, Rng &rng) {
    std::vector<double> c(s.table_size());
    for (double &v : c) v = 2 * rng.uniform() - 1;
    return BellExpression(s, std::move(c));
}

double max_entry_error(const Behavior &target, const LocalMembershipResult &r) {
    const Scenario &s = target.scenario();
    std::vector<double> sum(s.table_size(), 0.0);
    for (const auto &ws : r.weights) {
        const Behavior b = strategy_behavior(ws.strategy, s);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += ws.weight * b.table()[k];
    }
    double worst = 0;
    for (std::size_t k = 0; k < sum.size(); ++k) worst = std::max(worst, std::abs(sum[k] - target.table()[k]));
    return worst;
}

}  // namespace

TEST(Scenario, rejects_degenerate_cardinalities) {
    EXPECT_THROW((Scenario{0, 2, 2, 2}.validate()), Error);
    EXPECT_THROW((Scenario{2, 2, 1, 2}.validate()), Error);
    EXPECT_NO_THROW((Scenario{1, 1, 2, 2}.validate()));
}

TEST(Behavior, clamps_dust_and_rejects_real_negativity) {
    std::vector<double> p{0.5 + 1e-13, 0.5, -1e-13, 0.0};
    const Behavior b(Scenario{1, 1, 2, 2}, p);
    EXPECT_EQ(b(0, 0, 1, 0), 0.0);
    EXPECT_THROW(Behavior(Scenario{1, 1, 2, 2}, {0.6, 0.5, -1e-6, 0.0}), Error);
}

TEST(Behavior, rejects_unnormalized_blocks) {
    EXPECT_THROW(Behavior(Scenario{1, 1, 2, 2}, {0.5, 0.5, 0.1, 0.0}), Error);
    EXPECT_THROW(Behavior(Scenario{1, 1, 2, 2}, {0.5, 0.5}), Error);
}

TEST(Strategies, counts_match_cardinality_products) {
    EXPECT_EQ(enumerate_strategies(kChshScenario).size(), 16u);
    EXPECT_EQ(enumerate_strategies(Scenario{1, 1, 2, 2}).size(), 4u);
    EXPECT_EQ(enumerate_strategies(Scenario{4, 2, 2, 2}).size(), 64u);
}

TEST(Strategies, are_distinct_and_lexicographic) {
    const auto all = enumerate_strategies(Scenario{2, 2, 3, 2});
    ASSERT_EQ(all.size(), 36u);
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto key = [](const DeterministicStrategy &s) {
            std::vector<int> k = s.alice;
            k.insert(k.end(), s.bob.begin(), s.bob.end());
            return k;
        };
        EXPECT_LT(key(all[i - 1]), key(all[i]));
    }
    EXPECT_EQ(all.front().alice, (std::vector<int>{0, 0}));
    EXPECT_EQ(all.back().alice, (std::vector<int>{2, 2}));
}

TEST(Strategies, cap_exceeded) {
    EXPECT_THROW(enumerate_strategies(Scenario{30, 30, 2, 2}), Error);
    try {
        strategy_count(kChshScenario, 15);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
    }
    EXPECT_EQ(strategy_count(kChshScenario, 16), 16u);
}

TEST(StrategyBehavior, constant_and_identity_responses) {
    const Behavior constant = strategy_behavior({{0, 0}, {0, 0}}, kChshScenario);
    const Behavior identity = strategy_behavior({{0, 1}, {0, 1}}, kChshScenario);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            EXPECT_EQ(constant(x, y, 0, 0), 1.0);
            EXPECT_EQ(identity(x, y, x, y), 1.0);
        }
    }
    EXPECT_THROW(strategy_behavior({{0}, {0, 0}}, kChshScenario), Error);
    EXPECT_THROW(strategy_behavior({{0, 2}, {0, 0}}, kChshScenario), Error);
}

TEST(Evaluate, chsh_on_pr_box_is_four) {
    const Behavior pr(kChshScenario, oracle::pr_box());
    EXPECT_DOUBLE_EQ(evaluate(chsh_expression(), pr), 4.0);
}

TEST(Evaluate, chsh_on_every_deterministic_strategy_is_bounded_by_two) {
    std::set<double> values;
    for (const auto &s : enumerate_strategies(kChshScenario)) {
        const double v = evaluate(chsh_expression(), strategy_behavior(s, kChshScenario));
        EXPECT_LE(std::abs(v), 2.0);
        EXPECT_EQ(v, evaluate(chsh_expression(), s));
        values.insert(v);
    }
    EXPECT_EQ(values, (std::set<double>{-2.0, 2.0}));
}

TEST(Evaluate, zero_expression_and_mismatch) {
    EXPECT_EQ(evaluate(BellExpression::zero(kChshScenario), Behavior::uniform(kChshScenario)), 0.0);
    EXPECT_EQ(evaluate(chsh_expression(), Behavior::uniform(kChshScenario)), 0.0);
    EXPECT_THROW(evaluate(chsh_expression(), Behavior::uniform(Scenario{1, 1, 2, 2})), Error);
}

TEST(Evaluate, is_linear_on_random_mixtures) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Scenario s{2, 3, 2, 3};
        const BellExpression e = random_expression(s, rng);
        const Behavior b1 = random_mixture(s, rng, 3), b2 = random_mixture(s, rng, 4);
        const double t = rng.uniform();
        const std::vector<Behavior> parts{b1, b2};
        const std::vector<double> w{t, 1 - t};
        EXPECT_NEAR(evaluate(e, mixture(parts, w)), t * evaluate(e, b1) + (1 - t) * evaluate(e, b2), 1e-10);
    }
}

TEST(Bounds, chsh_local_and_algebraic) {
    EXPECT_EQ(local_bound(chsh_expression()), 2.0);
    EXPECT_EQ(algebraic_bound(chsh_expression()), 4.0);
    EXPECT_EQ(local_bound(chsh_expression().scaled(2.0)), 4.0);
    EXPECT_EQ(local_bound(BellExpression::zero(kChshScenario)), 0.0);
    EXPECT_EQ(algebraic_bound(BellExpression::zero(kChshScenario)), 0.0);
}

TEST(Bounds, local_bound_matches_brute_force_and_is_below_algebraic) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Scenario s{1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(3)),
                         2 + static_cast<int>(rng.below(2)), 2 + static_cast<int>(rng.below(2))};
        const BellExpression e = random_expression(s, rng);
        const std::vector<double> c(e.coeffs().begin(), e.coeffs().end());
        EXPECT_NEAR(local_bound(e), oracle::brute_local_bound(c, s.nX, s.nY, s.nA, s.nB), 1e-12);
        EXPECT_LE(local_bound(e), algebraic_bound(e) + 1e-12);
    }
}

TEST(Bounds, algebraic_ties_pick_first_index) {
    const auto args = algebraic_maximizers(BellExpression::zero(kChshScenario));
    for (const auto &[a, b] : args) {
        EXPECT_EQ(a, 0);
        EXPECT_EQ(b, 0);
    }
}

TEST(Membership, every_deterministic_strategy_is_a_vertex) {
    for (const Scenario &s : {kChshScenario, Scenario{3, 2, 2, 2}, Scenario{2, 2, 3, 2}}) {
        for (const auto &st : enumerate_strategies(s)) {
            const auto r = is_local(strategy_behavior(st, s));
            ASSERT_TRUE(r.isLocal);
            ASSERT_EQ(r.weights.size(), 1u);
            EXPECT_NEAR(r.weights[0].weight, 1.0, 1e-12);
            EXPECT_EQ(r.weights[0].strategy, st);
        }
    }
}

TEST(Membership, pr_box_is_nonlocal_with_separating_witness) {
    const Behavior pr(kChshScenario, oracle::pr_box());
    const auto r = is_local(pr);
    ASSERT_FALSE(r.isLocal);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_GT(r.witnessValue - *r.witness->localBound, 1e-9);
    EXPECT_NEAR(*r.witness->localBound, local_bound(*r.witness), 1e-12);
    EXPECT_EQ(evaluate(chsh_expression(), pr), 4.0);
    EXPECT_GT(evaluate(chsh_expression(), pr), local_bound(chsh_expression()));
}

TEST(Membership, uniform_behavior_is_local) {
    for (const Scenario &s : {kChshScenario, Scenario{3, 3, 3, 2}}) {
        const Behavior u = Behavior::uniform(s);
        const auto r = is_local(u);
        ASSERT_TRUE(r.isLocal);
        EXPECT_LE(max_entry_error(u, r), 1e-9);
    }
}

TEST(Membership, random_mixtures_are_recovered) {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Scenario s = trial % 2 ? kChshScenario : Scenario{3, 2, 2, 3};
        const Behavior b = random_mixture(s, rng, 1 + static_cast<int>(rng.below(5)));
        const auto r = is_local(b);
        ASSERT_TRUE(r.isLocal);
        double total = 0;
        for (const auto &w : r.weights) {
            EXPECT_GE(w.weight, 0.0);
            total += w.weight;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
        EXPECT_LE(max_entry_error(b, r), 1e-9);
    }
}

TEST(Membership, agrees_with_chsh_facets_on_quantum_behaviors) {
    // Unbiased-marginal behaviors from Werner states at random settings: local
    // iff all eight CHSH relabelings stay at or below 2.
    Rng rng(99);
    int nonlocal = 0;
    for (int trial = 0; trial < 300; ++trial) {
        MeasurementSettings m;
        for (int i = 0; i < 2; ++i) {
            m.alice.push_back(BlochVector::normalized(rng.sphere()));
            m.bob.push_back(BlochVector::normalized(rng.sphere()));
        }
        const Behavior b = quantum_behavior(werner_state(rng.uniform()), m);
        const bool facet_local = max_chsh(b) <= 2.0 + 1e-9;
        EXPECT_EQ(is_local(b).isLocal, facet_local) << "trial " << trial << " chsh " << max_chsh(b);
        nonlocal += facet_local ? 0 : 1;
    }
    EXPECT_GT(nonlocal, 0);
}

TEST(Chsh, symmetries_share_bounds) {
    const auto all = chsh_symmetries();
    ASSERT_EQ(all.size(), 8u);
    const BellExpression chsh = chsh_expression();
    EXPECT_EQ(std::vector<double>(all[0].coeffs().begin(), all[0].coeffs().end()),
              std::vector<double>(chsh.coeffs().begin(), chsh.coeffs().end()));
    for (const auto &e : all) {
        EXPECT_EQ(local_bound(e), 2.0);
        EXPECT_EQ(algebraic_bound(e), 4.0);
    }
}
