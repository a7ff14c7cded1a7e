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

#include "bell_lab/local_polytope.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/simplex.h"

namespace bell_lab {

namespace {

void require_same_scenario(const Scenario &a, const Scenario &b) {
    if (a != b) {
        fail(ErrorCode::kDimensionMismatch, "expression and behavior scenarios differ");
    }
}

std::uint64_t checked_pow(std::uint64_t base, int exponent, std::uint64_t cap, bool &over) {
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        if (r > cap / base) {
            over = true;
            return 0;
        }
        r *= base;
    }
    return r;
}

void check_strategy(const DeterministicStrategy &strategy, const Scenario &scenario) {
    if (strategy.alice.size() != static_cast<std::size_t>(scenario.nX) ||
        strategy.bob.size() != static_cast<std::size_t>(scenario.nY)) {
        fail(ErrorCode::kDimensionMismatch, "strategy does not match scenario input counts");
    }
    for (int a : strategy.alice) {
        if (a < 0 || a >= scenario.nA) fail(ErrorCode::kDimensionMismatch, "Alice response out of range");
    }
    for (int b : strategy.bob) {
        if (b < 0 || b >= scenario.nB) fail(ErrorCode::kDimensionMismatch, "Bob response out of range");
    }
}

}  // namespace

std::uint64_t strategy_count(const Scenario &scenario, std::uint64_t cap) {
    scenario.validate();
    bool over = false;
    const std::uint64_t alice = checked_pow(scenario.nA, scenario.nX, cap, over);
    const std::uint64_t bob = over ? 0 : checked_pow(scenario.nB, scenario.nY, cap, over);
    if (over || alice > cap / bob) {
        fail(ErrorCode::kCapExceeded, "strategy count exceeds cap " + std::to_string(cap));
    }
    return alice * bob;
}

DeterministicStrategy strategy_at(const Scenario &scenario, std::uint64_t index) {
    DeterministicStrategy s;
    s.alice.resize(scenario.nX);
    s.bob.resize(scenario.nY);
    for (int y = scenario.nY - 1; y >= 0; --y) {
        s.bob[y] = static_cast<int>(index % scenario.nB);
        index /= scenario.nB;
    }
    for (int x = scenario.nX - 1; x >= 0; --x) {
        s.alice[x] = static_cast<int>(index % scenario.nA);
        index /= scenario.nA;
    }
    return s;
}

std::vector<DeterministicStrategy> enumerate_strategies(const Scenario &scenario, std::uint64_t cap) {
    const std::uint64_t count = strategy_count(scenario, cap);
    std::vector<DeterministicStrategy> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(strategy_at(scenario, k));
    }
    return out;
}

Behavior strategy_behavior(const DeterministicStrategy &strategy, const Scenario &scenario) {
    scenario.validate();
    check_strategy(strategy, scenario);
    std::vector<double> p(scenario.table_size(), 0.0);
    for (int x = 0; x < scenario.nX; ++x) {
        for (int y = 0; y < scenario.nY; ++y) {
            p[scenario.index(x, y, strategy.alice[x], strategy.bob[y])] = 1.0;
        }
    }
    return Behavior(scenario, std::move(p));
}

double evaluate(const BellExpression &expr, const Behavior &behavior) {
    require_same_scenario(expr.scenario(), behavior.scenario());
    auto c = expr.coeffs();
    auto p = behavior.table();
    double sum = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        sum += c[k] * p[k];
    }
    return sum;
}

double evaluate(const BellExpression &expr, const DeterministicStrategy &strategy) {
    const Scenario &s = expr.scenario();
    check_strategy(strategy, s);
    double sum = 0.0;
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            sum += expr(x, y, strategy.alice[x], strategy.bob[y]);
        }
    }
    return sum;
}

double local_bound(const BellExpression &expr, std::uint64_t cap) {
    const Scenario &s = expr.scenario();
    strategy_count(s, cap);
    // Enumerate Alice's responses; for each, Bob's best response separates per y.
    std::uint64_t alice_count = 1;
    for (int x = 0; x < s.nX; ++x) alice_count *= s.nA;
    std::vector<int> alice(s.nX, 0);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k < alice_count; ++k) {
        std::uint64_t rest = k;
        for (int x = s.nX - 1; x >= 0; --x) {
            alice[x] = static_cast<int>(rest % s.nA);
            rest /= s.nA;
        }
        double value = 0.0;
        for (int y = 0; y < s.nY; ++y) {
            double best_b = -std::numeric_limits<double>::infinity();
            for (int b = 0; b < s.nB; ++b) {
                double v = 0.0;
                for (int x = 0; x < s.nX; ++x) v += expr(x, y, alice[x], b);
                best_b = std::max(best_b, v);
            }
            value += best_b;
        }
        best = std::max(best, value);
    }
    return best;
}

std::vector<std::pair<int, int>> algebraic_maximizers(const BellExpression &expr) {
    const Scenario &s = expr.scenario();
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(s.nX) * s.nY);
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            std::pair<int, int> arg{0, 0};
            double best = expr(x, y, 0, 0);
            for (int a = 0; a < s.nA; ++a) {
                for (int b = 0; b < s.nB; ++b) {
                    if (expr(x, y, a, b) > best) {
                        best = expr(x, y, a, b);
                        arg = {a, b};
                    }
                }
            }
            out.push_back(arg);
        }
    }
    return out;
}

double algebraic_bound(const BellExpression &expr) {
    const Scenario &s = expr.scenario();
    const auto args = algebraic_maximizers(expr);
    double sum = 0.0;
    std::size_t k = 0;
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y, ++k) {
            sum += expr(x, y, args[k].first, args[k].second);
        }
    }
    return sum;
}

LocalMembershipResult is_local(const Behavior &behavior, const MembershipOptions &options) {
    const Scenario &s = behavior.scenario();
    const std::uint64_t count = strategy_count(s, options.cap);
    const std::size_t entries = s.table_size();

    // Columns: strategy vertices. Rows: every table entry plus sum of weights = 1.
    DenseMatrix a(entries + 1, count);
    for (std::uint64_t k = 0; k < count; ++k) {
        const DeterministicStrategy st = strategy_at(s, k);
        for (int x = 0; x < s.nX; ++x) {
            for (int y = 0; y < s.nY; ++y) {
                a(s.index(x, y, st.alice[x], st.bob[y]), k) = 1.0;
            }
        }
        a(entries, k) = 1.0;
    }
    std::vector<double> rhs(behavior.table().begin(), behavior.table().end());
    rhs.push_back(1.0);

    const FeasibilityResult lp = solve_feasibility(a, rhs);
    LocalMembershipResult result;

    if (lp.infeasibility <= options.tolerance) {
        result.isLocal = true;
        std::vector<double> recomposed(entries, 0.0);
        for (std::uint64_t k = 0; k < count; ++k) {
            const double w = lp.point[k];
            if (w <= 0.0) continue;
            WeightedStrategy ws{strategy_at(s, k), k, w};
            for (std::size_t i = 0; i < entries; ++i) {
                recomposed[i] += w * a(i, k);
            }
            result.weights.push_back(std::move(ws));
        }
        double residual = 0.0;
        for (std::size_t i = 0; i < entries; ++i) {
            residual = std::max(residual, std::abs(recomposed[i] - behavior.table()[i]));
        }
        result.residual = residual;
        if (residual > options.tolerance) {
            fail(ErrorCode::kNumericalFailure, "local decomposition residual above tolerance");
        }
        return result;
    }

    // Farkas certificate: sum_i u_i V_k(i) + u_0 <= 0 for every vertex k while
    // sum_i u_i p(i) + u_0 > 0. The table part of u is the witness.
    std::vector<double> coeffs(lp.dual.begin(), lp.dual.begin() + static_cast<std::ptrdiff_t>(entries));
    for (double &c : coeffs) {
        if (std::abs(c) < 1e-14) c = 0.0;
    }
    BellExpression witness(s, std::move(coeffs));
    witness.localBound = local_bound(witness, options.cap);
    witness.algebraicBound = algebraic_bound(witness);
    result.witnessValue = evaluate(witness, behavior);
    result.residual = lp.infeasibility;
    if (result.witnessValue - *witness.localBound <= options.tolerance) {
        fail(ErrorCode::kNumericalFailure, "membership undecided at tolerance: neither decomposition nor witness");
    }
    result.witness = std::move(witness);
    return result;
}

BellExpression chsh_expression() {
    std::vector<double> c(kChshScenario.table_size());
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const int term = (x == 1 && y == 1) ? -1 : 1;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    c[kChshScenario.index(x, y, a, b)] = term * outcome_sign(a) * outcome_sign(b);
                }
            }
        }
    }
    BellExpression e(kChshScenario, std::move(c));
    e.localBound = 2.0;
    e.algebraicBound = 4.0;
    return e;
}

std::vector<BellExpression> chsh_symmetries() {
    std::vector<BellExpression> out;
    for (int global : {1, -1}) {
        for (int negated = 3; negated >= 0; --negated) {
            std::vector<double> c(kChshScenario.table_size());
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    const int term = global * ((2 * x + y) == negated ? -1 : 1);
                    for (int a = 0; a < 2; ++a) {
                        for (int b = 0; b < 2; ++b) {
                            c[kChshScenario.index(x, y, a, b)] = term * outcome_sign(a) * outcome_sign(b);
                        }
                    }
                }
            }
            BellExpression e(kChshScenario, std::move(c));
            e.localBound = 2.0;
            e.algebraicBound = 4.0;
            out.push_back(std::move(e));
        }
    }
    return out;
}

double max_chsh(const Behavior &behavior) {
    if (behavior.scenario() != kChshScenario) {
        fail(ErrorCode::kDimensionMismatch, "CHSH needs the (2,2,2,2) scenario");
    }
    const double e00 = correlator(behavior, 0, 0);
    const double e01 = correlator(behavior, 0, 1);
    const double e10 = correlator(behavior, 1, 0);
    const double e11 = correlator(behavior, 1, 1);
    const double sum = e00 + e01 + e10 + e11;
    double best = -std::numeric_limits<double>::infinity();
    for (double e : {e00, e01, e10, e11}) {
        best = std::max({best, sum - 2 * e, -(sum - 2 * e)});
    }
    return best;
}

}  // namespace bell_lab
