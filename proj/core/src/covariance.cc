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

#include "bell_lab/covariance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/parallel.h"

namespace bell_lab {

namespace {

void check_table(const std::vector<int> &table, std::size_t size, int range, const char *name) {
    if (table.size() != size) {
        fail(ErrorCode::kDimensionMismatch, std::string(name) + " table has wrong size");
    }
    for (int v : table) {
        if (v < 0 || v >= range) fail(ErrorCode::kInvalidArgument, std::string(name) + " entry out of range");
    }
}

std::vector<int> random_table(std::size_t size, int range, Rng &rng) {
    std::vector<int> t(size);
    for (int &v : t) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(range)));
    return t;
}

std::vector<double> dirichlet_prior(int count, Rng &rng) {
    std::vector<double> p(count);
    double sum = 0.0;
    for (double &v : p) {
        v = rng.exponential();
        sum += v;
    }
    for (double &v : p) v /= sum;
    return p;
}

std::vector<std::vector<double>> prior_grid(int parts, int grid) {
    std::vector<std::vector<double>> out;
    std::vector<int> c(parts, 0);
    // Compositions of `grid` into `parts` nonnegative integers, lexicographic.
    auto rec = [&](auto &&self, int idx, int remaining) -> void {
        if (idx == parts - 1) {
            c[idx] = remaining;
            std::vector<double> p(parts);
            for (int i = 0; i < parts; ++i) p[i] = static_cast<double>(c[i]) / grid;
            out.push_back(std::move(p));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            c[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, grid);
    return out;
}

struct ModelOutcome {
    std::uint64_t checked = 0;
    std::uint64_t localityFailures = 0;
    std::uint64_t chshViolations = 0;
    double maxChsh = -std::numeric_limits<double>::infinity();
    double minChsh = std::numeric_limits<double>::infinity();
    double maxAnyLabeling = -std::numeric_limits<double>::infinity();

    void merge(const ModelOutcome &o) {
        checked += o.checked;
        localityFailures += o.localityFailures;
        chshViolations += o.chshViolations;
        maxChsh = std::max(maxChsh, o.maxChsh);
        minChsh = std::min(minChsh, o.minChsh);
        maxAnyLabeling = std::max(maxAnyLabeling, o.maxAnyLabeling);
    }
};

void assess(const CovariantModel &model, ModelOutcome &out) {
    const Behavior behavior = induced_behavior(model);
    ++out.checked;
    bool local = false;
    try {
        local = is_local(behavior).isLocal;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::kNumericalFailure) throw;
    }
    if (!local) ++out.localityFailures;
    if (model.scenario == kChshScenario) {
        static const BellExpression chsh = chsh_expression();
        const double value = evaluate(chsh, behavior);
        out.maxChsh = std::max(out.maxChsh, value);
        out.minChsh = std::min(out.minChsh, value);
        out.maxAnyLabeling = std::max(out.maxAnyLabeling, max_chsh(behavior));
        if (value > 2.0 + 1e-9) ++out.chshViolations;
    }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace

void CovariantModel::validate() const {
    scenario.validate();
    if (lambdaCount < 1) fail(ErrorCode::kInvalidArgument, "lambdaCount must be >= 1");
    const std::size_t l = static_cast<std::size_t>(lambdaCount);
    if (prior.size() != l) fail(ErrorCode::kDimensionMismatch, "prior length differs from lambdaCount");
    double sum = 0.0;
    for (double p : prior) {
        if (!(p >= 0.0)) fail(ErrorCode::kInvalidArgument, "prior has a negative entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) fail(ErrorCode::kInvalidArgument, "prior does not sum to 1");
    const std::size_t nx = scenario.nX, ny = scenario.nY;
    check_table(aliceFirst, nx * l, scenario.nA, "F_AB");
    check_table(bobSecond, nx * ny * l, scenario.nB, "S_AB");
    check_table(bobFirst, ny * l, scenario.nB, "F_BA");
    check_table(aliceSecond, nx * ny * l, scenario.nA, "S_BA");
}

CovarianceCheck check_covariance(const CovariantModel &model) {
    model.validate();
    CovarianceCheck check;
    const Scenario &s = model.scenario;
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            for (int l = 0; l < model.lambdaCount; ++l) {
                if (model.F_AB(x, l) != model.S_BA(x, y, l)) {
                    check.violations.push_back({x, y, l, Party::kAlice, model.F_AB(x, l), model.S_BA(x, y, l)});
                }
                if (model.F_BA(y, l) != model.S_AB(x, y, l)) {
                    check.violations.push_back({x, y, l, Party::kBob, model.F_BA(y, l), model.S_AB(x, y, l)});
                }
            }
        }
    }
    check.covariant = check.violations.empty();
    return check;
}

Behavior induced_behavior(const CovariantModel &model) {
    const CovarianceCheck check = check_covariance(model);
    if (!check.covariant) {
        const auto &v = check.violations.front();
        fail(
            ErrorCode::kNotCovariant,
            "model is not covariant: " + std::string(v.party == Party::kAlice ? "Alice" : "Bob") +
                " outcome depends on the frame at (x=" + std::to_string(v.x) + ", y=" + std::to_string(v.y) +
                ", lambda=" + std::to_string(v.lambda) + ")");
    }
    const Scenario &s = model.scenario;
    const std::size_t l_count = static_cast<std::size_t>(model.lambdaCount);
    // Integer indicator counts per (lambda, x, y, a, b), one tally per frame.
    std::vector<int> frame_ab(l_count * s.table_size(), 0);
    std::vector<int> frame_ba(l_count * s.table_size(), 0);
    for (int l = 0; l < model.lambdaCount; ++l) {
        const std::size_t base = static_cast<std::size_t>(l) * s.table_size();
        for (int x = 0; x < s.nX; ++x) {
            for (int y = 0; y < s.nY; ++y) {
                ++frame_ab[base + s.index(x, y, model.F_AB(x, l), model.S_AB(x, y, l))];
                ++frame_ba[base + s.index(x, y, model.S_BA(x, y, l), model.F_BA(y, l))];
            }
        }
    }
    if (frame_ab != frame_ba) {
        fail(ErrorCode::kNotCovariant, "frame evaluations disagree");
    }
    std::vector<double> p(s.table_size(), 0.0);
    for (std::size_t l = 0; l < l_count; ++l) {
        for (std::size_t k = 0; k < s.table_size(); ++k) {
            if (frame_ab[l * s.table_size() + k]) p[k] += model.prior[l];
        }
    }
    // Renormalize per (x,y) block to absorb rounding in the prior sum.
    const std::size_t block = static_cast<std::size_t>(s.nA) * s.nB;
    for (std::size_t start = 0; start < p.size(); start += block) {
        double sum = 0.0;
        for (std::size_t k = 0; k < block; ++k) sum += p[start + k];
        for (std::size_t k = 0; k < block; ++k) p[start + k] /= sum;
    }
    return Behavior(s, std::move(p));
}

CovariantModel covariant_completion(
    const Scenario &scenario, std::vector<double> prior, std::vector<int> alice_first, std::vector<int> bob_first) {
    CovariantModel m;
    m.scenario = scenario;
    m.lambdaCount = static_cast<int>(prior.size());
    m.prior = std::move(prior);
    m.aliceFirst = std::move(alice_first);
    m.bobFirst = std::move(bob_first);
    const std::size_t l = static_cast<std::size_t>(m.lambdaCount);
    if (m.aliceFirst.size() != scenario.nX * l || m.bobFirst.size() != scenario.nY * l) {
        fail(ErrorCode::kDimensionMismatch, "first-measurer tables do not match scenario and prior");
    }
    m.bobSecond.resize(static_cast<std::size_t>(scenario.nX) * scenario.nY * l);
    m.aliceSecond.resize(m.bobSecond.size());
    for (int x = 0; x < scenario.nX; ++x) {
        for (int y = 0; y < scenario.nY; ++y) {
            for (std::size_t k = 0; k < l; ++k) {
                const std::size_t i = (static_cast<std::size_t>(x) * scenario.nY + y) * l + k;
                m.bobSecond[i] = m.bobFirst[y * l + k];
                m.aliceSecond[i] = m.aliceFirst[x * l + k];
            }
        }
    }
    m.validate();
    return m;
}

CovariantModel random_covariant_model(const Scenario &scenario, int lambda_count, Rng &rng) {
    scenario.validate();
    const std::size_t l = static_cast<std::size_t>(lambda_count);
    auto prior = dirichlet_prior(lambda_count, rng);
    auto alice = random_table(scenario.nX * l, scenario.nA, rng);
    auto bob = random_table(scenario.nY * l, scenario.nB, rng);
    return covariant_completion(scenario, std::move(prior), std::move(alice), std::move(bob));
}

CovariantModel random_model(const Scenario &scenario, int lambda_count, Rng &rng) {
    CovariantModel m = random_covariant_model(scenario, lambda_count, rng);
    m.bobSecond = random_table(m.bobSecond.size(), scenario.nB, rng);
    m.aliceSecond = random_table(m.aliceSecond.size(), scenario.nA, rng);
    return m;
}

LocalityReport covariance_forces_locality(
    const Scenario &scenario, int lambda_count, std::uint64_t trials, std::uint64_t seed,
    const LocalityOptions &options) {
    scenario.validate();
    if (lambda_count < 1) fail(ErrorCode::kInvalidArgument, "lambdaCount must be >= 1");
    strategy_count(scenario);

    const std::uint64_t l = static_cast<std::uint64_t>(lambda_count);
    const std::uint64_t alice_tables = saturating_pow(scenario.nA, scenario.nX * l);
    const std::uint64_t bob_tables = saturating_pow(scenario.nB, scenario.nY * l);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t table_combos =
        (alice_tables == max || bob_tables == max || alice_tables > max / bob_tables) ? max
                                                                                      : alice_tables * bob_tables;

    std::vector<std::vector<double>> priors;
    std::uint64_t total = max;
    const bool may_exhaust = options.mode != SearchMode::kSampled && table_combos <= options.exhaustiveCap;
    if (may_exhaust) {
        priors = prior_grid(lambda_count, lambda_count == 1 ? 1 : options.priorGrid);
        if (table_combos <= max / priors.size()) total = table_combos * priors.size();
    }

    SearchMode mode = options.mode;
    if (mode == SearchMode::kAuto) {
        mode = total <= options.exhaustiveCap ? SearchMode::kExhaustive : SearchMode::kSampled;
    }
    if (mode == SearchMode::kExhaustive && total > options.exhaustiveCap) {
        fail(ErrorCode::kCapExceeded, "exhaustive covariant search exceeds cap " + std::to_string(options.exhaustiveCap));
    }

    constexpr std::uint64_t kChunk = 256;
    const std::uint64_t units = mode == SearchMode::kExhaustive ? table_combos : trials;
    const std::size_t chunks = static_cast<std::size_t>((units + kChunk - 1) / kChunk);
    std::vector<ModelOutcome> partial(chunks);

    parallel_for(chunks, [&](std::size_t c) {
        ModelOutcome &out = partial[c];
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(units, begin + kChunk);
        for (std::uint64_t u = begin; u < end; ++u) {
            if (mode == SearchMode::kExhaustive) {
                std::uint64_t rest = u;
                std::vector<int> bob(scenario.nY * l), alice(scenario.nX * l);
                for (auto it = bob.rbegin(); it != bob.rend(); ++it) {
                    *it = static_cast<int>(rest % scenario.nB);
                    rest /= scenario.nB;
                }
                for (auto it = alice.rbegin(); it != alice.rend(); ++it) {
                    *it = static_cast<int>(rest % scenario.nA);
                    rest /= scenario.nA;
                }
                for (const auto &prior : priors) {
                    assess(covariant_completion(scenario, prior, alice, bob), out);
                }
            } else {
                Rng rng(seed, u);
                assess(random_covariant_model(scenario, lambda_count, rng), out);
            }
        }
    });

    ModelOutcome total_out;
    for (const auto &p : partial) total_out.merge(p);

    LocalityReport report;
    report.mode = mode;
    report.modelsChecked = total_out.checked;
    report.localityFailures = total_out.localityFailures;
    report.chshApplicable = scenario == kChshScenario;
    if (report.chshApplicable && total_out.checked > 0) {
        report.chshViolations = total_out.chshViolations;
        report.maxChsh = total_out.maxChsh;
        report.minChsh = total_out.minChsh;
        report.maxChshAnyLabeling = total_out.maxAnyLabeling;
    }
    return report;
}

}  // namespace bell_lab
