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

#include <string>

#include "bell_lab/error.h"

namespace bell_lab {

using nlohmann::json;

namespace {

template <class F>
auto parsing(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        fail(ErrorCode::kParse, std::string("malformed ") + what + ": " + e.what());
    }
}

void expect_size(const json &j, std::size_t n, const char *what) {
    if (!j.is_array() || j.size() != n) {
        fail(ErrorCode::kParse, std::string(what) + " must be an array of length " + std::to_string(n));
    }
}

json nest4(const Scenario &s, std::span<const double> table) {
    json out = json::array();
    for (int x = 0; x < s.nX; ++x) {
        json jx = json::array();
        for (int y = 0; y < s.nY; ++y) {
            json jy = json::array();
            for (int a = 0; a < s.nA; ++a) {
                json ja = json::array();
                for (int b = 0; b < s.nB; ++b) ja.push_back(table[s.index(x, y, a, b)]);
                jy.push_back(std::move(ja));
            }
            jx.push_back(std::move(jy));
        }
        out.push_back(std::move(jx));
    }
    return out;
}

std::vector<double> flatten4(const Scenario &s, const json &j, const char *what) {
    std::vector<double> t(s.table_size());
    expect_size(j, s.nX, what);
    for (int x = 0; x < s.nX; ++x) {
        expect_size(j[x], s.nY, what);
        for (int y = 0; y < s.nY; ++y) {
            expect_size(j[x][y], s.nA, what);
            for (int a = 0; a < s.nA; ++a) {
                expect_size(j[x][y][a], s.nB, what);
                for (int b = 0; b < s.nB; ++b) t[s.index(x, y, a, b)] = j[x][y][a][b].get<double>();
            }
        }
    }
    return t;
}

json vec3_json(const Vec3 &v) {
    return json::array({v[0], v[1], v[2]});
}

}  // namespace

json to_json(const Scenario &s) {
    return {{"nX", s.nX}, {"nY", s.nY}, {"nA", s.nA}, {"nB", s.nB}};
}

Scenario scenario_from_json(const json &j) {
    return parsing("scenario", [&] {
        Scenario s{j.at("nX").get<int>(), j.at("nY").get<int>(), j.at("nA").get<int>(), j.at("nB").get<int>()};
        s.validate();
        return s;
    });
}

json to_json(const Behavior &behavior) {
    return {{"scenario", to_json(behavior.scenario())}, {"p", nest4(behavior.scenario(), behavior.table())}};
}

Behavior behavior_from_json(const json &j) {
    return parsing("behavior", [&] {
        const Scenario s = scenario_from_json(j.at("scenario"));
        return Behavior(s, flatten4(s, j.at("p"), "p"));
    });
}

json to_json(const BellExpression &expr) {
    json j{{"scenario", to_json(expr.scenario())}, {"coeffs", nest4(expr.scenario(), expr.coeffs())}};
    if (expr.localBound) j["localBound"] = *expr.localBound;
    if (expr.algebraicBound) j["algebraicBound"] = *expr.algebraicBound;
    return j;
}

BellExpression expression_from_json(const json &j) {
    return parsing("expression", [&] {
        const Scenario s = scenario_from_json(j.at("scenario"));
        BellExpression e(s, flatten4(s, j.at("coeffs"), "coeffs"));
        if (j.contains("localBound")) e.localBound = j.at("localBound").get<double>();
        if (j.contains("algebraicBound")) e.algebraicBound = j.at("algebraicBound").get<double>();
        e.check_bounds();
        return e;
    });
}

json to_json(const DeterministicStrategy &strategy) {
    return {{"alice", strategy.alice}, {"bob", strategy.bob}};
}

json to_json(const LocalMembershipResult &result) {
    json j{{"isLocal", result.isLocal}, {"residual", result.residual}};
    if (result.isLocal) {
        json w = json::array();
        for (const auto &ws : result.weights) {
            w.push_back({{"index", ws.index}, {"strategy", to_json(ws.strategy)}, {"weight", ws.weight}});
        }
        j["weights"] = std::move(w);
    } else if (result.witness) {
        j["witness"] = to_json(*result.witness);
        j["witnessValue"] = result.witnessValue;
    }
    return j;
}

LocalMembershipResult membership_from_json(const json &j) {
    return parsing("membership result", [&] {
        LocalMembershipResult r;
        r.isLocal = j.at("isLocal").get<bool>();
        r.residual = j.value("residual", 0.0);
        if (r.isLocal) {
            for (const auto &w : j.at("weights")) {
                WeightedStrategy ws;
                ws.index = w.at("index").get<std::uint64_t>();
                ws.weight = w.at("weight").get<double>();
                ws.strategy.alice = w.at("strategy").at("alice").get<std::vector<int>>();
                ws.strategy.bob = w.at("strategy").at("bob").get<std::vector<int>>();
                r.weights.push_back(std::move(ws));
            }
        } else {
            r.witness = expression_from_json(j.at("witness"));
            r.witnessValue = j.at("witnessValue").get<double>();
        }
        return r;
    });
}

json to_json(const MeasurementSettings &settings) {
    json alice = json::array(), bob = json::array();
    for (const auto &d : settings.alice) alice.push_back(vec3_json(d.vec()));
    for (const auto &d : settings.bob) bob.push_back(vec3_json(d.vec()));
    return {{"alice", std::move(alice)}, {"bob", std::move(bob)}};
}

std::vector<BlochVector> directions_from_json(const json &j) {
    return parsing("direction list", [&] {
        if (!j.is_array()) fail(ErrorCode::kParse, "direction list must be an array");
        std::vector<BlochVector> out;
        for (const auto &d : j) {
            expect_size(d, 3, "direction");
            out.emplace_back(Vec3{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()});
        }
        return out;
    });
}

MeasurementSettings settings_from_json(const json &j) {
    return parsing("settings", [&] {
        MeasurementSettings m{directions_from_json(j.at("alice")), directions_from_json(j.at("bob"))};
        m.validate();
        return m;
    });
}

json to_json(const TwoQubitState &state) {
    json rows = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < 4; ++k) row.push_back(json::array({state.rho()(i, k).real(), state.rho()(i, k).imag()}));
        rows.push_back(std::move(row));
    }
    return {{"rho", std::move(rows)}};
}

TwoQubitState state_from_json(const json &j) {
    return parsing("state", [&] {
        const json &rows = j.at("rho");
        expect_size(rows, 4, "rho");
        ComplexMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i) {
            expect_size(rows[i], 4, "rho row");
            for (std::size_t k = 0; k < 4; ++k) {
                expect_size(rows[i][k], 2, "complex entry");
                m(i, k) = Complex(rows[i][k][0].get<double>(), rows[i][k][1].get<double>());
            }
        }
        return TwoQubitState(std::move(m));
    });
}

json to_json(const CovariantModel &model) {
    const Scenario &s = model.scenario;
    const int l_count = model.lambdaCount;
    json f_ab = json::array(), s_ab = json::array(), f_ba = json::array(), s_ba = json::array();
    for (int x = 0; x < s.nX; ++x) {
        json row = json::array();
        for (int l = 0; l < l_count; ++l) row.push_back(model.F_AB(x, l));
        f_ab.push_back(std::move(row));
        json sab = json::array(), sba = json::array();
        for (int y = 0; y < s.nY; ++y) {
            json r1 = json::array(), r2 = json::array();
            for (int l = 0; l < l_count; ++l) {
                r1.push_back(model.S_AB(x, y, l));
                r2.push_back(model.S_BA(x, y, l));
            }
            sab.push_back(std::move(r1));
            sba.push_back(std::move(r2));
        }
        s_ab.push_back(std::move(sab));
        s_ba.push_back(std::move(sba));
    }
    for (int y = 0; y < s.nY; ++y) {
        json row = json::array();
        for (int l = 0; l < l_count; ++l) row.push_back(model.F_BA(y, l));
        f_ba.push_back(std::move(row));
    }
    return {{"scenario", to_json(s)}, {"lambdaCount", l_count}, {"prior", model.prior}, {"F_AB", f_ab},
            {"S_AB", s_ab}, {"F_BA", f_ba}, {"S_BA", s_ba}};
}

CovariantModel covariant_model_from_json(const json &j) {
    return parsing("covariant model", [&] {
        CovariantModel m;
        m.scenario = scenario_from_json(j.at("scenario"));
        m.lambdaCount = j.at("lambdaCount").get<int>();
        if (m.lambdaCount < 1) fail(ErrorCode::kInvalidArgument, "lambdaCount must be >= 1");
        m.prior = j.at("prior").get<std::vector<double>>();
        const Scenario &s = m.scenario;
        const std::size_t l_count = static_cast<std::size_t>(m.lambdaCount);
        auto read2 = [&](const json &t, int outer, const char *what) {
            std::vector<int> flat;
            expect_size(t, outer, what);
            for (int i = 0; i < outer; ++i) {
                expect_size(t[i], l_count, what);
                for (std::size_t l = 0; l < l_count; ++l) flat.push_back(t[i][l].get<int>());
            }
            return flat;
        };
        auto read3 = [&](const json &t, const char *what) {
            std::vector<int> flat;
            expect_size(t, s.nX, what);
            for (int x = 0; x < s.nX; ++x) {
                expect_size(t[x], s.nY, what);
                for (int y = 0; y < s.nY; ++y) {
                    expect_size(t[x][y], l_count, what);
                    for (std::size_t l = 0; l < l_count; ++l) flat.push_back(t[x][y][l].get<int>());
                }
            }
            return flat;
        };
        m.aliceFirst = read2(j.at("F_AB"), s.nX, "F_AB");
        m.bobSecond = read3(j.at("S_AB"), "S_AB");
        m.bobFirst = read2(j.at("F_BA"), s.nY, "F_BA");
        m.aliceSecond = read3(j.at("S_BA"), "S_BA");
        m.validate();
        return m;
    });
}

json to_json(const Estimate &e) {
    return {{"mean", e.mean}, {"stderr", e.standardError}};
}

json to_json(const ExpansionStage &s) {
    return {{"inputAlphabet", s.inputAlphabet},
            {"outputAlphabet", s.outputAlphabet},
            {"rounds", s.rounds},
            {"chshValue", s.chshValue},
            {"testFraction", s.testFraction},
            {"inputBitsConsumed", s.inputBitsConsumed},
            {"certifiedBitsProduced", s.certifiedBitsProduced}};
}

ExpansionStage stage_from_json(const json &j) {
    return parsing("expansion stage", [&] {
        return make_stage(
            j.at("inputAlphabet").get<std::uint64_t>(), j.at("outputAlphabet").get<std::uint64_t>(),
            j.at("rounds").get<std::uint64_t>(), j.at("chshValue").get<double>(), j.value("testFraction", 1.0));
    });
}

json to_json(const ChainReport &report) {
    json stages = json::array();
    for (const auto &e : report.stages) {
        stages.push_back({{"stage", e.stage},
                          {"consumed", e.consumed},
                          {"certified", e.certified},
                          {"poolBefore", e.poolBefore},
                          {"poolAfter", e.poolAfter}});
    }
    return {{"stages", std::move(stages)},     {"totalIn", report.totalIn},
            {"totalOut", report.totalOut},     {"totalConsumed", report.totalConsumed},
            {"totalCertified", report.totalCertified}, {"factor", report.factor}};
}

}  // namespace bell_lab
