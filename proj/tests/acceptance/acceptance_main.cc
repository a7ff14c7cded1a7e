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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "bell_lab/bilocal.h"
#include "bell_lab/covariance.h"
#include "bell_lab/freewill.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/quantum.h"
#include "bell_lab/random.h"
#include "bell_lab/randomness.h"
#include "oracles.h"

using namespace bell_lab;

namespace {

const double kTsirelson = 2 * std::numbers::sqrt2;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string &what) {
        if (!condition) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

bool run_criterion(int id, const char *name, double limit_seconds, const std::function<void(Outcome &)> &body) {
    Outcome out;
    out.detail << std::setprecision(10);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.ok = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= limit_seconds) {
        out.ok = false;
        out.detail << " [time limit " << limit_seconds << " s exceeded]";
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (" << std::fixed << std::setprecision(2)
              << elapsed << " s)" << out.detail.str() << std::endl;
    return out.ok;
}

double chsh_of(const std::vector<Estimate> &e) {
    return e[0].mean + e[1].mean + e[2].mean - e[3].mean;
}

double chsh_stderr(const std::vector<Estimate> &e) {
    double v = 0;
    for (const auto &x : e) v += x.standardError * x.standardError;
    return std::sqrt(v);
}

MeasurementSettings random_settings(Rng &rng, int nx, int ny) {
    MeasurementSettings m;
    for (int i = 0; i < nx; ++i) m.alice.push_back(BlochVector::normalized(rng.sphere()));
    for (int i = 0; i < ny; ++i) m.bob.push_back(BlochVector::normalized(rng.sphere()));
    return m;
}

void chsh_bounds(Outcome &out) {
    const BellExpression chsh = chsh_expression();
    const auto strategies = enumerate_strategies(kChshScenario);
    double best = -1e300;
    for (const auto &s : strategies) best = std::max(best, evaluate(chsh, s));
    out.require(strategies.size() == 16, "16 strategies");
    out.require(best == 2.0 && local_bound(chsh) == 2.0, "local bound exactly 2");
    out.require(algebraic_bound(chsh) == 4.0, "algebraic bound exactly 4");
    out.detail << " local=" << local_bound(chsh) << " algebraic=" << algebraic_bound(chsh);
}

void werner_threshold(Outcome &out) {
    const double t = chsh_violation_threshold();
    out.detail << " threshold=" << t;
    out.require(std::abs(t - std::sqrt(0.5)) <= 1e-6, "threshold within 1e-6 of sqrt(1/2)");
    out.require(is_local(quantum_behavior(werner_state(t - 0.01), chsh_optimal_settings())).isLocal, "local below");
    out.require(werner_chsh_value(t + 0.01) > 2.0, "violation above");
}

void tsirelson(Outcome &out) {
    const double v = evaluate(chsh_expression(), quantum_behavior(werner_state(1.0), chsh_optimal_settings()));
    out.detail << " chsh=" << v;
    out.require(std::abs(v - kTsirelson) <= 1e-9, "CHSH within 1e-9 of 2 sqrt2");
}

void bilocal_threshold(Outcome &out) {
    const auto grid = unit_grid(21);
    const auto rows = bilocal_threshold_sweep(grid, grid);
    int mismatches = 0, bilocal_only = 0, chsh_outside = 0;
    for (const auto &r : rows) {
        const double gap = r.product - 0.5;
        if (std::abs(gap) <= 1e-6) {
            if (std::abs(r.sBiloc - 1.0) > 1e-6) ++mismatches;
        } else if ((r.sBiloc > 1.0) != (gap > 0)) {
            ++mismatches;
        }
        if (r.violatesChsh && !r.violatesBilocal) ++chsh_outside;
        if (r.violatesBilocal && !r.violatesChsh) ++bilocal_only;
    }
    double worst_boundary = 0;
    for (double v2 : {0.55, 0.6, 0.75, 0.9, 1.0}) {
        double lo = 0, hi = 1;
        while (hi - lo > 1e-10) {
            const double mid = (lo + hi) / 2;
            (bilocal_value(mid, v2).value > 1.0 ? hi : lo) = mid;
        }
        worst_boundary = std::max(worst_boundary, std::abs(lo * v2 - 0.5));
    }
    out.detail << " grid=" << rows.size() << " sign_mismatches=" << mismatches << " boundary_error=" << worst_boundary
               << " bilocal_only=" << bilocal_only;
    out.require(rows.size() == 441, "21x21 grid");
    out.require(mismatches == 0, "sign(S-1) = sign(v1 v2 - 1/2)");
    out.require(worst_boundary <= 1e-6, "boundary within 1e-6");
    out.require(chsh_outside == 0 && bilocal_only > 0, "bilocal region strictly contains CHSH region");
}

void covariance_locality(Outcome &out) {
    std::uint64_t exhaustive_models = 0, violations = 0, failures = 0;
    double max_any = -1e300;
    for (int l = 1; l <= 2; ++l) {
        const auto r = covariance_forces_locality(kChshScenario, l, 0, 0, {SearchMode::kExhaustive});
        exhaustive_models += r.modelsChecked;
        violations += r.chshViolations;
        failures += r.localityFailures;
        max_any = std::max(max_any, r.maxChshAnyLabeling);
    }
    const auto sampled = covariance_forces_locality(kChshScenario, 4, 100'000, 0, {SearchMode::kSampled});
    const double singlet = evaluate(chsh_expression(), quantum_behavior(werner_state(1.0), chsh_optimal_settings()));
    out.detail << " exhaustive=" << exhaustive_models << " maxCHSH=" << max_any << " sampled=" << sampled.modelsChecked
               << " sampledFailures=" << sampled.localityFailures;
    out.require(violations == 0 && failures == 0 && max_any <= 2.0 + 1e-9, "exhaustive lambda<=2 within CHSH 2");
    out.require(sampled.modelsChecked == 100'000 && sampled.localityFailures == 0, "1e5 sampled models local");
    out.require(sampled.chshViolations == 0, "sampled models within CHSH 2");
    out.require(singlet > max_any, "singlet exceeds every covariant model");
}

void detection_model(Outcome &out) {
    const std::uint64_t n = 1'000'000;
    const auto optimal = chsh_optimal_settings();
    const DetectionRun run = simulate_detection_model(optimal, n, 0);
    bool correlators_ok = true;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            correlators_ok = correlators_ok && run.correlators[x * 2 + y].within(-dot(optimal.alice[x], optimal.bob[y]));
    // One run with ten directions per side covers a hundred direction pairs.
    Rng rng(2026);
    const MeasurementSettings wide = random_settings(rng, 10, 10);
    const DetectionRun many = simulate_detection_model(wide, n, 1);
    int inside = 0;
    for (int x = 0; x < 10; ++x)
        for (int y = 0; y < 10; ++y) inside += many.correlators[x * 10 + y].within(-dot(wide.alice[x], wide.bob[y]));
    out.detail << " rate=" << run.detectionRate.mean << "+-" << run.detectionRate.standardError
               << " random_pairs_within_3sigma=" << inside << "/100";
    out.require(run.detectionRate.within(0.5), "detection rate 0.5 within 3 sigma");
    out.require(correlators_ok, "conditional correlators -x.y within 3 sigma");
    out.require(many.detectionRate.within(0.5), "detection rate 0.5 within 3 sigma (random settings)");
    out.require(inside >= 95, ">= 95 of 100 random pairs within 3 sigma");
}

void one_bit(Outcome &out) {
    const auto m = chsh_optimal_settings();
    const MeasurementDependentModel model{m.alice, std::nullopt};
    const std::size_t trace = 10'000;
    const auto run = simulate_measurement_dependent(model, m.bob, 1'000'000, 0, trace);
    bool correlators_ok = true;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            correlators_ok = correlators_ok && run.correlators[x * 2 + y].within(-dot(m.alice[x], m.bob[y]));
    const double s = chsh_of(run.correlators), se = chsh_stderr(run.correlators);
    bool all_local = run.trace.size() == trace;
    for (const auto &t : run.trace) {
        all_local = all_local && t.a == alice_response(m.alice[t.x].vec(), t.lambda) &&
                    t.b == bob_response(m.bob[t.y].vec(), t.lambda);
    }
    out.detail << " chsh=" << s << "+-" << se << " acceptance=" << run.acceptanceRate.mean
               << " deficit(4,2)=" << deficit(4, 2).bits;
    out.require(correlators_ok, "singlet correlators within 3 sigma");
    out.require(std::abs(s - kTsirelson) <= 3 * se, "CHSH 2 sqrt2 within 3 sigma");
    out.require(all_local, "every traced run lambda-local");
    out.require(deficit(4, 2).bits == 1.0, "deficit(4,2) = 1 exactly");
}

void expansion(Outcome &out) {
    const double bound = minentropy_bound(kTsirelson);
    const ExpansionStage stage = make_stage(2, 2, 1000, kTsirelson);
    const auto report = expansion_accounting(stage);
    const ExpansionStage s1 = make_stage(2, 2, 1000, kTsirelson, 0.01);
    const ExpansionStage s2 = make_stage(2, 2, 5000, kTsirelson, 0.01);
    const ExpansionStage s3 = make_stage(2, 2, 20000, kTsirelson, 0.01);
    const auto chain = serial_composition({s1, s2, s3}, 200.0);
    out.detail << " bound=" << bound << " consumed=" << report.consumed << " certified=" << report.certified
               << " factor=" << chain.factor;
    out.require(std::abs(bound - 1.0) <= 1e-9, "bound 1 within 1e-9");
    out.require(report.consumed == 2000.0 && report.certified == 1000.0 * bound &&
                    report.net == report.certified - report.consumed,
                "ledger arithmetic");
    out.require(chain.factor > 1.0, "3-stage factor > 1");
}

void property_suites(Outcome &out) {
    Rng rng(9);
    double worst_signaling = 0;
    // Quantum, covariant-model and swapping behaviors.
    for (int i = 0; i < 500; ++i) {
        const Behavior q = quantum_behavior(werner_state(rng.uniform()), random_settings(rng, 2, 3));
        worst_signaling = std::max(worst_signaling, signaling_deviation(q));
        const Behavior c = induced_behavior(random_covariant_model(Scenario{2, 2, 3, 2}, 3, rng));
        worst_signaling = std::max(worst_signaling, signaling_deviation(c));
    }
    const auto [alice, bob] = bilocal_settings();
    for (int i = 0; i < 20; ++i) {
        const TripartiteBehavior t = swapping_behavior({rng.uniform(), rng.uniform(), alice, bob});
        for (int c = 0; c < kCharlieOutcomes; ++c) {
            worst_signaling = std::max(worst_signaling, signaling_deviation(t.conditioned(c)));
        }
    }
    out.require(worst_signaling <= 1e-12, "no-signaling within 1e-12");

    // LP membership against the CHSH facets, and local bounds against brute force.
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        const Behavior b = quantum_behavior(werner_state(rng.uniform()), random_settings(rng, 2, 2));
        if (is_local(b).isLocal != (max_chsh(b) <= 2.0 + 1e-9)) ++disagreements;
        std::vector<double> coeffs(16);
        for (double &c : coeffs) c = 2 * rng.uniform() - 1;
        const BellExpression e(kChshScenario, coeffs);
        if (std::abs(local_bound(e) - oracle::brute_local_bound(coeffs, 2, 2, 2, 2)) > 1e-12) ++disagreements;
    }
    out.require(disagreements == 0, "LP and enumeration agree");

    // Seed reproducibility.
    const auto m = chsh_optimal_settings();
    const auto q1 = simulate_qrng_rounds(m, werner_state(1.0), 100'000, 42);
    const auto q2 = simulate_qrng_rounds(m, werner_state(1.0), 100'000, 42);
    const auto d1 = simulate_detection_model(m, 100'000, 42);
    const auto d2 = simulate_detection_model(m, 100'000, 42);
    const auto c1 = covariance_forces_locality(kChshScenario, 3, 5000, 42, {SearchMode::kSampled});
    const auto c2 = covariance_forces_locality(kChshScenario, 3, 5000, 42, {SearchMode::kSampled});
    const bool same = q1.bits == q2.bits && q1.aliceInputs == q2.aliceInputs &&
                      std::equal(d1.conditional.table().begin(), d1.conditional.table().end(),
                                 d2.conditional.table().begin()) &&
                      d1.detectionRate.mean == d2.detectionRate.mean && c1.maxChsh == c2.maxChsh &&
                      c1.minChsh == c2.minChsh;
    out.require(same, "seeded runs byte-identical");
    out.detail << " max_signaling=" << worst_signaling << " disagreements=" << disagreements;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "chsh-local-and-algebraic-bounds", 1, chsh_bounds);
    ok &= run_criterion(2, "werner-chsh-threshold", 5, werner_threshold);
    ok &= run_criterion(3, "tsirelson-point", 1, tsirelson);
    ok &= run_criterion(4, "bilocal-threshold", 30, bilocal_threshold);
    ok &= run_criterion(5, "covariance-forces-locality", 60, covariance_locality);
    ok &= run_criterion(6, "detection-model", 30, detection_model);
    ok &= run_criterion(7, "one-bit-measurement-dependence", 60, one_bit);
    ok &= run_criterion(8, "randomness-expansion", 5, expansion);
    ok &= run_criterion(9, "property-suites", 120, property_suites);
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
