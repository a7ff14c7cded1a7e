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

#include "bell_lab/bilocal.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/parallel.h"

namespace bell_lab {

void SwappingScenario::validate() const {
    if (!(v1 >= 0.0 && v1 <= 1.0) || !(v2 >= 0.0 && v2 <= 1.0)) {
        fail(ErrorCode::kOutOfRange, "source visibilities must lie in [0, 1]");
    }
    if (aliceDirections.empty() || bobDirections.empty()) {
        fail(ErrorCode::kInvalidArgument, "edge parties need at least one direction each");
    }
}

TripartiteBehavior::TripartiteBehavior(int n_x, int n_y, std::vector<double> table)
    : nX_(n_x), nY_(n_y), table_(std::move(table)) {
    if (n_x < 1 || n_y < 1) fail(ErrorCode::kInvalidArgument, "input counts must be positive");
    const std::size_t block = 2 * 2 * kCharlieOutcomes;
    if (table_.size() != static_cast<std::size_t>(n_x) * n_y * block) {
        fail(ErrorCode::kDimensionMismatch, "tripartite table has wrong size");
    }
    for (double &p : table_) {
        if (p < 0.0) {
            if (p < -kNegativityTolerance) fail(ErrorCode::kOutOfRange, "tripartite entry is negative");
            p = 0.0;
        }
    }
    for (std::size_t start = 0; start < table_.size(); start += block) {
        double sum = 0.0;
        for (std::size_t k = 0; k < block; ++k) sum += table_[start + k];
        if (std::abs(sum - 1.0) > kNormalizationTolerance) {
            fail(ErrorCode::kInvalidArgument, "tripartite block is not normalized");
        }
    }
}

double TripartiteBehavior::charlie_probability(int x, int y, int c) const {
    double p = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p += (*this)(x, y, a, b, c);
    return p;
}

Behavior TripartiteBehavior::conditioned(int c) const {
    const Scenario s{nX_, nY_, 2, 2};
    std::vector<double> p(s.table_size());
    for (int x = 0; x < nX_; ++x) {
        for (int y = 0; y < nY_; ++y) {
            const double pc = charlie_probability(x, y, c);
            if (!(pc > 0.0)) fail(ErrorCode::kNumericalFailure, "Charlie outcome has zero probability");
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) p[s.index(x, y, a, b)] = (*this)(x, y, a, b, c) / pc;
        }
    }
    return Behavior(s, std::move(p));
}

ComplexMatrix bell_projector(int c) {
    if (c < 0 || c >= kCharlieOutcomes) fail(ErrorCode::kOutOfRange, "Charlie outcome must be in 0..3");
    const int bit1 = c >> 1;
    const int bit2 = c & 1;
    const int parity = bit1 ^ bit2;
    const double phase = bit1 ? -1.0 : 1.0;
    const double h = 1.0 / std::sqrt(2.0);
    Complex v[4] = {0.0, 0.0, 0.0, 0.0};
    if (parity == 0) {
        v[0] = h;  // |00>
        v[3] = phase * h;  // |11>
    } else {
        v[1] = h;  // |01>
        v[2] = phase * h;  // |10>
    }
    ComplexMatrix p(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

TripartiteBehavior swapping_behavior(const SwappingScenario &scenario) {
    scenario.validate();
    const ComplexMatrix rho = kron(werner_state(scenario.v1).rho(), werner_state(scenario.v2).rho());
    const int nx = static_cast<int>(scenario.aliceDirections.size());
    const int ny = static_cast<int>(scenario.bobDirections.size());
    std::vector<double> table(static_cast<std::size_t>(nx) * ny * 2 * 2 * kCharlieOutcomes);
    std::vector<ComplexMatrix> charlie;
    for (int c = 0; c < kCharlieOutcomes; ++c) charlie.push_back(bell_projector(c));
    for (int x = 0; x < nx; ++x) {
        for (int y = 0; y < ny; ++y) {
            for (int a = 0; a < 2; ++a) {
                const ComplexMatrix pa = qubit_projector(scenario.aliceDirections[x], a);
                for (int b = 0; b < 2; ++b) {
                    const ComplexMatrix pb = qubit_projector(scenario.bobDirections[y], b);
                    for (int c = 0; c < kCharlieOutcomes; ++c) {
                        const ComplexMatrix op = kron(kron(pa, charlie[c]), pb);
                        const std::size_t k = (((static_cast<std::size_t>(x) * ny + y) * 2 + a) * 2 + b) *
                                                  kCharlieOutcomes + c;
                        table[k] = trace_product(rho, op).real();
                    }
                }
            }
        }
    }
    return TripartiteBehavior(nx, ny, std::move(table));
}

std::pair<std::vector<BlochVector>, std::vector<BlochVector>> bilocal_settings() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<BlochVector> dirs{BlochVector::normalized({h, 0, h}), BlochVector::normalized({-h, 0, h})};
    return {dirs, dirs};
}

BilocalValue bilocal_value(const TripartiteBehavior &behavior) {
    if (behavior.nX() != 2 || behavior.nY() != 2) {
        fail(ErrorCode::kDimensionMismatch, "bilocal value needs two inputs for Alice and Bob");
    }
    BilocalValue r;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            double e0 = 0.0, e1 = 0.0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    for (int c = 0; c < kCharlieOutcomes; ++c) {
                        const int bit1 = c >> 1, bit2 = c & 1;
                        const double p = behavior(x, y, a, b, c) * outcome_sign(a) * outcome_sign(b);
                        e0 += ((bit1 ^ bit2) ? -1.0 : 1.0) * p;
                        e1 += (bit1 ? -1.0 : 1.0) * p;
                    }
                }
            }
            r.i += 0.25 * e0;
            r.j += 0.25 * (((x + y) % 2) ? -1.0 : 1.0) * e1;
        }
    }
    // The square root magnifies rounding noise (1e-17 -> 3e-9), so treat it as zero.
    constexpr double kRoundingFloor = 1e-14;
    if (std::abs(r.i) < kRoundingFloor) r.i = 0.0;
    if (std::abs(r.j) < kRoundingFloor) r.j = 0.0;
    r.value = std::sqrt(std::abs(r.i)) + std::sqrt(std::abs(r.j));
    return r;
}

BilocalValue bilocal_value(double v1, double v2) {
    auto [alice, bob] = bilocal_settings();
    return bilocal_value(swapping_behavior({v1, v2, alice, bob}));
}

double conditioned_chsh(double v1, double v2) {
    const MeasurementSettings m = chsh_optimal_settings();
    const TripartiteBehavior t = swapping_behavior({v1, v2, m.alice, m.bob});
    double best = 0.0;
    for (int c = 0; c < kCharlieOutcomes; ++c) best = std::max(best, max_chsh(t.conditioned(c)));
    return best;
}

SweepRow bilocal_point(double v1, double v2) {
    SweepRow row;
    row.v1 = v1;
    row.v2 = v2;
    row.product = v1 * v2;
    row.sBiloc = bilocal_value(v1, v2).value;
    row.chsh = conditioned_chsh(v1, v2);
    row.violatesBilocal = row.sBiloc > 1.0 + 1e-9;
    row.violatesChsh = row.chsh > 2.0 + 1e-9;
    return row;
}

void bilocal_threshold_sweep(
    const std::vector<double> &v1_grid, const std::vector<double> &v2_grid, const std::function<void(const SweepRow &)> &sink) {
    for (double v : v1_grid)
        if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::kOutOfRange, "grid value outside [0, 1]");
    for (double v : v2_grid)
        if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::kOutOfRange, "grid value outside [0, 1]");
    // Rows are computed one v1-line at a time so memory stays bounded by a line.
    std::vector<SweepRow> line(v2_grid.size());
    for (double v1 : v1_grid) {
        parallel_for(v2_grid.size(), [&](std::size_t j) { line[j] = bilocal_point(v1, v2_grid[j]); });
        for (const auto &row : line) sink(row);
    }
}

std::vector<SweepRow> bilocal_threshold_sweep(const std::vector<double> &v1_grid, const std::vector<double> &v2_grid) {
    std::vector<SweepRow> rows;
    bilocal_threshold_sweep(v1_grid, v2_grid, [&](const SweepRow &r) { rows.push_back(r); });
    return rows;
}

std::vector<double> unit_grid(int points) {
    if (points < 2) fail(ErrorCode::kInvalidArgument, "grid needs at least two points");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = static_cast<double>(i) / (points - 1);
    return g;
}

}  // namespace bell_lab
