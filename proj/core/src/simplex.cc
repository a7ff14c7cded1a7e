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

#include "bell_lab/simplex.h"

#include <cmath>
#include <limits>

#include "bell_lab/error.h"

namespace bell_lab {

namespace {

constexpr double kPivotEpsilon = 1e-11;
constexpr double kReducedCostEpsilon = 1e-12;

}  // namespace

FeasibilityResult solve_feasibility(const DenseMatrix &a, std::span<const double> b) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    if (b.size() != m) {
        fail(ErrorCode::kDimensionMismatch, "right-hand side length differs from row count");
    }

    // Tableau columns: n structural, m artificial, 1 rhs. Rows with negative rhs
    // are negated so the artificial basis starts feasible.
    const std::size_t width = n + m + 1;
    std::vector<double> t(m * width, 0.0);
    std::vector<double> sign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            t[i * width + j] = sign[i] * a(i, j);
        }
        t[i * width + n + i] = 1.0;
        t[i * width + n + m] = sign[i] * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n + i;
    }

    // Reduced costs for the phase-1 objective (cost 1 on artificials).
    std::vector<double> cost(width, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[j] -= t[i * width + j];
        }
        cost[n + m] -= t[i * width + n + m];
    }

    FeasibilityResult result;
    const std::size_t max_pivots = 50 * (n + m) + 1000;
    while (true) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (cost[j] < -kReducedCostEpsilon) {
                entering = j;
                break;
            }
        }
        if (entering == width) {
            break;
        }
        std::size_t leaving = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double coef = t[i * width + entering];
            if (coef > kPivotEpsilon) {
                const double ratio = t[i * width + n + m] / coef;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && leaving < m && basis[i] < basis[leaving])) {
                    best_ratio = ratio;
                    leaving = i;
                }
            }
        }
        if (leaving == m) {
            // Phase 1 is bounded below by zero, so an unbounded ray means the
            // tableau has degraded numerically.
            fail(ErrorCode::kNumericalFailure, "phase-1 simplex found an unbounded direction");
        }
        if (++result.pivots > max_pivots) {
            fail(ErrorCode::kNumericalFailure, "simplex pivot limit reached");
        }

        double *pivot_row = &t[leaving * width];
        const double pivot = pivot_row[entering];
        for (std::size_t j = 0; j < width; ++j) {
            pivot_row[j] /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leaving) continue;
            double *row = &t[i * width];
            const double f = row[entering];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width; ++j) {
                row[j] -= f * pivot_row[j];
            }
        }
        const double f = cost[entering];
        for (std::size_t j = 0; j < width; ++j) {
            cost[j] -= f * pivot_row[j];
        }
        basis[leaving] = entering;
    }

    result.point.assign(n, 0.0);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double value = t[i * width + n + m];
        if (basis[i] < n) {
            result.point[basis[i]] = value;
        } else {
            infeasibility += value;
        }
    }
    result.infeasibility = infeasibility;

    // The reduced cost of artificial i is 1 - u_i for the sign-adjusted row.
    result.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        result.dual[i] = sign[i] * (1.0 - cost[n + i]);
    }
    return result;
}

}  // namespace bell_lab
