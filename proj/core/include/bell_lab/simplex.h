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

#ifndef BELL_LAB_SIMPLEX_H
#define BELL_LAB_SIMPLEX_H

#include <cstddef>
#include <span>
#include <vector>

namespace bell_lab {

/// Row-major dense matrix, small enough for tableau methods.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {
    }
    double &operator()(std::size_t i, std::size_t j) {
        return data[i * cols + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        return data[i * cols + j];
    }
};

struct FeasibilityResult {
    /// Phase-1 optimum: sum of artificial variables. Zero iff {A w = b, w >= 0} is feasible.
    double infeasibility = 0.0;
    /// Primal point w >= 0 at the phase-1 optimum.
    std::vector<double> point;
    /// Optimal phase-1 dual u: A^T u <= 0 and b^T u = infeasibility. When the
    /// system is infeasible, u is a Farkas certificate.
    std::vector<double> dual;
    std::size_t pivots = 0;
};

/// Phase-1 primal simplex (dense tableau, Bland's rule) for A w = b, w >= 0.
FeasibilityResult solve_feasibility(const DenseMatrix &a, std::span<const double> b);

}  // namespace bell_lab

#endif
