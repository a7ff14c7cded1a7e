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

// Independent reference computations for tests. Nothing here calls the code
// paths it is used to check.

#ifndef BELL_LAB_TESTS_ORACLES_H
#define BELL_LAB_TESTS_ORACLES_H

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

/// Brute-force maximum of a coefficient table (x,y,a,b row-major) over every
/// deterministic assignment, by nested digit counting.
inline double brute_local_bound(const std::vector<double> &c, int nx, int ny, int na, int nb) {
    std::vector<int> alice(nx, 0), bob(ny, 0);
    double best = -1e300;
    while (true) {
        double v = 0.0;
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y) v += c[((x * ny + y) * na + alice[x]) * nb + bob[y]];
        best = std::max(best, v);
        int k = 0;
        for (; k < nx + ny; ++k) {
            int &d = k < nx ? alice[k] : bob[k - nx];
            const int base = k < nx ? na : nb;
            if (++d < base) break;
            d = 0;
        }
        if (k == nx + ny) break;
    }
    return best;
}

/// PR box: a xor b = x*y with uniform marginals.
inline std::vector<double> pr_box() {
    std::vector<double> p(16, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) p[((x * 2 + y) * 2 + a) * 2 + b] = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
    return p;
}

/// Midpoint quadrature of (1/4pi) * integral of sign(x.l)|x.l| sign(y.l) over the sphere.
inline double detection_integral(const std::array<double, 3> &x, const std::array<double, 3> &y, int n = 800) {
    double sum = 0.0;
    const double dt = std::numbers::pi / n, dp = 2 * std::numbers::pi / (2 * n);
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) * dt;
        for (int j = 0; j < 2 * n; ++j) {
            const double p = (j + 0.5) * dp;
            const std::array<double, 3> l{std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
            const double xl = x[0] * l[0] + x[1] * l[1] + x[2] * l[2];
            const double yl = y[0] * l[0] + y[1] * l[1] + y[2] * l[2];
            sum += xl * (yl >= 0 ? 1.0 : -1.0) * std::sin(t) * dt * dp;
        }
    }
    return sum / (4 * std::numbers::pi);
}

/// Power sums sum_i l_i^k, k = 1..4. Equal power sums for a 4x4 matrix and a
/// candidate multiset pin down the characteristic polynomial (Newton's identities).
inline std::array<double, 4> power_sums(const std::array<double, 4> &eig) {
    std::array<double, 4> s{};
    for (int k = 0; k < 4; ++k)
        for (double l : eig) s[k] += std::pow(l, k + 1);
    return s;
}

}  // namespace oracle

#endif
