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

#ifndef BELL_LAB_BILOCAL_H
#define BELL_LAB_BILOCAL_H

#include <functional>
#include <vector>

#include "bell_lab/behavior.h"
#include "bell_lab/quantum.h"

namespace bell_lab {

/// Entanglement swapping: source 1 emits Werner(v1) to Alice and Charlie's
/// first qubit, source 2 emits Werner(v2) to Charlie's second qubit and Bob.
/// Charlie performs a complete Bell-state measurement.
///
/// Charlie's outcome c = 2 * bit1 + bit2, where bit1 is the phase bit of the
/// Bell state (0 for +, 1 for -) and bit2 = bit1 xor parity (parity 0 for Phi,
/// 1 for Psi):  c=0 Phi+,  c=1 Psi+,  c=2 Psi-,  c=3 Phi-.
struct SwappingScenario {
    double v1 = 1.0;
    double v2 = 1.0;
    std::vector<BlochVector> aliceDirections;
    std::vector<BlochVector> bobDirections;

    /// Throws OutOfRange for visibilities outside [0,1], InvalidArgument for empty settings.
    void validate() const;
};

inline constexpr int kCharlieOutcomes = 4;

/// p(a, b, c | x, y), flat in (x, y, a, b, c) order.
class TripartiteBehavior {
   public:
    TripartiteBehavior(int n_x, int n_y, std::vector<double> table);

    int nX() const { return nX_; }
    int nY() const { return nY_; }
    std::size_t index(int x, int y, int a, int b, int c) const {
        return (((static_cast<std::size_t>(x) * nY_ + y) * 2 + a) * 2 + b) * kCharlieOutcomes + c;
    }
    double operator()(int x, int y, int a, int b, int c) const { return table_[index(x, y, a, b, c)]; }
    std::span<const double> table() const { return table_; }

    /// p(c | x, y), which does not depend on (x, y) for a fixed Bell measurement.
    double charlie_probability(int x, int y, int c) const;
    /// p(a, b | x, y, c) as a two-party behavior.
    Behavior conditioned(int c) const;

   private:
    int nX_;
    int nY_;
    std::vector<double> table_;
};

/// Bell-state projector for Charlie's outcome c on the two middle qubits.
ComplexMatrix bell_projector(int c);

/// Born rule on the 16-dimensional state rho_v1 (x) rho_v2, qubit order
/// (A, C1, C2, B).
TripartiteBehavior swapping_behavior(const SwappingScenario &scenario);

/// Alice and Bob both measure (z + x)/sqrt2 and (z - x)/sqrt2.
std::pair<std::vector<BlochVector>, std::vector<BlochVector>> bilocal_settings();

struct BilocalValue {
    double i = 0.0;
    double j = 0.0;
    /// sqrt|I| + sqrt|J|; bilocal models obey value <= bound.
    double value = 0.0;
    double bound = 1.0;
};

/// I = 1/4 sum_xy <A_x B0 C_y>, J = 1/4 sum_xy (-1)^(x+y) <A_x B1 C_y>, with
/// B0 = (-1)^(bit1 xor bit2) and B1 = (-1)^bit1 from Charlie's outcome.
/// Throws DimensionMismatch unless both edge parties have two inputs.
BilocalValue bilocal_value(const TripartiteBehavior &behavior);

/// S_biloc for visibilities (v1, v2) under bilocal_settings().
BilocalValue bilocal_value(double v1, double v2);

/// Largest CHSH value (over Charlie outcomes and the 8 relabelings) of the
/// Alice-Bob behavior conditioned on Charlie, measured with chsh_optimal_settings().
double conditioned_chsh(double v1, double v2);

struct SweepRow {
    double v1 = 0.0;
    double v2 = 0.0;
    double product = 0.0;
    double sBiloc = 0.0;
    double chsh = 0.0;
    bool violatesBilocal = false;
    bool violatesChsh = false;
};

/// Violation flags use a 1e-9 margin: S_biloc > 1 + 1e-9, chsh > 2 + 1e-9.
SweepRow bilocal_point(double v1, double v2);

/// Evaluates every grid point in (v1-major, v2-minor) order and hands each row
/// to `sink`. Throws OutOfRange when a grid value is outside [0,1].
void bilocal_threshold_sweep(
    const std::vector<double> &v1_grid, const std::vector<double> &v2_grid, const std::function<void(const SweepRow &)> &sink);

std::vector<SweepRow> bilocal_threshold_sweep(const std::vector<double> &v1_grid, const std::vector<double> &v2_grid);

/// Evenly spaced grid of `points` values over [0,1].
std::vector<double> unit_grid(int points);

}  // namespace bell_lab

#endif
