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

#ifndef BELL_LAB_QUANTUM_H
#define BELL_LAB_QUANTUM_H

#include <vector>

#include "bell_lab/behavior.h"
#include "bell_lab/linalg.h"

namespace bell_lab {

/// Unit vector on the Bloch sphere; the direction of a projective qubit measurement.
class BlochVector {
   public:
    /// Throws InvalidArgument unless |v| = 1 within 1e-12.
    explicit BlochVector(const Vec3 &v);
    BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {
    }
    /// Rescales a nonzero vector to unit length.
    static BlochVector normalized(const Vec3 &v);

    const Vec3 &vec() const { return v_; }
    double x() const { return v_[0]; }
    double y() const { return v_[1]; }
    double z() const { return v_[2]; }

    friend double dot(const BlochVector &a, const BlochVector &b) { return dot(a.v_, b.v_); }

   private:
    Vec3 v_;
};

/// Validated 4x4 two-qubit density matrix, qubit A first (basis index 2a + b).
class TwoQubitState {
   public:
    /// Throws InvalidArgument unless Hermitian (1e-12), unit trace (1e-12)
    /// and eigenvalues >= -1e-10.
    explicit TwoQubitState(ComplexMatrix rho);
    const ComplexMatrix &rho() const { return rho_; }

   private:
    ComplexMatrix rho_;
};

struct MeasurementSettings {
    std::vector<BlochVector> alice;
    std::vector<BlochVector> bob;

    /// Throws InvalidArgument when either side is empty.
    void validate() const;
    Scenario scenario() const;
};

/// |psi-> = (|01> - |10>)/sqrt2 as a 4x4 projector.
ComplexMatrix singlet_projector();

/// v * singlet + (1 - v) * I/4. Throws OutOfRange unless 0 <= v <= 1.
TwoQubitState werner_state(double visibility);

/// Pure product state with Bloch vectors a and b.
TwoQubitState product_state(const BlochVector &a, const BlochVector &b);

/// exp(-i angle axis.sigma / 2).
ComplexMatrix rotation_unitary(const Vec3 &axis, double angle);

/// (I x U) singlet (I x U)^dagger; any maximally entangled two-qubit state is of this form.
TwoQubitState maximally_entangled_state(const ComplexMatrix &bob_unitary);

/// The direction n' with U^dagger (n.sigma) U = n'.sigma.
BlochVector heisenberg_direction(const ComplexMatrix &unitary, const BlochVector &n);

/// (I + s n.sigma)/2 with s = outcome_sign(outcome).
ComplexMatrix qubit_projector(const BlochVector &n, int outcome);

/// Born-rule behavior p(a,b|x,y) = Tr[rho (P_a^x (x) P_b^y)], two outcomes per side.
Behavior quantum_behavior(const TwoQubitState &state, const MeasurementSettings &settings);

/// Alice {z, x}; Bob {-(z+x)/sqrt2, (x-z)/sqrt2}. The singlet reaches +2 sqrt2 on
/// chsh_expression() with these directions.
MeasurementSettings chsh_optimal_settings();

/// CHSH value of werner_state(v) under chsh_optimal_settings().
double werner_chsh_value(double visibility);

/// Smallest visibility whose Werner state violates CHSH under the optimal
/// settings, located by bisection on the CHSH value.
double chsh_violation_threshold(double tolerance = 1e-12);

/// Correlation matrix T_ij = Tr[rho sigma_i (x) sigma_j].
std::array<Vec3, 3> correlation_matrix(const TwoQubitState &state);

}  // namespace bell_lab

#endif
