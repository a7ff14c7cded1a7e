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

#include "bell_lab/quantum.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bell_lab/error.h"
#include "bell_lab/local_polytope.h"

namespace bell_lab {

BlochVector::BlochVector(const Vec3 &v) : v_(v) {
    const double n = norm(v);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
        fail(ErrorCode::kInvalidArgument, "Bloch vector must have unit norm (got " + std::to_string(n) + ")");
    }
}

BlochVector BlochVector::normalized(const Vec3 &v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        fail(ErrorCode::kInvalidArgument, "cannot normalize a zero or non-finite direction");
    }
    return BlochVector(Vec3{v[0] / n, v[1] / n, v[2] / n});
}

TwoQubitState::TwoQubitState(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (rho_.dim() != 4) fail(ErrorCode::kDimensionMismatch, "two-qubit state must be 4x4");
    if (hermiticity_error(rho_) > 1e-12) fail(ErrorCode::kInvalidArgument, "density matrix is not Hermitian");
    if (std::abs(rho_.trace() - Complex(1.0)) > 1e-12) fail(ErrorCode::kInvalidArgument, "density matrix trace is not 1");
    const auto eig = hermitian_eigenvalues(rho_);
    if (eig.front() < -1e-10) fail(ErrorCode::kInvalidArgument, "density matrix has a negative eigenvalue");
}

void MeasurementSettings::validate() const {
    if (alice.empty() || bob.empty()) fail(ErrorCode::kInvalidArgument, "measurement settings must be nonempty");
}

Scenario MeasurementSettings::scenario() const {
    validate();
    return Scenario{static_cast<int>(alice.size()), static_cast<int>(bob.size()), 2, 2};
}

ComplexMatrix singlet_projector() {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex psi[4] = {0.0, h, -h, 0.0};
    ComplexMatrix p(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(i, j) = psi[i] * std::conj(psi[j]);
    return p;
}

TwoQubitState werner_state(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        fail(ErrorCode::kOutOfRange, "visibility must lie in [0, 1]");
    }
    return TwoQubitState(singlet_projector() * Complex(visibility) +
                         ComplexMatrix::identity(4) * Complex((1.0 - visibility) / 4.0));
}

namespace {

ComplexMatrix qubit_state(const Vec3 &r) {
    return (ComplexMatrix::identity(2) + pauli_dot(r)) * Complex(0.5);
}

}  // namespace

TwoQubitState product_state(const BlochVector &a, const BlochVector &b) {
    return TwoQubitState(kron(qubit_state(a.vec()), qubit_state(b.vec())));
}

ComplexMatrix rotation_unitary(const Vec3 &axis, double angle) {
    const BlochVector n = BlochVector::normalized(axis);
    return ComplexMatrix::identity(2) * Complex(std::cos(angle / 2)) +
           pauli_dot(n.vec()) * Complex(0.0, -std::sin(angle / 2));
}

TwoQubitState maximally_entangled_state(const ComplexMatrix &bob_unitary) {
    if (bob_unitary.dim() != 2) fail(ErrorCode::kDimensionMismatch, "Bob's unitary must be 2x2");
    const ComplexMatrix u = kron(ComplexMatrix::identity(2), bob_unitary);
    ComplexMatrix rho = u * singlet_projector() * u.adjoint();
    // Clean rounding so the Hermitian check sees an exactly symmetric table.
    ComplexMatrix h = (rho + rho.adjoint()) * Complex(0.5);
    return TwoQubitState(std::move(h));
}

BlochVector heisenberg_direction(const ComplexMatrix &unitary, const BlochVector &n) {
    const ComplexMatrix op = unitary.adjoint() * pauli_dot(n.vec()) * unitary;
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = 0.5 * trace_product(pauli()[i], op).real();
    return BlochVector::normalized(out);
}

ComplexMatrix qubit_projector(const BlochVector &n, int outcome) {
    return (ComplexMatrix::identity(2) + pauli_dot(n.vec()) * Complex(outcome_sign(outcome))) * Complex(0.5);
}

Behavior quantum_behavior(const TwoQubitState &state, const MeasurementSettings &settings) {
    const Scenario s = settings.scenario();
    std::vector<double> p(s.table_size());
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            for (int a = 0; a < 2; ++a) {
                const ComplexMatrix pa = qubit_projector(settings.alice[x], a);
                for (int b = 0; b < 2; ++b) {
                    const ComplexMatrix op = kron(pa, qubit_projector(settings.bob[y], b));
                    p[s.index(x, y, a, b)] = trace_product(state.rho(), op).real();
                }
            }
        }
    }
    return Behavior(s, std::move(p));
}

MeasurementSettings chsh_optimal_settings() {
    const double h = 1.0 / std::sqrt(2.0);
    MeasurementSettings m;
    m.alice = {BlochVector(0, 0, 1), BlochVector(1, 0, 0)};
    m.bob = {BlochVector::normalized({-h, 0, -h}), BlochVector::normalized({h, 0, -h})};
    return m;
}

double werner_chsh_value(double visibility) {
    return evaluate(chsh_expression(), quantum_behavior(werner_state(visibility), chsh_optimal_settings()));
}

double chsh_violation_threshold(double tolerance) {
    double lo = 0.0, hi = 1.0;
    if (werner_chsh_value(hi) <= 2.0) fail(ErrorCode::kNumericalFailure, "singlet does not violate CHSH");
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (werner_chsh_value(mid) > 2.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::array<Vec3, 3> correlation_matrix(const TwoQubitState &state) {
    std::array<Vec3, 3> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = trace_product(state.rho(), kron(pauli()[i], pauli()[j])).real();
    return t;
}

}  // namespace bell_lab
