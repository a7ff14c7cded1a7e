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

#ifndef BELL_LAB_LINALG_H
#define BELL_LAB_LINALG_H

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace bell_lab {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3 &a) {
    return std::sqrt(dot(a, a));
}

/// Square complex matrix with row-major storage. Dimensions here are 2, 4 or 16.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    }

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex factor);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex f) { return a *= f; }
    friend ComplexMatrix operator*(Complex f, ComplexMatrix a) { return a *= f; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |a_ij - conj(a_ji)|.
double hermiticity_error(const ComplexMatrix &a);

/// Eigenvalues (ascending) of a real symmetric n x n matrix, cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues (ascending) of a Hermitian matrix, via the real symmetric
/// embedding [[Re, -Im], [Im, Re]] whose spectrum is the Hermitian one doubled.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<ComplexMatrix, 3> &pauli();

/// n . sigma for a real 3-vector.
ComplexMatrix pauli_dot(const Vec3 &n);

}  // namespace bell_lab

#endif
