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

#include "bell_lab/linalg.h"

#include <algorithm>

#include "bell_lab/error.h"

namespace bell_lab {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) fail(ErrorCode::kDimensionMismatch, "matrix dimensions differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex factor) {
    for (auto &v : data_) v *= factor;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) fail(ErrorCode::kDimensionMismatch, "matrix dimensions differ");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix c(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return c;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) fail(ErrorCode::kDimensionMismatch, "matrix dimensions differ");
    Complex t = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    return t;
}

double hermiticity_error(const ComplexMatrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) fail(ErrorCode::kDimensionMismatch, "matrix storage does not match dimension");
    auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    const std::size_t m = 2 * n;
    std::vector<double> r(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = a(i, j).real(), im = a(i, j).imag();
            r[i * m + j] = re;
            r[(i + n) * m + (j + n)] = re;
            r[i * m + (j + n)] = -im;
            r[(i + n) * m + j] = im;
        }
    const auto doubled = symmetric_eigenvalues(std::move(r), m);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

const std::array<ComplexMatrix, 3> &pauli() {
    static const std::array<ComplexMatrix, 3> sigma = [] {
        std::array<ComplexMatrix, 3> s{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
        s[0](0, 1) = 1.0;
        s[0](1, 0) = 1.0;
        s[1](0, 1) = Complex(0.0, -1.0);
        s[1](1, 0) = Complex(0.0, 1.0);
        s[2](0, 0) = 1.0;
        s[2](1, 1) = -1.0;
        return s;
    }();
    return sigma;
}

ComplexMatrix pauli_dot(const Vec3 &n) {
    const auto &s = pauli();
    return s[0] * Complex(n[0]) + s[1] * Complex(n[1]) + s[2] * Complex(n[2]);
}

}  // namespace bell_lab
