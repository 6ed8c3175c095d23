// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense square complex matrices and the Hermitian wrapper that carries a
 * symmetry certificate. Arithmetic is backed by the dispatched kernels.
 */

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "uncert/errors.hpp"

namespace uncert {

using cplx = std::complex<double>;

/// Relative/absolute tolerance pair used by every positivity predicate.
/// An operator counts PSD when lambda_min >= -(abs + rel * scale).
struct Tolerance {
    double rel = 1e-8;
    double abs = 1e-10;

    double bound(double scale) const { return abs + rel * scale; }
    void validate() const;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim); // zero-initialized
    ComplexMatrix(int dim, std::vector<cplx> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int dim() const { return dim_; }
    cplx &at(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx &at(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx *data() const { return data_.data(); }
    cplx *data() { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) {
        m *= s;
        return m;
    }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx s) {
        m *= s;
        return m;
    }

  private:
    int dim_;
    std::vector<cplx> data_;
};

/// Kernel-backed matrix product.
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// max-norm of M - M^dagger.
double hermitian_defect(const ComplexMatrix &m);

/// Square complex matrix known to be Hermitian. Construction checks the
/// defect against 1e-12 * (1 + max|entry|) and then averages with the
/// adjoint so the stored entries are symmetric to roundoff.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const ComplexMatrix &m);

    int dim() const { return m_.dim(); }
    const ComplexMatrix &matrix() const { return m_; }
    const cplx &at(int r, int c) const { return m_.at(r, c); }
    double frobenius_norm() const { return m_.frobenius_norm(); }
    double max_abs() const { return m_.max_abs(); }

    static HermitianMatrix identity(int dim) { return HermitianMatrix(ComplexMatrix::identity(dim)); }
    static HermitianMatrix zero(int dim) { return HermitianMatrix(ComplexMatrix(dim)); }

  private:
    struct AlreadySymmetric {};
    HermitianMatrix(ComplexMatrix m, AlreadySymmetric) : m_(std::move(m)) {}

    ComplexMatrix m_;
    friend HermitianMatrix hermitize(const ComplexMatrix &m);
};

/// (M + M^dagger) / 2 for an arbitrary square matrix.
HermitianMatrix hermitize(const ComplexMatrix &m);

/// Re(A) = (A + A^dagger)/2 and Im(A) = (A - A^dagger)/(2i);
/// A = Re(A) + i Im(A) reconstitutes exactly.
HermitianMatrix real_part(const ComplexMatrix &a);
HermitianMatrix imaginary_part(const ComplexMatrix &a);

/// [A, B] = AB - BA. Anti-Hermitian whenever A and B are Hermitian.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// {A, B} = AB + BA.
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace uncert
