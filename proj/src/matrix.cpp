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

#include "uncert/matrix.hpp"

#include <cmath>

#include "uncert/kernels.hpp"

namespace uncert {

void Tolerance::validate() const {
    if (!(std::isfinite(rel) && std::isfinite(abs)) || rel < 0.0 || abs < 0.0)
        throw DomainError("tolerance components must be finite and nonnegative");
}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0)
        throw DimensionError("matrix dimension must be positive");
    data_.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
    if (dim <= 0)
        throw DimensionError("matrix dimension must be positive");
    if (data_.size() != static_cast<std::size_t>(dim) * dim)
        throw DimensionError("entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n);
    int r = 0;
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionError("matrix rows must all have length dim");
        int c = 0;
        for (const cplx &v : row)
            m.at(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            out.at(c, r) = std::conj(at(r, c));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i)
        t += at(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::active().norm2sq(data_.data(), data_.size()));
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx &v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx &v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

namespace {
void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim())
        throw DimensionError("operands have different dimensions");
}
} // namespace

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    kernels::active().axpby(cplx(1.0, 0.0), rhs.data(), cplx(1.0, 0.0), data(), size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    kernels::active().axpby(cplx(-1.0, 0.0), rhs.data(), cplx(1.0, 0.0), data(), size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    kernels::active().axpby(cplx(0.0, 0.0), data(), s, data(), size());
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    ComplexMatrix c(a.dim());
    if (a.dim() == 1) {
        // 1x1 products stay in plain complex arithmetic: the fma-contracted
        // kernels round the cross terms asymmetrically, and the commutative
        // model algebra (+^k M_1) relies on bitwise x*y == y*x.
        c.data()[0] = a.data()[0] * b.data()[0];
        return c;
    }
    kernels::active().matmul(a.data(), b.data(), c.data(), a.dim());
    return c;
}

double hermitian_defect(const ComplexMatrix &m) {
    double defect = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            defect = std::max(defect, std::abs(m.at(r, c) - std::conj(m.at(c, r))));
    return defect;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m) : m_(m.dim()) {
    const double defect = hermitian_defect(m);
    if (defect > 1e-12 * (1.0 + m.max_abs()))
        throw DomainError("matrix is not Hermitian within certificate tolerance; use hermitize()");
    if (!m.all_finite())
        throw DomainError("matrix has non-finite entries");
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            m_.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
}

HermitianMatrix hermitize(const ComplexMatrix &m) {
    if (!m.all_finite())
        throw DomainError("matrix has non-finite entries");
    ComplexMatrix sym(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            sym.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
    return HermitianMatrix(std::move(sym), HermitianMatrix::AlreadySymmetric{});
}

HermitianMatrix real_part(const ComplexMatrix &a) { return hermitize(a); }

HermitianMatrix imaginary_part(const ComplexMatrix &a) {
    // (A - A^dagger) / (2i)
    ComplexMatrix im(a.dim());
    const cplx half_over_i(0.0, -0.5);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            im.at(r, c) = half_over_i * (a.at(r, c) - std::conj(a.at(c, r)));
    return hermitize(im);
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    return a * b + b * a;
}

} // namespace uncert
