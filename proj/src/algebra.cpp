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

#include "uncert/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace uncert {

BlockAlgebra::BlockAlgebra(std::vector<int> dims) : block_dims(std::move(dims)) {
    if (block_dims.empty())
        throw DimensionError("block algebra needs at least one block");
    for (int d : block_dims)
        if (d <= 0)
            throw DimensionError("block dimensions must be positive");
}

int BlockAlgebra::total_dim() const {
    return std::accumulate(block_dims.begin(), block_dims.end(), 0);
}

AlgebraElement::AlgebraElement(BlockAlgebra algebra, std::vector<ComplexMatrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (blocks_.size() != algebra_.block_dims.size())
        throw DimensionError("block count does not match the algebra");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].dim() != algebra_.block_dims[i])
            throw DimensionError("block dimension does not match the algebra");
}

AlgebraElement AlgebraElement::zero(const BlockAlgebra &alg) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(alg.block_dims.size());
    for (int d : alg.block_dims)
        blocks.emplace_back(d);
    return AlgebraElement(alg, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const BlockAlgebra &alg) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(alg.block_dims.size());
    for (int d : alg.block_dims)
        blocks.push_back(ComplexMatrix::identity(d));
    return AlgebraElement(alg, std::move(blocks));
}

AlgebraElement AlgebraElement::scalar(cplx v) {
    ComplexMatrix m(1);
    m.at(0, 0) = v;
    return AlgebraElement(BlockAlgebra::single(1), {m});
}

AlgebraElement AlgebraElement::from_matrix(const ComplexMatrix &m) {
    return AlgebraElement(BlockAlgebra::single(m.dim()), {m});
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto &b : blocks_)
        blocks.push_back(b.adjoint());
    return AlgebraElement(algebra_, std::move(blocks));
}

cplx AlgebraElement::trace() const {
    cplx t(0.0, 0.0);
    for (const auto &b : blocks_)
        t += b.trace();
    return t;
}

double AlgebraElement::hermitian_defect() const {
    double d = 0.0;
    for (const auto &b : blocks_)
        d = std::max(d, uncert::hermitian_defect(b));
    return d;
}

cplx AlgebraElement::scalar_value() const {
    if (!is_scalar())
        throw DimensionError("element is not scalar");
    return blocks_[0].at(0, 0);
}

namespace {
void require_same_algebra(const AlgebraElement &a, const AlgebraElement &b) {
    if (!(a.algebra() == b.algebra()))
        throw DimensionError("elements live in different block algebras");
}
} // namespace

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &rhs) {
    require_same_algebra(*this, rhs);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        blocks_[i] += rhs.blocks_[i];
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &rhs) {
    require_same_algebra(*this, rhs);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        blocks_[i] -= rhs.blocks_[i];
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(cplx s) {
    for (auto &b : blocks_)
        b *= s;
    return *this;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b) {
    require_same_algebra(a, b);
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(a.num_blocks()));
    for (int i = 0; i < a.num_blocks(); ++i)
        blocks.push_back(a.block(i) * b.block(i));
    return AlgebraElement(a.algebra(), std::move(blocks));
}

AlgebraElement element_hermitize(const AlgebraElement &x) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(x.num_blocks()));
    for (int i = 0; i < x.num_blocks(); ++i)
        blocks.push_back(hermitize(x.block(i)).matrix());
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_power(const AlgebraElement &x, double alpha, const Tolerance &tol) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(x.num_blocks()));
    for (int i = 0; i < x.num_blocks(); ++i)
        blocks.push_back(matrix_power(hermitize(x.block(i)), alpha, tol).matrix());
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_abs(const AlgebraElement &x) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(x.num_blocks()));
    for (int i = 0; i < x.num_blocks(); ++i)
        blocks.push_back(matrix_abs(x.block(i)).matrix());
    return AlgebraElement(x.algebra(), std::move(blocks));
}

AlgebraElement element_geometric_mean(const AlgebraElement &a, const AlgebraElement &b,
                                      const Tolerance &tol, GeomMeanInfo *info) {
    require_same_algebra(a, b);
    GeomMeanInfo merged;
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(a.num_blocks()));
    for (int i = 0; i < a.num_blocks(); ++i) {
        GeomMeanInfo bi;
        blocks.push_back(
            geometric_mean(hermitize(a.block(i)), hermitize(b.block(i)), tol, &bi).matrix());
        if (bi.regularized) {
            merged.regularized = true;
            merged.epsilon = std::max(merged.epsilon, bi.epsilon);
        }
    }
    if (info != nullptr)
        *info = merged;
    return AlgebraElement(a.algebra(), std::move(blocks));
}

double element_lambda_min(const AlgebraElement &x) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < x.num_blocks(); ++i)
        m = std::min(m, lambda_min(hermitize(x.block(i))));
    return m;
}

double element_spectral_norm(const AlgebraElement &x) {
    double m = 0.0;
    for (int i = 0; i < x.num_blocks(); ++i)
        m = std::max(m, spectral_norm(x.block(i)));
    return m;
}

double element_loewner_geq(const AlgebraElement &a, const AlgebraElement &b) {
    require_same_algebra(a, b);
    return element_lambda_min(a - b);
}

bool element_is_psd(const AlgebraElement &x, const Tolerance &tol) {
    const double scale = element_spectral_norm(x);
    return element_lambda_min(x) >= -tol.bound(scale);
}

AlgebraElement element_inverse(const AlgebraElement &x, const Tolerance &tol) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(x.num_blocks()));
    for (int i = 0; i < x.num_blocks(); ++i)
        blocks.push_back(inverse_psd(hermitize(x.block(i)), tol).matrix());
    return AlgebraElement(x.algebra(), std::move(blocks));
}

} // namespace uncert
