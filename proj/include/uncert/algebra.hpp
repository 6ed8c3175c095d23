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
 * Finite direct sums of full matrix blocks -- the working model of a
 * finite-dimensional C*-algebra -- and blockwise operations on their
 * elements.
 */

#pragma once

#include <vector>

#include "uncert/matrix.hpp"
#include "uncert/spectral.hpp"

namespace uncert {

/// M_{n1} + M_{n2} + ... as a list of block dimensions.
struct BlockAlgebra {
    std::vector<int> block_dims;

    BlockAlgebra() = default;
    explicit BlockAlgebra(std::vector<int> dims);
    static BlockAlgebra single(int n) { return BlockAlgebra({n}); }

    int num_blocks() const { return static_cast<int>(block_dims.size()); }
    int total_dim() const;

    friend bool operator==(const BlockAlgebra &a, const BlockAlgebra &b) {
        return a.block_dims == b.block_dims;
    }
};

/// An element of a block algebra: one dense matrix per block.
class AlgebraElement {
  public:
    AlgebraElement(BlockAlgebra algebra, std::vector<ComplexMatrix> blocks);

    static AlgebraElement zero(const BlockAlgebra &alg);
    static AlgebraElement identity(const BlockAlgebra &alg);
    /// Scalar in a one-block, one-dimensional algebra.
    static AlgebraElement scalar(cplx v);
    /// Wrap a single full matrix block.
    static AlgebraElement from_matrix(const ComplexMatrix &m);

    const BlockAlgebra &algebra() const { return algebra_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const ComplexMatrix &block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    ComplexMatrix &block(int i) { return blocks_[static_cast<std::size_t>(i)]; }

    AlgebraElement adjoint() const;
    cplx trace() const; // sum of block traces
    double hermitian_defect() const;
    bool is_scalar() const { return algebra_.num_blocks() == 1 && algebra_.block_dims[0] == 1; }
    /// Value of a 1x1 single-block element.
    cplx scalar_value() const;

    AlgebraElement &operator+=(const AlgebraElement &rhs);
    AlgebraElement &operator-=(const AlgebraElement &rhs);
    AlgebraElement &operator*=(cplx s);

    friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend AlgebraElement operator*(cplx s, AlgebraElement m) {
        m *= s;
        return m;
    }

  private:
    BlockAlgebra algebra_;
    std::vector<ComplexMatrix> blocks_;
};

/// Blockwise product.
AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);

/// Blockwise (M + M^dagger)/2.
AlgebraElement element_hermitize(const AlgebraElement &x);

/// Blockwise fractional power of a PSD Hermitian element.
AlgebraElement element_power(const AlgebraElement &x, double alpha, const Tolerance &tol = {});

/// Blockwise operator absolute value.
AlgebraElement element_abs(const AlgebraElement &x);

/// Blockwise geometric mean; regularization of any block is reported.
AlgebraElement element_geometric_mean(const AlgebraElement &a, const AlgebraElement &b,
                                      const Tolerance &tol = {}, GeomMeanInfo *info = nullptr);

/// min over blocks of lambda_min; element must be Hermitian to roundoff.
double element_lambda_min(const AlgebraElement &x);

/// max over blocks of the spectral norm.
double element_spectral_norm(const AlgebraElement &x);

/// Blockwise element_lambda_min(a - b).
double element_loewner_geq(const AlgebraElement &a, const AlgebraElement &b);

bool element_is_psd(const AlgebraElement &x, const Tolerance &tol = {});

/// Blockwise spectral inverse (element must be definite).
AlgebraElement element_inverse(const AlgebraElement &x, const Tolerance &tol = {});

} // namespace uncert
