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
 * Concrete tracial positive linear maps between block algebras.
 *
 * Every kind factors through block traces, which is what makes the tracial
 * property checkable and Phi-density construction a linear problem:
 *
 *   usual-trace         X -> sum_i tr(X_i), scalar codomain
 *   scaled-block-trace  X -> diag_j(sum_i c_ji tr(X_i)), codomain +^k M_1
 *   center-expectation  X -> +_i (tr(X_i)/n_i) I_{n_i}, codomain = domain
 *   composite           X -> sum_j (inner X)_j Q_j with PSD targets Q_j
 *
 * An optional blockwise unitary conjugates the input first, which
 * diversifies instances without touching traciality or positivity.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "uncert/algebra.hpp"

namespace uncert {

enum class MapKind { UsualTrace, ScaledBlockTrace, CenterExpectation, Composite };

struct MapFactorization;

std::string_view map_kind_name(MapKind kind);
MapKind map_kind_from_string(std::string_view name);

/// The positive linear map phi_2 from the k-point commutative algebra into
/// the codomain, given by k PSD targets: diag(x) -> sum_j x_j Q_j.
struct PositiveAssignment {
    BlockAlgebra codomain;
    std::vector<AlgebraElement> targets;

    PositiveAssignment(BlockAlgebra cod, std::vector<AlgebraElement> tgts);
    int points() const { return static_cast<int>(targets.size()); }
    /// sum_j x_j Q_j for a +^k M_1 element diag(x).
    AlgebraElement apply(const AlgebraElement &diag) const;
    /// || sum_j Q_j - I ||_2.
    double unital_defect() const;
    /// max over pairs of ||[Q_i, Q_j]||_2; zero iff the range is commutative.
    double commutativity_defect() const;
};

class TracialMap {
  public:
    static TracialMap usual_trace(BlockAlgebra domain);
    /// coeffs is k x num_blocks, entrywise >= 0.
    static TracialMap scaled_block_trace(BlockAlgebra domain, std::vector<std::vector<double>> coeffs);
    /// Test/search hook that skips the nonnegativity invariant, so the
    /// positivity checker has genuine failures to catch.
    static TracialMap scaled_block_trace_unchecked(BlockAlgebra domain,
                                                   std::vector<std::vector<double>> coeffs);
    static TracialMap center_expectation(BlockAlgebra domain);
    static TracialMap composite(BlockAlgebra domain, std::vector<std::vector<double>> coeffs,
                                PositiveAssignment outer);

    MapKind kind() const { return kind_; }
    const BlockAlgebra &domain() const { return domain_; }
    const BlockAlgebra &codomain() const { return codomain_; }
    const std::vector<std::vector<double>> &coeffs() const { return coeffs_; }
    const std::optional<PositiveAssignment> &outer() const { return outer_; }
    const std::vector<ComplexMatrix> &conjugation() const { return unitary_; }

    AlgebraElement apply(const AlgebraElement &x) const;

    /// || Phi(I) - I ||_2.
    double unital_defect() const;
    bool is_unital(const Tolerance &tol = {}) const;

    /// Conjugated variant X -> Phi(U^dagger X U), one unitary per domain
    /// block. Throws if any block fails the 1e-10 unitarity certificate.
    TracialMap conjugate(const std::vector<ComplexMatrix> &u) const;

    /// Canonical factorization Phi = phi2 . phi1 with phi1 a block-trace
    /// map into +^k M_1 and phi2 a positive assignment on k points.
    MapFactorization factorize() const;

  private:
    TracialMap(MapKind kind, BlockAlgebra domain, BlockAlgebra codomain,
               std::vector<std::vector<double>> coeffs, std::optional<PositiveAssignment> outer);

    MapKind kind_;
    BlockAlgebra domain_;
    BlockAlgebra codomain_;
    std::vector<std::vector<double>> coeffs_; // scaled-block-trace rows / composite inner
    std::optional<PositiveAssignment> outer_; // composite only
    std::vector<ComplexMatrix> unitary_;      // empty = no conjugation
};

struct MapFactorization {
    TracialMap phi1;
    TracialMap phi2; // composite over +^k M_1 with identity inner coeffs
    PositiveAssignment assignment;
};

/// max over sampled pairs of ||Phi(XY) - Phi(YX)||_2.
double check_tracial(const TracialMap &map, int trials, std::uint64_t seed);

/// Samples PSD inputs and checks PSD outputs; second component is
/// ||Phi(I) - I||_2.
std::pair<bool, double> check_positive_unital(const TracialMap &map, int trials, std::uint64_t seed);

/// max over sampled pairs of ||[Phi(X), Phi(Y)]||_2.
double range_commutativity_defect(const TracialMap &map, int trials, std::uint64_t seed);

/// Builds a PSD rho with ||Phi(rho) - I||_2 <= 1e-9: random definite block
/// candidates rescaled so the block traces solve the (nonnegative) linear
/// constraint system. Throws FeasibilityError when no nonnegative solution
/// exists, reporting the best residual.
AlgebraElement make_phi_density(const TracialMap &map, std::uint64_t seed);

bool is_phi_density(const TracialMap &map, const AlgebraElement &rho, const Tolerance &tol = {});

/// The 2x2-dilation used by the skew-information positivity proof:
/// dilate(Phi) acts on doubled blocks as X~ -> Phi(X~_11 + X~_22)/2.
/// For center-expectation the codomain doubles as well; its central
/// coefficients match the undilated map.
TracialMap dilate(const TracialMap &map);

/// [[0, A^dagger], [A, 0]] per block; self-adjoint by construction.
AlgebraElement dilate_offdiag(const AlgebraElement &a);

/// diag(x, x) per block.
AlgebraElement dilate_diag(const AlgebraElement &x);

/// Per-block central coefficients c_i of an element of the form
/// +_i c_i I_{n_i} (used to compare center-expectation values across the
/// dilation); takes tr(block_i)/n_i without checking centrality.
std::vector<cplx> central_coefficients(const AlgebraElement &x);

} // namespace uncert
