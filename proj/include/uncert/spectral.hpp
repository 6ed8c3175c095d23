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
 * Spectral decomposition and everything built on it: fractional powers,
 * operator absolute value, geometric mean, Loewner-order margins and the
 * dual-route Schur positivity check.
 *
 * All matrix functions go through the one spectral path so the error model
 * stays uniform; iterative alternatives exist only as test oracles.
 */

#pragma once

#include <utility>

#include "uncert/matrix.hpp"

namespace uncert {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors the matching unitary columns.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    Spectrum() : eigenvectors(1) {}
};

/// Full spectral decomposition; reconstruction satisfies
/// ||U diag(w) U^dagger - H||_F <= 1e-10 * (1 + ||H||_F).
Spectrum eig_hermitian(const HermitianMatrix &h);

double lambda_min(const HermitianMatrix &h);
double lambda_max(const HermitianMatrix &h);

/// (lambda_min, lambda_max).
std::pair<double, double> spectrum_interval(const HermitianMatrix &h);

/// Spectral norm. Hermitian: max |eig|; general: sqrt(lambda_max(X^dagger X)).
double spectral_norm(const HermitianMatrix &h);
double spectral_norm(const ComplexMatrix &x);

/// lambda_min(H) >= -(tol.abs + tol.rel * ||H||_2).
bool is_psd(const HermitianMatrix &h, const Tolerance &tol = {});

/// P^alpha through the spectral path. Eigenvalues in [-psd_bound, 0) are
/// clamped to zero first; 0^alpha = 0 for alpha > 0 and 0^0 = 0 (support
/// projection convention, so P^0 is the support projection; for invertible
/// P it coincides with the identity). Negative alpha requires P definite.
HermitianMatrix matrix_power(const HermitianMatrix &p, double alpha, const Tolerance &tol = {});

/// |A| = (A^dagger A)^{1/2}; defined for arbitrary square A.
HermitianMatrix matrix_abs(const ComplexMatrix &a);

struct GeomMeanInfo {
    bool regularized = false;
    double epsilon = 0.0;
};

/// A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2} for A > 0, B >= 0.
/// A merely semidefinite within tolerance is regularized to
/// A + eps_reg * I with eps_reg = 1e-10 * max(||A||_2, 1); the
/// regularization is reported through `info`.
HermitianMatrix geometric_mean(const HermitianMatrix &a, const HermitianMatrix &b,
                               const Tolerance &tol = {}, GeomMeanInfo *info = nullptr);

/// Signed Loewner margin lambda_min(A - B). Callers treat
/// margin >= -(tol.abs + tol.rel * max(||A||_2, ||B||_2, 1)) as A >= B.
double loewner_geq(const HermitianMatrix &a, const HermitianMatrix &b);

/// Spectral inverse of a positive definite matrix.
HermitianMatrix inverse_psd(const HermitianMatrix &h, const Tolerance &tol = {});

/// [[A, X], [X^dagger, B]] as one dense matrix.
ComplexMatrix assemble_block2(const ComplexMatrix &a, const ComplexMatrix &x, const ComplexMatrix &b);

struct SchurCheckInfo {
    double schur_margin = 0.0; // lambda_min(B - X^dagger A^{-1} X)
    double block_margin = 0.0; // lambda_min([[A, X], [X^dagger, B]])
};

/// Positivity of [[A, X], [X^dagger, B]] for A > 0, decided twice: by the
/// Schur complement B - X^dagger A^{-1} X and by direct block eigenvalues.
/// The two verdicts must agree; disagreement throws NumericalError.
bool schur_positivity_check(const HermitianMatrix &a, const ComplexMatrix &x,
                            const HermitianMatrix &b, const Tolerance &tol = {},
                            SchurCheckInfo *info = nullptr);

} // namespace uncert
