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
 * The scalar/operator quantities computed from (Phi, rho, A, B, alpha):
 * generalized covariance and variance, their primed variants, the
 * alpha-correlation, Wigner-Yanase-Dyson skew information and the derived
 * J and U uncertainty measures, plus the Kantorovich constant.
 */

#pragma once

#include "uncert/tracial_map.hpp"

namespace uncert {

/// alpha in [0, 1].
struct AlphaParam {
    double value;
    explicit AlphaParam(double v) : value(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("alpha must lie in [0, 1]");
    }
};

/// A computed quantity in the codomain of Phi. Quantities that are
/// provably Hermitian are symmetrized with the defect recorded; the rest
/// are returned raw with hermitian = false.
struct QuantityResult {
    AlgebraElement value;
    bool hermitian = false;
    double hermitian_defect = 0.0;
    bool regularized = false;
};

/// Cov(A,B) = Phi(rho A^dagger B) - Phi(rho A^dagger) Phi(rho B).
/// Requires rho to be a Phi-density.
QuantityResult gen_covariance(const TracialMap &map, const AlgebraElement &rho,
                              const AlgebraElement &a, const AlgebraElement &b,
                              const Tolerance &tol = {});

/// V(A) = Cov(A,A), symmetrized.
QuantityResult gen_variance(const TracialMap &map, const AlgebraElement &rho,
                            const AlgebraElement &a, const Tolerance &tol = {});

/// Cov'(A,B) = Phi(rho A^dagger B) - Phi(rho A^dagger) Phi(rho)^{-1} Phi(rho B).
/// rho only needs to be PSD with Phi(rho) definite; reduces to Cov when
/// Phi(rho) = I.
QuantityResult gen_covariance_prime(const TracialMap &map, const AlgebraElement &rho,
                                    const AlgebraElement &a, const AlgebraElement &b,
                                    const Tolerance &tol = {});

QuantityResult gen_variance_prime(const TracialMap &map, const AlgebraElement &rho,
                                  const AlgebraElement &a, const Tolerance &tol = {});

/// Corr^alpha(A,B) = Phi(rho A^dagger B) - Phi(rho^{1-alpha} A^dagger rho^alpha B).
QuantityResult gen_correlation_alpha(const TracialMap &map, const AlgebraElement &rho,
                                     const AlgebraElement &a, const AlgebraElement &b,
                                     AlphaParam alpha, const Tolerance &tol = {});

/// I^alpha(A) = Corr^alpha(A,A) for self-adjoint A; PSD by the skew
/// nonnegativity lemma. Throws for non-self-adjoint input (the primed
/// variant below covers that case).
QuantityResult skew_information_alpha(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, AlphaParam alpha,
                                      const Tolerance &tol = {});

/// Corr'^alpha(A,B) = (Corr^alpha(A,B) + Corr^alpha(B^dagger,A^dagger)) / 2.
/// Requires rho to be a Phi-density.
QuantityResult corr_prime_alpha(const TracialMap &map, const AlgebraElement &rho,
                                const AlgebraElement &a, const AlgebraElement &b, AlphaParam alpha,
                                const Tolerance &tol = {});

/// I'^alpha(A) = Corr'^alpha(A,A); PSD for arbitrary A.
QuantityResult skew_info_prime_alpha(const TracialMap &map, const AlgebraElement &rho,
                                     const AlgebraElement &a, AlphaParam alpha,
                                     const Tolerance &tol = {});

/// J(A) = 2 V(A) - I(A), with I = I^{1/2}.
QuantityResult j_quantity(const TracialMap &map, const AlgebraElement &rho,
                          const AlgebraElement &a, const Tolerance &tol = {});

/// U(A) = I(A) # J(A); regularized flag set when I(A) was near-singular.
QuantityResult u_quantity(const TracialMap &map, const AlgebraElement &rho,
                          const AlgebraElement &a, const Tolerance &tol = {});

/// (M + m)^2 / (4 M m) for 0 < m <= M; equals 1 iff m = M.
double kantorovich(double m, double M);

} // namespace uncert
