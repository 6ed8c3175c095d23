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
 * One verifier per theorem: hypothesis checks, both sides of the
 * inequality, and a signed margin. Operator inequalities report
 * lambda_min(LHS - RHS); equality checks report minus the defect norm; a
 * report passes iff no hypothesis is unmet and margin >= -threshold.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uncert/quantities.hpp"

namespace uncert {

enum class TheoremId {
    HeisenbergClassical,
    SchrodingerClassical,
    SchrodingerCommutativeRange,
    ConditionalExpectationSchrodinger,
    UncertaintyMain,
    KadisonFamily,
    SkewNonneg,
    AlphaConvexity,
    SkewMonotoneHalf,
    SkewSumNonneg,
    CorrCauchySchwarz,
    SkewLeVariance,
    LuoRefined,
    MeanSubadditive,
    IjIdentities,
};

std::string_view theorem_name(TheoremId id);
TheoremId theorem_from_string(std::string_view name);
const std::vector<TheoremId> &all_theorems();

enum class HypothesisStatus { Met, Unmet, Regularized };
std::string_view hypothesis_status_name(HypothesisStatus s);

struct HypothesisCheck {
    std::string name;
    HypothesisStatus status = HypothesisStatus::Met;
    std::string detail;
};

enum class VerifyMode { Strict, Relaxed };
std::string_view mode_name(VerifyMode m);
VerifyMode mode_from_string(std::string_view name);

struct VerifierReport {
    TheoremId theorem = TheoremId::HeisenbergClassical;
    VerifyMode mode = VerifyMode::Relaxed;
    std::vector<HypothesisCheck> hypotheses;
    std::optional<AlgebraElement> lhs;
    std::optional<AlgebraElement> rhs;
    bool sides_scalar = false;
    double margin = 0.0;
    double threshold = 0.0; // pass requires margin >= -threshold
    bool pass = false;
    Tolerance tolerance_used;
    /// Named numeric extras (stage margins, sanity deviations, ...);
    /// ordered for byte-stable serialization.
    std::vector<std::pair<std::string, double>> metadata;

    bool hypotheses_met() const; // no Unmet entry (Regularized counts as met)
    double metadata_value(std::string_view key) const;
    bool has_metadata(std::string_view key) const;
};

// -- Section 1 classical inequalities (scalar trace) ------------------------

/// V(A)V(B) >= |Tr(rho [A,B])|^2 / 4.
VerifierReport verify_heisenberg_classical(const HermitianMatrix &rho, const HermitianMatrix &a,
                                           const HermitianMatrix &b, const Tolerance &tol = {});

/// V(A)V(B) - |Re Cov(A,B)|^2 >= |Tr(rho [A,B])|^2 / 4.
VerifierReport verify_schrodinger_classical(const HermitianMatrix &rho, const HermitianMatrix &a,
                                            const HermitianMatrix &b, const Tolerance &tol = {});

// -- Section 2 ---------------------------------------------------------------

/// Schrodinger inequality for a tracial positive map with commutative
/// range, in primed quantities (rho PSD with Phi(rho) > 0, no density
/// requirement). With rho_identity_variant the tracial hypothesis is
/// replaced by unital positivity and rho must be the identity.
VerifierReport verify_schrodinger_commutative_range(const TracialMap &map, const AlgebraElement &rho,
                                                    const AlgebraElement &a, const AlgebraElement &b,
                                                    const Tolerance &tol = {},
                                                    bool rho_identity_variant = false);

/// The conditional-expectation specialization in unprimed quantities;
/// accepts the center expectation and the scalar trace.
VerifierReport verify_conditional_expectation_schrodinger(const TracialMap &expectation,
                                                          const AlgebraElement &rho,
                                                          const AlgebraElement &a,
                                                          const AlgebraElement &b,
                                                          const Tolerance &tol = {});

/// The main uncertainty relation V(A) # V(B) >= |Phi(rho[A,B])| / (2 sqrt K)
/// for Phi = phi2 . phi1, staged through the proof chain:
///   (i)  commutative-range bound at the phi1 level,
///   (ii) the push-through block-positivity step,
///   (iii) the final Kantorovich bound, with (m, M) read per mode.
/// Strict mode takes (m, M) from sp(-i rho^{1/2} [A,B] rho^{1/2}), which no
/// nonzero finite-dimensional instance satisfies (the commutator is
/// traceless, so the spectrum has mixed signature); it reports the unmet
/// hypothesis and skips stage (iii). Relaxed mode reads (m, M) from
/// sp(|phi1(rho[A,B])|), which is attainable.
VerifierReport verify_uncertainty_main(const TracialMap &phi1, const PositiveAssignment &phi2,
                                       const AlgebraElement &rho, const AlgebraElement &a,
                                       const AlgebraElement &b, VerifyMode mode,
                                       const Tolerance &tol = {}, bool rho_identity_variant = false);

/// Convenience overload: factorizes Phi canonically.
VerifierReport verify_uncertainty_main(const TracialMap &phi, const AlgebraElement &rho,
                                       const AlgebraElement &a, const AlgebraElement &b,
                                       VerifyMode mode, const Tolerance &tol = {},
                                       bool rho_identity_variant = false);

/// Kadison's inequality Phi(|A|^2) >= |Phi(A)|^2 (always), the reverse
/// bound K Phi(A)^2 >= Phi(A^2) under 0 < mI <= A <= MI, and
/// sqrt(K) Phi(|A|) >= |Phi(A)| under sp(A) in [m,M] u [-M,-m]. Unmet
/// spectral hypotheses skip their margin but leave the Kadison part.
VerifierReport verify_kadison_family(const TracialMap &map, const AlgebraElement &a, double m,
                                     double M, const Tolerance &tol = {});

// -- Section 3 ---------------------------------------------------------------

/// I^alpha(A) >= 0 for self-adjoint A and PSD rho.
VerifierReport verify_skew_nonneg(const TracialMap &map, const AlgebraElement &rho,
                                  const AlgebraElement &a, double alpha, const Tolerance &tol = {});

/// Midpoint convexity of alpha -> Phi(rho^alpha A rho^{1-alpha} A).
VerifierReport verify_alpha_convexity(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, double alpha, double beta,
                                      const Tolerance &tol = {});

/// I^alpha(A) <= I^{1/2}(A).
VerifierReport verify_skew_monotone_half(const TracialMap &map, const AlgebraElement &rho,
                                         const AlgebraElement &a, double alpha,
                                         const Tolerance &tol = {});

/// I^alpha(A) + I^alpha(A^dagger) >= 0 for arbitrary A, cross-checked
/// against the 2x2 dilation route; the two routes must agree.
VerifierReport verify_skew_sum_nonneg(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, double alpha,
                                      const Tolerance &tol = {});

/// |Re Corr^alpha(A,B)|^2 <= I^alpha(A) I^alpha(B) for a tracial
/// conditional expectation.
VerifierReport verify_corr_cauchy_schwarz(const TracialMap &expectation, const AlgebraElement &rho,
                                          const AlgebraElement &a, const AlgebraElement &b,
                                          double alpha, const Tolerance &tol = {});

/// I^{1/2}(A) <= V(A) for tracial 2-positive Phi and Phi-density rho.
VerifierReport verify_skew_le_variance(const TracialMap &map, const AlgebraElement &rho,
                                       const AlgebraElement &a, const Tolerance &tol = {});

/// U(A) U(B) >= |E(rho[A,B])|^2 / 4, the refinement through the skew
/// information; also reports the gap to the variance-based bound.
VerifierReport verify_luo_refined(const TracialMap &expectation, const AlgebraElement &rho,
                                  const AlgebraElement &a, const AlgebraElement &b,
                                  const Tolerance &tol = {});

/// Phi(A # B) <= Phi(A) # Phi(B) for unital positive Phi and definite A, B.
VerifierReport verify_mean_subadditive(const TracialMap &map, const AlgebraElement &a,
                                       const AlgebraElement &b, const Tolerance &tol = {});

/// The exact identities I(A) = E((i[rho^{1/2},A_0])^2)/2 and
/// J(A) = E({rho^{1/2},A_0}^2)/2 with A_0 = A - E(rho A).
VerifierReport verify_ij_identities(const TracialMap &expectation, const AlgebraElement &rho,
                                    const AlgebraElement &a, const Tolerance &tol = {});

} // namespace uncert
