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

#include "uncert/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace uncert {

namespace {

constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::HeisenbergClassical, "heisenberg_classical"},
    {TheoremId::SchrodingerClassical, "schrodinger_classical"},
    {TheoremId::SchrodingerCommutativeRange, "schrodinger_commutative_range"},
    {TheoremId::ConditionalExpectationSchrodinger, "conditional_expectation_schrodinger"},
    {TheoremId::UncertaintyMain, "uncertainty_main"},
    {TheoremId::KadisonFamily, "kadison_family"},
    {TheoremId::SkewNonneg, "skew_nonneg"},
    {TheoremId::AlphaConvexity, "alpha_convexity"},
    {TheoremId::SkewMonotoneHalf, "skew_monotone_half"},
    {TheoremId::SkewSumNonneg, "skew_sum_nonneg"},
    {TheoremId::CorrCauchySchwarz, "corr_cauchy_schwarz"},
    {TheoremId::SkewLeVariance, "skew_le_variance"},
    {TheoremId::LuoRefined, "luo_refined"},
    {TheoremId::MeanSubadditive, "mean_subadditive"},
    {TheoremId::IjIdentities, "ij_identities"},
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

HypothesisCheck met(std::string name, std::string detail = "") {
    return {std::move(name), HypothesisStatus::Met, std::move(detail)};
}
HypothesisCheck unmet(std::string name, std::string detail) {
    return {std::move(name), HypothesisStatus::Unmet, std::move(detail)};
}
HypothesisCheck regularized(std::string name, std::string detail) {
    return {std::move(name), HypothesisStatus::Regularized, std::move(detail)};
}

HypothesisCheck check_that(bool ok, std::string name, std::string detail_if_unmet) {
    return ok ? met(std::move(name)) : unmet(std::move(name), std::move(detail_if_unmet));
}

/// Fills threshold/pass from the margin and a magnitude scale.
void finalize(VerifierReport &r, double scale, const Tolerance &tol) {
    r.tolerance_used = tol;
    r.threshold = tol.bound(std::max(scale, 1.0));
    r.pass = r.hypotheses_met() && r.margin >= -r.threshold;
}

bool self_adjoint_ok(const AlgebraElement &a) {
    return a.hermitian_defect() <= 1e-10 * (1.0 + element_spectral_norm(a));
}

/// All block eigenvalues, ascending.
std::vector<double> all_eigenvalues(const AlgebraElement &a) {
    std::vector<double> out;
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Spectrum s = eig_hermitian(hermitize(a.block(i)));
        out.insert(out.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Structural membership in the model class whose maps are all tracial,
/// positive and completely positive.
bool builtin_kind(const TracialMap &map) {
    switch (map.kind()) {
    case MapKind::UsualTrace:
    case MapKind::ScaledBlockTrace:
    case MapKind::CenterExpectation:
    case MapKind::Composite:
        return true;
    }
    return false;
}

HypothesisCheck tracial_hypothesis(const TracialMap &map, std::uint64_t probe_seed = 17) {
    const double dev = check_tracial(map, 2, probe_seed);
    if (builtin_kind(map) && dev <= 1e-8)
        return met("map_tracial", "sampled deviation " + fmt(dev));
    return unmet("map_tracial", "sampled deviation " + fmt(dev));
}

HypothesisCheck expectation_hypothesis(const TracialMap &map) {
    switch (map.kind()) {
    case MapKind::CenterExpectation:
        return met("tracial_conditional_expectation", "center-valued expectation");
    case MapKind::UsualTrace:
        return met("tracial_conditional_expectation",
                   "scalar trace (commutative-range specialization)");
    default:
        return unmet("tracial_conditional_expectation",
                     std::string(map_kind_name(map.kind())) + " is not a conditional expectation");
    }
}

AlgebraElement quarter_abs_squared(const AlgebraElement &x) {
    // |x|^2 / 4 = x^dagger x / 4
    AlgebraElement sq = element_hermitize(x.adjoint() * x);
    sq *= cplx(0.25, 0.0);
    return sq;
}

/// Embeds a codomain value back into the domain for the expectation kinds
/// (identity embedding for the center expectation, c -> c I for the trace).
AlgebraElement embed_expectation_value(const TracialMap &map, const AlgebraElement &value) {
    if (map.kind() == MapKind::CenterExpectation)
        return value;
    if (map.kind() == MapKind::UsualTrace) {
        AlgebraElement out = AlgebraElement::identity(map.domain());
        out *= value.scalar_value();
        return out;
    }
    throw DomainError("no canonical embedding for this map kind");
}

double max_coeff_deviation(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

std::string_view theorem_name(TheoremId id) {
    for (const auto &[tid, name] : kTheoremNames)
        if (tid == id)
            return name;
    return "unknown";
}

TheoremId theorem_from_string(std::string_view name) {
    for (const auto &[tid, tname] : kTheoremNames)
        if (tname == name)
            return tid;
    throw ConfigError("unknown theorem id: " + std::string(name));
}

const std::vector<TheoremId> &all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto &[tid, name] : kTheoremNames)
            v.push_back(tid);
        return v;
    }();
    return ids;
}

std::string_view hypothesis_status_name(HypothesisStatus s) {
    switch (s) {
    case HypothesisStatus::Met:
        return "met";
    case HypothesisStatus::Unmet:
        return "unmet";
    case HypothesisStatus::Regularized:
        return "regularized";
    }
    return "unknown";
}

std::string_view mode_name(VerifyMode m) { return m == VerifyMode::Strict ? "strict" : "relaxed"; }

VerifyMode mode_from_string(std::string_view name) {
    if (name == "strict")
        return VerifyMode::Strict;
    if (name == "relaxed")
        return VerifyMode::Relaxed;
    throw ConfigError("unknown mode: " + std::string(name));
}

bool VerifierReport::hypotheses_met() const {
    for (const auto &h : hypotheses)
        if (h.status == HypothesisStatus::Unmet)
            return false;
    return true;
}

double VerifierReport::metadata_value(std::string_view key) const {
    for (const auto &[k, v] : metadata)
        if (k == key)
            return v;
    throw DomainError("report metadata key not present: " + std::string(key));
}

bool VerifierReport::has_metadata(std::string_view key) const {
    for (const auto &[k, v] : metadata)
        if (k == key)
            return true;
    return false;
}

// ---------------------------------------------------------------------------
// Classical scalar-trace inequalities.

namespace {

struct ClassicalMoments {
    double va = 0.0, vb = 0.0;
    cplx cov{0.0, 0.0};
    double comm_sq = 0.0; // |Tr(rho [A,B])|^2 / 4
};

ClassicalMoments classical_moments(const HermitianMatrix &rho, const HermitianMatrix &a,
                                   const HermitianMatrix &b) {
    const ComplexMatrix &r = rho.matrix();
    const ComplexMatrix &am = a.matrix();
    const ComplexMatrix &bm = b.matrix();
    ClassicalMoments m;
    const double tra = (r * am).trace().real();
    const double trb = (r * bm).trace().real();
    m.va = (r * am * am).trace().real() - tra * tra;
    m.vb = (r * bm * bm).trace().real() - trb * trb;
    m.cov = (r * am * bm).trace() - tra * trb;
    const cplx tc = (r * commutator(am, bm)).trace();
    m.comm_sq = 0.25 * std::norm(tc);
    return m;
}

VerifierReport classical_report(TheoremId id, const HermitianMatrix &rho, const HermitianMatrix &a,
                                const HermitianMatrix &b, bool schrodinger, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = id;

    const bool psd = is_psd(rho, tol);
    const double trace_defect = std::abs(rho.matrix().trace().real() - 1.0);
    r.hypotheses.push_back(check_that(psd && trace_defect <= tol.bound(1.0), "rho_density",
                                      "PSD=" + std::string(psd ? "yes" : "no") +
                                          ", |tr-1|=" + fmt(trace_defect)));
    r.hypotheses.push_back(met("a_self_adjoint"));
    r.hypotheses.push_back(met("b_self_adjoint"));
    if (a.dim() != rho.dim() || b.dim() != rho.dim())
        throw DimensionError("classical verifier: operands must share the state's dimension");

    const ClassicalMoments m = classical_moments(rho, a, b);
    const double re2 = schrodinger ? m.cov.real() * m.cov.real() : 0.0;
    const double lhs = m.va * m.vb - re2;
    r.lhs = AlgebraElement::scalar(lhs);
    r.rhs = AlgebraElement::scalar(m.comm_sq);
    r.sides_scalar = true;
    r.margin = lhs - m.comm_sq;
    r.metadata.emplace_back("v_a", m.va);
    r.metadata.emplace_back("v_b", m.vb);
    r.metadata.emplace_back("re_cov", m.cov.real());
    finalize(r, std::max({std::abs(lhs), m.comm_sq, m.va * m.vb}), tol);
    return r;
}

} // namespace

VerifierReport verify_heisenberg_classical(const HermitianMatrix &rho, const HermitianMatrix &a,
                                           const HermitianMatrix &b, const Tolerance &tol) {
    return classical_report(TheoremId::HeisenbergClassical, rho, a, b, /*schrodinger=*/false, tol);
}

VerifierReport verify_schrodinger_classical(const HermitianMatrix &rho, const HermitianMatrix &a,
                                            const HermitianMatrix &b, const Tolerance &tol) {
    return classical_report(TheoremId::SchrodingerClassical, rho, a, b, /*schrodinger=*/true, tol);
}

// ---------------------------------------------------------------------------
// Commutative-range Schrodinger inequality (primed quantities).

VerifierReport verify_schrodinger_commutative_range(const TracialMap &map, const AlgebraElement &rho,
                                                    const AlgebraElement &a, const AlgebraElement &b,
                                                    const Tolerance &tol, bool rho_identity_variant) {
    VerifierReport r;
    r.theorem = TheoremId::SchrodingerCommutativeRange;

    if (rho_identity_variant) {
        const double dev =
            element_spectral_norm(rho - AlgebraElement::identity(map.domain()));
        r.hypotheses.push_back(
            check_that(dev <= tol.bound(1.0), "rho_identity", "||rho - I|| = " + fmt(dev)));
        const double ud = map.unital_defect();
        r.hypotheses.push_back(check_that(ud <= tol.bound(1.0), "map_unital_positive",
                                          "unital defect " + fmt(ud)));
    } else {
        r.hypotheses.push_back(tracial_hypothesis(map));
    }

    const double comm_defect = range_commutativity_defect(map, 2, 23);
    r.hypotheses.push_back(check_that(comm_defect <= 1e-8 * (1.0 + element_spectral_norm(map.apply(rho))),
                                      "range_commutative", "sampled defect " + fmt(comm_defect)));

    const bool rho_psd = element_is_psd(rho, tol);
    r.hypotheses.push_back(check_that(rho_psd, "rho_psd", "rho has negative spectrum"));
    const double phi_rho_min = element_lambda_min(element_hermitize(map.apply(rho)));
    const bool definite = phi_rho_min > tol.bound(1.0);
    r.hypotheses.push_back(check_that(definite, "phi_rho_definite",
                                      "lambda_min(Phi(rho)) = " + fmt(phi_rho_min)));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));

    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const QuantityResult va = gen_variance_prime(map, rho, a, tol);
    const QuantityResult vb = gen_variance_prime(map, rho, b, tol);
    const QuantityResult cov = gen_covariance_prime(map, rho, a, b, tol);
    const AlgebraElement re_cov = element_hermitize(cov.value);

    const AlgebraElement prod_ab = va.value * vb.value;
    const AlgebraElement prod_ba = vb.value * va.value;
    r.metadata.emplace_back("ordering_deviation", element_spectral_norm(prod_ab - prod_ba));

    const AlgebraElement lhs = element_hermitize(prod_ab - re_cov * re_cov);
    const AlgebraElement rhs = quarter_abs_squared(map.apply(rho * (a * b - b * a)));
    r.lhs = lhs;
    r.rhs = rhs;
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(lhs - rhs);
    finalize(r, std::max(element_spectral_norm(lhs), element_spectral_norm(rhs)), tol);
    return r;
}

VerifierReport verify_conditional_expectation_schrodinger(const TracialMap &expectation,
                                                          const AlgebraElement &rho,
                                                          const AlgebraElement &a,
                                                          const AlgebraElement &b,
                                                          const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::ConditionalExpectationSchrodinger;
    r.hypotheses.push_back(expectation_hypothesis(expectation));
    const bool density = (rho.algebra() == expectation.domain()) &&
                         is_phi_density(expectation, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));

    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const QuantityResult va = gen_variance(expectation, rho, a, tol);
    const QuantityResult vb = gen_variance(expectation, rho, b, tol);
    const QuantityResult cov = gen_covariance(expectation, rho, a, b, tol);
    const AlgebraElement re_cov = element_hermitize(cov.value);

    const AlgebraElement lhs = element_hermitize(va.value * vb.value - re_cov * re_cov);
    const AlgebraElement rhs = quarter_abs_squared(expectation.apply(rho * (a * b - b * a)));
    r.lhs = lhs;
    r.rhs = rhs;
    r.sides_scalar = expectation.codomain().total_dim() == 1;
    r.margin = element_lambda_min(lhs - rhs);
    finalize(r, std::max(element_spectral_norm(lhs), element_spectral_norm(rhs)), tol);
    return r;
}

// ---------------------------------------------------------------------------
// The staged main uncertainty relation.

VerifierReport verify_uncertainty_main(const TracialMap &phi1, const PositiveAssignment &phi2,
                                       const AlgebraElement &rho, const AlgebraElement &a,
                                       const AlgebraElement &b, VerifyMode mode,
                                       const Tolerance &tol, bool rho_identity_variant) {
    VerifierReport r;
    r.theorem = TheoremId::UncertaintyMain;
    r.mode = mode;

    if (phi1.kind() != MapKind::UsualTrace && phi1.kind() != MapKind::ScaledBlockTrace)
        throw DomainError("verify_uncertainty_main: phi1 must be a block-trace map");
    TracialMap phi = TracialMap::composite(phi1.domain(), phi1.coeffs(), phi2);
    if (!phi1.conjugation().empty())
        phi = phi.conjugate(phi1.conjugation());

    if (rho_identity_variant) {
        const double dev = element_spectral_norm(rho - AlgebraElement::identity(phi.domain()));
        r.hypotheses.push_back(
            check_that(dev <= tol.bound(1.0), "rho_identity", "||rho - I|| = " + fmt(dev)));
        const double ud = phi1.unital_defect();
        r.hypotheses.push_back(check_that(ud <= tol.bound(1.0), "phi1_unital_positive",
                                          "unital defect " + fmt(ud)));
    } else {
        HypothesisCheck h = tracial_hypothesis(phi1);
        h.name = "phi1_tracial";
        r.hypotheses.push_back(std::move(h));
    }
    const double range_defect = range_commutativity_defect(phi1, 2, 29);
    r.hypotheses.push_back(check_that(range_defect <= 1e-8, "phi1_range_commutative",
                                      "sampled defect " + fmt(range_defect)));
    const double phi2_defect = phi2.unital_defect();
    r.hypotheses.push_back(check_that(phi2_defect <= tol.bound(1.0), "phi2_unital",
                                      "unital defect " + fmt(phi2_defect)));
    const bool density = is_phi_density(phi, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));

    const AlgebraElement phi1_rho = element_hermitize(phi1.apply(rho));
    const double phi1_rho_min = element_lambda_min(phi1_rho);
    r.hypotheses.push_back(check_that(phi1_rho_min > tol.bound(1.0), "phi1_rho_definite",
                                      "lambda_min(phi1(rho)) = " + fmt(phi1_rho_min)));

    const AlgebraElement comm = a * b - b * a;
    const AlgebraElement phi1_comm = phi1.apply(rho * comm);
    const AlgebraElement abs_phi1_comm = element_abs(phi1_comm);

    // Mode-specific spectral window.
    double window_m = 0.0, window_M = 0.0;
    bool window_ok = false;
    if (mode == VerifyMode::Strict) {
        const AlgebraElement rho_half = element_power(rho, 0.5, tol);
        AlgebraElement core = rho_half * comm * rho_half;
        core *= cplx(0.0, -1.0); // -i rho^{1/2} [A,B] rho^{1/2}
        core = element_hermitize(core);
        window_m = element_lambda_min(core);
        window_M = -element_lambda_min(cplx(-1.0, 0.0) * core);
        const double scale = element_spectral_norm(core);
        window_ok = window_m > tol.bound(std::max(scale, 1.0));
        r.hypotheses.push_back(check_that(
            window_ok, "strict_spectral_window",
            "traceless commutator: sp(-i rho^{1/2}[A,B]rho^{1/2}) has mixed signature (m = " +
                fmt(window_m) + ", M = " + fmt(window_M) + ")"));
    }
    bool trivial_rhs = false;
    if (mode == VerifyMode::Relaxed) {
        window_m = std::numeric_limits<double>::infinity();
        window_M = 0.0;
        for (int j = 0; j < abs_phi1_comm.num_blocks(); ++j) {
            const double v = abs_phi1_comm.block(j).at(0, 0).real();
            window_m = std::min(window_m, v);
            window_M = std::max(window_M, v);
        }
        // A vanishing commutator image makes the final bound trivially
        // true (right side zero); only the mixed case 0 ~ m < M is a
        // genuine degeneracy.
        trivial_rhs = window_M <= tol.bound(1.0);
        window_ok = trivial_rhs || window_m > tol.bound(std::max(window_M, 1.0));
        r.hypotheses.push_back(check_that(window_ok, "commutator_image_definite",
                                          trivial_rhs
                                              ? "commutator image vanishes; bound is trivial"
                                              : "min |phi1(rho[A,B])| = " + fmt(window_m)));
    }
    r.metadata.emplace_back("m", window_m);
    r.metadata.emplace_back("M", window_M);

    bool skip_all = !element_is_psd(rho, tol) || phi1_rho_min <= tol.bound(1.0);
    if (skip_all) {
        finalize(r, 1.0, tol);
        return r;
    }

    double overall = std::numeric_limits<double>::infinity();

    // Stage (i): at the phi1 level, entrywise
    // sqrt(V'(A)_j V'(B)_j) >= |phi1(rho[A,B])_j| / 2.
    {
        const QuantityResult vpa = gen_variance_prime(phi1, rho, a, tol);
        const QuantityResult vpb = gen_variance_prime(phi1, rho, b, tol);
        double stage = std::numeric_limits<double>::infinity();
        for (int j = 0; j < vpa.value.num_blocks(); ++j) {
            const double va_j = std::max(vpa.value.block(j).at(0, 0).real(), 0.0);
            const double vb_j = std::max(vpb.value.block(j).at(0, 0).real(), 0.0);
            const double d_j = abs_phi1_comm.block(j).at(0, 0).real();
            stage = std::min(stage, std::sqrt(va_j * vb_j) - 0.5 * d_j);
        }
        r.metadata.emplace_back("varcomm_margin", stage);
        overall = std::min(overall, stage);
    }

    // Stage (ii): the push-through block matrices
    // [[phi2(t X), Phi(rho X)], [Phi(rho X), Phi(rho)]] with
    // t X = phi1(rho X) phi1(rho)^{-1} phi1(rho X).
    {
        const AlgebraElement phi1_rho_inv = element_inverse(phi1_rho, tol);
        const AlgebraElement phi_rho = element_hermitize(phi.apply(rho));
        double stage = std::numeric_limits<double>::infinity();
        for (const AlgebraElement *x : {&a, &b}) {
            const AlgebraElement t = phi1.apply(rho * (*x));
            const AlgebraElement pushed = phi2.apply(t * phi1_rho_inv * t);
            const AlgebraElement direct = phi.apply(rho * (*x));
            for (int blk = 0; blk < pushed.num_blocks(); ++blk) {
                const ComplexMatrix big =
                    assemble_block2(pushed.block(blk), direct.block(blk), phi_rho.block(blk));
                stage = std::min(stage, lambda_min(hermitize(big)));
            }
        }
        r.metadata.emplace_back("rah_margin", stage);
        overall = std::min(overall, stage);
    }

    // The generalized variances need the density hypothesis; the staged
    // margins above stand on their own without it.
    double report_scale = std::max(element_spectral_norm(abs_phi1_comm), 1.0);
    if (density) {
        // V(A) # V(B) and the unconditional intermediate bound (namosavi).
        const QuantityResult va = gen_variance(phi, rho, a, tol);
        const QuantityResult vb = gen_variance(phi, rho, b, tol);
        GeomMeanInfo sharp_info;
        const AlgebraElement v_sharp = element_geometric_mean(va.value, vb.value, tol, &sharp_info);
        {
            AlgebraElement namosavi_rhs = phi2.apply(abs_phi1_comm);
            namosavi_rhs *= cplx(0.5, 0.0);
            r.metadata.emplace_back("namosavi_margin",
                                    element_lambda_min(element_hermitize(v_sharp - namosavi_rhs)));
        }

        // Stage (iii): the final Kantorovich-weighted bound, when the
        // spectral window of the mode admits it.
        if (window_ok) {
            const double kant = trivial_rhs ? 1.0 : kantorovich(window_m, window_M);
            r.metadata.emplace_back("kantorovich", kant);
            AlgebraElement rhs = element_abs(phi.apply(rho * comm));
            rhs *= cplx(1.0 / (2.0 * std::sqrt(kant)), 0.0);
            const double stage = element_lambda_min(element_hermitize(v_sharp - rhs));
            r.metadata.emplace_back("final_margin", stage);
            overall = std::min(overall, stage);
            r.lhs = v_sharp;
            r.rhs = rhs;
            r.sides_scalar = phi.codomain().total_dim() == 1;
            if (sharp_info.regularized)
                r.hypotheses.push_back(regularized("variance_sharp_definite",
                                                   "geometric mean regularized by " +
                                                       fmt(sharp_info.epsilon)));
        }
        report_scale = std::max(report_scale, element_spectral_norm(v_sharp));
    }

    r.margin = overall;
    finalize(r, report_scale, tol);
    return r;
}

VerifierReport verify_uncertainty_main(const TracialMap &phi, const AlgebraElement &rho,
                                       const AlgebraElement &a, const AlgebraElement &b,
                                       VerifyMode mode, const Tolerance &tol,
                                       bool rho_identity_variant) {
    const auto f = phi.factorize();
    return verify_uncertainty_main(f.phi1, f.assignment, rho, a, b, mode, tol, rho_identity_variant);
}

// ---------------------------------------------------------------------------
// Kadison family.

VerifierReport verify_kadison_family(const TracialMap &map, const AlgebraElement &a, double m,
                                     double M, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::KadisonFamily;

    const double ud = map.unital_defect();
    r.hypotheses.push_back(check_that(ud <= tol.bound(1.0), "map_unital", "unital defect " + fmt(ud)));
    r.hypotheses.push_back(met("map_two_positive", "structural (completely positive model class)"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));

    const std::vector<double> eigs = all_eigenvalues(a);
    const double slack = tol.bound(std::max({std::abs(m), std::abs(M), 1.0}));
    const bool window_valid = m > 0.0 && m <= M;
    bool reverse_ok = window_valid;
    bool two_sided_ok = window_valid;
    for (const double w : eigs) {
        reverse_ok = reverse_ok && w >= m - slack && w <= M + slack;
        const double aw = std::abs(w);
        two_sided_ok = two_sided_ok && aw >= m - slack && aw <= M + slack;
    }
    r.hypotheses.push_back(check_that(reverse_ok, "reverse_spectral_window",
                                      "requires 0 < mI <= A <= MI"));
    r.hypotheses.push_back(check_that(two_sided_ok, "two_sided_spectral_window",
                                      "requires sp(A) in [m,M] u [-M,-m]"));

    const AlgebraElement phi_a = map.apply(a);
    const AlgebraElement kad_lhs = element_hermitize(map.apply(a.adjoint() * a));
    const AlgebraElement kad_rhs = element_hermitize(phi_a.adjoint() * phi_a);
    const double kad_margin = element_lambda_min(kad_lhs - kad_rhs);
    r.metadata.emplace_back("kadison_margin", kad_margin);
    double overall = kad_margin;
    double scale = std::max(element_spectral_norm(kad_lhs), element_spectral_norm(kad_rhs));
    r.lhs = kad_lhs;
    r.rhs = kad_rhs;
    r.sides_scalar = map.codomain().total_dim() == 1;

    if (window_valid) {
        const double kant = kantorovich(m, M);
        r.metadata.emplace_back("kantorovich", kant);
        if (reverse_ok) {
            AlgebraElement rev_lhs = element_hermitize(phi_a * phi_a);
            rev_lhs *= cplx(kant, 0.0);
            const AlgebraElement rev_rhs = element_hermitize(map.apply(a * a));
            const double rv = element_lambda_min(element_hermitize(rev_lhs - rev_rhs));
            r.metadata.emplace_back("reverse_margin", rv);
            overall = std::min(overall, rv);
            scale = std::max(scale, element_spectral_norm(rev_lhs));
        }
        if (two_sided_ok) {
            AlgebraElement l28_lhs = element_hermitize(map.apply(element_abs(a)));
            l28_lhs *= cplx(std::sqrt(kant), 0.0);
            const AlgebraElement l28_rhs = element_abs(phi_a);
            const double lv = element_lambda_min(element_hermitize(l28_lhs - l28_rhs));
            r.metadata.emplace_back("lemma28_margin", lv);
            overall = std::min(overall, lv);
            scale = std::max(scale, element_spectral_norm(l28_lhs));
        }
    }

    r.margin = overall;
    finalize(r, scale, tol);
    return r;
}

// ---------------------------------------------------------------------------
// Skew-information lemmas.

namespace {

/// Shared preamble for the alpha-family verifiers over a positive rho.
bool skew_preamble(VerifierReport &r, const TracialMap &map, const AlgebraElement &rho,
                   const AlgebraElement &a, double alpha, const Tolerance &tol,
                   bool require_self_adjoint) {
    r.hypotheses.push_back(tracial_hypothesis(map));
    r.hypotheses.push_back(check_that(element_is_psd(rho, tol), "rho_psd",
                                      "rho has negative spectrum"));
    if (require_self_adjoint)
        r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    const bool endpoint = alpha == 0.0 || alpha == 1.0;
    if (endpoint) {
        const double rho_min = element_lambda_min(element_hermitize(rho));
        if (rho_min <= tol.bound(std::max(element_spectral_norm(rho), 1.0)))
            r.hypotheses.push_back(regularized(
                "rho_invertible_at_endpoint", "support-projection convention applied to rho^0"));
    }
    return r.hypotheses_met();
}

double skew_scale(const TracialMap &map, const AlgebraElement &rho, const AlgebraElement &a) {
    return element_spectral_norm(map.apply(rho * a.adjoint() * a));
}

} // namespace

VerifierReport verify_skew_nonneg(const TracialMap &map, const AlgebraElement &rho,
                                  const AlgebraElement &a, double alpha, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::SkewNonneg;
    if (!skew_preamble(r, map, rho, a, alpha, tol, /*require_self_adjoint=*/true)) {
        finalize(r, 1.0, tol);
        return r;
    }
    const QuantityResult skew = skew_information_alpha(map, rho, a, AlphaParam(alpha), tol);
    r.lhs = skew.value;
    r.rhs = AlgebraElement::zero(skew.value.algebra());
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(skew.value);
    finalize(r, skew_scale(map, rho, a), tol);
    return r;
}

VerifierReport verify_alpha_convexity(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, double alpha, double beta,
                                      const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::AlphaConvexity;
    const double mid = 0.5 * (alpha + beta);
    const bool endpoints = alpha == 0.0 || alpha == 1.0 || beta == 0.0 || beta == 1.0;
    if (!skew_preamble(r, map, rho, a, endpoints ? 0.0 : 0.5, tol, /*require_self_adjoint=*/true)) {
        finalize(r, 1.0, tol);
        return r;
    }
    auto g = [&](double gamma) {
        const AlgebraElement rg = element_power(rho, gamma, tol);
        const AlgebraElement rc = element_power(rho, 1.0 - gamma, tol);
        return element_hermitize(map.apply(rg * a * rc * a));
    };
    const AlgebraElement ga = g(alpha);
    const AlgebraElement gb = g(beta);
    AlgebraElement gm = g(mid);
    gm *= cplx(2.0, 0.0);
    const AlgebraElement lhs = ga + gb;
    r.lhs = lhs;
    r.rhs = gm;
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(lhs - gm));
    finalize(r, std::max(element_spectral_norm(lhs), element_spectral_norm(gm)), tol);
    return r;
}

VerifierReport verify_skew_monotone_half(const TracialMap &map, const AlgebraElement &rho,
                                         const AlgebraElement &a, double alpha,
                                         const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::SkewMonotoneHalf;
    if (!skew_preamble(r, map, rho, a, alpha, tol, /*require_self_adjoint=*/true)) {
        finalize(r, 1.0, tol);
        return r;
    }
    const QuantityResult half = skew_information_alpha(map, rho, a, AlphaParam(0.5), tol);
    const QuantityResult at_alpha = skew_information_alpha(map, rho, a, AlphaParam(alpha), tol);
    r.lhs = half.value;
    r.rhs = at_alpha.value;
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(half.value - at_alpha.value));
    finalize(r, skew_scale(map, rho, a), tol);
    return r;
}

VerifierReport verify_skew_sum_nonneg(const TracialMap &map, const AlgebraElement &rho,
                                      const AlgebraElement &a, double alpha, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::SkewSumNonneg;
    if (!skew_preamble(r, map, rho, a, alpha, tol, /*require_self_adjoint=*/false)) {
        finalize(r, 1.0, tol);
        return r;
    }
    const QuantityResult fwd = gen_correlation_alpha(map, rho, a, a, AlphaParam(alpha), tol);
    const QuantityResult rev =
        gen_correlation_alpha(map, rho, a.adjoint(), a.adjoint(), AlphaParam(alpha), tol);
    const AlgebraElement sum = element_hermitize(fwd.value + rev.value);

    // Independent route through the 2x2 dilation of the proof.
    const TracialMap dil_map = dilate(map);
    const AlgebraElement dil_rho = dilate_diag(rho);
    const AlgebraElement dil_a = dilate_offdiag(a);
    const QuantityResult dil_skew =
        skew_information_alpha(dil_map, dil_rho, dil_a, AlphaParam(alpha), tol);
    AlgebraElement doubled = dil_skew.value;
    doubled *= cplx(2.0, 0.0);

    double deviation = 0.0;
    if (map.kind() == MapKind::CenterExpectation)
        deviation = max_coeff_deviation(central_coefficients(sum), central_coefficients(doubled));
    else
        deviation = element_spectral_norm(sum - doubled);
    r.metadata.emplace_back("dilation_deviation", deviation);
    const double scale = skew_scale(map, rho, a);
    if (deviation > 1e-7 * (1.0 + scale))
        throw NumericalError("verify_skew_sum_nonneg: direct and dilation routes disagree");

    r.lhs = sum;
    r.rhs = AlgebraElement::zero(sum.algebra());
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(sum);
    finalize(r, scale, tol);
    return r;
}

VerifierReport verify_corr_cauchy_schwarz(const TracialMap &expectation, const AlgebraElement &rho,
                                          const AlgebraElement &a, const AlgebraElement &b,
                                          double alpha, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::CorrCauchySchwarz;
    r.hypotheses.push_back(expectation_hypothesis(expectation));
    const bool density = (rho.algebra() == expectation.domain()) &&
                         is_phi_density(expectation, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));
    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const QuantityResult ia = skew_information_alpha(expectation, rho, a, AlphaParam(alpha), tol);
    const QuantityResult ib = skew_information_alpha(expectation, rho, b, AlphaParam(alpha), tol);
    const QuantityResult corr = gen_correlation_alpha(expectation, rho, a, b, AlphaParam(alpha), tol);
    const AlgebraElement re_corr = element_hermitize(corr.value);

    const AlgebraElement lhs = element_hermitize(ia.value * ib.value);
    const AlgebraElement rhs = element_hermitize(re_corr * re_corr);
    r.metadata.emplace_back("ordering_deviation",
                            element_spectral_norm(ia.value * ib.value - ib.value * ia.value));
    r.lhs = lhs;
    r.rhs = rhs;
    r.sides_scalar = expectation.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(lhs - rhs));
    finalize(r, std::max(element_spectral_norm(lhs), element_spectral_norm(rhs)), tol);
    return r;
}

VerifierReport verify_skew_le_variance(const TracialMap &map, const AlgebraElement &rho,
                                       const AlgebraElement &a, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::SkewLeVariance;
    r.hypotheses.push_back(tracial_hypothesis(map));
    r.hypotheses.push_back(met("map_two_positive", "structural (completely positive model class)"));
    const bool density = is_phi_density(map, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }
    const QuantityResult v = gen_variance(map, rho, a, tol);
    const QuantityResult i = skew_information_alpha(map, rho, a, AlphaParam(0.5), tol);
    r.lhs = v.value;
    r.rhs = i.value;
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(v.value - i.value));
    finalize(r, skew_scale(map, rho, a), tol);
    return r;
}

VerifierReport verify_luo_refined(const TracialMap &expectation, const AlgebraElement &rho,
                                  const AlgebraElement &a, const AlgebraElement &b,
                                  const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::LuoRefined;
    r.hypotheses.push_back(expectation_hypothesis(expectation));
    const bool density = (rho.algebra() == expectation.domain()) &&
                         is_phi_density(expectation, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));
    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const QuantityResult ia = skew_information_alpha(expectation, rho, a, AlphaParam(0.5), tol);
    const QuantityResult ib = skew_information_alpha(expectation, rho, b, AlphaParam(0.5), tol);
    for (const auto *iq : {&ia, &ib}) {
        const double imin = element_lambda_min(iq->value);
        if (imin <= tol.bound(std::max(element_spectral_norm(iq->value), 1.0))) {
            r.hypotheses.push_back(regularized("skew_information_definite",
                                               "lambda_min(I) = " + fmt(imin) +
                                                   "; geometric mean regularized"));
            break;
        }
    }

    const QuantityResult ua = u_quantity(expectation, rho, a, tol);
    const QuantityResult ub = u_quantity(expectation, rho, b, tol);
    const AlgebraElement lhs = element_hermitize(ua.value * ub.value);
    const AlgebraElement rhs = quarter_abs_squared(expectation.apply(rho * (a * b - b * a)));
    r.lhs = lhs;
    r.rhs = rhs;
    r.sides_scalar = expectation.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(lhs - rhs));

    const QuantityResult va = gen_variance(expectation, rho, a, tol);
    const QuantityResult vb = gen_variance(expectation, rho, b, tol);
    const AlgebraElement vv = element_hermitize(va.value * vb.value);
    r.metadata.emplace_back("refinement_gap", element_lambda_min(element_hermitize(vv - lhs)));
    r.metadata.emplace_back("vv_margin", element_lambda_min(element_hermitize(vv - rhs)));
    finalize(r, std::max(element_spectral_norm(vv), element_spectral_norm(rhs)), tol);
    return r;
}

VerifierReport verify_mean_subadditive(const TracialMap &map, const AlgebraElement &a,
                                       const AlgebraElement &b, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::MeanSubadditive;
    const double ud = map.unital_defect();
    r.hypotheses.push_back(check_that(ud <= tol.bound(1.0), "map_unital_positive",
                                      "unital defect " + fmt(ud)));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(b), "b_self_adjoint", "defect too large"));
    const double amin = element_lambda_min(element_hermitize(a));
    const double bmin = element_lambda_min(element_hermitize(b));
    r.hypotheses.push_back(check_that(
        amin > tol.bound(std::max(element_spectral_norm(a), 1.0)) &&
            bmin > tol.bound(std::max(element_spectral_norm(b), 1.0)),
        "operands_definite", "lambda_min(A) = " + fmt(amin) + ", lambda_min(B) = " + fmt(bmin)));
    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const AlgebraElement mean_then_map = element_hermitize(map.apply(element_geometric_mean(a, b, tol)));
    const AlgebraElement map_then_mean = element_geometric_mean(
        element_hermitize(map.apply(a)), element_hermitize(map.apply(b)), tol);
    r.lhs = map_then_mean;
    r.rhs = mean_then_map;
    r.sides_scalar = map.codomain().total_dim() == 1;
    r.margin = element_lambda_min(element_hermitize(map_then_mean - mean_then_map));
    finalize(r, std::max(element_spectral_norm(map_then_mean), element_spectral_norm(mean_then_map)),
             tol);
    return r;
}

VerifierReport verify_ij_identities(const TracialMap &expectation, const AlgebraElement &rho,
                                    const AlgebraElement &a, const Tolerance &tol) {
    VerifierReport r;
    r.theorem = TheoremId::IjIdentities;
    r.hypotheses.push_back(expectation_hypothesis(expectation));
    const bool density = (rho.algebra() == expectation.domain()) &&
                         is_phi_density(expectation, rho, tol);
    r.hypotheses.push_back(check_that(density, "rho_phi_density", "Phi(rho) != I within tolerance"));
    r.hypotheses.push_back(check_that(self_adjoint_ok(a), "a_self_adjoint", "defect too large"));
    if (!r.hypotheses_met()) {
        finalize(r, 1.0, tol);
        return r;
    }

    const AlgebraElement centered =
        a - embed_expectation_value(expectation, expectation.apply(rho * a));
    const AlgebraElement rho_half = element_power(rho, 0.5, tol);

    AlgebraElement icomm = rho_half * centered - centered * rho_half;
    icomm *= cplx(0.0, 1.0); // i [rho^{1/2}, A_0]
    AlgebraElement i_route = element_hermitize(expectation.apply(icomm * icomm));
    i_route *= cplx(0.5, 0.0);

    const AlgebraElement anti = rho_half * centered + centered * rho_half;
    AlgebraElement j_route = element_hermitize(expectation.apply(anti * anti));
    j_route *= cplx(0.5, 0.0);

    const QuantityResult i_direct = skew_information_alpha(expectation, rho, a, AlphaParam(0.5), tol);
    const QuantityResult j_direct = j_quantity(expectation, rho, a, tol);

    const double defect_i = element_spectral_norm(i_direct.value - i_route);
    const double defect_j = element_spectral_norm(j_direct.value - j_route);
    r.metadata.emplace_back("defect_i", defect_i);
    r.metadata.emplace_back("defect_j", defect_j);

    r.lhs = i_direct.value;
    r.rhs = i_route;
    r.sides_scalar = expectation.codomain().total_dim() == 1;
    r.margin = -std::max(defect_i, defect_j);
    finalize(r, std::max({element_spectral_norm(i_direct.value),
                          element_spectral_norm(j_direct.value), 1.0}),
             tol);
    return r;
}

} // namespace uncert
