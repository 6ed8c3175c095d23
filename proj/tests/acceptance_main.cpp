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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria cover analytic saturation, full randomized campaigns, the
// dual-route Schur check, specialization coherence, the refinement chain,
// strict-mode impossibility, the planted-falsehood detector, determinism
// across thread counts, and the endpoint identities.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "uncert/serialize.hpp"

using namespace uncert;

namespace {

int g_failures = 0;

void report(int index, const std::string &label, bool ok, const std::string &detail) {
    std::printf("[%d] %-34s %s  (%s)\n", index, label.c_str(), ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok)
        ++g_failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

ComplexMatrix sigma_x() {
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}});
}
ComplexMatrix sigma_y() {
    return ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}});
}

// 1. Qubit saturation of the refined uncertainty relation.
void criterion_saturation() {
    const double t0 = now_seconds();
    const TracialMap trace_map = TracialMap::usual_trace(BlockAlgebra::single(2));
    const AlgebraElement a = AlgebraElement::from_matrix(sigma_x());
    const AlgebraElement b = AlgebraElement::from_matrix(sigma_y());
    double worst = 0.0;
    for (double p : {0.6, 0.75, 0.9}) {
        ComplexMatrix rho(2);
        rho.at(0, 0) = p;
        rho.at(1, 1) = 1.0 - p;
        const VerifierReport r =
            verify_luo_refined(trace_map, AlgebraElement::from_matrix(rho), a, b);
        const double target = (2.0 * p - 1.0) * (2.0 * p - 1.0);
        worst = std::max(worst, std::abs(r.margin));
        worst = std::max(worst, std::abs(r.lhs->scalar_value().real() - target));
        worst = std::max(worst, std::abs(r.rhs->scalar_value().real() - target));
    }
    const double elapsed = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max |deviation| = %.3e, %.3f s", worst, elapsed);
    report(1, "qubit Luo saturation", worst <= 1e-9 && elapsed < 1.0, detail);
}

// 2. Full campaign: every verifier x block specs x map kinds, 1000 trials.
void criterion_campaign() {
    const double t0 = now_seconds();
    const std::vector<std::vector<int>> block_specs{{2}, {3}, {4}, {2, 2}, {2, 3}};
    struct KindSpec {
        MapKind kind;
        int k;
    };
    const std::vector<KindSpec> kinds{{MapKind::UsualTrace, 1},       {MapKind::ScaledBlockTrace, 1},
                                      {MapKind::ScaledBlockTrace, 2}, {MapKind::ScaledBlockTrace, 3},
                                      {MapKind::CenterExpectation, 1}, {MapKind::Composite, 2}};
    long failures = 0, trials_run = 0;
    for (const auto &blocks : block_specs) {
        for (const auto &[kind, k] : kinds) {
            CampaignConfig config;
            config.theorems = all_theorems();
            config.spec.block_dims = blocks;
            config.spec.map_kind = kind;
            config.spec.map_rows = k;
            config.spec.alpha_grid = InstanceSpec::default_alpha_grid();
            config.spec.trials = 1000;
            config.spec.seed = 20260811;
            config.tolerance = Tolerance{1e-8, 1e-10};
            const CampaignReport rep = run_campaign(config);
            failures += rep.total_failures();
            for (const auto &s : rep.results)
                trials_run += s.trials;
        }
    }
    const double elapsed = now_seconds() - t0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "%ld failures over %ld trials, %.1f s", failures,
                  trials_run, elapsed);
    report(2, "campaign suite", failures == 0 && elapsed < 120.0, detail);
}

// 3. Dual-route Schur check on 1000 random triples.
void criterion_schur() {
    int disagreements = 0;
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t seed = rng::derive_seed(33, static_cast<std::uint64_t>(t));
        const int dim = 1 + static_cast<int>(rng::mix64(seed) % 5);
        const ComplexMatrix g = random_complex(dim, rng::mix64(seed ^ 1));
        ComplexMatrix w = g * g.adjoint();
        for (int i = 0; i < dim; ++i)
            w.at(i, i) += 0.4;
        const HermitianMatrix a = hermitize(w);
        const ComplexMatrix x = random_complex(dim, rng::mix64(seed ^ 2));
        const HermitianMatrix b = random_hermitian(dim, rng::mix64(seed ^ 3));
        try {
            schur_positivity_check(a, x, b);
            ++checked;
        } catch (const NumericalError &) {
            ++disagreements;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d disagreements in %d triples", disagreements, checked + disagreements);
    report(3, "Schur dual-route agreement", disagreements == 0, detail);
}

// 4. The commutative-range verifier with the scalar trace matches the
// classical one.
void criterion_specialization() {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t seed = rng::derive_seed(44, static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(rng::mix64(seed) % 4);
        const HermitianMatrix rho = random_density(dim, rng::mix64(seed ^ 1));
        const HermitianMatrix a = random_hermitian(dim, rng::mix64(seed ^ 2));
        const HermitianMatrix b = random_hermitian(dim, rng::mix64(seed ^ 3));
        const VerifierReport classical = verify_schrodinger_classical(rho, a, b);
        const VerifierReport general = verify_schrodinger_commutative_range(
            TracialMap::usual_trace(BlockAlgebra::single(dim)),
            AlgebraElement::from_matrix(rho.matrix()), AlgebraElement::from_matrix(a.matrix()),
            AlgebraElement::from_matrix(b.matrix()));
        worst = std::max(worst, std::abs(classical.margin - general.margin));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max margin deviation = %.3e over 200 instances", worst);
    report(4, "specialization coherence", worst <= 1e-10, detail);
}

// 5. Refinement chain on center-expectation instances.
void criterion_refinement_chain() {
    const std::vector<std::vector<int>> blocks{{2}, {3}, {2, 2}};
    const std::vector<double> grid = InstanceSpec::default_alpha_grid();
    int violations = 0, used = 0;
    for (int t = 0; t < 500; ++t) {
        const std::uint64_t seed = rng::derive_seed(55, static_cast<std::uint64_t>(t));
        const BlockAlgebra alg(blocks[t % blocks.size()]);
        const TracialMap e = TracialMap::center_expectation(alg);
        const AlgebraElement rho = make_phi_density(e, rng::mix64(seed ^ 1));
        const AlgebraElement a = random_hermitian_element(alg, rng::mix64(seed ^ 2));
        const AlgebraElement b = random_hermitian_element(alg, rng::mix64(seed ^ 3));
        const double alpha = grid[rng::mix64(seed ^ 4) % grid.size()];

        const AlgebraElement i_alpha = skew_information_alpha(e, rho, a, AlphaParam(alpha)).value;
        const AlgebraElement i_half = skew_information_alpha(e, rho, a, AlphaParam(0.5)).value;
        const AlgebraElement v = gen_variance(e, rho, a).value;
        const double i_min = element_lambda_min(i_half);
        const double scale = std::max(element_spectral_norm(v), 1.0);
        if (i_min <= 1e-8 * scale)
            continue; // definite skew informations only, per the criterion
        ++used;

        const VerifierReport luo = verify_luo_refined(e, rho, a, b);
        bool ok = element_lambda_min(i_half - i_alpha) >= -1e-8 * scale;
        ok = ok && element_lambda_min(v - i_half) >= -1e-8 * scale;
        ok = ok && element_lambda_min(v - u_quantity(e, rho, a).value) >= -1e-8 * scale;
        // the skew-based bound never exceeds the variance-based bound
        ok = ok && luo.metadata_value("refinement_gap") >= -1e-8 * scale;
        ok = ok && luo.metadata_value("vv_margin") >= luo.margin - 1e-8 * scale;
        if (!ok)
            ++violations;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d violations over %d definite instances", violations,
                  used);
    report(5, "refinement chain", violations == 0 && used >= 400, detail);
}

// 6. Strict mode is impossible; relaxed mode never fails on margins.
void criterion_strict_impossibility() {
    InstanceSpec spec;
    spec.map_rows = 2;
    spec.alpha_grid = InstanceSpec::default_alpha_grid();
    spec.trials = 500;
    spec.seed = 66;
    const std::vector<std::vector<int>> blocks{{2}, {3}, {2, 2}};
    const std::vector<MapKind> kinds{MapKind::UsualTrace, MapKind::CenterExpectation,
                                     MapKind::Composite};
    int strict_unmet = 0, strict_diagnosed = 0, relaxed_failures = 0, relaxed_applicable = 0;
    for (int t = 0; t < 500; ++t) {
        spec.block_dims = blocks[t % blocks.size()];
        spec.map_kind = kinds[t % kinds.size()];
        const Instance strict_inst =
            generate_instance(TheoremId::UncertaintyMain, spec, t, VerifyMode::Strict);
        const VerifierReport strict = run_instance(strict_inst);
        if (!strict.hypotheses_met()) {
            ++strict_unmet;
            for (const auto &h : strict.hypotheses)
                if (h.name == "strict_spectral_window" &&
                    h.detail.find("traceless commutator") != std::string::npos)
                    ++strict_diagnosed;
        }
        const Instance relaxed_inst =
            generate_instance(TheoremId::UncertaintyMain, spec, t, VerifyMode::Relaxed);
        const VerifierReport relaxed = run_instance(relaxed_inst);
        if (relaxed.metadata_value("m") > 1e-6) {
            ++relaxed_applicable;
            if (relaxed.hypotheses_met() && !relaxed.pass)
                ++relaxed_failures;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "strict unmet %d/500 (diagnosed %d), relaxed failures %d/%d", strict_unmet,
                  strict_diagnosed, relaxed_failures, relaxed_applicable);
    report(6, "strict-mode impossibility",
           strict_unmet == 500 && strict_diagnosed == 500 && relaxed_failures == 0 &&
               relaxed_applicable > 0,
           detail);
}

// 7. The planted falsehood V <= I is detected.
void criterion_planted() {
    InstanceSpec spec;
    spec.block_dims = {2};
    spec.map_kind = MapKind::UsualTrace;
    spec.map_rows = 1;
    spec.alpha_grid = InstanceSpec::default_alpha_grid();
    spec.trials = 100;
    spec.seed = 7;
    const SearchReport rep = counterexample_search("synthetic_v_le_skew", "none", 100, spec);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "found=%d after %d trials, margin %.3e", int(rep.found),
                  rep.trials_used, rep.violation_margin);
    report(7, "planted-falsehood detector", rep.found && rep.trials_used <= 100, detail);
}

// 8. Identical campaigns regardless of UNCERT_THREADS.
void criterion_determinism() {
    CampaignConfig config;
    config.theorems = {TheoremId::SchrodingerClassical, TheoremId::UncertaintyMain,
                       TheoremId::LuoRefined, TheoremId::SkewMonotoneHalf};
    config.spec.block_dims = {2, 2};
    config.spec.map_kind = MapKind::Composite;
    config.spec.map_rows = 2;
    config.spec.alpha_grid = InstanceSpec::default_alpha_grid();
    config.spec.trials = 100;
    config.spec.seed = 314159;

    setenv("UNCERT_THREADS", "1", 1);
    const CampaignReport serial = run_campaign(config);
    setenv("UNCERT_THREADS", "8", 1);
    const CampaignReport parallel = run_campaign(config);
    unsetenv("UNCERT_THREADS");

    double worst = 0.0;
    bool seeds_match = true;
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        worst = std::max(worst,
                         std::abs(serial.results[i].min_margin - parallel.results[i].min_margin));
        seeds_match = seeds_match &&
                      serial.results[i].argmin_seed == parallel.results[i].argmin_seed;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max |margin delta| = %.3e, argmin seeds %s", worst,
                  seeds_match ? "identical" : "DIFFER");
    report(8, "thread-count determinism", worst <= 1e-12 && seeds_match, detail);
}

// 9. I^0 and I^1 vanish for invertible rho.
void criterion_endpoints() {
    const std::vector<std::vector<int>> blocks{{2}, {3}, {2, 3}};
    const std::vector<MapKind> kinds{MapKind::UsualTrace, MapKind::ScaledBlockTrace,
                                     MapKind::CenterExpectation, MapKind::Composite};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::uint64_t seed = rng::derive_seed(99, static_cast<std::uint64_t>(t));
        const BlockAlgebra alg(blocks[t % blocks.size()]);
        const TracialMap map =
            random_tracial_map(alg, kinds[t % kinds.size()], 2, rng::mix64(seed ^ 1));
        const AlgebraElement rho = make_phi_density(map, rng::mix64(seed ^ 2));
        const AlgebraElement a = random_hermitian_element(alg, rng::mix64(seed ^ 3));
        const double scale =
            std::max(element_spectral_norm(map.apply(rho * a * a)), 1.0);
        for (double alpha : {0.0, 1.0}) {
            const AlgebraElement i =
                skew_information_alpha(map, rho, a, AlphaParam(alpha)).value;
            worst = std::max(worst, element_spectral_norm(i) / scale);
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max ||I^{0,1}|| / scale = %.3e over 200 instances", worst);
    report(9, "endpoint identities", worst <= 1e-9, detail);
}

} // namespace

int main() {
    std::printf("uncert acceptance suite\n");
    criterion_saturation();
    criterion_campaign();
    criterion_schur();
    criterion_specialization();
    criterion_refinement_chain();
    criterion_strict_impossibility();
    criterion_planted();
    criterion_determinism();
    criterion_endpoints();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria PASS\n");
    return 0;
}
