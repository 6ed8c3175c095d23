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

#include "uncert/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

#include "uncert/serialize.hpp"
#include "uncert/version.hpp"

namespace uncert {

namespace {

std::uint64_t sub_seed(std::uint64_t derived, std::uint64_t tag) {
    return rng::mix64(derived ^ rng::mix64(tag));
}

double grid_alpha(const InstanceSpec &spec, std::uint64_t derived, std::uint64_t tag) {
    const auto &grid = spec.alpha_grid.empty() ? InstanceSpec::default_alpha_grid() : spec.alpha_grid;
    return grid[static_cast<std::size_t>(sub_seed(derived, tag) % grid.size())];
}

/// Blockwise Wishart plus a ridge, for definite operands.
AlgebraElement random_definite_element(const BlockAlgebra &alg, std::uint64_t seed) {
    AlgebraElement x = random_positive_element(alg, seed);
    x *= cplx(static_cast<double>(alg.total_dim()), 0.0); // O(1) per-block scale
    AlgebraElement ridge = AlgebraElement::identity(alg);
    ridge *= cplx(0.3, 0.0);
    return x + ridge;
}

/// Positive A with eigenvalues in [0.5, 2] and the matching (m, M) window,
/// for the Kadison family.
AlgebraElement random_windowed_positive(const BlockAlgebra &alg, std::uint64_t seed, double &m_out,
                                        double &M_out) {
    rng::Stream s(seed);
    m_out = std::numeric_limits<double>::infinity();
    M_out = 0.0;
    AlgebraElement out = AlgebraElement::zero(alg);
    for (int b = 0; b < alg.num_blocks(); ++b) {
        const int n = alg.block_dims[static_cast<std::size_t>(b)];
        const ComplexMatrix u = random_unitary(n, s.next_u64());
        ComplexMatrix d(n);
        for (int i = 0; i < n; ++i) {
            const double w = 0.5 + 1.5 * s.next_unit();
            d.at(i, i) = w;
            m_out = std::min(m_out, w);
            M_out = std::max(M_out, w);
        }
        out.block(b) = u * d * u.adjoint();
    }
    return out;
}

} // namespace

Instance generate_instance(TheoremId theorem, const InstanceSpec &spec, int trial, VerifyMode mode) {
    spec.validate();
    const std::uint64_t derived = rng::derive_seed(spec.seed, static_cast<std::uint64_t>(trial));
    const BlockAlgebra alg(spec.block_dims);

    Instance inst;
    inst.theorem = theorem;
    inst.mode = mode;
    inst.seed = derived;

    const int codom = 2 + static_cast<int>(sub_seed(derived, 0x10) % 2);
    auto map = [&]() {
        return random_tracial_map(alg, spec.map_kind, spec.map_rows, sub_seed(derived, 0x11), codom);
    };

    switch (theorem) {
    case TheoremId::HeisenbergClassical:
    case TheoremId::SchrodingerClassical: {
        const int n = alg.total_dim();
        inst.rho = AlgebraElement::from_matrix(random_density(n, sub_seed(derived, 0x2)).matrix());
        inst.a = AlgebraElement::from_matrix(random_hermitian(n, sub_seed(derived, 0x3)).matrix());
        inst.b = AlgebraElement::from_matrix(random_hermitian(n, sub_seed(derived, 0x4)).matrix());
        break;
    }
    case TheoremId::SchrodingerCommutativeRange: {
        inst.map = map();
        // Any PSD rho with Phi(rho) > 0; the density normalization is
        // deliberately not applied here.
        rng::Stream s(sub_seed(derived, 0x5));
        AlgebraElement rho = random_positive_element(alg, sub_seed(derived, 0x2));
        rho *= cplx(0.5 + 2.0 * s.next_unit(), 0.0);
        inst.rho = std::move(rho);
        inst.a = random_hermitian_element(alg, sub_seed(derived, 0x3));
        inst.b = random_hermitian_element(alg, sub_seed(derived, 0x4));
        break;
    }
    case TheoremId::UncertaintyMain:
    case TheoremId::ConditionalExpectationSchrodinger:
    case TheoremId::CorrCauchySchwarz:
    case TheoremId::LuoRefined:
    case TheoremId::SkewLeVariance:
    case TheoremId::IjIdentities: {
        inst.map = map();
        inst.rho = make_phi_density(*inst.map, sub_seed(derived, 0x2));
        inst.a = random_hermitian_element(alg, sub_seed(derived, 0x3));
        if (theorem != TheoremId::IjIdentities && theorem != TheoremId::SkewLeVariance)
            inst.b = random_hermitian_element(alg, sub_seed(derived, 0x4));
        if (theorem == TheoremId::CorrCauchySchwarz)
            inst.alpha = grid_alpha(spec, derived, 0x6);
        break;
    }
    case TheoremId::KadisonFamily: {
        inst.map = map();
        double m = 0.0, M = 0.0;
        inst.a = random_windowed_positive(alg, sub_seed(derived, 0x3), m, M);
        inst.window_m = m;
        inst.window_M = M;
        break;
    }
    case TheoremId::SkewNonneg:
    case TheoremId::SkewMonotoneHalf:
    case TheoremId::AlphaConvexity: {
        inst.map = map();
        rng::Stream s(sub_seed(derived, 0x5));
        AlgebraElement rho = random_positive_element(alg, sub_seed(derived, 0x2));
        rho *= cplx(0.5 + 2.0 * s.next_unit(), 0.0); // positive, not a density
        inst.rho = std::move(rho);
        inst.a = random_hermitian_element(alg, sub_seed(derived, 0x3));
        inst.alpha = grid_alpha(spec, derived, 0x6);
        if (theorem == TheoremId::AlphaConvexity)
            inst.beta = grid_alpha(spec, derived, 0x7);
        break;
    }
    case TheoremId::SkewSumNonneg: {
        inst.map = map();
        rng::Stream s(sub_seed(derived, 0x5));
        AlgebraElement rho = random_positive_element(alg, sub_seed(derived, 0x2));
        rho *= cplx(0.5 + 2.0 * s.next_unit(), 0.0);
        inst.rho = std::move(rho);
        inst.a = random_element(alg, sub_seed(derived, 0x3)); // generally non-self-adjoint
        inst.alpha = grid_alpha(spec, derived, 0x6);
        break;
    }
    case TheoremId::MeanSubadditive: {
        inst.map = map();
        inst.a = random_definite_element(alg, sub_seed(derived, 0x3));
        inst.b = random_definite_element(alg, sub_seed(derived, 0x4));
        break;
    }
    }
    return inst;
}

VerifierReport run_instance(const Instance &inst, const Tolerance &tol) {
    const auto need_map = [&]() -> const TracialMap & {
        if (!inst.map.has_value())
            throw SchemaError("instance is missing its map");
        return *inst.map;
    };
    const auto need_b = [&]() -> const AlgebraElement & {
        if (!inst.b.has_value())
            throw SchemaError("instance is missing operand b");
        return *inst.b;
    };
    const auto need_alpha = [&]() {
        if (!inst.alpha.has_value())
            throw SchemaError("instance is missing alpha");
        return *inst.alpha;
    };

    switch (inst.theorem) {
    case TheoremId::HeisenbergClassical:
    case TheoremId::SchrodingerClassical: {
        if (inst.rho.num_blocks() != 1)
            throw SchemaError("classical instance must be single-block");
        const HermitianMatrix rho = hermitize(inst.rho.block(0));
        const HermitianMatrix a = hermitize(inst.a.block(0));
        const HermitianMatrix b = hermitize(need_b().block(0));
        return inst.theorem == TheoremId::HeisenbergClassical
                   ? verify_heisenberg_classical(rho, a, b, tol)
                   : verify_schrodinger_classical(rho, a, b, tol);
    }
    case TheoremId::SchrodingerCommutativeRange:
        return verify_schrodinger_commutative_range(need_map(), inst.rho, inst.a, need_b(), tol);
    case TheoremId::ConditionalExpectationSchrodinger:
        return verify_conditional_expectation_schrodinger(need_map(), inst.rho, inst.a, need_b(),
                                                          tol);
    case TheoremId::UncertaintyMain:
        return verify_uncertainty_main(need_map(), inst.rho, inst.a, need_b(), inst.mode, tol);
    case TheoremId::KadisonFamily:
        if (!inst.window_m.has_value() || !inst.window_M.has_value())
            throw SchemaError("kadison instance is missing its spectral window");
        return verify_kadison_family(need_map(), inst.a, *inst.window_m, *inst.window_M, tol);
    case TheoremId::SkewNonneg:
        return verify_skew_nonneg(need_map(), inst.rho, inst.a, need_alpha(), tol);
    case TheoremId::AlphaConvexity:
        if (!inst.beta.has_value())
            throw SchemaError("alpha_convexity instance is missing beta");
        return verify_alpha_convexity(need_map(), inst.rho, inst.a, need_alpha(), *inst.beta, tol);
    case TheoremId::SkewMonotoneHalf:
        return verify_skew_monotone_half(need_map(), inst.rho, inst.a, need_alpha(), tol);
    case TheoremId::SkewSumNonneg:
        return verify_skew_sum_nonneg(need_map(), inst.rho, inst.a, need_alpha(), tol);
    case TheoremId::CorrCauchySchwarz:
        return verify_corr_cauchy_schwarz(need_map(), inst.rho, inst.a, need_b(), need_alpha(), tol);
    case TheoremId::SkewLeVariance:
        return verify_skew_le_variance(need_map(), inst.rho, inst.a, tol);
    case TheoremId::LuoRefined:
        return verify_luo_refined(need_map(), inst.rho, inst.a, need_b(), tol);
    case TheoremId::MeanSubadditive:
        return verify_mean_subadditive(need_map(), inst.a, need_b(), tol);
    case TheoremId::IjIdentities:
        return verify_ij_identities(need_map(), inst.rho, inst.a, tol);
    }
    throw ConfigError("unknown theorem id");
}

void CampaignConfig::validate() const {
    if (theorems.empty())
        throw ConfigError("campaign needs at least one theorem");
    spec.validate();
    tolerance.validate();
}

int CampaignReport::total_failures() const {
    int n = 0;
    for (const auto &s : results)
        n += s.failures;
    return n;
}

int campaign_thread_count() {
    const char *env = std::getenv("UNCERT_THREADS");
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1)
        n = 1;
    if (env != nullptr) {
        const int v = std::atoi(env);
        if (v >= 1)
            n = v;
    }
    return n;
}

namespace {

struct TrialOutcome {
    enum class Kind { Pass, Fail, Unmet } kind = Kind::Pass;
    double margin = 0.0;
    bool margin_valid = false; // hypotheses met, margin comparable
    std::uint64_t seed = 0;
};

std::string argmin_instance_path(const std::string &out, TheoremId theorem) {
    std::string base = out;
    if (base.size() >= 5 && base.substr(base.size() - 5) == ".json")
        base = base.substr(0, base.size() - 5);
    return base + ".argmin." + std::string(theorem_name(theorem)) + ".json";
}

std::string csv_path(const std::string &out) {
    std::string base = out;
    if (base.size() >= 5 && base.substr(base.size() - 5) == ".json")
        base = base.substr(0, base.size() - 5);
    return base + ".csv";
}

} // namespace

CampaignReport run_campaign(const CampaignConfig &config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const int trials = config.spec.trials;
    const int n_theorems = static_cast<int>(config.theorems.size());
    std::vector<std::vector<TrialOutcome>> outcomes(static_cast<std::size_t>(n_theorems));
    for (auto &v : outcomes)
        v.resize(static_cast<std::size_t>(trials));

    std::atomic<int> next{0};
    const int total = n_theorems * trials;
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const int task = next.fetch_add(1, std::memory_order_relaxed);
            if (task >= total)
                return;
            const int ti = task / trials;
            const int trial = task % trials;
            try {
                const Instance inst =
                    generate_instance(config.theorems[static_cast<std::size_t>(ti)], config.spec,
                                      trial, config.mode);
                const VerifierReport rep = run_instance(inst, config.tolerance);
                TrialOutcome &out = outcomes[static_cast<std::size_t>(ti)][static_cast<std::size_t>(trial)];
                out.seed = inst.seed;
                if (!rep.hypotheses_met()) {
                    out.kind = TrialOutcome::Kind::Unmet;
                } else {
                    out.margin = rep.margin;
                    out.margin_valid = true;
                    out.kind = rep.pass ? TrialOutcome::Kind::Pass : TrialOutcome::Kind::Fail;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                next.store(total, std::memory_order_relaxed);
                return;
            }
        }
    };

    const int n_threads = std::min(campaign_thread_count(), total);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);

    CampaignReport report;
    report.version = kVersionString;
    report.config = config;
    for (int ti = 0; ti < n_theorems; ++ti) {
        TheoremStats stats;
        stats.theorem = config.theorems[static_cast<std::size_t>(ti)];
        stats.trials = trials;
        bool have = false;
        for (int trial = 0; trial < trials; ++trial) {
            const TrialOutcome &out = outcomes[static_cast<std::size_t>(ti)][static_cast<std::size_t>(trial)];
            switch (out.kind) {
            case TrialOutcome::Kind::Pass:
                ++stats.passes;
                break;
            case TrialOutcome::Kind::Fail:
                ++stats.failures;
                break;
            case TrialOutcome::Kind::Unmet:
                ++stats.hypothesis_unmet;
                break;
            }
            if (out.margin_valid && (!have || out.margin < stats.min_margin)) {
                have = true;
                stats.min_margin = out.margin;
                stats.argmin_seed = out.seed;
                stats.argmin_trial = trial;
            }
        }
        if (!have) {
            // Every trial was hypothesis-unmet; fall back to trial 0.
            stats.min_margin = 0.0;
            stats.argmin_seed = outcomes[static_cast<std::size_t>(ti)][0].seed;
            stats.argmin_trial = 0;
        }
        report.results.push_back(stats);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!config.output_path.empty()) {
        save_json(campaign_report_to_json(report), config.output_path);
        std::ofstream csv(csv_path(config.output_path));
        if (!csv)
            throw Error("cannot write file: " + csv_path(config.output_path));
        csv << campaign_report_to_csv(report);
        if (config.write_argmin_instances) {
            for (const auto &s : report.results) {
                const Instance inst = generate_instance(s.theorem, config.spec, s.argmin_trial,
                                                        config.mode);
                save_json(instance_to_json(inst), argmin_instance_path(config.output_path, s.theorem));
            }
        }
    }
    return report;
}

namespace {

/// The commutative-range inequality's margin computed without any
/// hypothesis gating, for hypothesis-dropping searches (products are
/// symmetrized, since nothing guarantees they commute here).
double ungated_commutative_range_margin(const TracialMap &map, const AlgebraElement &rho,
                                        const AlgebraElement &a, const AlgebraElement &b,
                                        const Tolerance &tol, double &scale_out) {
    const QuantityResult va = gen_variance_prime(map, rho, a, tol);
    const QuantityResult vb = gen_variance_prime(map, rho, b, tol);
    const QuantityResult cov = gen_covariance_prime(map, rho, a, b, tol);
    const AlgebraElement re_cov = element_hermitize(cov.value);
    const AlgebraElement lhs = element_hermitize(va.value * vb.value - re_cov * re_cov);
    const AlgebraElement phi_comm = map.apply(rho * (a * b - b * a));
    AlgebraElement rhs = element_hermitize(phi_comm.adjoint() * phi_comm);
    rhs *= cplx(0.25, 0.0);
    scale_out = std::max({element_spectral_norm(lhs), element_spectral_norm(rhs), 1.0});
    return element_lambda_min(element_hermitize(lhs - rhs));
}

} // namespace

SearchReport counterexample_search(const std::string &target, const std::string &drop_hypothesis,
                                   int budget, const InstanceSpec &spec, const Tolerance &tol) {
    if (budget < 0)
        throw ConfigError("search budget must be nonnegative");
    SearchReport report;
    report.target = target;
    report.dropped_hypothesis = drop_hypothesis;
    report.budget = budget;

    enum class Kind { SyntheticVLeSkew, DropCommutativeRange, KeepAll } kind;
    TheoremId theorem = TheoremId::SkewLeVariance;
    if (target == "synthetic_v_le_skew") {
        if (drop_hypothesis != "none")
            throw ConfigError("synthetic_v_le_skew supports only --drop none");
        kind = Kind::SyntheticVLeSkew;
    } else {
        theorem = theorem_from_string(target);
        if (drop_hypothesis == "none") {
            kind = Kind::KeepAll;
        } else if (drop_hypothesis == "commutative_range" &&
                   theorem == TheoremId::SchrodingerCommutativeRange) {
            kind = Kind::DropCommutativeRange;
        } else {
            throw ConfigError("unsupported (target, hypothesis) pair: " + target + ", " +
                              drop_hypothesis);
        }
    }

    InstanceSpec trial_spec = spec;
    trial_spec.trials = std::max(budget, 1);
    if (kind == Kind::DropCommutativeRange) {
        // The noncommutative-codomain tracial family sum_j tr(X K_j) Q_j.
        // Two unital targets always commute (Q2 = I - Q1), so genuinely
        // noncommutative ranges need at least three.
        trial_spec.map_kind = MapKind::Composite;
        trial_spec.map_rows = std::max(spec.map_rows, 3);
    }

    for (int trial = 0; trial < budget; ++trial) {
        report.trials_used = trial + 1;
        switch (kind) {
        case Kind::SyntheticVLeSkew: {
            // Planted falsehood: claim V(A) <= I^{1/2}(A).
            Instance inst = generate_instance(TheoremId::SkewLeVariance, trial_spec, trial);
            const QuantityResult v = gen_variance(*inst.map, inst.rho, inst.a, tol);
            const QuantityResult i =
                skew_information_alpha(*inst.map, inst.rho, inst.a, AlphaParam(0.5), tol);
            const double margin = element_lambda_min(element_hermitize(i.value - v.value));
            const double scale =
                std::max(element_spectral_norm(v.value), element_spectral_norm(i.value));
            if (margin < -tol.bound(std::max(scale, 1.0))) {
                report.found = true;
                report.violation_margin = margin;
                report.witness = std::move(inst);
                return report;
            }
            break;
        }
        case Kind::DropCommutativeRange: {
            Instance inst = generate_instance(theorem, trial_spec, trial);
            const double phi_rho_min = element_lambda_min(element_hermitize(inst.map->apply(inst.rho)));
            if (phi_rho_min <= tol.bound(1.0))
                break; // skip degenerate draws
            double scale = 1.0;
            const double margin =
                ungated_commutative_range_margin(*inst.map, inst.rho, inst.a, *inst.b, tol, scale);
            if (margin < -tol.bound(scale)) {
                report.found = true;
                report.violation_margin = margin;
                report.witness = std::move(inst);
                return report;
            }
            break;
        }
        case Kind::KeepAll: {
            Instance inst = generate_instance(theorem, trial_spec, trial);
            const VerifierReport rep = run_instance(inst, tol);
            if (rep.hypotheses_met() && !rep.pass) {
                report.found = true;
                report.violation_margin = rep.margin;
                report.witness = std::move(inst);
                return report;
            }
            break;
        }
        }
    }
    return report;
}

VerifierReport replay(const Instance &instance, std::optional<TheoremId> theorem_override,
                      std::optional<VerifyMode> mode_override, const Tolerance &tol) {
    Instance inst = instance;
    if (theorem_override.has_value())
        inst.theorem = *theorem_override;
    if (mode_override.has_value())
        inst.mode = *mode_override;
    return run_instance(inst, tol);
}

} // namespace uncert
