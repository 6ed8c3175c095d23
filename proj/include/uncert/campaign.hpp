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
 * Campaign execution: seeded instance generation per theorem, the
 * verification loop, counterexample search and instance replay.
 *
 * Trials are independent; per-trial seeds come from the public derivation
 * in random.hpp, so results do not depend on the thread count
 * (UNCERT_THREADS caps parallelism).
 */

#pragma once

#include <optional>
#include <string>

#include "uncert/random.hpp"
#include "uncert/verifiers.hpp"

namespace uncert {

/// A fully materialized, serializable verification instance.
struct Instance {
    TheoremId theorem = TheoremId::HeisenbergClassical;
    VerifyMode mode = VerifyMode::Relaxed;
    std::optional<TracialMap> map; // absent for the classical verifiers
    AlgebraElement rho = AlgebraElement::scalar(cplx(1.0, 0.0));
    AlgebraElement a = AlgebraElement::scalar(cplx(0.0, 0.0));
    std::optional<AlgebraElement> b;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> window_m; // kadison_family bounds
    std::optional<double> window_M;
    std::uint64_t seed = 0;
};

/// Deterministic instance for (theorem, spec, trial).
Instance generate_instance(TheoremId theorem, const InstanceSpec &spec, int trial,
                           VerifyMode mode = VerifyMode::Relaxed);

/// Dispatches the instance to its verifier.
VerifierReport run_instance(const Instance &instance, const Tolerance &tol = {});

struct CampaignConfig {
    std::vector<TheoremId> theorems;
    InstanceSpec spec;
    Tolerance tolerance;
    VerifyMode mode = VerifyMode::Relaxed;
    std::string output_path; // empty: no report files written
    bool write_argmin_instances = true;

    void validate() const;
};

struct TheoremStats {
    TheoremId theorem = TheoremId::HeisenbergClassical;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    int hypothesis_unmet = 0;
    double min_margin = 0.0;
    std::uint64_t argmin_seed = 0;
    int argmin_trial = 0;
};

struct CampaignReport {
    std::string version;
    double wall_seconds = 0.0;
    CampaignConfig config;
    std::vector<TheoremStats> results;

    int total_failures() const;
};

/// Runs every (theorem, trial) pair, aggregates, and writes the JSON
/// report, a CSV summary and per-theorem argmin instances when
/// output_path is set.
CampaignReport run_campaign(const CampaignConfig &config);

/// Counterexample search over randomized instances. Supported targets:
/// any theorem id with hypothesis "none" dropped (expects no violation),
/// "schrodinger_commutative_range" with "commutative_range" dropped
/// (noncommutative-codomain tracial maps), and the planted falsehood
/// "synthetic_v_le_skew". Never asserts nonexistence.
struct SearchReport {
    std::string target;
    std::string dropped_hypothesis;
    int budget = 0;
    int trials_used = 0;
    bool found = false;
    double violation_margin = 0.0; // margin of the violating instance, if found
    std::optional<Instance> witness;
};

SearchReport counterexample_search(const std::string &target, const std::string &drop_hypothesis,
                                   int budget, const InstanceSpec &spec, const Tolerance &tol = {});

/// Re-runs a serialized instance; optional overrides for theorem and mode.
VerifierReport replay(const Instance &instance, std::optional<TheoremId> theorem_override = {},
                      std::optional<VerifyMode> mode_override = {}, const Tolerance &tol = {});

/// Thread cap from UNCERT_THREADS (>= 1), defaulting to the hardware
/// concurrency.
int campaign_thread_count();

} // namespace uncert
