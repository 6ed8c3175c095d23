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

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uncert/serialize.hpp"
#include "uncert/version.hpp"

namespace {

using namespace uncert;

// Exit codes: 0 all pass, 1 margin failure, 2 configuration error,
// 3 internal numerical failure.
enum ExitCode { kOk = 0, kMarginFailure = 1, kConfigError = 2, kNumericalFailure = 3 };

std::vector<int> parse_blocks(const std::string &s) {
    std::vector<int> dims;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        dims.push_back(std::stoi(item));
    return dims;
}

std::vector<double> parse_grid(const std::string &s) {
    std::vector<double> grid;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        grid.push_back(std::stod(item));
    return grid;
}

void print_campaign_summary(const CampaignReport &report) {
    std::printf("%-36s %8s %8s %8s %8s %14s\n", "theorem", "trials", "passes", "fails", "unmet",
                "min margin");
    for (const auto &s : report.results)
        std::printf("%-36s %8d %8d %8d %8d %14.6e\n", std::string(theorem_name(s.theorem)).c_str(),
                    s.trials, s.passes, s.failures, s.hypothesis_unmet, s.min_margin);
    std::printf("wall time: %.2f s  (%s)\n", report.wall_seconds, report.version.c_str());
}

int cmd_verify(const std::string &config_path, const std::vector<std::string> &theorems,
               const std::string &blocks, const std::string &map_kind, int k, int trials,
               std::uint64_t seed, double tol_rel, double tol_abs, const std::string &mode,
               const std::string &alpha_grid, const std::string &out) {
    CampaignConfig config;
    if (!config_path.empty()) {
        config = campaign_config_from_json(load_json(config_path));
    } else {
        if (theorems.empty())
            throw ConfigError("pass --theorem (repeatable, or 'all') or --config");
        for (const auto &t : theorems) {
            if (t == "all") {
                config.theorems = all_theorems();
                break;
            }
            config.theorems.push_back(theorem_from_string(t));
        }
        config.spec.block_dims = parse_blocks(blocks);
        config.spec.map_kind = map_kind_from_string(map_kind);
        config.spec.map_rows = k;
        config.spec.alpha_grid =
            alpha_grid.empty() ? InstanceSpec::default_alpha_grid() : parse_grid(alpha_grid);
        config.spec.trials = trials;
        config.spec.seed = seed;
        config.tolerance.rel = tol_rel;
        config.tolerance.abs = tol_abs;
        config.mode = mode_from_string(mode);
        config.output_path = out;
    }

    const CampaignReport report = run_campaign(config);
    print_campaign_summary(report);
    return report.total_failures() == 0 ? kOk : kMarginFailure;
}

int cmd_search(const std::string &target, const std::string &drop, int budget, std::uint64_t seed,
               const std::string &blocks, const std::string &map_kind, int k, double tol_rel,
               double tol_abs, const std::string &out) {
    InstanceSpec spec;
    spec.block_dims = parse_blocks(blocks);
    spec.map_kind = map_kind_from_string(map_kind);
    spec.map_rows = k;
    spec.alpha_grid = InstanceSpec::default_alpha_grid();
    spec.trials = std::max(budget, 1);
    spec.seed = seed;
    Tolerance tol{tol_rel, tol_abs};

    const SearchReport report = counterexample_search(target, drop, budget, spec, tol);
    if (report.found)
        std::printf("violation found after %d trials: margin %.6e (seed %llu)\n", report.trials_used,
                    report.violation_margin,
                    static_cast<unsigned long long>(report.witness->seed));
    else
        std::printf("none found within budget %d\n", report.budget);
    if (!out.empty())
        save_json(search_report_to_json(report), out);
    return kOk;
}

int cmd_replay(const std::string &instance_path, const std::string &theorem,
               const std::string &mode, double tol_rel, double tol_abs,
               const std::string &out) {
    const Instance inst = instance_from_json(load_json(instance_path));
    std::optional<TheoremId> theorem_override;
    if (!theorem.empty())
        theorem_override = theorem_from_string(theorem);
    std::optional<VerifyMode> mode_override;
    if (!mode.empty())
        mode_override = mode_from_string(mode);
    const VerifierReport report = replay(inst, theorem_override, mode_override,
                                         Tolerance{tol_rel, tol_abs});
    const Json j = report_to_json(report);
    if (!out.empty())
        save_json(j, out);
    std::cout << j.dump(2) << '\n';
    return report.pass || !report.hypotheses_met() ? kOk : kMarginFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"uncert: numerical verification of quantum information inequalities for "
                 "tracial positive linear maps"};
    app.set_version_flag("--version", std::string(uncert::kVersionString));
    app.require_subcommand(1);

    // verify
    auto *verify = app.add_subcommand("verify", "run a verification campaign");
    std::string config_path, blocks = "2", map_kind = "usual-trace", mode = "relaxed";
    std::string alpha_grid, out;
    std::vector<std::string> theorems;
    int k = 2, trials = 100;
    std::uint64_t seed = 7;
    double tol_rel = 1e-8, tol_abs = 1e-10;
    verify->add_option("--config", config_path, "campaign config JSON (overrides other flags)");
    verify->add_option("--theorem", theorems, "theorem id (repeatable; 'all' for every verifier)");
    verify->add_option("--blocks", blocks, "comma-separated block dims, e.g. 2,3");
    verify->add_option("--map", map_kind,
                       "usual-trace | scaled-block-trace | center-expectation | composite");
    verify->add_option("--k", k, "rows/points for scaled-block-trace and composite");
    verify->add_option("--trials", trials, "trials per theorem");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--tol", tol_rel, "relative tolerance");
    verify->add_option("--tol-abs", tol_abs, "absolute tolerance");
    verify->add_option("--mode", mode, "strict | relaxed (uncertainty_main staging)");
    verify->add_option("--alpha-grid", alpha_grid, "comma-separated alpha values in [0,1]");
    verify->add_option("--out", out, "report JSON path (CSV and argmin instances alongside)");

    // search
    auto *search = app.add_subcommand("search", "randomized counterexample search");
    std::string target, drop = "none", s_blocks = "2", s_map = "usual-trace", s_out;
    int budget = 1000, s_k = 2;
    std::uint64_t s_seed = 7;
    double s_tol_rel = 1e-8, s_tol_abs = 1e-10;
    search->add_option("--target", target, "theorem id or synthetic_v_le_skew")->required();
    search->add_option("--drop", drop, "hypothesis to drop (none | commutative_range)");
    search->add_option("--budget", budget, "max trials");
    search->add_option("--seed", s_seed, "search seed");
    search->add_option("--blocks", s_blocks, "comma-separated block dims");
    search->add_option("--map", s_map, "map kind for generated instances");
    search->add_option("--k", s_k, "rows/points for scaled-block-trace and composite");
    search->add_option("--tol", s_tol_rel, "relative tolerance");
    search->add_option("--tol-abs", s_tol_abs, "absolute tolerance");
    search->add_option("--out", s_out, "search report JSON path");

    // replay
    auto *rep = app.add_subcommand("replay", "re-verify a serialized instance");
    std::string instance_path, r_theorem, r_mode, r_out;
    double r_tol_rel = 1e-8, r_tol_abs = 1e-10;
    rep->add_option("--instance", instance_path, "instance JSON path")->required();
    rep->add_option("--theorem", r_theorem, "theorem override");
    rep->add_option("--mode", r_mode, "mode override (strict | relaxed)");
    rep->add_option("--tol", r_tol_rel, "relative tolerance");
    rep->add_option("--tol-abs", r_tol_abs, "absolute tolerance");
    rep->add_option("--out", r_out, "write the verifier report JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(config_path, theorems, blocks, map_kind, k, trials, seed, tol_rel,
                              tol_abs, mode, alpha_grid, out);
        if (search->parsed())
            return cmd_search(target, drop, budget, s_seed, s_blocks, s_map, s_k, s_tol_rel,
                              s_tol_abs, s_out);
        if (rep->parsed())
            return cmd_replay(instance_path, r_theorem, r_mode, r_tol_rel, r_tol_abs, r_out);
    } catch (const uncert::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const uncert::SchemaError &e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kConfigError;
    } catch (const uncert::NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kConfigError;
}
