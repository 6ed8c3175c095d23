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

#include "uncert/serialize.hpp"

#include <fstream>
#include <sstream>

namespace uncert {

namespace {

[[noreturn]] void schema_fail(const std::string &what) {
    throw SchemaError("schema mismatch: " + what);
}

const Json &field(const Json &j, const char *name) {
    if (!j.contains(name))
        schema_fail(std::string("missing field '") + name + "'");
    return j.at(name);
}

} // namespace

Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (int c = 0; c < m.dim(); ++c) {
            re_row.push_back(m.at(r, c).real());
            im_row.push_back(m.at(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json &j) {
    try {
        const int dim = field(j, "dim").get<int>();
        if (dim <= 0)
            schema_fail("matrix dim must be positive");
        const Json &re = field(j, "re");
        const Json &im = field(j, "im");
        if (static_cast<int>(re.size()) != dim || static_cast<int>(im.size()) != dim)
            schema_fail("matrix row count does not match dim");
        ComplexMatrix m(dim);
        for (int r = 0; r < dim; ++r) {
            if (static_cast<int>(re[r].size()) != dim || static_cast<int>(im[r].size()) != dim)
                schema_fail("matrix column count does not match dim");
            for (int c = 0; c < dim; ++c)
                m.at(r, c) = cplx(re[r][c].get<double>(), im[r][c].get<double>());
        }
        if (!m.all_finite())
            schema_fail("matrix has non-finite entries");
        return m;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json element_to_json(const AlgebraElement &x) {
    Json blocks = Json::array();
    for (int i = 0; i < x.num_blocks(); ++i)
        blocks.push_back(matrix_to_json(x.block(i)));
    return Json{{"blocks", std::move(blocks)}};
}

AlgebraElement element_from_json(const Json &j) {
    try {
        const Json &blocks = field(j, "blocks");
        if (blocks.empty())
            schema_fail("element needs at least one block");
        std::vector<ComplexMatrix> mats;
        std::vector<int> dims;
        for (const Json &b : blocks) {
            mats.push_back(matrix_from_json(b));
            dims.push_back(mats.back().dim());
        }
        return AlgebraElement(BlockAlgebra(std::move(dims)), std::move(mats));
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json map_to_json(const TracialMap &map) {
    Json j;
    j["kind"] = std::string(map_kind_name(map.kind()));
    j["domain_blocks"] = map.domain().block_dims;
    if (map.kind() == MapKind::ScaledBlockTrace || map.kind() == MapKind::Composite)
        j["coeffs"] = map.coeffs();
    if (map.kind() == MapKind::Composite) {
        j["codomain_blocks"] = map.codomain().block_dims;
        Json targets = Json::array();
        for (const auto &q : map.outer()->targets) {
            if (q.num_blocks() == 1)
                targets.push_back(matrix_to_json(q.block(0)));
            else
                targets.push_back(element_to_json(q));
        }
        j["targets"] = std::move(targets);
    }
    if (!map.conjugation().empty()) {
        Json u = Json::array();
        for (const auto &ui : map.conjugation())
            u.push_back(matrix_to_json(ui));
        j["unitary"] = std::move(u);
    }
    return j;
}

TracialMap map_from_json(const Json &j) {
    try {
        const MapKind kind = map_kind_from_string(field(j, "kind").get<std::string>());
        BlockAlgebra domain(field(j, "domain_blocks").get<std::vector<int>>());

        TracialMap map = [&]() -> TracialMap {
            switch (kind) {
            case MapKind::UsualTrace:
                return TracialMap::usual_trace(domain);
            case MapKind::CenterExpectation:
                return TracialMap::center_expectation(domain);
            case MapKind::ScaledBlockTrace:
                return TracialMap::scaled_block_trace(
                    domain, field(j, "coeffs").get<std::vector<std::vector<double>>>());
            case MapKind::Composite: {
                auto coeffs = field(j, "coeffs").get<std::vector<std::vector<double>>>();
                BlockAlgebra codomain(field(j, "codomain_blocks").get<std::vector<int>>());
                std::vector<AlgebraElement> targets;
                for (const Json &t : field(j, "targets")) {
                    if (t.contains("blocks"))
                        targets.push_back(element_from_json(t));
                    else
                        targets.push_back(AlgebraElement::from_matrix(matrix_from_json(t)));
                    if (!(targets.back().algebra() == codomain))
                        schema_fail("composite target does not match codomain_blocks");
                }
                return TracialMap::composite(domain, std::move(coeffs),
                                             PositiveAssignment(codomain, std::move(targets)));
            }
            }
            schema_fail("unknown map kind");
        }();

        if (j.contains("unitary")) {
            std::vector<ComplexMatrix> u;
            for (const Json &ui : j.at("unitary"))
                u.push_back(matrix_from_json(ui));
            map = map.conjugate(u);
        }
        return map;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json tolerance_to_json(const Tolerance &tol) { return Json{{"rel", tol.rel}, {"abs", tol.abs}}; }

Tolerance tolerance_from_json(const Json &j) {
    try {
        Tolerance tol;
        tol.rel = field(j, "rel").get<double>();
        tol.abs = field(j, "abs").get<double>();
        tol.validate();
        return tol;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

namespace {

Json side_to_json(const std::optional<AlgebraElement> &side, bool scalar) {
    if (!side.has_value())
        return nullptr;
    if (scalar && side->is_scalar())
        return side->scalar_value().real();
    return element_to_json(*side);
}

std::optional<AlgebraElement> side_from_json(const Json &j) {
    if (j.is_null())
        return std::nullopt;
    if (j.is_number())
        return AlgebraElement::scalar(cplx(j.get<double>(), 0.0));
    return element_from_json(j);
}

} // namespace

Json report_to_json(const VerifierReport &r) {
    Json hyps = Json::array();
    for (const auto &h : r.hypotheses)
        hyps.push_back(Json{{"name", h.name},
                            {"status", std::string(hypothesis_status_name(h.status))},
                            {"detail", h.detail}});
    Json metadata = Json::object();
    for (const auto &[k, v] : r.metadata)
        metadata[k] = v;
    return Json{{"schema_version", kSchemaVersion},
                {"theorem", std::string(theorem_name(r.theorem))},
                {"mode", std::string(mode_name(r.mode))},
                {"hypotheses", std::move(hyps)},
                {"lhs", side_to_json(r.lhs, r.sides_scalar)},
                {"rhs", side_to_json(r.rhs, r.sides_scalar)},
                {"margin", r.margin},
                {"threshold", r.threshold},
                {"pass", r.pass},
                {"tolerance", tolerance_to_json(r.tolerance_used)},
                {"metadata", std::move(metadata)}};
}

VerifierReport report_from_json(const Json &j) {
    try {
        if (field(j, "schema_version").get<int>() != kSchemaVersion)
            schema_fail("unsupported report schema version");
        VerifierReport r;
        r.theorem = theorem_from_string(field(j, "theorem").get<std::string>());
        r.mode = mode_from_string(field(j, "mode").get<std::string>());
        for (const Json &h : field(j, "hypotheses")) {
            HypothesisCheck c;
            c.name = field(h, "name").get<std::string>();
            const std::string status = field(h, "status").get<std::string>();
            if (status == "met")
                c.status = HypothesisStatus::Met;
            else if (status == "unmet")
                c.status = HypothesisStatus::Unmet;
            else if (status == "regularized")
                c.status = HypothesisStatus::Regularized;
            else
                schema_fail("unknown hypothesis status " + status);
            c.detail = field(h, "detail").get<std::string>();
            r.hypotheses.push_back(std::move(c));
        }
        r.lhs = side_from_json(field(j, "lhs"));
        r.rhs = side_from_json(field(j, "rhs"));
        r.sides_scalar = field(j, "lhs").is_number() || field(j, "rhs").is_number();
        r.margin = field(j, "margin").get<double>();
        r.threshold = field(j, "threshold").get<double>();
        r.pass = field(j, "pass").get<bool>();
        r.tolerance_used = tolerance_from_json(field(j, "tolerance"));
        for (const auto &[k, v] : field(j, "metadata").items())
            r.metadata.emplace_back(k, v.get<double>());
        return r;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json instance_to_json(const Instance &inst) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["theorem"] = std::string(theorem_name(inst.theorem));
    j["mode"] = std::string(mode_name(inst.mode));
    j["map"] = inst.map.has_value() ? map_to_json(*inst.map) : Json(nullptr);
    j["rho"] = element_to_json(inst.rho);
    j["a"] = element_to_json(inst.a);
    j["b"] = inst.b.has_value() ? element_to_json(*inst.b) : Json(nullptr);
    j["alpha"] = inst.alpha.has_value() ? Json(*inst.alpha) : Json(nullptr);
    j["beta"] = inst.beta.has_value() ? Json(*inst.beta) : Json(nullptr);
    j["m"] = inst.window_m.has_value() ? Json(*inst.window_m) : Json(nullptr);
    j["M"] = inst.window_M.has_value() ? Json(*inst.window_M) : Json(nullptr);
    j["seed"] = inst.seed;
    return j;
}

Instance instance_from_json(const Json &j) {
    try {
        if (field(j, "schema_version").get<int>() != kSchemaVersion)
            schema_fail("unsupported instance schema version");
        Instance inst;
        inst.theorem = theorem_from_string(field(j, "theorem").get<std::string>());
        inst.mode = mode_from_string(field(j, "mode").get<std::string>());
        if (!field(j, "map").is_null())
            inst.map = map_from_json(j.at("map"));
        inst.rho = element_from_json(field(j, "rho"));
        inst.a = element_from_json(field(j, "a"));
        if (!field(j, "b").is_null())
            inst.b = element_from_json(j.at("b"));
        if (!field(j, "alpha").is_null())
            inst.alpha = j.at("alpha").get<double>();
        if (!field(j, "beta").is_null())
            inst.beta = j.at("beta").get<double>();
        if (!field(j, "m").is_null())
            inst.window_m = j.at("m").get<double>();
        if (!field(j, "M").is_null())
            inst.window_M = j.at("M").get<double>();
        inst.seed = field(j, "seed").get<std::uint64_t>();
        return inst;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json instance_spec_to_json(const InstanceSpec &spec) {
    return Json{{"block_dims", spec.block_dims},
                {"map_kind", std::string(map_kind_name(spec.map_kind))},
                {"k", spec.map_rows},
                {"alpha_grid", spec.alpha_grid},
                {"trials", spec.trials},
                {"seed", spec.seed}};
}

InstanceSpec instance_spec_from_json(const Json &j) {
    try {
        InstanceSpec spec;
        spec.block_dims = field(j, "block_dims").get<std::vector<int>>();
        spec.map_kind = map_kind_from_string(field(j, "map_kind").get<std::string>());
        if (j.contains("k"))
            spec.map_rows = j.at("k").get<int>();
        if (j.contains("alpha_grid"))
            spec.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
        if (spec.alpha_grid.empty())
            spec.alpha_grid = InstanceSpec::default_alpha_grid();
        spec.trials = field(j, "trials").get<int>();
        spec.seed = field(j, "seed").get<std::uint64_t>();
        return spec;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json campaign_config_to_json(const CampaignConfig &config) {
    Json theorems = Json::array();
    for (TheoremId id : config.theorems)
        theorems.push_back(std::string(theorem_name(id)));
    Json j;
    j["theorems"] = std::move(theorems);
    j["spec"] = instance_spec_to_json(config.spec);
    j["tolerance"] = tolerance_to_json(config.tolerance);
    j["mode"] = std::string(mode_name(config.mode));
    j["out"] = config.output_path;
    j["write_argmin"] = config.write_argmin_instances;
    return j;
}

CampaignConfig campaign_config_from_json(const Json &j) {
    try {
        CampaignConfig config;
        for (const Json &t : field(j, "theorems"))
            config.theorems.push_back(theorem_from_string(t.get<std::string>()));
        config.spec = instance_spec_from_json(field(j, "spec"));
        if (j.contains("tolerance"))
            config.tolerance = tolerance_from_json(j.at("tolerance"));
        if (j.contains("mode"))
            config.mode = mode_from_string(j.at("mode").get<std::string>());
        if (j.contains("out"))
            config.output_path = j.at("out").get<std::string>();
        if (j.contains("write_argmin"))
            config.write_argmin_instances = j.at("write_argmin").get<bool>();
        return config;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json campaign_report_to_json(const CampaignReport &report) {
    Json results = Json::array();
    for (const auto &s : report.results)
        results.push_back(Json{{"theorem", std::string(theorem_name(s.theorem))},
                               {"trials", s.trials},
                               {"passes", s.passes},
                               {"failures", s.failures},
                               {"hypothesis_unmet", s.hypothesis_unmet},
                               {"min_margin", s.min_margin},
                               {"argmin_seed", s.argmin_seed},
                               {"argmin_trial", s.argmin_trial}});
    return Json{{"schema_version", kSchemaVersion},
                {"version", report.version},
                {"wall_seconds", report.wall_seconds},
                {"config", campaign_config_to_json(report.config)},
                {"results", std::move(results)}};
}

CampaignReport campaign_report_from_json(const Json &j) {
    try {
        if (field(j, "schema_version").get<int>() != kSchemaVersion)
            schema_fail("unsupported campaign report schema version");
        CampaignReport report;
        report.version = field(j, "version").get<std::string>();
        report.wall_seconds = field(j, "wall_seconds").get<double>();
        report.config = campaign_config_from_json(field(j, "config"));
        for (const Json &s : field(j, "results")) {
            TheoremStats stats;
            stats.theorem = theorem_from_string(field(s, "theorem").get<std::string>());
            stats.trials = field(s, "trials").get<int>();
            stats.passes = field(s, "passes").get<int>();
            stats.failures = field(s, "failures").get<int>();
            stats.hypothesis_unmet = field(s, "hypothesis_unmet").get<int>();
            stats.min_margin = field(s, "min_margin").get<double>();
            stats.argmin_seed = field(s, "argmin_seed").get<std::uint64_t>();
            stats.argmin_trial = field(s, "argmin_trial").get<int>();
            report.results.push_back(stats);
        }
        return report;
    } catch (const Json::exception &e) {
        schema_fail(e.what());
    }
}

Json search_report_to_json(const SearchReport &report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["target"] = report.target;
    j["dropped_hypothesis"] = report.dropped_hypothesis;
    j["budget"] = report.budget;
    j["trials_used"] = report.trials_used;
    j["found"] = report.found;
    j["violation_margin"] = report.violation_margin;
    j["witness"] = report.witness.has_value() ? instance_to_json(*report.witness) : Json(nullptr);
    return j;
}

std::string campaign_report_to_csv(const CampaignReport &report) {
    std::ostringstream os;
    os << "theorem,trials,passes,failures,hypothesis_unmet,min_margin,argmin_seed\n";
    os.precision(17);
    for (const auto &s : report.results)
        os << theorem_name(s.theorem) << ',' << s.trials << ',' << s.passes << ',' << s.failures
           << ',' << s.hypothesis_unmet << ',' << s.min_margin << ',' << s.argmin_seed << '\n';
    return os.str();
}

Json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::exception &e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json(const Json &j, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

} // namespace uncert
