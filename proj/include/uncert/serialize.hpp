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
 * JSON encodings for every on-disk format. Field order is fixed
 * (ordered_json) and schemas carry a version so reports diff cleanly.
 *
 * Matrix: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
 * Element: {"blocks": [matrix...]}.
 * Map: {"kind", "domain_blocks", "coeffs", "targets", "codomain_blocks",
 *       "unitary"} with the tail fields present only where meaningful.
 */

#pragma once

#include <json.hpp>

#include "uncert/campaign.hpp"

namespace uncert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Json element_to_json(const AlgebraElement &x);
AlgebraElement element_from_json(const Json &j);

Json map_to_json(const TracialMap &map);
TracialMap map_from_json(const Json &j);

Json tolerance_to_json(const Tolerance &tol);
Tolerance tolerance_from_json(const Json &j);

Json report_to_json(const VerifierReport &r);
VerifierReport report_from_json(const Json &j);

Json instance_to_json(const Instance &inst);
Instance instance_from_json(const Json &j);

Json instance_spec_to_json(const InstanceSpec &spec);
InstanceSpec instance_spec_from_json(const Json &j);

Json campaign_config_to_json(const CampaignConfig &config);
CampaignConfig campaign_config_from_json(const Json &j);

Json campaign_report_to_json(const CampaignReport &report);
CampaignReport campaign_report_from_json(const Json &j);

Json search_report_to_json(const SearchReport &report);

std::string campaign_report_to_csv(const CampaignReport &report);

/// File helpers; throw SchemaError on parse problems and Error on I/O.
Json load_json(const std::string &path);
void save_json(const Json &j, const std::string &path);

} // namespace uncert
