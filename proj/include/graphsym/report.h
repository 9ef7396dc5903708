// Copyright 2026 The graphsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphsym/construct.h"
#include "graphsym/graph_io.h"
#include "graphsym/state_vector.h"
#include "graphsym/symmetry.h"
#include "json.hpp"

namespace graphsym::cli {

using Json = nlohmann::ordered_json;

/// Amplitudes with magnitude below this are left out of reports.
inline constexpr double kReportCutoff = 1e-12;

/// Rounds to 12 significant digits; -0 becomes 0.
double round_report_value(double x);

/// Digit string of a basis label: "0121" for d <= 10, "0,11,3" otherwise.
std::string basis_string(const BasisLabel &label, int levels);
BasisLabel parse_basis_string(const std::string &text, int num_qudits);

Json classification_json(const SymmetryClass &c);
Json graph_json(const GraphFile &graph);
Json trace_json(const ConstructionTrace &trace);

/// num_qudits, levels, support_size and the ascending-index amplitude list.
Json state_json(const StateVector &state);

/// Full report: construction kind, metadata, amplitudes and classification.
/// graph and trace are included when present.
Json make_report(
    const std::string &construction, const StateVector &state, const SymmetryClass &classification,
    const std::optional<GraphFile> &graph = std::nullopt, const std::optional<ConstructionTrace> &trace = std::nullopt,
    const std::vector<std::string> &warnings = {});

/// Rebuilds the state from a report's amplitude entries.
StateVector state_from_report(const Json &report);

/// Graph echoed in a report.
GraphFile graph_from_report(const Json &report);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json &json);

}  // namespace graphsym::cli
