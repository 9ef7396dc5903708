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

#include "graphsym/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "graphsym/errors.h"

namespace graphsym::cli {

double round_report_value(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    double rounded = std::strtod(buffer, nullptr);
    return rounded == 0 ? 0.0 : rounded;
}

std::string basis_string(const BasisLabel &label, int levels) {
    std::string out;
    for (std::size_t i = 0; i < label.digits.size(); i++) {
        if (levels > 10 && i > 0) {
            out += ',';
        }
        out += std::to_string(label.digits[i]);
    }
    return out;
}

BasisLabel parse_basis_string(const std::string &text, int num_qudits) {
    BasisLabel label;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) {
            label.digits.push_back(std::stoi(part));
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw DomainError("invalid basis string '" + text + "'");
            }
            label.digits.push_back(c - '0');
        }
    }
    if (static_cast<int>(label.digits.size()) != num_qudits) {
        throw DomainError("basis string '" + text + "' does not have " + std::to_string(num_qudits) + " digits");
    }
    return label;
}

Json classification_json(const SymmetryClass &c) {
    Json out;
    out["class"] = kind_name(c.kind);
    if (c.kind == SymmetryKind::kAntisymmetricOnPrefix) {
        out["prefix"] = c.prefix;
    }
    out["label"] = to_string(c);
    return out;
}

Json graph_json(const GraphFile &graph) {
    Json out;
    out["num_vertices"] = graph.num_vertices;
    out["directed"] = graph.directed;
    Json edges = Json::array();
    for (auto [u, v] : graph.edges) {
        edges.push_back({u, v});
    }
    out["edges"] = edges;
    return out;
}

Json trace_json(const ConstructionTrace &trace) {
    Json steps = Json::array();
    for (const auto &step : trace.steps) {
        Json s;
        s["gate"] = to_string(step.gate);
        s["qudits"] = step.qudits;
        if (step.gate == GateKind::kPhase) {
            s["phase"] = step.phase;
        } else {
            s["modulus"] = step.modulus;
        }
        steps.push_back(s);
    }
    return steps;
}

Json state_json(const StateVector &state) {
    Json out;
    out["num_qudits"] = state.num_qudits();
    out["levels"] = state.levels();
    Json entries = Json::array();
    for (std::size_t i = 0; i < state.size(); i++) {
        if (std::abs(state[i]) < kReportCutoff) {
            continue;
        }
        Json entry;
        entry["basis"] = basis_string(state.label_of(i), state.levels());
        entry["re"] = round_report_value(state[i].real());
        entry["im"] = round_report_value(state[i].imag());
        entries.push_back(entry);
    }
    out["support_size"] = entries.size();
    out["amplitudes"] = entries;
    return out;
}

Json make_report(
    const std::string &construction, const StateVector &state, const SymmetryClass &classification,
    const std::optional<GraphFile> &graph, const std::optional<ConstructionTrace> &trace,
    const std::vector<std::string> &warnings) {
    Json report;
    report["construction"] = construction;
    if (graph) {
        report["graph"] = graph_json(*graph);
    }
    Json amplitudes = state_json(state);
    for (auto &[key, value] : amplitudes.items()) {
        report[key] = value;
    }
    report["classification"] = classification_json(classification);
    if (trace) {
        report["trace"] = trace_json(*trace);
    }
    if (!warnings.empty()) {
        report["warnings"] = warnings;
    }
    return report;
}

StateVector state_from_report(const Json &report) {
    try {
        const int n = report.at("num_qudits").get<int>();
        const int d = report.at("levels").get<int>();
        StateVector state(n, d);
        for (const auto &entry : report.at("amplitudes")) {
            BasisLabel label = parse_basis_string(entry.at("basis").get<std::string>(), n);
            state.at(label) = Amplitude(entry.at("re").get<double>(), entry.at("im").get<double>());
        }
        return state;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed report: ") + e.what());
    }
}

GraphFile graph_from_report(const Json &report) {
    try {
        const Json &g = report.at("graph");
        GraphFile graph;
        graph.num_vertices = g.at("num_vertices").get<int>();
        graph.directed = g.at("directed").get<bool>();
        for (const auto &e : g.at("edges")) {
            graph.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return graph;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed report graph: ") + e.what());
    }
}

std::string dump(const Json &json) {
    return json.dump(2) + "\n";
}

}  // namespace graphsym::cli
