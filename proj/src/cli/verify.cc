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

#include "graphsym/verify.h"

#include <cmath>

#include "graphsym/construct.h"
#include "graphsym/errors.h"
#include "graphsym/symmetry.h"

namespace graphsym::cli {

namespace {

Json edges_json(const UndirectedGraph &g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return edges;
}

Json counterexample(const UndirectedGraph &g, const std::string &reason, const std::string &permutation = "") {
    Json c;
    c["num_vertices"] = g.num_vertices();
    c["edges"] = edges_json(g);
    if (!permutation.empty()) {
        c["permutation"] = permutation;
    }
    c["reason"] = reason;
    return c;
}

void check_range(const char *suite, int max_n, int lo, int hi) {
    if (max_n > hi) {
        throw CapacityError(
            std::string(suite) + " suite supports max_n <= " + std::to_string(hi) + ", got " + std::to_string(max_n));
    }
    if (max_n < lo) {
        throw DomainError(
            std::string(suite) + " suite needs max_n >= " + std::to_string(lo) + ", got " + std::to_string(max_n));
    }
}

Json start_summary(const char *suite, int max_n) {
    Json s;
    s["suite"] = suite;
    s["max_n"] = max_n;
    s["passed"] = true;
    s["rows"] = Json::array();
    s["counterexamples"] = Json::array();
    return s;
}

VerifyOutcome finish(Json summary) {
    bool passed = summary["counterexamples"].empty();
    summary["passed"] = passed;
    return {passed, std::move(summary)};
}

/// Transposition whose action must change the CZ state of a graph holding the witness.
Permutation breaking_transposition(int n, const SubstructureWitness &w) {
    if (w.kind == SubstructureKind::kH1) {
        return Permutation::transposition(n, w.u - 1, w.w - 1);
    }
    return Permutation::transposition(n, w.w - 1, w.v - 1);
}

}  // namespace

VerifyOutcome verify_theorem1(int max_n, double tol) {
    check_range("theorem1", max_n, 2, kMaxTheorem1Vertices);
    Json summary = start_summary("theorem1", max_n);
    for (int n = 2; n <= max_n; n++) {
        int graphs = 0;
        int symmetric = 0;
        int witnesses = 0;
        bool edgeless_symmetric = false;
        for (const auto &g : enumerate_undirected(n)) {
            graphs++;
            StateVector state = cz_graph_state(g);
            auto violation = first_symmetry_violation(state, tol);
            if (g.edges().empty()) {
                edgeless_symmetric = !violation.has_value();
                continue;
            }
            bool complete = is_complete(g);
            if (!violation) {
                symmetric++;
            }
            if (complete && violation) {
                summary["counterexamples"].push_back(
                    counterexample(g, "complete graph state is not symmetric", violation->str()));
            }
            if (!complete && !violation) {
                summary["counterexamples"].push_back(counterexample(g, "non-complete graph state is symmetric"));
            }
            auto witness = find_witness(g);
            if (complete != !witness.has_value()) {
                summary["counterexamples"].push_back(counterexample(g, "witness search disagrees with completeness"));
                continue;
            }
            if (!witness) {
                continue;
            }
            witnesses++;
            if (!witness_is_valid(g, *witness)) {
                summary["counterexamples"].push_back(counterexample(g, "invalid witness " + witness->str()));
                continue;
            }
            auto swap = breaking_transposition(n, *witness);
            if (equal_exact(apply_permutation(state, swap), state, tol)) {
                summary["counterexamples"].push_back(
                    counterexample(g, "witness " + witness->str() + " transposition leaves the state unchanged",
                                   swap.str()));
            }
        }
        if (symmetric != 1) {
            Json c;
            c["num_vertices"] = n;
            c["reason"] = std::to_string(symmetric) + " symmetric nontrivial graphs, expected exactly 1";
            summary["counterexamples"].push_back(c);
        }
        Json row;
        row["n"] = n;
        row["graphs"] = graphs;
        row["nontrivial"] = graphs - 1;
        row["symmetric_nontrivial"] = symmetric;
        row["witnesses_checked"] = witnesses;
        row["edgeless_symmetric"] = edgeless_symmetric;
        summary["rows"].push_back(row);
    }
    return finish(std::move(summary));
}

VerifyOutcome verify_impossibility(int max_n, double tol) {
    check_range("impossibility", max_n, 2, kMaxImpossibilityVertices);
    Json summary = start_summary("impossibility", max_n);
    for (int n = 2; n <= max_n; n++) {
        int graphs = 0;
        int antisymmetric = 0;
        const double expected = std::pow(2.0, -0.5 * n);
        double worst_zero_deviation = 0;
        for (const auto &g : enumerate_undirected(n)) {
            graphs++;
            StateVector state = cz_graph_state(g);
            if (is_antisymmetric(state, tol) || classify(state, tol).kind == SymmetryKind::kFullyAntisymmetric) {
                antisymmetric++;
                summary["counterexamples"].push_back(counterexample(g, "CZ state is antisymmetric"));
            }
            double deviation = std::abs(state[0] - Amplitude(expected, 0));
            worst_zero_deviation = std::max(worst_zero_deviation, deviation);
            if (deviation > 1e-12) {
                summary["counterexamples"].push_back(counterexample(g, "|0...0> amplitude differs from +2^{-N/2}"));
            }
        }
        Json row;
        row["n"] = n;
        row["graphs"] = graphs;
        row["antisymmetric"] = antisymmetric;
        row["zero_amplitude"] = round_report_value(expected);
        row["max_zero_amplitude_deviation"] = worst_zero_deviation;
        summary["rows"].push_back(row);
    }
    return finish(std::move(summary));
}

VerifyOutcome verify_antisymmetry(int max_n, double tol) {
    check_range("antisymmetry", max_n, 3, kMaxAntisymmetryQudits);
    Json summary = start_summary("antisymmetry", max_n);
    for (int n = 3; n <= max_n; n++) {
        StateVector state = antisymmetric_state(n, n);
        SymmetryClass got = classify(state, tol);
        double f = fidelity(state, alternator_state(n, n));
        SymmetryClass want =
            n % 2 == 1 ? SymmetryClass::fully_antisymmetric() : SymmetryClass::antisymmetric_on_prefix(n - 1);
        bool fidelity_ok = n % 2 == 1 ? f >= 1 - tol : f < 1 - 1e-6;

        Json row;
        row["n"] = n;
        row["classification"] = to_string(got);
        row["expected"] = to_string(want);
        row["alternator_fidelity"] = round_report_value(f);
        summary["rows"].push_back(row);

        if (got != want || !fidelity_ok) {
            Json c;
            c["n"] = n;
            c["classification"] = to_string(got);
            c["expected"] = to_string(want);
            c["alternator_fidelity"] = round_report_value(f);
            if (auto p = first_antisymmetry_violation(state, tol)) {
                c["permutation"] = p->str();
            }
            summary["counterexamples"].push_back(c);
        }
    }
    return finish(std::move(summary));
}

VerifyOutcome run_suite(const std::string &suite, int max_n, double tol) {
    if (suite == "theorem1") {
        return verify_theorem1(max_n, tol);
    }
    if (suite == "impossibility") {
        return verify_impossibility(max_n, tol);
    }
    if (suite == "antisymmetry") {
        return verify_antisymmetry(max_n, tol);
    }
    if (suite == "all") {
        Json summary;
        summary["suite"] = "all";
        summary["max_n"] = max_n;
        bool passed = true;
        Json parts = Json::array();
        for (const char *name : {"theorem1", "impossibility", "antisymmetry"}) {
            auto part = run_suite(name, max_n, tol);
            passed = passed && part.passed;
            parts.push_back(part.summary);
        }
        summary["passed"] = passed;
        summary["suites"] = parts;
        return {passed, std::move(summary)};
    }
    throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace graphsym::cli
