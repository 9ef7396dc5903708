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

#include "graphsym/construct.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "graphsym/errors.h"

namespace graphsym {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::kShift:
            return "X";
        case GateKind::kHadamard:
            return "H";
        case GateKind::kGr:
            return "GR";
        case GateKind::kPhase:
            return "PHASE";
    }
    return "?";
}

namespace {

StateVector apply_step(StateVector state, const TraceStep &step) {
    switch (step.gate) {
        case GateKind::kShift:
            return apply_shift_d(std::move(state), Qudit(step.qudits.at(0)), step.modulus);
        case GateKind::kHadamard:
            return apply_hadamard_d(std::move(state), Qudit(step.qudits.at(0)), step.modulus);
        case GateKind::kGr:
            return apply_gr(std::move(state), Qudit(step.qudits.at(0)), Qudit(step.qudits.at(1)), step.modulus);
        case GateKind::kPhase:
            return apply_global_phase(std::move(state), step.phase);
    }
    throw DomainError("unknown gate in trace");
}

StateVector zero_state(int num_qudits, int levels) {
    return make_basis_state(num_qudits, levels, BasisLabel{std::vector<int>(num_qudits, 0)});
}

double inverse_sqrt_factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; i++) {
        f *= i;
    }
    return 1.0 / std::sqrt(f);
}

/// H_m|0> on a single d-level qudit.
StateVector uniform_qudit(int levels, int modulus) {
    return apply_hadamard_d(zero_state(1, levels), Qudit(1), modulus);
}

}  // namespace

StateVector ConstructionTrace::replay() const {
    StateVector state = zero_state(num_qudits, levels);
    for (const auto &step : steps) {
        state = apply_step(std::move(state), step);
    }
    return state;
}

StateVector cz_graph_state(const UndirectedGraph &g) {
    return cz_graph_state(g, g.edges());
}

StateVector cz_graph_state(const UndirectedGraph &g, const std::vector<std::pair<Vertex, Vertex>> &edge_order) {
    const int n = g.num_vertices();
    StateVector state(n, 2);
    const double amp = std::pow(2.0, -0.5 * n);
    for (auto &a : state.mutable_amplitudes()) {
        a = amp;
    }
    if (edge_order.size() != g.edges().size()) {
        throw DomainError("edge order must list every edge exactly once");
    }
    std::vector<bool> seen(g.edges().size(), false);
    for (auto [a, b] : edge_order) {
        if (!g.adjacent(a, b)) {
            throw DomainError("edge order names a pair that is not an edge of the graph");
        }
        auto key = std::minmax(a, b);
        auto pos = std::lower_bound(g.edges().begin(), g.edges().end(), std::pair<Vertex, Vertex>(key.first, key.second));
        auto slot = static_cast<std::size_t>(pos - g.edges().begin());
        if (seen[slot]) {
            throw DomainError("edge order must list every edge exactly once");
        }
        seen[slot] = true;
        state = apply_cz(std::move(state), Qudit(a), Qudit(b));
    }
    return state;
}

StateVector antisymmetric_state(int n, int d) {
    constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
    if (n < 2) {
        throw DomainError("antisymmetric state needs n >= 2, got " + std::to_string(n));
    }
    if (d < n) {
        throw DomainError(
            "antisymmetric state on " + std::to_string(n) + " qudits needs d >= n, got d = " + std::to_string(d));
    }
    StateVector state(2, d);
    state.at({{0, 1}}) = kInvSqrt2;
    state.at({{1, 0}}) = -kInvSqrt2;
    for (int m = 3; m <= n; m++) {
        for (int i = 1; i < m; i++) {
            state = apply_shift_d(std::move(state), Qudit(i), m);
        }
        state = tensor(state, uniform_qudit(d, m));
        for (int i = 1; i < m; i++) {
            state = apply_gr(std::move(state), Qudit(m), Qudit(i), m);
        }
    }
    return state;
}

StateVector oracle_antisymmetric_state(int n, int d) {
    if (n < 2) {
        throw DomainError("antisymmetric state needs n >= 2, got " + std::to_string(n));
    }
    if (d != n) {
        throw DomainError("combinatorial form is defined modulo n; needs d == n, got d = " + std::to_string(d));
    }
    StateVector state(n, d);
    const double amp = inverse_sqrt_factorial(n);
    BasisLabel label{std::vector<int>(n)};
    for (const auto &sigma : all_permutations(n - 1)) {
        const int sign = sigma.signature();
        for (int k = 0; k < n; k++) {
            for (int i = 0; i < n - 1; i++) {
                label.digits[i] = ((k - (sigma(i) + 1)) % n + n) % n;
            }
            label.digits[n - 1] = k;
            state.at(label) += sign * amp;
        }
    }
    return state;
}

StateVector alternator_state(int n, int d) {
    if (n < 1) {
        throw DomainError("alternator needs n >= 1");
    }
    if (d < n) {
        throw DomainError("alternator on " + std::to_string(n) + " qudits needs d >= n, got d = " + std::to_string(d));
    }
    StateVector state(n, d);
    const double amp = inverse_sqrt_factorial(n);
    for (const auto &pi : all_permutations(n)) {
        state.at(BasisLabel{pi.images()}) += pi.signature() * amp;
    }
    return state;
}

GrBuildResult gr_graph_state(const OrientedGraph &g, int d) {
    const int n = g.num_vertices();
    if (d < 2) {
        throw DomainError("qudit dimension must be at least 2, got " + std::to_string(d));
    }
    checked_dimension(n, d);

    ConstructionTrace trace{n, d, {}};
    // The register grows one qudit per vertex; the trace records the same
    // gates against the full n-qudit register started in |0...0>.
    auto record = [&](GateKind gate, std::vector<int> qudits, int modulus, double phase = 1.0) {
        trace.steps.push_back({gate, std::move(qudits), modulus, phase});
    };

    StateVector state = zero_state(2, d);
    if (auto edge = g.edge_between(1, 2)) {
        constexpr int kModulus = 2;
        StateVector first = apply_shift_d(zero_state(1, d), Qudit(1), kModulus);
        StateVector second = apply_shift_d(zero_state(1, d), Qudit(1), kModulus);
        second = apply_hadamard_d(std::move(second), Qudit(1), kModulus);
        second = apply_global_phase(std::move(second), -1.0);
        record(GateKind::kShift, {1}, kModulus);
        record(GateKind::kShift, {2}, kModulus);
        record(GateKind::kHadamard, {2}, kModulus);
        record(GateKind::kPhase, {}, 0, -1.0);
        state = tensor(first, second);
        Vertex target = edge->origin == 1 ? 2 : 1;
        state = apply_gr(std::move(state), Qudit(edge->origin), Qudit(target), kModulus);
        record(GateKind::kGr, {edge->origin, target}, kModulus);
    }

    for (Vertex m = 3; m <= n; m++) {
        std::vector<Vertex> earlier;
        for (Vertex j : neighbors(g, m)) {
            if (j < m) {
                earlier.push_back(j);
            }
        }
        if (earlier.empty()) {
            state = tensor(state, zero_state(1, d));
            continue;
        }
        const int modulus = std::min(m, d);
        for (Vertex j : earlier) {
            state = apply_shift_d(std::move(state), Qudit(j), modulus);
            record(GateKind::kShift, {j}, modulus);
        }
        state = tensor(state, uniform_qudit(d, modulus));
        record(GateKind::kHadamard, {m}, modulus);
        for (Vertex j : earlier) {
            DirectedEdge edge = *g.edge_between(j, m);
            Vertex control = edge.origin;
            Vertex target = control == m ? j : m;
            state = apply_gr(std::move(state), Qudit(control), Qudit(target), modulus);
            record(GateKind::kGr, {control, target}, modulus);
        }
    }

    std::vector<std::string> warnings;
    if (g.is_complete() && d < n) {
        warnings.push_back(
            "complete graph on " + std::to_string(n) + " vertices built with only " + std::to_string(d) +
            " levels; the antisymmetric construction needs d >= N");
    }
    return {std::move(state), std::move(trace), std::move(warnings)};
}

}  // namespace graphsym
