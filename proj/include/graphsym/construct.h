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

#include <string>
#include <vector>

#include "graphsym/gates.h"
#include "graphsym/graph.h"
#include "graphsym/state_vector.h"

namespace graphsym {

enum class GateKind { kShift, kHadamard, kGr, kPhase };

std::string to_string(GateKind kind);

/// A gate applied to the full N-qudit register. For kGr, qudits = {control,
/// target}; for kPhase, qudits is empty and phase holds the factor.
struct TraceStep {
    GateKind gate;
    std::vector<int> qudits;
    int modulus = 0;
    double phase = 1.0;

    bool operator==(const TraceStep &) const = default;
};

/// Gate sequence that maps |0...0> on the full register to the built state.
struct ConstructionTrace {
    int num_qudits = 0;
    int levels = 0;
    std::vector<TraceStep> steps;

    /// Applies steps in order to |0...0>.
    StateVector replay() const;
};

/// |G> = prod_{(a,b) in E} CZ^(a,b) |+>^N on qubits.
StateVector cz_graph_state(const UndirectedGraph &g);

/// Same state with the CZ gates applied in the given edge order.
StateVector cz_graph_state(const UndirectedGraph &g, const std::vector<std::pair<Vertex, Vertex>> &edge_order);

/// Recursive antisymmetric construction. Starts from (|01> - |10>)/sqrt(2);
/// step m shifts qudits 1..m-1, appends H_m|0>, then applies GR(m, i) to every
/// earlier qudit i. Step m acts modulo m inside the d-level register.
/// Requires n >= 2 and d >= n.
StateVector antisymmetric_state(int n, int d);

/// Direct summation over k in Z_n and sigma in S_{n-1} of
/// (-1)^|sigma| |k - (sigma_0 + 1), ..., k - (sigma_{n-2} + 1), k> / sqrt(n!),
/// all arithmetic mod n. Requires d == n.
StateVector oracle_antisymmetric_state(int n, int d);

/// (1/sqrt(n!)) sum_pi sgn(pi) |pi(0) ... pi(n-1)>. Requires d >= n.
StateVector alternator_state(int n, int d);

struct GrBuildResult {
    StateVector state;
    ConstructionTrace trace;
    std::vector<std::string> warnings;
};

/// Builds the GR state of an oriented graph by adding vertices in index order.
///
/// Vertices 1 and 2: |00> without an edge; with an edge, qudit 1 is prepared
/// as X|0> and qudit 2 as -H X|0> (qubit operators), then the edge's GR is
/// applied according to its origin. Each later vertex m with earlier
/// neighbours shifts exactly those neighbours, is prepared as H|0>, and gets
/// one GR per incident edge in ascending neighbour order: GR(m, j) when m is
/// the origin, GR(j, m) otherwise. Vertices without earlier neighbours stay |0>.
/// Step m works modulo min(m, d).
GrBuildResult gr_graph_state(const OrientedGraph &g, int d);

}  // namespace graphsym
