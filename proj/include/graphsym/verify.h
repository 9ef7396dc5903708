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

#include "graphsym/report.h"

namespace graphsym::cli {

inline constexpr int kMaxTheorem1Vertices = 5;
inline constexpr int kMaxImpossibilityVertices = 5;
inline constexpr int kMaxAntisymmetryQudits = 6;

struct VerifyOutcome {
    bool passed = true;
    /// {"suite", "passed", per-size "rows", "counterexamples"}.
    Json summary;
};

/// For every labeled graph on 2..max_n vertices: among nontrivial graphs the
/// CZ state is FullySymmetric iff the graph is complete, exactly one per size;
/// every non-complete graph has a valid witness whose transposition (end and
/// middle vertex for h1, middle and far vertex for h2) changes the state.
/// The edgeless graph is reported separately.
VerifyOutcome verify_theorem1(int max_n, double tol);

/// For every graph on 2..max_n vertices: the CZ state is not antisymmetric and
/// its |0...0> amplitude is +2^{-N/2} within 1e-12.
VerifyOutcome verify_impossibility(int max_n, double tol);

/// For n = 3..max_n: antisymmetric_state(n, n) classifies FullyAntisymmetric
/// with unit alternator fidelity for odd n, and AntisymmetricOnPrefix(n - 1)
/// with fidelity below 1 - 1e-6 for even n.
VerifyOutcome verify_antisymmetry(int max_n, double tol);

/// suite is "theorem1", "impossibility", "antisymmetry" or "all".
VerifyOutcome run_suite(const std::string &suite, int max_n, double tol);

}  // namespace graphsym::cli
