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

#include "graphsym/gates.h"
#include "graphsym/state_vector.h"

namespace graphsym {

enum class SymmetryKind { kFullySymmetric, kFullyAntisymmetric, kAntisymmetricOnPrefix, kNoSymmetry };

struct SymmetryClass {
    SymmetryKind kind = SymmetryKind::kNoSymmetry;
    /// Length of the antisymmetric prefix; set only for kAntisymmetricOnPrefix.
    int prefix = 0;

    bool operator==(const SymmetryClass &) const = default;

    static SymmetryClass fully_symmetric() {
        return {SymmetryKind::kFullySymmetric, 0};
    }
    static SymmetryClass fully_antisymmetric() {
        return {SymmetryKind::kFullyAntisymmetric, 0};
    }
    static SymmetryClass antisymmetric_on_prefix(int k) {
        return {SymmetryKind::kAntisymmetricOnPrefix, k};
    }
    static SymmetryClass none() {
        return {SymmetryKind::kNoSymmetry, 0};
    }
};

/// "FullySymmetric", "FullyAntisymmetric", "AntisymmetricOnPrefix(3)", "NoSymmetry".
std::string to_string(const SymmetryClass &c);
std::string kind_name(SymmetryKind kind);

/// P_t |psi> == |psi> for every adjacent transposition t.
bool is_symmetric(const StateVector &state, double tol = kDefaultTolerance);

/// P_t |psi> == -|psi> for every adjacent transposition t.
bool is_antisymmetric(const StateVector &state, double tol = kDefaultTolerance);

/// First adjacent transposition violating the bosonic condition, if any.
std::optional<Permutation> first_symmetry_violation(const StateVector &state, double tol = kDefaultTolerance);
/// First adjacent transposition violating the fermionic condition, if any.
std::optional<Permutation> first_antisymmetry_violation(const StateVector &state, double tol = kDefaultTolerance);

/// Fast path over adjacent transpositions. Prefix antisymmetry is reported for
/// the longest run 1..k (k >= 2) of qudits whose adjacent swaps all negate the
/// state.
SymmetryClass classify(const StateVector &state, double tol = kDefaultTolerance);

inline constexpr long kMaxFullGroupOrder = 1'000'000;

/// Same classification, testing every permutation of S_n (and of each S_k
/// acting on the first k qudits for the prefix search) with its signature.
/// Throws CapacityError if n! exceeds kMaxFullGroupOrder.
SymmetryClass check_full_group(const StateVector &state, double tol = kDefaultTolerance);

}  // namespace graphsym
