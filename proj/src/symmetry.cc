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

#include "graphsym/symmetry.h"

#include "graphsym/errors.h"

namespace graphsym {

std::string kind_name(SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::kFullySymmetric:
            return "FullySymmetric";
        case SymmetryKind::kFullyAntisymmetric:
            return "FullyAntisymmetric";
        case SymmetryKind::kAntisymmetricOnPrefix:
            return "AntisymmetricOnPrefix";
        case SymmetryKind::kNoSymmetry:
            return "NoSymmetry";
    }
    return "?";
}

std::string to_string(const SymmetryClass &c) {
    if (c.kind == SymmetryKind::kAntisymmetricOnPrefix) {
        return kind_name(c.kind) + "(" + std::to_string(c.prefix) + ")";
    }
    return kind_name(c.kind);
}

namespace {

/// P_sigma |psi> == sign |psi> within tol.
bool satisfies(const StateVector &state, const Permutation &sigma, int sign, double tol) {
    StateVector moved = apply_permutation(state, sigma);
    for (std::size_t i = 0; i < state.size(); i++) {
        if (std::abs(moved[i] - static_cast<double>(sign) * state[i]) > tol) {
            return false;
        }
    }
    return true;
}

std::optional<Permutation> first_adjacent_violation(const StateVector &state, int sign, double tol) {
    const int n = state.num_qudits();
    for (int i = 0; i + 1 < n; i++) {
        auto t = Permutation::transposition(n, i, i + 1);
        if (!satisfies(state, t, sign, tol)) {
            return t;
        }
    }
    return std::nullopt;
}

/// sigma on the first k positions, identity on the rest.
Permutation extend(const Permutation &sigma, int n) {
    std::vector<int> images = sigma.images();
    for (int i = sigma.size(); i < n; i++) {
        images.push_back(i);
    }
    return Permutation(std::move(images));
}

}  // namespace

std::optional<Permutation> first_symmetry_violation(const StateVector &state, double tol) {
    return first_adjacent_violation(state, +1, tol);
}

std::optional<Permutation> first_antisymmetry_violation(const StateVector &state, double tol) {
    return first_adjacent_violation(state, -1, tol);
}

bool is_symmetric(const StateVector &state, double tol) {
    return !first_symmetry_violation(state, tol).has_value();
}

bool is_antisymmetric(const StateVector &state, double tol) {
    return !first_antisymmetry_violation(state, tol).has_value();
}

SymmetryClass classify(const StateVector &state, double tol) {
    if (is_symmetric(state, tol)) {
        return SymmetryClass::fully_symmetric();
    }
    const int n = state.num_qudits();
    int negating = 0;
    while (negating + 1 < n && satisfies(state, Permutation::transposition(n, negating, negating + 1), -1, tol)) {
        negating++;
    }
    if (negating == n - 1) {
        return SymmetryClass::fully_antisymmetric();
    }
    if (negating >= 1) {
        return SymmetryClass::antisymmetric_on_prefix(negating + 1);
    }
    return SymmetryClass::none();
}

SymmetryClass check_full_group(const StateVector &state, double tol) {
    const int n = state.num_qudits();
    long order = 1;
    for (int i = 2; i <= n; i++) {
        order *= i;
        if (order > kMaxFullGroupOrder) {
            throw CapacityError(
                "full-group check on " + std::to_string(n) + " qudits exceeds " + std::to_string(kMaxFullGroupOrder) +
                " permutations");
        }
    }
    const auto group = all_permutations(n);
    bool symmetric = true;
    bool antisymmetric = true;
    for (const auto &sigma : group) {
        symmetric = symmetric && satisfies(state, sigma, +1, tol);
        antisymmetric = antisymmetric && satisfies(state, sigma, sigma.signature(), tol);
    }
    if (symmetric) {
        return SymmetryClass::fully_symmetric();
    }
    if (antisymmetric) {
        return SymmetryClass::fully_antisymmetric();
    }
    for (int k = n - 1; k >= 2; k--) {
        bool holds = true;
        for (const auto &sigma : all_permutations(k)) {
            if (!satisfies(state, extend(sigma, n), sigma.signature(), tol)) {
                holds = false;
                break;
            }
        }
        if (holds) {
            return SymmetryClass::antisymmetric_on_prefix(k);
        }
    }
    return SymmetryClass::none();
}

}  // namespace graphsym
