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

#include "graphsym/state_vector.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphsym/errors.h"

namespace graphsym {

std::string BasisLabel::str() const {
    std::ostringstream out;
    out << '|';
    bool wide = std::any_of(digits.begin(), digits.end(), [](int d) { return d > 9; });
    for (std::size_t i = 0; i < digits.size(); i++) {
        if (wide && i > 0) {
            out << ',';
        }
        out << digits[i];
    }
    out << '>';
    return out.str();
}

std::size_t checked_dimension(int num_qudits, int levels) {
    if (num_qudits < 1) {
        throw DomainError("number of qudits must be positive, got " + std::to_string(num_qudits));
    }
    if (levels < 2) {
        throw DomainError("qudit dimension must be at least 2, got " + std::to_string(levels));
    }
    std::size_t size = 1;
    for (int i = 0; i < num_qudits; i++) {
        size *= static_cast<std::size_t>(levels);
        if (size > kMaxAmplitudes) {
            throw CapacityError(
                std::to_string(levels) + "^" + std::to_string(num_qudits) + " amplitudes exceeds the cap of " +
                std::to_string(kMaxAmplitudes));
        }
    }
    return size;
}

StateVector::StateVector(int num_qudits, int levels)
    : num_qudits_(num_qudits), levels_(levels), amplitudes_(checked_dimension(num_qudits, levels)) {
}

StateVector::StateVector(int num_qudits, int levels, std::vector<Amplitude> amplitudes)
    : num_qudits_(num_qudits), levels_(levels), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != checked_dimension(num_qudits, levels)) {
        throw DomainError(
            "expected " + std::to_string(checked_dimension(num_qudits, levels)) + " amplitudes, got " +
            std::to_string(amplitudes_.size()));
    }
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("amplitudes must be finite");
        }
    }
}

std::size_t StateVector::stride(int qudit) const {
    if (qudit < 1 || qudit > num_qudits_) {
        throw DomainError(
            "qudit index " + std::to_string(qudit) + " out of range [1, " + std::to_string(num_qudits_) + "]");
    }
    std::size_t s = 1;
    for (int i = qudit; i < num_qudits_; i++) {
        s *= static_cast<std::size_t>(levels_);
    }
    return s;
}

std::size_t StateVector::index_of(const BasisLabel &label) const {
    if (static_cast<int>(label.digits.size()) != num_qudits_) {
        throw DomainError(
            "basis label has " + std::to_string(label.digits.size()) + " digits, state has " +
            std::to_string(num_qudits_) + " qudits");
    }
    std::size_t index = 0;
    for (int digit : label.digits) {
        if (digit < 0 || digit >= levels_) {
            throw DomainError("digit " + std::to_string(digit) + " out of range [0, " + std::to_string(levels_) + ")");
        }
        index = index * static_cast<std::size_t>(levels_) + static_cast<std::size_t>(digit);
    }
    return index;
}

BasisLabel StateVector::label_of(std::size_t index) const {
    if (index >= amplitudes_.size()) {
        throw DomainError("flat index " + std::to_string(index) + " out of range");
    }
    BasisLabel label{std::vector<int>(num_qudits_)};
    for (int i = num_qudits_ - 1; i >= 0; i--) {
        label.digits[i] = static_cast<int>(index % static_cast<std::size_t>(levels_));
        index /= static_cast<std::size_t>(levels_);
    }
    return label;
}

const Amplitude &StateVector::at(const BasisLabel &label) const {
    return amplitudes_[index_of(label)];
}

Amplitude &StateVector::at(const BasisLabel &label) {
    return amplitudes_[index_of(label)];
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::norm() const {
    return std::sqrt(norm_squared());
}

StateVector make_basis_state(int num_qudits, int levels, const BasisLabel &label) {
    StateVector state(num_qudits, levels);
    state.at(label) = 1.0;
    return state;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    if (a.levels() != b.levels()) {
        throw DomainError(
            "cannot tensor states of dimension " + std::to_string(a.levels()) + " and " + std::to_string(b.levels()));
    }
    StateVector result(a.num_qudits() + b.num_qudits(), a.levels());
    std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); i++) {
        if (a[i] == Amplitude{}) {
            continue;
        }
        for (std::size_t j = 0; j < nb; j++) {
            result[i * nb + j] = a[i] * b[j];
        }
    }
    return result;
}

namespace {

void require_same_shape(const StateVector &a, const StateVector &b, const char *op) {
    if (!a.same_shape(b)) {
        throw DomainError(
            std::string(op) + ": shape mismatch (" + std::to_string(a.num_qudits()) + " qudits of dimension " +
            std::to_string(a.levels()) + " vs " + std::to_string(b.num_qudits()) + " of dimension " +
            std::to_string(b.levels()) + ")");
    }
}

}  // namespace

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    require_same_shape(a, b, "inner_product");
    Amplitude total{};
    for (std::size_t i = 0; i < a.size(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double max_abs_difference(const StateVector &a, const StateVector &b) {
    require_same_shape(a, b, "max_abs_difference");
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

bool equal_exact(const StateVector &a, const StateVector &b, double tol) {
    if (!(tol > 0)) {
        throw DomainError("tolerance must be positive");
    }
    return max_abs_difference(a, b) <= tol;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::abs(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    return fidelity(a, b) >= 1.0 - tol;
}

}  // namespace graphsym
