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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphsym/state_vector.h"

namespace graphsym::testing {

/// Builds a state from (ket string, coefficient) terms; "012" means |0>|1>|2>.
inline StateVector ket_sum(int levels, std::initializer_list<std::pair<std::string, Amplitude>> terms) {
    int n = static_cast<int>(terms.begin()->first.size());
    StateVector state(n, levels);
    for (const auto &[ket, c] : terms) {
        BasisLabel label;
        for (char ch : ket) {
            label.digits.push_back(ch - '0');
        }
        state.at(label) += c;
    }
    return state;
}

/// Same coefficient scale on every term, signs from the leading character.
inline StateVector signed_kets(int levels, double scale, std::initializer_list<std::string> kets) {
    int n = static_cast<int>(kets.begin()->size()) - 1;
    StateVector state(n, levels);
    for (const auto &ket : kets) {
        BasisLabel label;
        for (std::size_t i = 1; i < ket.size(); i++) {
            label.digits.push_back(ket[i] - '0');
        }
        state.at(label) += (ket[0] == '-' ? -scale : scale);
    }
    return state;
}

inline StateVector random_state(int n, int levels, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    StateVector state(n, levels);
    double total = 0;
    for (auto &a : state.mutable_amplitudes()) {
        a = Amplitude(normal(rng), normal(rng));
        total += std::norm(a);
    }
    for (auto &a : state.mutable_amplitudes()) {
        a /= std::sqrt(total);
    }
    return state;
}

/// Reference flat index computed from the definition, independent of StateVector.
inline std::size_t reference_index(const std::vector<int> &digits, int levels) {
    std::size_t index = 0;
    std::size_t weight = 1;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; i--) {
        index += static_cast<std::size_t>(digits[i]) * weight;
        weight *= static_cast<std::size_t>(levels);
    }
    return index;
}

/// All labels of n digits in [0, levels), ascending.
inline std::vector<std::vector<int>> all_labels(int n, int levels) {
    std::vector<std::vector<int>> result;
    std::vector<int> digits(n, 0);
    while (true) {
        result.push_back(digits);
        int i = n - 1;
        while (i >= 0 && ++digits[i] == levels) {
            digits[i] = 0;
            i--;
        }
        if (i < 0) {
            return result;
        }
    }
}

/// Dense operator M[row][col] assembled from its action on basis labels, then
/// applied by explicit matrix-vector multiplication.
using ColumnFn = std::function<std::vector<std::pair<std::vector<int>, Amplitude>>(const std::vector<int> &)>;

inline StateVector dense_apply(const StateVector &state, const ColumnFn &column) {
    const int n = state.num_qudits();
    const int d = state.levels();
    const auto labels = all_labels(n, d);
    const std::size_t dim = labels.size();
    std::vector<std::vector<Amplitude>> matrix(dim, std::vector<Amplitude>(dim));
    for (std::size_t col = 0; col < dim; col++) {
        for (const auto &[row_label, value] : column(labels[col])) {
            matrix[reference_index(row_label, d)][col] += value;
        }
    }
    StateVector out(n, d);
    for (std::size_t r = 0; r < dim; r++) {
        Amplitude total{};
        for (std::size_t c = 0; c < dim; c++) {
            total += matrix[r][c] * state[c];
        }
        out[r] = total;
    }
    return out;
}

inline void expect_states_near(const StateVector &got, const StateVector &want, double tol) {
    ASSERT_EQ(got.num_qudits(), want.num_qudits());
    ASSERT_EQ(got.levels(), want.levels());
    for (std::size_t i = 0; i < got.size(); i++) {
        EXPECT_NEAR(got[i].real(), want[i].real(), tol) << got.label_of(i).str() << " (real)";
        EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << got.label_of(i).str() << " (imag)";
    }
}

}  // namespace graphsym::testing
