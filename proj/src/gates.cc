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

#include "graphsym/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "graphsym/errors.h"

namespace graphsym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int image : images_) {
        if (image < 0 || image >= static_cast<int>(images_.size()) || seen[image]) {
            throw DomainError("not a permutation of 0.." + std::to_string(static_cast<int>(images_.size()) - 1));
        }
        seen[image] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; i++) {
        images[i] = i;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw DomainError("invalid transposition of positions " + std::to_string(i) + " and " + std::to_string(j));
    }
    std::vector<int> images = identity(n).images_;
    std::swap(images[i], images[j]);
    return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; i++) {
        images[i] = (i + 1) % n;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation &other) const {
    if (other.size() != size()) {
        throw DomainError("cannot compose permutations of different sizes");
    }
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); i++) {
        images[i] = images_[other.images_[i]];
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); i++) {
        images[images_[i]] = static_cast<int>(i);
    }
    return Permutation(std::move(images));
}

int Permutation::signature() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); i++) {
        for (std::size_t j = i + 1; j < images_.size(); j++) {
            if (images_[i] > images_[j]) {
                inversions++;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::str() const {
    std::ostringstream out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); start++) {
        if (done[start] || images_[start] == static_cast<int>(start)) {
            continue;
        }
        out << '(';
        std::size_t i = start;
        bool first = true;
        while (!done[i]) {
            done[i] = true;
            out << (first ? "" : " ") << i + 1;
            first = false;
            i = static_cast<std::size_t>(images_[i]);
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images = Permutation::identity(n).images();
    std::vector<Permutation> result;
    do {
        result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

namespace {

void check_qudit(const StateVector &state, Qudit q) {
    if (q.value < 1 || q.value > state.num_qudits()) {
        throw DomainError(
            "qudit index " + std::to_string(q.value) + " out of range [1, " + std::to_string(state.num_qudits()) +
            "]");
    }
}

void check_modulus(const StateVector &state, int modulus) {
    if (modulus < 2 || modulus > state.levels()) {
        throw DomainError(
            "gate modulus " + std::to_string(modulus) + " must lie in [2, " + std::to_string(state.levels()) + "]");
    }
}

/// Rewrites amplitudes through a basis bijection: out[target(i)] = in[i].
template <typename IndexMap>
StateVector permute_basis(StateVector state, IndexMap target) {
    std::vector<Amplitude> out(state.size());
    auto in = state.amplitudes();
    for (std::size_t i = 0; i < in.size(); i++) {
        out[target(i)] = in[i];
    }
    std::copy(out.begin(), out.end(), state.mutable_amplitudes().begin());
    return state;
}

/// w^r for w = exp(2 pi i / d), exact on quarter turns.
std::vector<Amplitude> roots_of_unity(int d) {
    std::vector<Amplitude> roots(d);
    for (int r = 0; r < d; r++) {
        if ((4 * r) % d == 0) {
            static constexpr Amplitude kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            roots[r] = kQuarter[(4 * r) / d];
        } else {
            roots[r] = std::polar(1.0, 2 * std::numbers::pi * r / d);
        }
    }
    return roots;
}

}  // namespace

StateVector apply_cz(StateVector state, Qudit a, Qudit b) {
    if (state.levels() != 2) {
        throw DomainError("CZ is defined on qubits only, state has dimension " + std::to_string(state.levels()));
    }
    check_qudit(state, a);
    check_qudit(state, b);
    if (a == b) {
        throw DomainError("CZ needs two distinct qubits, got " + std::to_string(a.value) + " twice");
    }
    std::size_t mask = state.stride(a.value) | state.stride(b.value);
    for (std::size_t i = 0; i < state.size(); i++) {
        if ((i & mask) == mask) {
            state[i] = -state[i];
        }
    }
    return state;
}

StateVector apply_hadamard_d(StateVector state, Qudit k) {
    int d = state.levels();
    return apply_hadamard_d(std::move(state), k, d);
}

StateVector apply_hadamard_d(StateVector state, Qudit k, int modulus) {
    check_qudit(state, k);
    check_modulus(state, modulus);
    const std::size_t stride = state.stride(k.value);
    const std::size_t levels = static_cast<std::size_t>(state.levels());
    const auto roots = roots_of_unity(modulus);
    const double scale = 1.0 / std::sqrt(static_cast<double>(modulus));
    std::vector<Amplitude> fiber(modulus);
    for (std::size_t base = 0; base < state.size(); base++) {
        if ((base / stride) % levels != 0) {
            continue;
        }
        for (int j = 0; j < modulus; j++) {
            fiber[j] = state[base + j * stride];
        }
        for (int m = 0; m < modulus; m++) {
            Amplitude total{};
            for (int j = 0; j < modulus; j++) {
                total += roots[(j * m) % modulus] * fiber[j];
            }
            state[base + m * stride] = total * scale;
        }
    }
    return state;
}

StateVector apply_shift_d(StateVector state, Qudit k) {
    int d = state.levels();
    return apply_shift_d(std::move(state), k, d);
}

StateVector apply_shift_d(StateVector state, Qudit k, int modulus) {
    check_qudit(state, k);
    check_modulus(state, modulus);
    const std::size_t stride = state.stride(k.value);
    const std::size_t levels = static_cast<std::size_t>(state.levels());
    const std::size_t m = static_cast<std::size_t>(modulus);
    return permute_basis(std::move(state), [=](std::size_t i) {
        std::size_t digit = (i / stride) % levels;
        if (digit >= m) {
            return i;
        }
        return i - digit * stride + ((digit + 1) % m) * stride;
    });
}

StateVector apply_gr(StateVector state, Qudit control_l, Qudit target_k) {
    int d = state.levels();
    return apply_gr(std::move(state), control_l, target_k, d);
}

StateVector apply_gr(StateVector state, Qudit control_l, Qudit target_k, int modulus) {
    check_qudit(state, control_l);
    check_qudit(state, target_k);
    check_modulus(state, modulus);
    if (control_l == target_k) {
        throw DomainError("GR needs distinct control and target, got " + std::to_string(control_l.value) + " twice");
    }
    const std::size_t control_stride = state.stride(control_l.value);
    const std::size_t target_stride = state.stride(target_k.value);
    const std::size_t levels = static_cast<std::size_t>(state.levels());
    const std::size_t m = static_cast<std::size_t>(modulus);
    return permute_basis(std::move(state), [=](std::size_t i) {
        std::size_t j = (i / control_stride) % levels;
        std::size_t t = (i / target_stride) % levels;
        if (j >= m || t >= m) {
            return i;
        }
        return i - t * target_stride + ((j + m - t) % m) * target_stride;
    });
}

StateVector apply_global_phase(StateVector state, Amplitude phase) {
    for (auto &a : state.mutable_amplitudes()) {
        a *= phase;
    }
    return state;
}

StateVector apply_permutation(StateVector state, const Permutation &p) {
    const int n = state.num_qudits();
    if (p.size() != n) {
        throw DomainError(
            "permutation of " + std::to_string(p.size()) + " elements applied to " + std::to_string(n) + " qudits");
    }
    std::vector<std::size_t> strides(n);
    for (int i = 0; i < n; i++) {
        strides[i] = state.stride(i + 1);
    }
    const std::size_t levels = static_cast<std::size_t>(state.levels());
    return permute_basis(std::move(state), [&](std::size_t index) {
        std::size_t target = 0;
        for (int i = 0; i < n; i++) {
            target += ((index / strides[i]) % levels) * strides[p(i)];
        }
        return target;
    });
}

}  // namespace graphsym
