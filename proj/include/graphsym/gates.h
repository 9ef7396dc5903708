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

#include <cstddef>
#include <string>
#include <vector>

#include "graphsym/state_vector.h"

namespace graphsym {

/// 1-based subsystem label, matching vertex numbering of the input graph.
struct Qudit {
    int value;

    constexpr explicit Qudit(int v) : value(v) {
    }
    bool operator==(const Qudit &) const = default;
};

/// Bijection on {0, ..., n-1} in one-line form: images()[i] = sigma(i).
class Permutation {
   public:
    /// Throws DomainError unless images is a permutation of 0..n-1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Exchanges 0-based positions i and j.
    static Permutation transposition(int n, int i, int j);
    /// i -> i + 1 mod n, i.e. the cycle (0 1 ... n-1).
    static Permutation cycle(int n);

    int size() const {
        return static_cast<int>(images_.size());
    }
    int operator()(int i) const {
        return images_[i];
    }
    const std::vector<int> &images() const {
        return images_;
    }

    /// (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation &other) const;
    Permutation inverse() const;
    /// +1 for even, -1 for odd permutations.
    int signature() const;

    /// Cycle notation with 1-based entries, e.g. "(1 2)"; "()" for the identity.
    std::string str() const;

    bool operator==(const Permutation &) const = default;

   private:
    std::vector<int> images_;
};

inline int signature(const Permutation &p) {
    return p.signature();
}

/// All n! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(int n);

// Every gate takes the state by value, rewrites it as a basis-index map and
// returns it. Gates marked with a modulus act on levels 0..modulus-1 of the
// addressed qudits and leave basis states with a digit >= modulus untouched;
// the overloads without one use modulus = levels().

/// Negates every amplitude whose digits at a and b are both 1. Qubits only.
StateVector apply_cz(StateVector state, Qudit a, Qudit b);

/// |j> -> d^{-1/2} sum_m w^{jm} |m>, w = exp(2 pi i / d).
StateVector apply_hadamard_d(StateVector state, Qudit k);
StateVector apply_hadamard_d(StateVector state, Qudit k, int modulus);

/// |j> -> |j + 1 mod d>.
StateVector apply_shift_d(StateVector state, Qudit k);
StateVector apply_shift_d(StateVector state, Qudit k, int modulus);

/// GR with control l and target k: |i>_k |j>_l -> |j - i mod d>_k |j>_l.
StateVector apply_gr(StateVector state, Qudit control_l, Qudit target_k);
StateVector apply_gr(StateVector state, Qudit control_l, Qudit target_k, int modulus);

/// Multiplies every amplitude by phase.
StateVector apply_global_phase(StateVector state, Amplitude phase);

/// Moves the content of subsystem i to subsystem p(i) (0-based):
/// amplitude[l'] = amplitude[l] where l'_{p(i)} = l_i.
StateVector apply_permutation(StateVector state, const Permutation &p);

}  // namespace graphsym
