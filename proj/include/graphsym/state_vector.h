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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graphsym {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kMaxAmplitudes = 10'000'000;

/// Digits (k_1, ..., k_n) of a computational basis ket, qudit 1 first.
struct BasisLabel {
    std::vector<int> digits;

    bool operator==(const BasisLabel &) const = default;
    std::string str() const;
};

/// Number of amplitudes d^n; throws CapacityError above kMaxAmplitudes.
std::size_t checked_dimension(int num_qudits, int levels);

/// Dense pure state of n qudits with d levels each.
///
/// Flat index of label (k_1, ..., k_n) is sum_i k_i * d^(n - i): qudit 1 is the
/// most significant digit, so kets read left to right map to ascending order.
class StateVector {
   public:
    /// All-zero amplitudes; callers fill them in. Use make_basis_state for |0...0>.
    StateVector(int num_qudits, int levels);
    StateVector(int num_qudits, int levels, std::vector<Amplitude> amplitudes);

    int num_qudits() const {
        return num_qudits_;
    }
    int levels() const {
        return levels_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }

    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::span<Amplitude> mutable_amplitudes() {
        return amplitudes_;
    }
    const Amplitude &operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    Amplitude &operator[](std::size_t index) {
        return amplitudes_[index];
    }
    const Amplitude &at(const BasisLabel &label) const;
    Amplitude &at(const BasisLabel &label);

    std::size_t index_of(const BasisLabel &label) const;
    BasisLabel label_of(std::size_t index) const;

    /// Index distance between neighbouring levels of a 1-based qudit.
    std::size_t stride(int qudit) const;
    int digit(std::size_t index, int qudit) const {
        return static_cast<int>((index / stride(qudit)) % static_cast<std::size_t>(levels_));
    }

    double norm_squared() const;
    double norm() const;

    bool same_shape(const StateVector &other) const {
        return num_qudits_ == other.num_qudits_ && levels_ == other.levels_;
    }

   private:
    int num_qudits_;
    int levels_;
    std::vector<Amplitude> amplitudes_;
};

StateVector make_basis_state(int num_qudits, int levels, const BasisLabel &label);

/// Amplitude at (label_a || label_b) is amp_a * amp_b.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>, conjugating a.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// Max componentwise |a - b| <= tol. Phase sensitive.
bool equal_exact(const StateVector &a, const StateVector &b, double tol = kDefaultTolerance);

/// |<a|b>| >= 1 - tol, for normalized inputs.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kDefaultTolerance);

/// |<a|b>|.
double fidelity(const StateVector &a, const StateVector &b);

double max_abs_difference(const StateVector &a, const StateVector &b);

}  // namespace graphsym
