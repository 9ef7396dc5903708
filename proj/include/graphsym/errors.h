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

#include <stdexcept>
#include <string>

namespace graphsym {

/// Raised when an argument lies outside the domain an operation is defined on
/// (digit out of range, mismatched shapes, CZ on qudits, ...).
class DomainError : public std::invalid_argument {
   public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// Raised when a request would exceed a size cap (amplitude count, enumeration
/// size, n! permutations).
class CapacityError : public std::length_error {
   public:
    explicit CapacityError(const std::string &what) : std::length_error(what) {
    }
};

}  // namespace graphsym
