// Copyright 2026 The symsim Authors
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

namespace symsim {

/// Raised when an input violates a documented precondition (bad n, monomial
/// weights that do not sum to n, out-of-range q, ...). Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a computed quantity misses a numerical tolerance that signals a
/// bug or an invalid operator (non-Hermitian regular representation,
/// non-unitary block, complex expectation value). Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace symsim
