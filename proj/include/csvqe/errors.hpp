// Copyright 2026 The CS-VQE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace csvqe {

/// Operands act on different numbers of qubits, or a vector has the wrong
/// length for the object it parameterizes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size limit (dense matrices,
/// exhaustive searches).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural precondition on Pauli sets, models or rotation plans does
/// not hold.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A set expected to be noncontextual is contextual.
class ContextualityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class ModelError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace csvqe
