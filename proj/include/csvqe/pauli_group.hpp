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

#include <cstdint>
#include <optional>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// Independent generating set of an Abelian group of Hermitian Paulis,
/// maintained as a GF(2) echelon form over the symplectic vectors.
///
/// Each echelon row remembers which generators it is the product of, and
/// carries the exact operator product, so decompositions come with the
/// correct +/-1 sign.
class PauliGroupBasis {
 public:
  /// p = sign * prod_{j in generators} G_j.
  struct Decomposition {
    std::uint64_t generators = 0;
    int sign = 1;
  };

  explicit PauliGroupBasis(std::size_t num_qubits = 0)
      : num_qubits_(num_qubits) {}

  /// Adds p as a new generator if it is independent of the current ones.
  /// Returns false (and leaves the basis unchanged) when p is already in the
  /// span. Throws InvariantError if p does not commute with the generators.
  bool insert(const PauliOperator& p);

  /// Signed decomposition of p, or nullopt if p is outside the span.
  std::optional<Decomposition> decompose(const PauliOperator& p) const;

  bool contains(const PauliOperator& p) const {
    return decompose(p).has_value();
  }

  const std::vector<PauliOperator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t num_qubits() const { return num_qubits_; }

  /// prod_{j in mask} G_j as an operator.
  PauliOperator product(std::uint64_t mask) const;

 private:
  struct Row {
    PauliOperator op;  // exact product of the generators in `mask`
    std::uint64_t mask = 0;
    int pivot = 0;  // 0..63 x-bits, 64..127 z-bits
  };

  static bool has_bit(const PauliOperator& p, int bit);
  // Returns the reduced operator and the accumulated generator mask.
  std::pair<PauliOperator, std::uint64_t> reduce(const PauliOperator& p) const;

  std::size_t num_qubits_;
  std::vector<Row> rows_;
  std::vector<PauliOperator> generators_;
};

}  // namespace csvqe
