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

#include "csvqe/pauli_group.hpp"

#include <bit>

#include "csvqe/errors.hpp"

namespace csvqe {

bool PauliGroupBasis::has_bit(const PauliOperator& p, int bit) {
  return bit < 64 ? ((p.x_bits() >> bit) & 1U) != 0
                  : ((p.z_bits() >> (bit - 64)) & 1U) != 0;
}

std::pair<PauliOperator, std::uint64_t> PauliGroupBasis::reduce(
    const PauliOperator& p) const {
  PauliOperator r = p;
  std::uint64_t mask = 0;
  // Rows are reduced against all earlier rows on insertion, so a single pass
  // in insertion order clears every pivot.
  for (const Row& row : rows_) {
    if (has_bit(r, row.pivot)) {
      r = multiply(row.op, r);
      mask ^= row.mask;
    }
  }
  return {r, mask};
}

bool PauliGroupBasis::insert(const PauliOperator& p) {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("generator " + p.str() + " does not act on " +
                         std::to_string(num_qubits_) + " qubits");
  }
  if (!p.is_hermitian()) {
    throw InvariantError("group generators must be Hermitian: " +
                         p.signed_str());
  }
  for (const auto& g : generators_) {
    if (!commutes(g, p)) {
      throw InvariantError("generator " + p.str() + " anticommutes with " +
                           g.str());
    }
  }
  auto [r, mask] = reduce(p);
  if (r.is_identity()) return false;
  if (generators_.size() >= 64) {
    throw ResourceError("more than 64 independent generators");
  }
  const std::uint64_t bit = std::uint64_t{1} << generators_.size();
  generators_.push_back(p);
  const int pivot = r.x_bits() != 0 ? std::countr_zero(r.x_bits())
                                    : 64 + std::countr_zero(r.z_bits());
  // r = (prod of rows in mask) * p, and every factor commutes.
  rows_.push_back(Row{r, mask ^ bit, pivot});
  return true;
}

std::optional<PauliGroupBasis::Decomposition> PauliGroupBasis::decompose(
    const PauliOperator& p) const {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("operator " + p.str() + " does not act on " +
                         std::to_string(num_qubits_) + " qubits");
  }
  auto [r, mask] = reduce(p);
  if (!r.is_identity()) return std::nullopt;
  // r = G_mask * p with G_mask self-inverse, so p = G_mask * r.
  if (!r.is_hermitian()) return std::nullopt;
  return Decomposition{mask, r.sign()};
}

PauliOperator PauliGroupBasis::product(std::uint64_t mask) const {
  PauliOperator out(num_qubits_);
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if ((mask >> j) & 1U) out = multiply(out, generators_[j]);
  }
  return out;
}

}  // namespace csvqe
