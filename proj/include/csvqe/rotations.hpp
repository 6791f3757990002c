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
#include <map>
#include <span>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// Where a generator ends up: image = +/- Z on `qubit`.
struct GeneratorTarget {
  PauliOperator source;
  PauliOperator image;
  std::size_t qubit = 0;
};

/// Ordered rotation sequence. Step k acts after steps 0..k-1, so the plan
/// as a whole is U_{last} ... U_1 U_0.
struct RotationPlan {
  std::size_t num_qubits = 0;
  std::vector<RotationStep> steps;
  std::vector<GeneratorTarget> targets;  // empty for unitary partitioning

  bool is_clifford() const;
  /// Reversed steps, each inverted. Targets are dropped.
  RotationPlan inverse() const;
  /// Bitmask of target qubits.
  std::uint64_t target_mask() const;
};

/// Clifford sequence of at most 2|g| quarter turns mapping each generator to
/// a distinct single-qubit Z. Off-diagonal images rotate about the operator
/// with its lowest off-diagonal factor swapped X<->Y; diagonal images first
/// rotate about Y on their lowest Z qubit not yet claimed. Throws
/// InvariantError for non-Hermitian, non-commuting or dependent input.
RotationPlan diagonalize_generators(std::size_t num_qubits,
                                    std::span<const PauliOperator> g);

/// N-1 continuous steps about i A_0 A_k (k = N-1, ..., 1) folding
/// sum_k r_k A_k onto A_0 with coefficient 1. Throws InvariantError unless
/// the representatives pairwise anticommute and |r| = 1.
RotationPlan unitary_partitioning(std::span<const PauliOperator> clique_reps,
                                  std::span<const double> r);

Hamiltonian apply_plan(const Hamiltonian& h, const RotationPlan& plan);

/// Clifford plans only.
PauliOperator apply_plan(const PauliOperator& p, const RotationPlan& plan);

/// Qubit -> eigenvalue for the stabilized qubits: the sign picked up by each
/// generator under the plan times its value q_j.
std::map<std::size_t, int> fix_generator_signs(const RotationPlan& plan,
                                               std::span<const int> q);

}  // namespace csvqe
