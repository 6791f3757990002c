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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// Partition of a Hamiltonian's terms into a noncontextual part
/// S_nc = Z u C_1 u ... u C_N and the remaining contextual terms S_c.
///
/// Z holds the S_nc terms commuting with all of S_nc. Members of one clique
/// commute; members of different cliques anticommute. All lists are sorted
/// lexicographically (cliques by their first member).
struct NoncontextualDecomposition {
  std::vector<PauliOperator> z_set;
  std::vector<std::vector<PauliOperator>> cliques;
  std::vector<PauliOperator> contextual_terms;
  /// The Hamiltonian whose terms are partitioned. Sets decomposed without
  /// coefficients get unit coefficients.
  Hamiltonian source;

  std::size_t num_cliques() const { return cliques.size(); }
  std::vector<PauliOperator> noncontextual_terms() const;
};

/// Commutation is transitive on s minus its universally commuting subset.
/// Duplicate operators (up to phase) are ignored.
bool is_noncontextual(std::span<const PauliOperator> s);

/// Three operators a ~ b ~ c with a, c anticommuting, none universally
/// commuting, or nullopt if s is noncontextual.
std::optional<std::array<PauliOperator, 3>> contextual_witness(
    std::span<const PauliOperator> s);

/// Smallest superset of s (phase-free) closed under products of commuting
/// pairs. The identity is never included. Throws ResourceError if the
/// closure grows beyond `limit` elements.
std::vector<PauliOperator> closure_under_inference(
    std::span<const PauliOperator> s, std::size_t limit = 1u << 16);

/// Decomposes a noncontextual set; throws ContextualityError otherwise.
NoncontextualDecomposition decompose(std::span<const PauliOperator> s);

/// Decomposes `noncontextual` (a subset of h's terms); every other term of h
/// becomes contextual.
NoncontextualDecomposition decompose(const Hamiltonian& h,
                                     std::span<const PauliOperator> noncontextual);

/// Terms of `terms` outside `noncontextual` whose values are inferable from
/// it, i.e. (closure(noncontextual) n terms) minus noncontextual.
/// `noncontextual` must be noncontextual.
std::vector<PauliOperator> inferable_terms(
    std::span<const PauliOperator> noncontextual,
    std::span<const PauliOperator> terms);

/// Greedy selection of a noncontextual subset closed under inference within
/// the term set: candidates in order of descending |coefficient| (ties by
/// Pauli string) are admitted together with any terms they make inferable,
/// provided the grown set stays noncontextual.
NoncontextualDecomposition greedy_noncontextual_subset(const Hamiltonian& h);

/// Throws InvariantError describing the first violated decomposition
/// invariant (partition, commutation structure, closure within S).
void validate(const NoncontextualDecomposition& d);

}  // namespace csvqe
