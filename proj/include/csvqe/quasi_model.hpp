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

#include "csvqe/contextuality.hpp"
#include "csvqe/pauli.hpp"
#include "csvqe/pauli_group.hpp"

namespace csvqe {

/// One entry B of the classical objective
///   <H_nc> = sum_B (h_B + sum_i h_{B,i} r_i) prod_{j in J_B} q_j.
struct ObjectiveTerm {
  std::uint64_t generators = 0;  // J_B as a bitmask over generator indices
  double constant_part = 0.0;    // h_B
  std::vector<double> clique_part;  // h_{B,i}, one entry per clique
};

/// How a noncontextual term is rebuilt from the model's observables:
/// pauli = sign * prod_{j in generators} G_j [* A_clique].
struct TermRecord {
  PauliOperator pauli;
  double coefficient = 0.0;
  std::uint64_t generators = 0;
  int sign = 1;
  std::optional<std::size_t> clique;
};

/// Quasi-quantized model of a noncontextual Hamiltonian: independent
/// commuting generators G (phase-free, mutually commuting, commuting with
/// every clique representative) and pairwise anticommuting clique
/// representatives A_i.
struct QuasiModel {
  std::size_t num_qubits = 0;
  std::vector<PauliOperator> generators;
  std::vector<PauliOperator> clique_reps;
  std::vector<ObjectiveTerm> terms;  // sorted by generator mask
  std::vector<TermRecord> records;   // one per noncontextual term
  double constant = 0.0;             // identity offset of the source
  PauliGroupBasis basis;             // span of the generators

  std::size_t num_generators() const { return generators.size(); }
  std::size_t num_cliques() const { return clique_reps.size(); }
};

/// Values q_j = +/-1 for the generators and a unit vector r for the clique
/// representatives (empty when there are no cliques).
struct NoncontextualState {
  std::vector<int> q;
  std::vector<double> r;

  /// Bit j set iff q_j = -1.
  std::uint64_t negative_mask() const;
};

/// Throws DimensionError / InvariantError if the state does not fit the model
/// or |r| deviates from 1 by more than 1e-9.
void validate(const QuasiModel& m, const NoncontextualState& s);

/// Builds G by signed GF(2) elimination over Z and the within-clique products
/// A_i C, taking A_i as the lexicographically first member of clique i.
/// Throws ModelError when the decomposition violates its invariants.
QuasiModel build_model(const NoncontextualDecomposition& d);

/// Noncontextual part of the source Hamiltonian, including its constant.
Hamiltonian noncontextual_hamiltonian(const QuasiModel& m);

double evaluate_objective(const QuasiModel& m, const NoncontextualState& s);

/// Expectation of an arbitrary Pauli in the noncontextual state: prod q_j for
/// members of the signed generator group, r_i prod q_j for group elements
/// times A_i, zero otherwise. Signed inputs (phase 2) are honored.
double expectation_of_pauli(const QuasiModel& m, const NoncontextualState& s,
                            const PauliOperator& p);

/// Optimal r for fixed q. The objective is affine in r, so the minimum on
/// the unit sphere is c0(q) - |c(q)| at r = -c/|c|; r = (1, 0, ..., 0) when
/// c vanishes.
struct InnerOptimum {
  double energy = 0.0;
  std::vector<double> r;
};
InnerOptimum optimal_clique_vector(const QuasiModel& m, std::uint64_t negative_mask);

struct GroundStateConfig {
  std::uint64_t seed = 0;
  std::size_t brute_force_threshold = 18;  // exhaustive over q when |G| <= this
  std::size_t restarts = 20;
  std::size_t steps_per_generator = 10000;
};

struct GroundStateResult {
  NoncontextualState state;
  double energy = 0.0;
  bool exhaustive = true;
};

/// Noncontextual ground state: exhaustive search over q when small enough,
/// otherwise simulated annealing over single-generator flips with geometric
/// cooling and independent restarts.
GroundStateResult find_ground_state(const QuasiModel& m,
                                    const GroundStateConfig& cfg = {});

}  // namespace csvqe
