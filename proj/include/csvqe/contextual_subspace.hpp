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
#include <optional>
#include <span>
#include <vector>

#include "csvqe/eigensolver.hpp"
#include "csvqe/pauli.hpp"
#include "csvqe/quasi_model.hpp"
#include "csvqe/rotations.hpp"

namespace csvqe {

struct SolverConfig {
  EigenConfig eigen;
  /// Drop the clique constraint once no generator is retained, so the empty
  /// end of a sweep is plain diagonalization of H.
  bool drop_constraint_at_full_vqe = true;
};

/// Hamiltonian on the free qubits plus the identity contributions.
struct Restriction {
  Hamiltonian hamiltonian;  // constant() == 0
  double offset = 0.0;
};

/// Drops terms with X or Y on an assigned qubit and replaces Z there by the
/// assigned eigenvalue. The survivors act on the unassigned qubits, which are
/// renumbered in ascending order. The source constant goes into the offset.
Restriction restrict(const Hamiltonian& h,
                     const std::map<std::size_t, int>& assignments);

/// The contextual-subspace problem for one choice of retained generators.
struct CSVQEProblem {
  std::size_t num_qubits = 0;
  std::vector<std::size_t> retained;  // generator indices, ascending
  RotationPlan plan;                  // D for the retained generators
  Hamiltonian rotated_h;              // D H D^dagger
  std::map<std::size_t, int> generator_assignments;
  std::vector<std::size_t> free_qubits;
  /// sum_i r_i D A_i D^dagger restricted to the free qubits.
  std::optional<Hamiltonian> a_restricted;
  /// All of H restricted to the free qubits, constant included.
  Hamiltonian restricted_h;
  /// Only the terms needing a quantum treatment: the contextual terms and the
  /// noncontextual terms that depend on a dropped generator.
  Hamiltonian restricted_contextual;
  double nc_energy = 0.0;

  std::size_t num_free_qubits() const { return free_qubits.size(); }
};

/// Throws DimensionError for out-of-range or repeated generator indices.
CSVQEProblem build_problem(const Hamiltonian& h, const QuasiModel& model,
                           const NoncontextualState& state,
                           std::span<const std::size_t> retained,
                           const SolverConfig& cfg = {});

/// Lowest eigenpair of restricted_h on the +1 eigenspace of a_restricted (or
/// on all of the free register when there is no constraint).
EigenResult solve_state(const CSVQEProblem& p, const SolverConfig& cfg = {});
double solve(const CSVQEProblem& p, const SolverConfig& cfg = {});

struct WitnessConfig {
  std::uint64_t seed = 0;
  std::size_t restarts = 20;
  std::size_t max_iterations = 400;
  double target = 1e-8;
  std::size_t dense_limit = 10;
};

/// rho = state * state^dagger on the free register; one column for a pure
/// witness.
struct WitnessResult {
  Eigen::MatrixXcd state;
  double objective = 0.0;
  bool converged = false;
};

/// Searches the constrained free register for a state, pure if possible and
/// mixed otherwise, with
/// sum_P <P>^2 below cfg.target over the given original-frame operators.
/// Operators that anticommute with a stabilizer drop out identically.
WitnessResult zero_expectation_witness(const CSVQEProblem& p,
                                       std::span<const PauliOperator> s_c,
                                       const WitnessConfig& cfg = {});

/// The full n-qubit state, in the original frame, whose stabilized qubits
/// carry the assignments and whose free register is `free_state`.
StateVector lift_state(const CSVQEProblem& p, const StateVector& free_state);

/// Column-wise lift of the components of a mixed free-register state.
Eigen::MatrixXcd lift_state(const CSVQEProblem& p, const Eigen::MatrixXcd& components);

}  // namespace csvqe
