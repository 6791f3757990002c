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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

using StateVector = Eigen::VectorXcd;

/// Sparse action of a Hamiltonian on state vectors of length 2^n, using the
/// same basis ordering as to_dense_matrix.
class PauliMatvec {
 public:
  explicit PauliMatvec(const Hamiltonian& h);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << num_qubits_; }

  /// out = H in (out is resized and overwritten).
  void apply(const StateVector& in, StateVector& out) const;
  double expectation(const StateVector& psi) const;

 private:
  struct Entry {
    std::uint64_t flip = 0;   // basis-index bits flipped by X/Y factors
    std::uint64_t phase = 0;  // basis-index bits picking up -1 from Z/Y
    std::complex<double> weight;
  };
  std::size_t num_qubits_;
  double constant_;
  std::vector<Entry> entries_;
};

struct EigenConfig {
  std::size_t dense_limit = kDefaultDenseLimit;
  /// Up to this many qubits the matrix is diagonalized densely; above it a
  /// Lanczos iteration is used.
  std::size_t direct_limit = 10;
  double tolerance = 1e-10;
  std::size_t krylov_dimension = 80;
  std::size_t max_restarts = 200;
};

struct EigenResult {
  double value = 0.0;
  StateVector vector;  // normalized, in the full 2^n basis
};

/// Lowest eigenvalue of h, or of h restricted to the +1 eigenspace of
/// `constraint` when one is given (constraint must square to the identity).
/// Throws ResourceError beyond cfg.dense_limit.
EigenResult lowest_eigenpair(const Hamiltonian& h,
                             const std::optional<Hamiltonian>& constraint = {},
                             const EigenConfig& cfg = {});

/// Orthonormal basis (columns) of the +1 eigenspace of `constraint`, which
/// must have eigenvalues +/-1. Dense; throws ResourceError beyond the limit.
Eigen::MatrixXcd plus_eigenspace(const Hamiltonian& constraint,
                                 std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace csvqe
