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

#include <span>

#include "csvqe/pauli.hpp"
#include "csvqe/quasi_model.hpp"

namespace csvqe {

struct OracleConfig {
  std::size_t dense_limit = kDefaultDenseLimit;
  std::size_t assignment_limit = 24;  // closure size for the value search
  std::size_t q_limit = 18;           // |G| for the exhaustive cube search
};

/// Minimum eigenvalue of H. Full dense diagonalization up to 11 qubits,
/// Lanczos above that. Throws ResourceError beyond cfg.dense_limit.
double exact_ground_energy(const Hamiltonian& h, const OracleConfig& cfg = {});

/// Whether the inference closure of s admits a +/-1 value for every element
/// with v(a) v(b) = sign * v(c) whenever a and b commute and ab = sign * c.
/// The constraints are linear over GF(2) in the exponents, so the search is
/// decided exactly by elimination. Throws ResourceError if the closure has
/// more than cfg.assignment_limit elements.
bool brute_force_noncontextual(std::span<const PauliOperator> s,
                               const OracleConfig& cfg = {});

struct OracleGround {
  NoncontextualState state;
  double energy = 0.0;
};

/// Exhaustive minimization over all q with the closed-form r, evaluated
/// from the per-term records. Throws ResourceError when |G| > cfg.q_limit.
OracleGround brute_force_nc_ground(const QuasiModel& m, const OracleConfig& cfg = {});

}  // namespace csvqe
