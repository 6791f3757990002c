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
#include <random>
#include <vector>

#include "csvqe/pauli.hpp"

namespace csvqe {

/// The three-qubit example: eleven noncontextual terms (one universally
/// commuting, five two-member cliques) and three contextual terms on the
/// last qubit.
std::vector<PauliOperator> example_noncontextual_terms();
std::vector<PauliOperator> example_contextual_terms();

/// Example terms with coefficients uniform in [-1, 1], drawn in the order
/// noncontextual then contextual.
Hamiltonian random_example_hamiltonian(std::mt19937_64& rng);

/// Up to `max_terms` distinct non-identity Paulis on n qubits with
/// coefficients uniform in [-1, 1].
Hamiltonian random_pauli_hamiltonian(std::size_t n, std::size_t max_terms,
                                     std::mt19937_64& rng);

struct BenchConfig {
  std::size_t count = 10000;
  std::uint64_t seed = 0;
  std::size_t bins = 50;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct BenchInstance {
  double exact = 0.0;
  double nc_energy = 0.0;
  double corrected = 0.0;
  bool excluded = false;  // |exact| below 1e-8
  double nc_error = 0.0;
  double corrected_error = 0.0;
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::size_t> nc_counts;
  std::vector<std::size_t> corrected_counts;
};

struct BenchResult {
  std::vector<BenchInstance> instances;
  std::size_t excluded = 0;
  double mean_nc_error = 0.0;
  double mean_corrected_error = 0.0;
  /// Instances whose corrected energy sits above the noncontextual one.
  std::size_t ordering_violations = 0;
  Histogram histogram;
};

/// Fractional errors of the noncontextual and corrected energies over an
/// ensemble of random example Hamiltonians. Instance i uses its own stream
/// derived from (seed, i), so results do not depend on the thread count.
BenchResult random_bench(const BenchConfig& cfg);

BenchInstance run_bench_instance(std::uint64_t seed, std::size_t index);

}  // namespace csvqe
