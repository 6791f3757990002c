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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csvqe/contextual_subspace.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/quasi_model.hpp"

namespace csvqe {

struct ContextConfig {
  GroundStateConfig ground;
  SolverConfig solver;
  /// Explicit noncontextual part. When unset the greedy selection is used.
  std::optional<std::vector<PauliOperator>> noncontextual;
};

/// Everything fixed once per Hamiltonian: the partition, the model and its
/// ground state. Problems for different retained sets are built from here.
struct CsvqeContext {
  Hamiltonian h;
  NoncontextualDecomposition decomposition;
  QuasiModel model;
  GroundStateResult ground;
  SolverConfig solver;

  static CsvqeContext create(const Hamiltonian& h, const ContextConfig& cfg = {});

  std::size_t num_generators() const { return model.num_generators(); }
  std::vector<std::size_t> all_generators() const;
  /// Quantum-register size when `retained_count` generators are kept.
  std::size_t quantum_qubits(std::size_t retained_count) const {
    return h.num_qubits() - retained_count;
  }

  CSVQEProblem problem(std::span<const std::size_t> retained) const;
  double evaluate(std::span<const std::size_t> retained) const;
};

/// Problem with `drop` removed from `retained`. Throws DimensionError if
/// drop is not a subset of retained.
CSVQEProblem remove_generators(const CsvqeContext& ctx,
                               std::span<const std::size_t> retained,
                               std::span<const std::size_t> drop);

enum class Heuristic { kGreedyPair, kOptimal, kWeight };
enum class WeightMetric { kCoefficientSum, kTermCount };

std::string to_string(Heuristic h);
/// Accepts "greedy-pair", "optimal", "weight". Throws ParseError otherwise.
Heuristic parse_heuristic(const std::string& name);

struct SweepRecord {
  std::size_t quantum_qubits = 0;
  std::vector<std::size_t> retained;
  double energy = 0.0;
  std::optional<double> error_vs_exact;  // energy - exact
  std::size_t restricted_term_count = 0;
  /// False only for the leading record that carries the bare noncontextual
  /// energy with no quantum register at all.
  bool corrected = true;
};

struct SweepConfig {
  WeightMetric weight_metric = WeightMetric::kCoefficientSum;
  bool compute_exact = true;
};

struct SweepResult {
  Heuristic heuristic = Heuristic::kGreedyPair;
  /// Increasing quantum_qubits. The first record is the noncontextual energy
  /// at zero qubits; the last (unless truncated) is the exact ground energy.
  std::vector<SweepRecord> records;
  bool truncated = false;
  std::string truncation_reason;
  double nc_energy = 0.0;
  std::optional<double> exact_energy;
};

SweepResult greedy_pair_sweep(const CsvqeContext& ctx, const SweepConfig& cfg = {});
SweepResult optimal_sweep(const CsvqeContext& ctx, const SweepConfig& cfg = {});
SweepResult weight_sweep(const CsvqeContext& ctx, const SweepConfig& cfg = {});
SweepResult sweep(const CsvqeContext& ctx, Heuristic heuristic,
                  const SweepConfig& cfg = {});

/// Generator order used by the weight heuristic (first = first moved to the
/// quantum side).
std::vector<std::size_t> weight_order(const CsvqeContext& ctx, WeightMetric metric);

/// Retained set the heuristic picks for a quantum register of k qubits,
/// k in [n - |G|, n]. Throws DimensionError outside that range.
std::vector<std::size_t> retained_for_qubits(const CsvqeContext& ctx,
                                             Heuristic heuristic, std::size_t k,
                                             WeightMetric metric = WeightMetric::kCoefficientSum);

}  // namespace csvqe
