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

#include "csvqe/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "csvqe/contextuality.hpp"
#include "csvqe/eigensolver.hpp"
#include "csvqe/errors.hpp"

namespace csvqe {

namespace {

constexpr std::size_t kOracleDirectLimit = 11;

// Dense bit rows for a GF(2) system of arbitrary width.
class Gf2System {
 public:
  explicit Gf2System(std::size_t vars) : words_((vars + 64) / 64), vars_(vars) {}

  /// Adds sum_{v in vars} x_v = rhs. Returns false on inconsistency.
  bool add(const std::vector<std::size_t>& vars, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (std::size_t v : vars) row[v / 64] ^= std::uint64_t{1} << (v % 64);
    if (rhs) row[vars_ / 64] ^= std::uint64_t{1} << (vars_ % 64);
    for (const auto& [pivot, r] : rows_) {
      if ((row[pivot / 64] >> (pivot % 64)) & 1U) {
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= r[w];
      }
    }
    for (std::size_t v = 0; v < vars_; ++v) {
      if ((row[v / 64] >> (v % 64)) & 1U) {
        // Keep the echelon fully reduced so later rows need one pass.
        for (auto& [pivot, r] : rows_) {
          if ((r[v / 64] >> (v % 64)) & 1U) {
            for (std::size_t w = 0; w < words_; ++w) r[w] ^= row[w];
          }
        }
        rows_.emplace_back(v, std::move(row));
        return true;
      }
    }
    // All variables cancelled: consistent iff the right-hand side vanished.
    return ((row[vars_ / 64] >> (vars_ % 64)) & 1U) == 0;
  }

 private:
  std::size_t words_;
  std::size_t vars_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

}  // namespace

double exact_ground_energy(const Hamiltonian& h, const OracleConfig& cfg) {
  if (h.num_qubits() > cfg.dense_limit) {
    throw ResourceError(std::to_string(h.num_qubits()) +
                        " qubits exceed the dense limit of " +
                        std::to_string(cfg.dense_limit));
  }
  if (h.num_qubits() <= kOracleDirectLimit) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(
        to_dense_matrix(h, cfg.dense_limit), Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  }
  EigenConfig ec;
  ec.dense_limit = cfg.dense_limit;
  ec.tolerance = 1e-11;
  return lowest_eigenpair(h, std::nullopt, ec).value;
}

bool brute_force_noncontextual(std::span<const PauliOperator> s,
                               const OracleConfig& cfg) {
  const auto closure = closure_under_inference(s, cfg.assignment_limit);
  std::map<PauliOperator, std::size_t> index;
  for (std::size_t i = 0; i < closure.size(); ++i) index.emplace(closure[i], i);

  // v = (-1)^x; v(a) v(b) = sign v(c) becomes x_a + x_b + x_c = [sign < 0].
  Gf2System system(closure.size());
  for (std::size_t a = 0; a < closure.size(); ++a) {
    for (std::size_t b = a + 1; b < closure.size(); ++b) {
      if (!commutes(closure[a], closure[b])) continue;
      const PauliOperator prod = multiply(closure[a], closure[b]);
      auto it = index.find(prod.unsigned_part());
      if (it == index.end()) {
        throw InvariantError("closure is missing the product " + prod.str());
      }
      if (!system.add({a, b, it->second}, prod.sign() < 0)) return false;
    }
  }
  return true;
}

OracleGround brute_force_nc_ground(const QuasiModel& m, const OracleConfig& cfg) {
  const std::size_t n_gen = m.num_generators();
  if (n_gen > cfg.q_limit) {
    throw ResourceError(std::to_string(n_gen) + " generators exceed the limit of " +
                        std::to_string(cfg.q_limit));
  }
  const std::size_t n_cliques = m.num_cliques();
  OracleGround best;
  best.energy = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_gen); ++mask) {
    double c0 = m.constant;
    std::vector<double> c(n_cliques, 0.0);
    for (const auto& rec : m.records) {
      const double v = rec.coefficient * rec.sign *
                       ((std::popcount(rec.generators & mask) & 1) ? -1.0 : 1.0);
      if (rec.clique) {
        c[*rec.clique] += v;
      } else {
        c0 += v;
      }
    }
    double norm = 0.0;
    for (double x : c) norm += x * x;
    norm = std::sqrt(norm);
    const double energy = c0 - norm;
    if (energy < best.energy) {
      best.energy = energy;
      best.state.q.assign(n_gen, 1);
      for (std::size_t j = 0; j < n_gen; ++j) {
        if ((mask >> j) & 1U) best.state.q[j] = -1;
      }
      best.state.r.assign(n_cliques, 0.0);
      if (n_cliques > 0) {
        if (norm > 0.0) {
          for (std::size_t i = 0; i < n_cliques; ++i) best.state.r[i] = -c[i] / norm;
        } else {
          best.state.r[0] = 1.0;
        }
      }
    }
  }
  return best;
}

}  // namespace csvqe
