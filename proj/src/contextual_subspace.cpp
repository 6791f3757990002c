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

#include "csvqe/contextual_subspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "csvqe/errors.hpp"
#include "csvqe/rng.hpp"

namespace csvqe {

namespace {

// Keeps the factors on `free_qubits` (ascending) and renumbers them.
PauliOperator compress(const PauliOperator& p,
                       const std::vector<std::size_t>& free_qubits) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < free_qubits.size(); ++k) {
    const std::size_t q = free_qubits[k];
    x |= ((p.x_bits() >> q) & 1U) << k;
    z |= ((p.z_bits() >> q) & 1U) << k;
  }
  return PauliOperator(free_qubits.size(), x, z);
}

std::vector<std::size_t> free_qubits_of(std::size_t n,
                                        const std::map<std::size_t, int>& a) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q) {
    if (!a.contains(q)) out.push_back(q);
  }
  return out;
}

std::uint64_t assigned_mask(const std::map<std::size_t, int>& a) {
  std::uint64_t mask = 0;
  for (const auto& [q, v] : a) mask |= std::uint64_t{1} << q;
  return mask;
}

std::uint64_t negative_assigned_mask(const std::map<std::size_t, int>& a) {
  std::uint64_t mask = 0;
  for (const auto& [q, v] : a) {
    if (v < 0) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

// Factor p1 for a term that is I/Z on the assigned qubits, or 0 if the term
// has X/Y there.
int assigned_factor(const PauliOperator& p, std::uint64_t assigned,
                    std::uint64_t negative) {
  if (p.x_bits() & assigned) return 0;
  const int s = (std::popcount(p.z_bits() & negative) & 1) ? -1 : 1;
  return s * p.sign();
}

Hamiltonian with_offset(Restriction r) {
  Hamiltonian out = std::move(r.hamiltonian);
  out.add_constant(r.offset);
  return out;
}

}  // namespace

Restriction restrict(const Hamiltonian& h,
                     const std::map<std::size_t, int>& assignments) {
  const std::size_t n = h.num_qubits();
  for (const auto& [q, v] : assignments) {
    if (q >= n) {
      throw DimensionError("assigned qubit " + std::to_string(q) +
                           " out of range for " + std::to_string(n) + " qubits");
    }
    if (v != 1 && v != -1) throw InvariantError("assignments must be +/-1");
  }
  const auto free = free_qubits_of(n, assignments);
  const std::uint64_t assigned = assigned_mask(assignments);
  const std::uint64_t negative = negative_assigned_mask(assignments);

  Restriction out{Hamiltonian(free.size()), h.constant()};
  for (const auto& [p, c] : h.terms()) {
    const int factor = assigned_factor(p, assigned, negative);
    if (factor == 0) continue;
    const PauliOperator reduced = compress(p, free);
    if (reduced.is_identity()) {
      out.offset += factor * c;
    } else {
      out.hamiltonian.add_term(reduced, factor * c);
    }
  }
  out.hamiltonian.prune();
  return out;
}

CSVQEProblem build_problem(const Hamiltonian& h, const QuasiModel& model,
                           const NoncontextualState& state,
                           std::span<const std::size_t> retained,
                           const SolverConfig& cfg) {
  validate(model, state);
  if (h.num_qubits() != model.num_qubits) {
    throw DimensionError("Hamiltonian has " + std::to_string(h.num_qubits()) +
                         " qubits, model has " + std::to_string(model.num_qubits));
  }
  std::set<std::size_t> keep(retained.begin(), retained.end());
  if (keep.size() != retained.size()) {
    throw DimensionError("retained generator indices repeat");
  }
  if (!keep.empty() && *keep.rbegin() >= model.num_generators()) {
    throw DimensionError("generator index " + std::to_string(*keep.rbegin()) +
                         " out of range for " +
                         std::to_string(model.num_generators()) + " generators");
  }

  CSVQEProblem p;
  p.num_qubits = h.num_qubits();
  p.retained.assign(keep.begin(), keep.end());
  std::vector<PauliOperator> gens;
  std::vector<int> q;
  std::uint64_t retained_mask = 0;
  for (std::size_t j : p.retained) {
    gens.push_back(model.generators[j]);
    q.push_back(state.q[j]);
    retained_mask |= std::uint64_t{1} << j;
  }
  p.plan = diagonalize_generators(p.num_qubits, gens);
  p.rotated_h = apply_plan(h, p.plan);
  p.generator_assignments = fix_generator_signs(p.plan, q);
  p.free_qubits = free_qubits_of(p.num_qubits, p.generator_assignments);
  p.restricted_h = with_offset(restrict(p.rotated_h, p.generator_assignments));
  p.nc_energy = evaluate_objective(model, state);

  const bool full_vqe = p.retained.empty() && cfg.drop_constraint_at_full_vqe;
  if (model.num_cliques() > 0 && !full_vqe) {
    Hamiltonian a(p.num_qubits);
    for (std::size_t i = 0; i < model.num_cliques(); ++i) {
      a.add_term(model.clique_reps[i], state.r[i]);
    }
    p.a_restricted = with_offset(restrict(apply_plan(a, p.plan), p.generator_assignments));
  }

  // Terms left for the quantum correction.
  std::set<PauliOperator> determined;
  for (const auto& rec : model.records) {
    const bool clique_fixed = !rec.clique || p.a_restricted.has_value();
    if ((rec.generators & ~retained_mask) == 0 && clique_fixed) {
      determined.insert(rec.pauli);
    }
  }
  Hamiltonian correction(p.num_qubits);
  for (const auto& [pauli, c] : h.terms()) {
    if (!determined.contains(pauli)) correction.add_term(pauli, c);
  }
  p.restricted_contextual =
      restrict(apply_plan(correction, p.plan), p.generator_assignments).hamiltonian;
  return p;
}

EigenResult solve_state(const CSVQEProblem& p, const SolverConfig& cfg) {
  return lowest_eigenpair(p.restricted_h, p.a_restricted, cfg.eigen);
}

double solve(const CSVQEProblem& p, const SolverConfig& cfg) {
  return solve_state(p, cfg).value;
}

WitnessResult zero_expectation_witness(const CSVQEProblem& p,
                                       std::span<const PauliOperator> s_c,
                                       const WitnessConfig& cfg) {
  const std::size_t n2 = p.num_free_qubits();
  if (n2 > cfg.dense_limit) {
    throw ResourceError(std::to_string(n2) +
                        " free qubits exceed the witness limit of " +
                        std::to_string(cfg.dense_limit));
  }
  const auto dim = Eigen::Index{1} << n2;
  const Eigen::MatrixXcd v = p.a_restricted
                                 ? plus_eigenspace(*p.a_restricted, cfg.dense_limit)
                                 : Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::Index d = v.cols();

  // Reduced operators M_P = V^dagger P|_{H2} V.
  const std::uint64_t assigned = assigned_mask(p.generator_assignments);
  const std::uint64_t negative = negative_assigned_mask(p.generator_assignments);
  std::vector<Eigen::MatrixXcd> ops;
  for (const auto& original : s_c) {
    if (original.num_qubits() != p.num_qubits) {
      throw DimensionError("operator " + original.str() + " does not act on " +
                           std::to_string(p.num_qubits) + " qubits");
    }
    const PauliOperator rotated = apply_plan(original.unsigned_part(), p.plan);
    const int factor = assigned_factor(rotated, assigned, negative);
    if (factor == 0) continue;
    const PauliOperator reduced = compress(rotated, p.free_qubits);
    ops.push_back(static_cast<double>(factor) * v.adjoint() *
                  to_dense_matrix(reduced, cfg.dense_limit) * v);
  }

  // Mixed states are searched as purifications: a d x rank matrix C with
  // rho = C C^dagger / |C|^2. Rank one is tried first so that a pure witness
  // is returned whenever one is found; some instances (e.g. X, Y and Z of one
  // free qubit) admit only mixed witnesses.
  WitnessResult best;
  best.objective = std::numeric_limits<double>::infinity();
  const auto k = static_cast<Eigen::Index>(ops.size());
  auto residuals = [&](const Eigen::MatrixXcd& x) {
    Eigen::VectorXd e(k);
    for (Eigen::Index a = 0; a < k; ++a) {
      e[a] = (x.adjoint() * ops[static_cast<std::size_t>(a)] * x).trace().real();
    }
    return e;
  };
  std::vector<Eigen::Index> ranks{1};
  if (d > 1) ranks.push_back(d);
  for (const Eigen::Index rank : ranks) {
    const Eigen::Index m = d * rank;
    for (std::size_t restart = 0; restart < std::max<std::size_t>(1, cfg.restarts);
         ++restart) {
      auto rng = stream_engine(cfg.seed, restart + (rank > 1 ? cfg.restarts : 0));
      std::normal_distribution<double> normal;
      Eigen::MatrixXcd c(d, rank);
      for (Eigen::Index j = 0; j < rank; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) c(i, j) = {normal(rng), normal(rng)};
      }
      c /= c.norm();

      Eigen::VectorXd e = residuals(c);
      double f = e.squaredNorm();
      double lambda = 1e-3;
      for (std::size_t it = 0; it < cfg.max_iterations && f > 1e-2 * cfg.target; ++it) {
        // Rows are gradients of e_P w.r.t. (Re C, Im C) at |C| = 1.
        Eigen::MatrixXd jac(k, 2 * m);
        for (Eigen::Index a = 0; a < k; ++a) {
          const Eigen::MatrixXcd w =
              2.0 * (ops[static_cast<std::size_t>(a)] * c - e[a] * c);
          const auto flat = w.reshaped();
          jac.row(a).head(m) = flat.real().transpose();
          jac.row(a).tail(m) = flat.imag().transpose();
        }
        const Eigen::MatrixXd jjt = jac * jac.transpose();
        bool improved = false;
        for (int tries = 0; tries < 20 && !improved; ++tries) {
          Eigen::MatrixXd lhs = jjt;
          lhs.diagonal().array() += lambda;
          const Eigen::VectorXd step = -jac.transpose() * lhs.ldlt().solve(e);
          Eigen::MatrixXcd trial = c;
          auto flat = trial.reshaped();
          for (Eigen::Index i = 0; i < m; ++i) {
            flat[i] += std::complex<double>(step[i], step[m + i]);
          }
          trial /= trial.norm();
          const Eigen::VectorXd e_trial = residuals(trial);
          const double f_trial = e_trial.squaredNorm();
          if (f_trial < f) {
            c = std::move(trial);
            e = e_trial;
            f = f_trial;
            lambda = std::max(lambda * 0.3, 1e-12);
            improved = true;
          } else {
            lambda *= 10.0;
          }
        }
        if (!improved) break;
      }
      if (f < best.objective) {
        best.objective = f;
        best.state = v * c;
      }
      if (best.objective < cfg.target) break;
    }
    if (best.objective < cfg.target) break;
  }
  best.converged = best.objective < cfg.target;
  return best;
}

StateVector lift_state(const CSVQEProblem& p, const StateVector& free_state) {
  const std::size_t n = p.num_qubits;
  const std::size_t n2 = p.num_free_qubits();
  if (free_state.size() != (Eigen::Index{1} << n2)) {
    throw DimensionError("free-register state has the wrong length");
  }
  // Qubit q is bit (n - 1 - q) of the basis index; Z eigenvalue -1 is |1>.
  std::uint64_t fixed_bits = 0;
  for (const auto& [q, v] : p.generator_assignments) {
    if (v < 0) fixed_bits |= std::uint64_t{1} << (n - 1 - q);
  }
  StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
  for (std::uint64_t b2 = 0; b2 < (std::uint64_t{1} << n2); ++b2) {
    std::uint64_t b = fixed_bits;
    for (std::size_t k = 0; k < n2; ++k) {
      if ((b2 >> (n2 - 1 - k)) & 1U) b |= std::uint64_t{1} << (n - 1 - p.free_qubits[k]);
    }
    psi[static_cast<Eigen::Index>(b)] = free_state[static_cast<Eigen::Index>(b2)];
  }
  // Undo D: apply exp(-i angle/2 J) for the steps in reverse order.
  StateVector scratch;
  for (auto it = p.plan.steps.rbegin(); it != p.plan.steps.rend(); ++it) {
    Hamiltonian j(n);
    j.add_term(it->generator, 1.0);
    PauliMatvec(j).apply(psi, scratch);
    const double half = 0.5 * it->effective_angle();
    psi = std::cos(half) * psi - std::complex<double>(0.0, std::sin(half)) * scratch;
  }
  return psi;
}

Eigen::MatrixXcd lift_state(const CSVQEProblem& p, const Eigen::MatrixXcd& components) {
  Eigen::MatrixXcd out(Eigen::Index{1} << p.num_qubits, components.cols());
  for (Eigen::Index j = 0; j < components.cols(); ++j) {
    out.col(j) = lift_state(p, StateVector(components.col(j)));
  }
  return out;
}

}  // namespace csvqe
