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

#include "csvqe/quasi_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "csvqe/errors.hpp"
#include "csvqe/rng.hpp"

namespace csvqe {

namespace {

int parity_sign(std::uint64_t generators, std::uint64_t negative_mask) {
  return (std::popcount(generators & negative_mask) & 1) ? -1 : 1;
}

}  // namespace

std::uint64_t NoncontextualState::negative_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] < 0) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

void validate(const QuasiModel& m, const NoncontextualState& s) {
  if (s.q.size() != m.num_generators()) {
    throw DimensionError("state has " + std::to_string(s.q.size()) +
                         " generator values, model has " +
                         std::to_string(m.num_generators()) + " generators");
  }
  if (s.r.size() != m.num_cliques()) {
    throw DimensionError("state has " + std::to_string(s.r.size()) +
                         " clique values, model has " +
                         std::to_string(m.num_cliques()) + " cliques");
  }
  for (int v : s.q) {
    if (v != 1 && v != -1) throw InvariantError("generator values must be +/-1");
  }
  if (!s.r.empty()) {
    double norm2 = 0.0;
    for (double v : s.r) norm2 += v * v;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      throw InvariantError("clique vector r is not a unit vector");
    }
  }
}

QuasiModel build_model(const NoncontextualDecomposition& d) {
  try {
    validate(d);
  } catch (const InvariantError& e) {
    throw ModelError(std::string("invalid decomposition: ") + e.what());
  }
  QuasiModel m;
  m.num_qubits = d.source.num_qubits();
  m.constant = d.source.constant();
  m.basis = PauliGroupBasis(m.num_qubits);
  for (const auto& clique : d.cliques) m.clique_reps.push_back(clique.front());

  for (const auto& z : d.z_set) m.basis.insert(z);
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    for (const auto& member : d.cliques[i]) {
      if (member == m.clique_reps[i]) continue;
      m.basis.insert(multiply(m.clique_reps[i], member).unsigned_part());
    }
  }
  m.generators = m.basis.generators();

  const std::size_t n_cliques = m.clique_reps.size();
  std::map<std::uint64_t, ObjectiveTerm> by_mask;
  auto entry = [&](std::uint64_t mask) -> ObjectiveTerm& {
    auto [it, inserted] = by_mask.try_emplace(mask);
    if (inserted) {
      it->second.generators = mask;
      it->second.clique_part.assign(n_cliques, 0.0);
    }
    return it->second;
  };
  if (m.constant != 0.0) entry(0).constant_part += m.constant;

  for (const auto& z : d.z_set) {
    auto dec = m.basis.decompose(z);
    if (!dec) throw ModelError("Z-set member " + z.str() + " outside the generator span");
    const double h = d.source.coefficient(z);
    entry(dec->generators).constant_part += dec->sign * h;
    m.records.push_back(TermRecord{z, h, dec->generators, dec->sign, std::nullopt});
  }
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    for (const auto& member : d.cliques[i]) {
      // member * A_i lies in the generator group; member = that * A_i.
      auto dec = m.basis.decompose(multiply(member, m.clique_reps[i]));
      if (!dec) {
        throw ModelError("clique member " + member.str() +
                         " is not a group element times its representative");
      }
      const double h = d.source.coefficient(member);
      entry(dec->generators).clique_part[i] += dec->sign * h;
      m.records.push_back(TermRecord{member, h, dec->generators, dec->sign, i});
    }
  }
  for (auto& [mask, term] : by_mask) m.terms.push_back(std::move(term));

  for (std::size_t i = 0; i < n_cliques; ++i) {
    for (std::size_t k = i + 1; k < n_cliques; ++k) {
      if (commutes(m.clique_reps[i], m.clique_reps[k])) {
        throw ModelError("clique representatives " + m.clique_reps[i].str() +
                         " and " + m.clique_reps[k].str() + " commute");
      }
    }
    for (const auto& g : m.generators) {
      if (!commutes(g, m.clique_reps[i])) {
        throw ModelError("generator " + g.str() +
                         " anticommutes with representative " +
                         m.clique_reps[i].str());
      }
    }
  }
  return m;
}

Hamiltonian noncontextual_hamiltonian(const QuasiModel& m) {
  Hamiltonian h(m.num_qubits, m.constant);
  for (const auto& rec : m.records) h.add_term(rec.pauli, rec.coefficient);
  return h;
}

double evaluate_objective(const QuasiModel& m, const NoncontextualState& s) {
  validate(m, s);
  const std::uint64_t neg = s.negative_mask();
  double total = 0.0;
  for (const auto& t : m.terms) {
    double value = t.constant_part;
    for (std::size_t i = 0; i < t.clique_part.size(); ++i) {
      value += t.clique_part[i] * s.r[i];
    }
    total += value * parity_sign(t.generators, neg);
  }
  return total;
}

double expectation_of_pauli(const QuasiModel& m, const NoncontextualState& s,
                            const PauliOperator& p) {
  validate(m, s);
  if (p.num_qubits() != m.num_qubits) {
    throw DimensionError("operator " + p.str() + " does not act on " +
                         std::to_string(m.num_qubits) + " qubits");
  }
  if (!p.is_hermitian()) {
    throw InvariantError("expectation of non-Hermitian " + p.signed_str());
  }
  for (const auto& g : m.generators) {
    if (!commutes(g, p)) return 0.0;
  }
  const std::uint64_t neg = s.negative_mask();
  if (auto dec = m.basis.decompose(p)) {
    return dec->sign * parity_sign(dec->generators, neg);
  }
  for (std::size_t i = 0; i < m.num_cliques(); ++i) {
    if (auto dec = m.basis.decompose(multiply(p, m.clique_reps[i]))) {
      return dec->sign * parity_sign(dec->generators, neg) * s.r[i];
    }
  }
  return 0.0;
}

InnerOptimum optimal_clique_vector(const QuasiModel& m,
                                   std::uint64_t negative_mask) {
  const std::size_t n_cliques = m.num_cliques();
  double c0 = 0.0;
  std::vector<double> c(n_cliques, 0.0);
  for (const auto& t : m.terms) {
    const int sgn = parity_sign(t.generators, negative_mask);
    c0 += sgn * t.constant_part;
    for (std::size_t i = 0; i < n_cliques; ++i) c[i] += sgn * t.clique_part[i];
  }
  InnerOptimum out;
  if (n_cliques == 0) {
    out.energy = c0;
    return out;
  }
  double norm2 = 0.0;
  for (double v : c) norm2 += v * v;
  const double norm = std::sqrt(norm2);
  out.r.assign(n_cliques, 0.0);
  if (norm == 0.0) {
    out.r[0] = 1.0;
    out.energy = c0;
    return out;
  }
  for (std::size_t i = 0; i < n_cliques; ++i) out.r[i] = -c[i] / norm;
  out.energy = c0 - norm;
  return out;
}

namespace {

NoncontextualState state_from(std::uint64_t negative_mask, std::size_t m,
                              std::vector<double> r) {
  NoncontextualState s;
  s.q.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    s.q[j] = ((negative_mask >> j) & 1U) ? -1 : 1;
  }
  s.r = std::move(r);
  return s;
}

// Running c0(q) and c(q) under single-generator flips.
class AnnealingWalker {
 public:
  AnnealingWalker(const QuasiModel& m, std::uint64_t mask)
      : model_(m), mask_(mask), c_(m.num_cliques(), 0.0) {
    by_generator_.resize(m.num_generators());
    for (std::size_t t = 0; t < m.terms.size(); ++t) {
      const auto& term = m.terms[t];
      const int sgn = parity_sign(term.generators, mask_);
      c0_ += sgn * term.constant_part;
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += sgn * term.clique_part[i];
      for (std::size_t j = 0; j < m.num_generators(); ++j) {
        if ((term.generators >> j) & 1U) by_generator_[j].push_back(t);
      }
    }
    scratch_ = c_;
  }

  std::uint64_t mask() const { return mask_; }
  double energy() const { return energy_of(c0_, c_); }

  /// Energy after flipping generator j (state unchanged).
  double trial(std::size_t j) {
    trial_c0_ = c0_;
    scratch_ = c_;
    for (std::size_t t : by_generator_[j]) {
      const auto& term = model_.terms[t];
      const int sgn = parity_sign(term.generators, mask_);
      trial_c0_ -= 2.0 * sgn * term.constant_part;
      for (std::size_t i = 0; i < scratch_.size(); ++i) {
        scratch_[i] -= 2.0 * sgn * term.clique_part[i];
      }
    }
    return energy_of(trial_c0_, scratch_);
  }

  /// Commits the flip evaluated by the last trial(j).
  void accept(std::size_t j) {
    c0_ = trial_c0_;
    c_.swap(scratch_);
    mask_ ^= std::uint64_t{1} << j;
  }

 private:
  static double energy_of(double c0, const std::vector<double>& c) {
    if (c.empty()) return c0;
    double norm2 = 0.0;
    for (double v : c) norm2 += v * v;
    return c0 - std::sqrt(norm2);
  }

  const QuasiModel& model_;
  std::uint64_t mask_;
  double c0_ = 0.0;
  double trial_c0_ = 0.0;
  std::vector<double> c_;
  std::vector<double> scratch_;
  std::vector<std::vector<std::size_t>> by_generator_;
};

}  // namespace

GroundStateResult find_ground_state(const QuasiModel& m,
                                    const GroundStateConfig& cfg) {
  const std::size_t n_gen = m.num_generators();
  GroundStateResult best;
  best.energy = std::numeric_limits<double>::infinity();

  if (n_gen <= cfg.brute_force_threshold) {
    std::uint64_t best_mask = 0;
    const std::uint64_t count = std::uint64_t{1} << n_gen;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const double e = optimal_clique_vector(m, mask).energy;
      if (e < best.energy) {
        best.energy = e;
        best_mask = mask;
      }
    }
    auto inner = optimal_clique_vector(m, best_mask);
    best.state = state_from(best_mask, n_gen, std::move(inner.r));
    best.energy = inner.energy;
    best.exhaustive = true;
    return best;
  }

  const std::size_t steps = std::max<std::size_t>(1, cfg.steps_per_generator * n_gen);
  std::uint64_t best_mask = 0;
  for (std::size_t restart = 0; restart < std::max<std::size_t>(1, cfg.restarts);
       ++restart) {
    auto rng = stream_engine(cfg.seed, restart);
    std::uniform_int_distribution<std::size_t> pick(0, n_gen - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::uint64_t start =
        n_gen >= 64 ? rng() : (rng() & ((std::uint64_t{1} << n_gen) - 1));
    AnnealingWalker walker(m, start);

    // Initial temperature from the typical size of an uphill move.
    double scale = 0.0;
    const double e0 = walker.energy();
    for (std::size_t k = 0; k < 64; ++k) scale += std::abs(walker.trial(pick(rng)) - e0);
    scale /= 64.0;
    const double t_start = scale > 0.0 ? scale : 1.0;
    const double t_end = t_start * 1e-4;
    const double cooling = std::pow(t_end / t_start, 1.0 / static_cast<double>(steps));

    double temperature = t_start;
    double current = e0;
    if (current < best.energy) {
      best.energy = current;
      best_mask = walker.mask();
    }
    for (std::size_t step = 0; step < steps; ++step) {
      const std::size_t j = pick(rng);
      const double proposed = walker.trial(j);
      const double delta = proposed - current;
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        walker.accept(j);
        current = proposed;
        if (current < best.energy) {
          best.energy = current;
          best_mask = walker.mask();
        }
      }
      temperature *= cooling;
    }
  }
  auto inner = optimal_clique_vector(m, best_mask);
  best.state = state_from(best_mask, n_gen, std::move(inner.r));
  best.energy = inner.energy;
  best.exhaustive = false;
  return best;
}

}  // namespace csvqe
