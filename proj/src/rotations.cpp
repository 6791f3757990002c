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

#include "csvqe/rotations.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "csvqe/errors.hpp"
#include "csvqe/pauli_group.hpp"

namespace csvqe {

namespace {

bool is_single_z(const PauliOperator& p) {
  return p.x_bits() == 0 && std::popcount(p.z_bits()) == 1;
}

std::size_t lowest_qubit(std::uint64_t bits) {
  return static_cast<std::size_t>(std::countr_zero(bits));
}

std::uint64_t qubit_bit(std::size_t q) { return std::uint64_t{1} << q; }

}  // namespace

bool RotationPlan::is_clifford() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const auto& s) { return s.is_clifford(); });
}

RotationPlan RotationPlan::inverse() const {
  RotationPlan out;
  out.num_qubits = num_qubits;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.steps.push_back(it->inverse());
  }
  return out;
}

std::uint64_t RotationPlan::target_mask() const {
  std::uint64_t mask = 0;
  for (const auto& t : targets) mask |= qubit_bit(t.qubit);
  return mask;
}

RotationPlan diagonalize_generators(std::size_t num_qubits,
                                    std::span<const PauliOperator> g) {
  PauliGroupBasis basis(num_qubits);
  for (const auto& p : g) {
    if (p.num_qubits() != num_qubits) {
      throw DimensionError("generator " + p.str() + " does not act on " +
                           std::to_string(num_qubits) + " qubits");
    }
    if (!basis.insert(p)) {
      throw InvariantError("generator " + p.signed_str() +
                           " depends on the preceding generators");
    }
  }

  RotationPlan plan;
  plan.num_qubits = num_qubits;
  std::vector<PauliOperator> images(g.begin(), g.end());
  std::uint64_t used = 0;
  auto rotate = [&](const PauliOperator& generator, std::size_t from) {
    plan.steps.push_back(RotationStep::quarter_turn(generator));
    for (std::size_t k = from; k < images.size(); ++k) {
      images[k] = conjugate_by_rotation(images[k], plan.steps.back());
    }
  };

  for (std::size_t i = 0; i < images.size(); ++i) {
    // Images commute with every claimed Z, so they are I or Z there.
    if (!(is_single_z(images[i]) && (images[i].z_bits() & used) == 0)) {
      if (images[i].is_diagonal()) {
        const std::uint64_t free_z = images[i].z_bits() & ~used;
        const std::size_t m = lowest_qubit(free_z);
        rotate(PauliOperator::single(num_qubits, m, 'Y'), i);
      }
      const PauliOperator& b = images[i];
      const std::size_t p = lowest_qubit(b.x_bits());
      const PauliOperator j(num_qubits, b.x_bits(), b.z_bits() ^ qubit_bit(p));
      rotate(j, i);
    }
    const PauliOperator& image = images[i];
    if (!is_single_z(image) || (image.z_bits() & used) != 0) {
      throw InvariantError("generator " + g[i].str() +
                           " did not map to a fresh single-qubit Z");
    }
    used |= image.z_bits();
    plan.targets.push_back(
        GeneratorTarget{g[i], image, lowest_qubit(image.z_bits())});
  }
  return plan;
}

RotationPlan unitary_partitioning(std::span<const PauliOperator> clique_reps,
                                  std::span<const double> r) {
  if (clique_reps.empty()) {
    throw InvariantError("unitary partitioning needs at least one operator");
  }
  if (clique_reps.size() != r.size()) {
    throw DimensionError("got " + std::to_string(clique_reps.size()) +
                         " operators and " + std::to_string(r.size()) +
                         " coefficients");
  }
  const std::size_t n = clique_reps.front().num_qubits();
  for (std::size_t a = 0; a < clique_reps.size(); ++a) {
    if (clique_reps[a].num_qubits() != n) {
      throw DimensionError("operators act on different qubit counts");
    }
    for (std::size_t b = a + 1; b < clique_reps.size(); ++b) {
      if (commutes(clique_reps[a], clique_reps[b])) {
        throw InvariantError(clique_reps[a].str() + " and " +
                             clique_reps[b].str() + " commute");
      }
    }
  }
  double norm2 = 0.0;
  for (double v : r) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw InvariantError("coefficient vector is not a unit vector");
  }

  RotationPlan plan;
  plan.num_qubits = n;
  const PauliOperator& a0 = clique_reps.front();
  double c0 = r[0] * a0.sign();
  for (std::size_t k = clique_reps.size() - 1; k >= 1; --k) {
    const PauliOperator& ak = clique_reps[k];
    const double ck = r[k] * ak.sign();
    const PauliOperator base_a0 = a0.unsigned_part();
    // i A_0 A_k is Hermitian because the two anticommute.
    PauliOperator gen = multiply(base_a0, ak.unsigned_part());
    gen = gen.with_phase(gen.phase_exp() + 1);
    double angle = std::atan2(-ck, c0);
    if (gen.sign() < 0) {
      gen = gen.unsigned_part();
      angle = -angle;
    }
    plan.steps.push_back(RotationStep::continuous(gen, angle));
    c0 = std::hypot(c0, ck);
  }
  return plan;
}

Hamiltonian apply_plan(const Hamiltonian& h, const RotationPlan& plan) {
  if (h.num_qubits() != plan.num_qubits) {
    throw DimensionError("plan acts on " + std::to_string(plan.num_qubits) +
                         " qubits, Hamiltonian on " +
                         std::to_string(h.num_qubits()));
  }
  Hamiltonian out = h;
  for (const auto& step : plan.steps) out = conjugate_by_rotation(out, step);
  return out;
}

PauliOperator apply_plan(const PauliOperator& p, const RotationPlan& plan) {
  if (p.num_qubits() != plan.num_qubits) {
    throw DimensionError("plan acts on " + std::to_string(plan.num_qubits) +
                         " qubits, operator on " +
                         std::to_string(p.num_qubits()));
  }
  PauliOperator out = p;
  for (const auto& step : plan.steps) out = conjugate_by_rotation(out, step);
  return out;
}

std::map<std::size_t, int> fix_generator_signs(const RotationPlan& plan,
                                               std::span<const int> q) {
  if (q.size() != plan.targets.size()) {
    throw DimensionError("plan has " + std::to_string(plan.targets.size()) +
                         " generators, got " + std::to_string(q.size()) +
                         " values");
  }
  std::map<std::size_t, int> out;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] != 1 && q[j] != -1) {
      throw InvariantError("generator values must be +/-1");
    }
    out[plan.targets[j].qubit] = plan.targets[j].image.sign() * q[j];
  }
  return out;
}

}  // namespace csvqe
