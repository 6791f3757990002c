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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "csvqe/bench.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/errors.hpp"
#include "csvqe/quasi_model.hpp"
#include "csvqe/rotations.hpp"
#include "test_util.hpp"

namespace csvqe {
namespace {

using testing::dense_hamiltonian;
using testing::dense_pauli;
using testing::dense_plan;
using testing::Mat;

PauliOperator P(const char* s) { return PauliOperator::from_string(s); }

void expect_targets_hold(const RotationPlan& plan) {
  const Mat u = dense_plan(plan);
  for (const auto& t : plan.targets) {
    EXPECT_EQ(apply_plan(t.source, plan), t.image);
    EXPECT_LT((u * dense_pauli(t.source) * u.adjoint() - dense_pauli(t.image)).norm(), 1e-10);
  }
}

TEST(Diagonalize, SingleX) {
  const std::vector<PauliOperator> g = {P("X")};
  const auto plan = diagonalize_generators(1, g);
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].generator, P("Y"));
  EXPECT_TRUE(plan.steps[0].is_clifford());
  EXPECT_EQ(plan.targets[0].image, P("Z"));
  EXPECT_EQ(plan.targets[0].qubit, 0u);
  expect_targets_hold(plan);
}

TEST(Diagonalize, AlreadySingleZ) {
  const std::vector<PauliOperator> g = {P("ZI")};
  const auto plan = diagonalize_generators(2, g);
  EXPECT_TRUE(plan.steps.empty());
  EXPECT_EQ(plan.targets[0].image, P("ZI"));
}

TEST(Diagonalize, TwoQubitZZ) {
  const std::vector<PauliOperator> g = {P("ZZ")};
  const auto plan = diagonalize_generators(2, g);
  ASSERT_EQ(plan.steps.size(), 2u);
  EXPECT_EQ(plan.steps[0].generator, P("YI"));
  EXPECT_EQ(plan.steps[1].generator, P("YZ"));
  EXPECT_EQ(plan.targets[0].image, P("-ZI"));
  expect_targets_hold(plan);
}

TEST(Diagonalize, RandomGeneratorSets) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto g = testing::random_commuting_generators(n, 1 + rng() % n, rng);
    const auto plan = diagonalize_generators(n, g);
    EXPECT_LE(plan.steps.size(), 2 * g.size());
    ASSERT_EQ(plan.targets.size(), g.size());
    std::set<std::size_t> qubits;
    for (const auto& t : plan.targets) {
      EXPECT_TRUE(t.image.is_diagonal());
      EXPECT_EQ(t.image.weight(), 1u);
      EXPECT_TRUE(t.image.letter(t.qubit) == 'Z');
      qubits.insert(t.qubit);
    }
    EXPECT_EQ(qubits.size(), g.size());
    expect_targets_hold(plan);
  }
}

TEST(Diagonalize, RejectsBadInput) {
  const std::vector<PauliOperator> dependent = {P("ZI"), P("IZ"), P("ZZ")};
  EXPECT_THROW(diagonalize_generators(2, dependent), InvariantError);
  const std::vector<PauliOperator> clash = {P("XI"), P("ZI")};
  EXPECT_THROW(diagonalize_generators(2, clash), InvariantError);
  const std::vector<PauliOperator> wrong = {P("Z")};
  EXPECT_THROW(diagonalize_generators(2, wrong), DimensionError);
}

TEST(UnitaryPartitioning, XYHalfHalf) {
  const std::vector<PauliOperator> a = {P("X"), P("Y")};
  const std::vector<double> r = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  const auto plan = unitary_partitioning(a, r);
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].generator, P("Z"));
  EXPECT_NEAR(plan.steps[0].angle, std::numbers::pi / 4, 1e-15);
  Hamiltonian h(1);
  h.add_term("X", r[0]);
  h.add_term("Y", r[1]);
  const Hamiltonian out = apply_plan(h, plan);
  EXPECT_EQ(out.size(), 1u);
  EXPECT_NEAR(out.coefficient(P("X")), 1.0, 1e-12);
  const Mat u = dense_plan(plan);
  EXPECT_LT((u * dense_hamiltonian(h) * u.adjoint() - dense_pauli(P("X"))).norm(), 1e-12);
}

TEST(UnitaryPartitioning, SingleOperatorNeedsNoSteps) {
  const std::vector<PauliOperator> a = {P("XZ")};
  const std::vector<double> r = {1.0};
  EXPECT_TRUE(unitary_partitioning(a, r).steps.empty());
}

TEST(UnitaryPartitioning, CollapsesRandomFamilies) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto a = trial < 50 ? std::vector<PauliOperator>{P("X"), P("Y"), P("Z")}
                              : testing::random_anticommuting(n, 2 + rng() % 5, rng);
    const std::size_t qubits = a.front().num_qubits();
    const auto r = testing::random_unit_vector(a.size(), rng);
    const auto plan = unitary_partitioning(a, r);
    EXPECT_EQ(plan.steps.size(), a.size() - 1);
    Hamiltonian h(qubits);
    for (std::size_t i = 0; i < a.size(); ++i) h.add_term(a[i], r[i]);
    const Hamiltonian out = apply_plan(h, plan);
    EXPECT_EQ(out.size(), 1u);
    EXPECT_NEAR(out.coefficient(a.front()), 1.0, 1e-10);
    const Mat u = dense_plan(plan);
    EXPECT_LT((u * dense_hamiltonian(h) * u.adjoint() - dense_pauli(a.front())).norm(), 1e-10);
  }
}

TEST(UnitaryPartitioning, RejectsBadInput) {
  const std::vector<PauliOperator> commuting = {P("XI"), P("IX")};
  const std::vector<double> r = {0.6, 0.8};
  EXPECT_THROW(unitary_partitioning(commuting, r), InvariantError);
  const std::vector<PauliOperator> a = {P("X"), P("Z")};
  const std::vector<double> bad = {0.6, 0.6};
  EXPECT_THROW(unitary_partitioning(a, bad), InvariantError);
}

TEST(ApplyPlan, MatchesDenseConjugationAndRoundTrips) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Hamiltonian h = testing::random_hamiltonian(n, 8, rng);
    RotationPlan plan;
    plan.num_qubits = n;
    for (int k = 0; k < 4; ++k) {
      const auto g = testing::random_pauli(n, rng);
      plan.steps.push_back(k % 2 ? RotationStep::quarter_turn(g)
                                 : RotationStep::continuous(g, angle(rng)));
    }
    const Hamiltonian out = apply_plan(h, plan);
    const Mat u = dense_plan(plan);
    EXPECT_LT((u * dense_hamiltonian(h) * u.adjoint() - dense_hamiltonian(out)).cwiseAbs().maxCoeff(),
              1e-10);
    const Hamiltonian back = apply_plan(out, plan.inverse());
    EXPECT_LT((dense_hamiltonian(back) - dense_hamiltonian(h)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ApplyPlan, EmptyPlanAndDimensionCheck) {
  std::mt19937_64 rng(1);
  const Hamiltonian h = testing::random_hamiltonian(3, 5, rng);
  RotationPlan plan;
  plan.num_qubits = 3;
  EXPECT_EQ(apply_plan(h, plan), h);
  plan.num_qubits = 2;
  EXPECT_THROW(apply_plan(h, plan), DimensionError);
}

TEST(ApplyPlan, ExampleGeneratorNeedsNoRotation) {
  std::mt19937_64 rng(2);
  const auto h = random_example_hamiltonian(rng);
  const auto m = build_model(decompose(h, example_noncontextual_terms()));
  const auto plan = diagonalize_generators(3, m.generators);
  EXPECT_TRUE(plan.steps.empty());
  EXPECT_EQ(apply_plan(h, plan), h);
  const std::vector<int> q = {-1};
  EXPECT_EQ(fix_generator_signs(plan, q), (std::map<std::size_t, int>{{0, -1}}));
}

TEST(FixSigns, CombinesRotationSignAndValue) {
  const std::vector<PauliOperator> plus = {P("X")};
  const auto plan_plus = diagonalize_generators(1, plus);  // image +Z
  const std::vector<PauliOperator> minus = {P("ZZ")};
  const auto plan_minus = diagonalize_generators(2, minus);  // image -ZI
  const std::vector<int> q = {-1};
  EXPECT_EQ(fix_generator_signs(plan_plus, q).at(0), -1);
  EXPECT_EQ(fix_generator_signs(plan_minus, q).at(0), 1);
  const std::vector<int> two = {1, 1};
  EXPECT_THROW(fix_generator_signs(plan_plus, two), DimensionError);
}

}  // namespace
}  // namespace csvqe
