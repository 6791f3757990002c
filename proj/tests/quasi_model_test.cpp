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
#include <random>

#include "csvqe/bench.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/errors.hpp"
#include "csvqe/oracle.hpp"
#include "csvqe/quasi_model.hpp"
#include "test_util.hpp"

namespace csvqe {
namespace {

PauliOperator P(const char* s) { return PauliOperator::from_string(s); }

QuasiModel model_of(const Hamiltonian& h) {
  return build_model(decompose(h, h.paulis()));
}

TEST(QuasiModel, ExampleStructure) {
  std::mt19937_64 rng(1);
  const auto h = random_example_hamiltonian(rng);
  const auto m = build_model(decompose(h, example_noncontextual_terms()));
  ASSERT_EQ(m.generators.size(), 1u);
  EXPECT_EQ(m.generators[0], P("ZII"));
  const std::vector<PauliOperator> reps = {P("IXI"), P("IYI"), P("IZX"), P("IZY"), P("IZZ")};
  EXPECT_EQ(m.clique_reps, reps);
  EXPECT_EQ(m.records.size(), 11u);
  // Objective: h_ZII q + sum_i (h_Ai + h_{Z Ai} q) r_i.
  ASSERT_EQ(m.terms.size(), 2u);
  EXPECT_EQ(m.terms[1].generators, 1u);
  EXPECT_DOUBLE_EQ(m.terms[1].constant_part, h.coefficient(P("ZII")));
  EXPECT_DOUBLE_EQ(m.terms[1].clique_part[0], h.coefficient(P("ZXI")));
  EXPECT_DOUBLE_EQ(m.terms[0].clique_part[2], h.coefficient(P("IZX")));
}

TEST(QuasiModel, DiagonalModel) {
  Hamiltonian h(2);
  h.add_term("ZI", 0.5);
  h.add_term("IZ", -0.25);
  h.add_term("ZZ", 0.75);
  const auto m = model_of(h);
  EXPECT_EQ(m.num_generators(), 2u);
  EXPECT_EQ(m.num_cliques(), 0u);
  const auto g = find_ground_state(m);
  // q = (ZI, IZ) = (-1, +1): -0.5 - 0.25 - 0.75.
  EXPECT_NEAR(g.energy, -1.5, 1e-12);
  EXPECT_TRUE(g.exhaustive);
}

TEST(QuasiModel, SingleZ) {
  Hamiltonian h(1);
  h.add_term("Z", 0.7);
  EXPECT_NEAR(find_ground_state(model_of(h)).energy, -0.7, 1e-15);
}

TEST(QuasiModel, NoGeneratorsGivesNormOfCliqueVector) {
  Hamiltonian h(1, 0.1);
  h.add_term("X", 0.3);
  h.add_term("Z", -0.4);
  const auto m = model_of(h);
  EXPECT_EQ(m.num_generators(), 0u);
  EXPECT_EQ(m.num_cliques(), 2u);
  const auto g = find_ground_state(m);
  EXPECT_NEAR(g.energy, 0.1 - 0.5, 1e-15);
  EXPECT_NEAR(g.state.r[0], -0.6, 1e-15);
  EXPECT_NEAR(g.state.r[1], 0.8, 1e-15);
}

TEST(QuasiModel, DegenerateCliqueVector) {
  // Cliques {XI, XZ} and {ZI, ZZ} with generator IZ: at q = -1 both clique
  // coefficients cancel.
  Hamiltonian h(2);
  h.add_term("XI", 0.5);
  h.add_term("XZ", 0.5);
  h.add_term("ZI", 0.3);
  h.add_term("ZZ", 0.3);
  const auto m = model_of(h);
  ASSERT_EQ(m.generators, std::vector<PauliOperator>{P("IZ")});
  const auto flat = optimal_clique_vector(m, 1);
  EXPECT_EQ(flat.energy, 0.0);
  EXPECT_EQ(flat.r, (std::vector<double>{1.0, 0.0}));
  const auto g = find_ground_state(m);
  EXPECT_NEAR(g.energy, -std::hypot(1.0, 0.6), 1e-15);
  EXPECT_EQ(g.state.q, std::vector<int>{1});
}

TEST(QuasiModel, ExpectationsReproduceObjective) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto h = testing::random_noncontextual_hamiltonian(n, n - 1, 10, rng);
    const auto m = model_of(h);
    NoncontextualState s;
    for (std::size_t j = 0; j < m.num_generators(); ++j) s.q.push_back(rng() & 1U ? 1 : -1);
    s.r = testing::random_unit_vector(m.num_cliques(), rng);
    double total = h.constant();
    for (const auto& [p, c] : h.terms()) total += c * expectation_of_pauli(m, s, p);
    EXPECT_NEAR(total, evaluate_objective(m, s), 1e-12);
    // Signs on the input operator carry through.
    const auto first = h.paulis().front();
    EXPECT_DOUBLE_EQ(expectation_of_pauli(m, s, first.negated()),
                     -expectation_of_pauli(m, s, first));
  }
}

TEST(QuasiModel, ModelReproducesNoncontextualHamiltonian) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testing::random_noncontextual_hamiltonian(4, 3, 12, rng);
    const auto m = model_of(h);
    EXPECT_EQ(noncontextual_hamiltonian(m), h);
    for (const auto& rec : m.records) {
      PauliOperator rebuilt = m.basis.product(rec.generators);
      if (rec.clique) rebuilt = rebuilt * m.clique_reps[*rec.clique];
      if (rec.sign < 0) rebuilt = rebuilt.negated();
      EXPECT_EQ(rebuilt, rec.pauli);
    }
  }
}

TEST(QuasiModel, ExhaustiveMatchesOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_example_hamiltonian(rng);
    const auto m = build_model(decompose(h, example_noncontextual_terms()));
    EXPECT_NEAR(find_ground_state(m).energy, brute_force_nc_ground(m).energy, 1e-12);
  }
}

TEST(QuasiModel, AnnealingFindsOracleOptimum) {
  std::mt19937_64 rng(9);
  GroundStateConfig cfg;
  cfg.brute_force_threshold = 0;  // force the stochastic path
  cfg.restarts = 8;
  cfg.steps_per_generator = 2000;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + trial % 7;
    const auto h = testing::random_noncontextual_hamiltonian(n, n - 1, 3 * n, rng);
    const auto m = model_of(h);
    const auto annealed = find_ground_state(m, cfg);
    EXPECT_FALSE(annealed.exhaustive);
    EXPECT_NEAR(annealed.energy, brute_force_nc_ground(m).energy, 1e-9);
    EXPECT_NEAR(annealed.energy, evaluate_objective(m, annealed.state), 1e-12);
  }
}

TEST(QuasiModel, GroundStateIsDeterministic) {
  std::mt19937_64 rng(10);
  const auto h = testing::random_noncontextual_hamiltonian(8, 7, 20, rng);
  const auto m = model_of(h);
  GroundStateConfig cfg;
  cfg.brute_force_threshold = 0;
  cfg.seed = 42;
  cfg.steps_per_generator = 500;
  const auto a = find_ground_state(m, cfg);
  const auto b = find_ground_state(m, cfg);
  EXPECT_EQ(a.state.q, b.state.q);
  EXPECT_EQ(a.energy, b.energy);
}

TEST(QuasiModel, StateValidation) {
  std::mt19937_64 rng(2);
  const auto h = random_example_hamiltonian(rng);
  const auto m = build_model(decompose(h, example_noncontextual_terms()));
  NoncontextualState s{{1}, {1, 0, 0, 0, 0}};
  EXPECT_NO_THROW(validate(m, s));
  EXPECT_THROW(validate(m, NoncontextualState{{1, 1}, s.r}), DimensionError);
  EXPECT_THROW(validate(m, NoncontextualState{{1}, {1, 1, 0, 0, 0}}), InvariantError);
  EXPECT_THROW(validate(m, NoncontextualState{{0}, s.r}), InvariantError);
}

TEST(QuasiModel, RejectsInvalidDecomposition) {
  auto d = decompose(example_noncontextual_terms());
  std::swap(d.cliques[0][0], d.cliques[1][0]);
  EXPECT_THROW(build_model(d), ModelError);
}

TEST(QuasiModel, UpperBoundsExactEnergy) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_example_hamiltonian(rng);
    const auto m = build_model(decompose(h, example_noncontextual_terms()));
    const double exact = testing::lowest_eigenvalue(testing::dense_hamiltonian(h));
    EXPECT_GE(find_ground_state(m).energy, exact - 1e-9);
  }
}

}  // namespace
}  // namespace csvqe
