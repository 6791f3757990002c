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
#include "csvqe/contextual_subspace.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/errors.hpp"
#include "csvqe/heuristics.hpp"
#include "csvqe/oracle.hpp"
#include "test_util.hpp"

namespace csvqe {
namespace {

using testing::dense_hamiltonian;
using testing::dense_pauli;
using testing::Mat;

PauliOperator P(const char* s) { return PauliOperator::from_string(s); }

CsvqeContext example_context(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ContextConfig cfg;
  cfg.noncontextual = example_noncontextual_terms();
  return CsvqeContext::create(random_example_hamiltonian(rng), cfg);
}

// Lowest energy over the original-frame subspace fixed by q_j G_j = +1 for
// the retained generators and, optionally, sum_i r_i A_i = +1.
double projector_oracle(const CsvqeContext& ctx, const std::vector<std::size_t>& retained,
                        bool constrain) {
  const std::size_t n = ctx.h.num_qubits();
  const auto dim = Eigen::Index{1} << n;
  const Mat id = Mat::Identity(dim, dim);
  Mat proj = id;
  for (std::size_t j : retained) {
    proj = proj * (id + ctx.ground.state.q[j] * dense_pauli(ctx.model.generators[j])) * 0.5;
  }
  if (constrain && ctx.model.num_cliques() > 0) {
    Mat a = Mat::Zero(dim, dim);
    for (std::size_t i = 0; i < ctx.model.num_cliques(); ++i) {
      a += ctx.ground.state.r[i] * dense_pauli(ctx.model.clique_reps[i]);
    }
    proj = proj * (id + a) * 0.5;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(proj);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (es.eigenvalues()[i] > 0.5) cols.push_back(i);
  }
  Mat v(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    v.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(cols[k]);
  }
  return testing::lowest_eigenvalue(v.adjoint() * dense_hamiltonian(ctx.h) * v);
}

TEST(Restrict, ExampleContextualTerms) {
  Hamiltonian hc(3);
  hc.add_term("IIX", 0.1);
  hc.add_term("IIY", 0.2);
  hc.add_term("IIZ", 0.3);
  const auto r = restrict(hc, {{0, -1}});
  EXPECT_EQ(r.hamiltonian.num_qubits(), 2u);
  EXPECT_DOUBLE_EQ(r.hamiltonian.coefficient(P("IX")), 0.1);
  EXPECT_DOUBLE_EQ(r.hamiltonian.coefficient(P("IY")), 0.2);
  EXPECT_DOUBLE_EQ(r.hamiltonian.coefficient(P("IZ")), 0.3);
  EXPECT_EQ(r.offset, 0.0);
}

TEST(Restrict, AssignedFactors) {
  Hamiltonian h(3, 0.5);
  h.add_term("ZII", 0.7);
  h.add_term("XII", 0.4);
  h.add_term("ZXI", 0.2);
  h.add_term("IXI", 0.3);
  const auto plus = restrict(h, {{0, 1}});
  EXPECT_DOUBLE_EQ(plus.offset, 1.2);
  EXPECT_DOUBLE_EQ(plus.hamiltonian.coefficient(P("XI")), 0.5);  // merged
  EXPECT_EQ(plus.hamiltonian.size(), 1u);
  const auto minus = restrict(h, {{0, -1}});
  EXPECT_DOUBLE_EQ(minus.offset, 0.5 - 0.7);
  EXPECT_DOUBLE_EQ(minus.hamiltonian.coefficient(P("XI")), 0.1);
  EXPECT_THROW(restrict(h, {{3, 1}}), DimensionError);
}

TEST(Restrict, ReproducesExpectationsOnStabilizedStates) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Hamiltonian h = testing::random_hamiltonian(n, 10, rng);
    std::map<std::size_t, int> a;
    for (std::size_t q = 0; q < n; ++q) {
      if (rng() % 2) a[q] = rng() % 2 ? 1 : -1;
    }
    if (a.size() == n) a.erase(a.begin());
    const auto r = restrict(h, a);
    // Random free state tensored with computational states on assigned qubits.
    const std::size_t n2 = n - a.size();
    StateVector free = StateVector::Zero(Eigen::Index{1} << n2);
    std::normal_distribution<double> normal;
    for (Eigen::Index i = 0; i < free.size(); ++i) free[i] = {normal(rng), normal(rng)};
    free.normalize();
    CSVQEProblem p;
    p.num_qubits = n;
    p.plan.num_qubits = n;
    p.generator_assignments = a;
    for (std::size_t q = 0; q < n; ++q) {
      if (!a.contains(q)) p.free_qubits.push_back(q);
    }
    const StateVector full = lift_state(p, free);
    const double want = full.dot(dense_hamiltonian(h) * full).real();
    const double got = free.dot(dense_hamiltonian(r.hamiltonian) * free).real() + r.offset;
    EXPECT_NEAR(got, want, 1e-10);
  }
}

TEST(BuildProblem, ExampleAllRetained) {
  const auto ctx = example_context(5);
  const auto p = ctx.problem(ctx.all_generators());
  EXPECT_EQ(p.num_free_qubits(), 2u);
  EXPECT_EQ(p.free_qubits, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(p.generator_assignments.at(0), ctx.ground.state.q[0]);
  ASSERT_TRUE(p.a_restricted.has_value());
  const auto& r = ctx.ground.state.r;
  const auto& a = *p.a_restricted;
  EXPECT_EQ(a.size(), 5u);
  EXPECT_DOUBLE_EQ(a.coefficient(P("XI")), r[0]);
  EXPECT_DOUBLE_EQ(a.coefficient(P("YI")), r[1]);
  EXPECT_DOUBLE_EQ(a.coefficient(P("ZX")), r[2]);
  EXPECT_DOUBLE_EQ(a.coefficient(P("ZY")), r[3]);
  EXPECT_DOUBLE_EQ(a.coefficient(P("ZZ")), r[4]);
  const Mat am = dense_hamiltonian(a);
  EXPECT_LT((am * am - Mat::Identity(4, 4)).norm(), 1e-10);
  EXPECT_EQ(plus_eigenspace(a).cols(), 2);
  EXPECT_EQ(p.restricted_contextual.size(), 3u);
}

TEST(BuildProblem, FullVqeEndpointWithoutCliques) {
  Hamiltonian h(2);
  h.add_term("ZI", 0.4);
  h.add_term("IZ", -0.3);
  h.add_term("ZZ", 0.2);
  const auto ctx = CsvqeContext::create(h);
  EXPECT_EQ(ctx.model.num_cliques(), 0u);
  const auto p = ctx.problem(std::vector<std::size_t>{});
  EXPECT_FALSE(p.a_restricted.has_value());
  EXPECT_EQ(p.restricted_h, h);
  EXPECT_NEAR(solve(p), exact_ground_energy(h), 1e-12);
}

TEST(BuildProblem, RejectsBadIndices) {
  const auto ctx = example_context(1);
  EXPECT_THROW(ctx.problem(std::vector<std::size_t>{1}), DimensionError);
  EXPECT_THROW(ctx.problem(std::vector<std::size_t>{0, 0}), DimensionError);
}

TEST(Solve, NoContextualTermsGivesNoncontextualEnergy) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto h = testing::random_noncontextual_hamiltonian(n, n - 1, 8, rng);
    const auto ctx = CsvqeContext::create(h);
    ASSERT_TRUE(ctx.decomposition.contextual_terms.empty());
    EXPECT_NEAR(ctx.evaluate(ctx.all_generators()), ctx.ground.energy, 1e-9);
  }
}

TEST(Solve, MatchesOriginalFrameProjectorOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto h = testing::random_hamiltonian(n, 4 + trial % 12, rng);
    const auto ctx = CsvqeContext::create(h);
    const auto all = ctx.all_generators();
    // Every prefix of the generator list as the retained set.
    for (std::size_t k = 0; k <= all.size(); ++k) {
      const std::vector<std::size_t> retained(all.begin(), all.begin() + static_cast<long>(k));
      const double got = ctx.evaluate(retained);
      const double want = projector_oracle(ctx, retained, k > 0);
      EXPECT_NEAR(got, want, 1e-9) << "trial " << trial << " k " << k;
    }
  }
}

TEST(Solve, ExampleBoundsAndOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto ctx = example_context(seed);
    const double e = ctx.evaluate(ctx.all_generators());
    const double exact = exact_ground_energy(ctx.h);
    EXPECT_LE(e, ctx.ground.energy + 1e-9);
    EXPECT_GE(e, exact - 1e-9);
    EXPECT_NEAR(e, projector_oracle(ctx, ctx.all_generators(), true), 1e-9);
    EXPECT_NEAR(ctx.evaluate(std::vector<std::size_t>{}), exact, 1e-9);
  }
}

TEST(Solve, LanczosAgreesWithDense) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const auto h = testing::random_hamiltonian(n, 12, rng);
    ContextConfig dense_cfg, sparse_cfg;
    sparse_cfg.solver.eigen.direct_limit = 0;
    const auto dense = CsvqeContext::create(h, dense_cfg);
    const auto sparse = CsvqeContext::create(h, sparse_cfg);
    const auto all = dense.all_generators();
    EXPECT_NEAR(dense.evaluate(all), sparse.evaluate(all), 1e-9);
    EXPECT_NEAR(dense.evaluate(std::vector<std::size_t>{}),
                sparse.evaluate(std::vector<std::size_t>{}), 1e-9);
  }
}

TEST(Solve, ResourceLimit) {
  Hamiltonian h(6);
  h.add_term("XXXXXX", 1.0);
  h.add_term("ZZZZZZ", 0.5);
  h.add_term("YIIIII", 0.5);
  ContextConfig cfg;
  cfg.solver.eigen.dense_limit = 3;
  const auto ctx = CsvqeContext::create(h, cfg);
  EXPECT_THROW(ctx.evaluate(std::vector<std::size_t>{}), ResourceError);
}

TEST(Solve, LiftedStateCarriesTheEnergy) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testing::random_hamiltonian(3 + trial % 2, 10, rng);
    const auto ctx = CsvqeContext::create(h);
    const auto p = ctx.problem(ctx.all_generators());
    const auto res = solve_state(p);
    const StateVector psi = lift_state(p, res.vector);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
    EXPECT_NEAR(psi.dot(dense_hamiltonian(h) * psi).real(), res.value, 1e-9);
    for (std::size_t j = 0; j < ctx.num_generators(); ++j) {
      const Mat g = dense_pauli(ctx.model.generators[j]);
      EXPECT_LT((g * psi - ctx.ground.state.q[j] * psi).norm(), 1e-9);
    }
  }
}

TEST(Solve, MonotoneAlongNestedChains) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_hamiltonian(3 + trial % 3, 12, rng);
    const auto ctx = CsvqeContext::create(h);
    auto retained = ctx.all_generators();
    std::shuffle(retained.begin(), retained.end(), rng);
    double previous = ctx.ground.energy + 1e-9;
    while (true) {
      const double e = ctx.evaluate(retained);
      EXPECT_LE(e, previous + 1e-9);
      previous = e;
      if (retained.empty()) break;
      retained.pop_back();
    }
  }
}

TEST(Witness, EmptySetIsTrivial) {
  const auto ctx = example_context(2);
  const auto p = ctx.problem(ctx.all_generators());
  const auto w = zero_expectation_witness(p, {});
  EXPECT_TRUE(w.converged);
  EXPECT_EQ(w.objective, 0.0);
}

TEST(Witness, OperatorAnticommutingWithAllRepresentatives) {
  // A single clique-breaking operator: every subspace state has <P> = 0.
  const auto ctx = example_context(3);
  const auto p = ctx.problem(ctx.all_generators());
  const auto w = zero_expectation_witness(p, std::vector<PauliOperator>{P("IIX")});
  EXPECT_TRUE(w.converged);
}

TEST(Witness, FullBlochSetNeedsMixedState) {
  // X, Y and Z of one free qubit: sum <P>^2 = 1 for every pure state.
  const auto ctx = example_context(0);
  const auto p = ctx.problem(ctx.all_generators());
  const auto w = zero_expectation_witness(p, std::vector<PauliOperator>{
                                                 P("IIX"), P("IIY"), P("IIZ")});
  ASSERT_TRUE(w.converged) << w.objective;
  EXPECT_GT(w.state.cols(), 1);
  EXPECT_NEAR(w.state.squaredNorm(), 1.0, 1e-12);
}

TEST(Witness, ExampleInstancesInOriginalFrame) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ctx = example_context(seed);
    const auto p = ctx.problem(ctx.all_generators());
    const auto& sc = ctx.decomposition.contextual_terms;
    WitnessConfig wc;
    wc.seed = seed;
    const auto w = zero_expectation_witness(p, sc, wc);
    ASSERT_TRUE(w.converged) << w.objective;
    const Eigen::MatrixXcd psi = lift_state(p, w.state);
    double total = 0.0;
    for (const auto& s : sc) {
      const double e = (psi.adjoint() * dense_pauli(s) * psi).trace().real();
      total += e * e;
    }
    EXPECT_LT(total, 1e-8);
    // Noncontextual terms keep their model values.
    for (const auto& t : ctx.decomposition.noncontextual_terms()) {
      EXPECT_NEAR((psi.adjoint() * dense_pauli(t) * psi).trace().real(),
                  expectation_of_pauli(ctx.model, ctx.ground.state, t), 1e-6);
    }
  }
}

}  // namespace
}  // namespace csvqe
