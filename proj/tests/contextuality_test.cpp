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

#include <random>

#include "csvqe/bench.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/errors.hpp"
#include "csvqe/oracle.hpp"
#include "test_util.hpp"

namespace csvqe {
namespace {

std::vector<PauliOperator> ops(std::initializer_list<const char*> s) {
  std::vector<PauliOperator> out;
  for (const char* t : s) out.push_back(PauliOperator::from_string(t));
  return out;
}

Hamiltonian example_hamiltonian(double nc, double c) {
  Hamiltonian h(3);
  for (const auto& p : example_noncontextual_terms()) h.add_term(p, nc);
  for (const auto& p : example_contextual_terms()) h.add_term(p, c);
  return h;
}

TEST(Contextuality, SmallSets) {
  EXPECT_TRUE(is_noncontextual(ops({"ZI", "IZ", "ZZ"})));
  EXPECT_TRUE(is_noncontextual(ops({"X", "Y"})));
  EXPECT_TRUE(is_noncontextual(ops({})));
  EXPECT_FALSE(is_noncontextual(ops({"XI", "XX", "ZI", "ZZ"})));
  EXPECT_FALSE(is_noncontextual(ops({"XI", "IX", "ZI", "IZ"})));
}

// IX commutes with the other three, leaving cliques {XI, XX} and {ZI}; the
// closure {XI, ZI, IX, XX, ZX} admits a consistent assignment.
TEST(Contextuality, UniversalTermRescuesSet) {
  const auto s = ops({"XI", "ZI", "IX", "XX"});
  EXPECT_TRUE(is_noncontextual(s));
  EXPECT_TRUE(brute_force_noncontextual(s));
  const auto d = decompose(s);
  EXPECT_EQ(d.z_set, ops({"IX"}));
  ASSERT_EQ(d.cliques.size(), 2u);
  EXPECT_EQ(d.cliques[0], ops({"XI", "XX"}));
  EXPECT_EQ(d.cliques[1], ops({"ZI"}));
  EXPECT_EQ(closure_under_inference(s), ops({"IX", "XI", "XX", "ZI", "ZX"}));
}

TEST(Contextuality, WitnessIsAValidChain) {
  const auto w = contextual_witness(ops({"XI", "XX", "ZI", "ZZ"}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(commutes((*w)[0], (*w)[1]));
  EXPECT_TRUE(commutes((*w)[1], (*w)[2]));
  EXPECT_FALSE(commutes((*w)[0], (*w)[2]));
  EXPECT_FALSE(contextual_witness(ops({"ZI", "IZ"})).has_value());
}

TEST(Contextuality, ClosureOfTwoCommutingOperators) {
  EXPECT_EQ(closure_under_inference(ops({"XI", "IX"})), ops({"IX", "XI", "XX"}));
  EXPECT_EQ(closure_under_inference(ops({"X", "Z"})), ops({"X", "Z"}));
  EXPECT_THROW(closure_under_inference(ops({"XI", "IX", "ZI", "IZ"}), 4), ResourceError);
}

TEST(Decompose, ExamplePartition) {
  const auto d = decompose(example_noncontextual_terms());
  EXPECT_EQ(d.z_set, ops({"ZII"}));
  ASSERT_EQ(d.cliques.size(), 5u);
  EXPECT_EQ(d.cliques[0], ops({"IXI", "ZXI"}));
  EXPECT_EQ(d.cliques[1], ops({"IYI", "ZYI"}));
  EXPECT_EQ(d.cliques[2], ops({"IZX", "ZZX"}));
  EXPECT_EQ(d.cliques[3], ops({"IZY", "ZZY"}));
  EXPECT_EQ(d.cliques[4], ops({"IZZ", "ZZZ"}));
  EXPECT_NO_THROW(validate(d));
}

TEST(Decompose, ContextualSetIsRejected) {
  EXPECT_THROW(decompose(ops({"XI", "XX", "ZI", "ZZ"})), ContextualityError);
  Hamiltonian h(2);
  h.add_term("ZI", 1.0);
  EXPECT_THROW(decompose(h, ops({"XI"})), InvariantError);
}

TEST(Decompose, SingleTerm) {
  Hamiltonian h(2);
  h.add_term("XY", 0.3);
  const auto d = greedy_noncontextual_subset(h);
  EXPECT_EQ(d.noncontextual_terms(), ops({"XY"}));
  EXPECT_TRUE(d.contextual_terms.empty());
}

TEST(Greedy, RecoversExampleSplit) {
  const auto d = greedy_noncontextual_subset(example_hamiltonian(1.0, 0.1));
  EXPECT_EQ(d.noncontextual_terms(), decompose(example_noncontextual_terms()).noncontextual_terms());
  EXPECT_EQ(d.contextual_terms, example_contextual_terms());
  EXPECT_NO_THROW(validate(d));
}

TEST(Greedy, ResultIsClosedAndValid) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto h = testing::random_hamiltonian(n, 3 + trial % 15, rng);
    const auto d = greedy_noncontextual_subset(h);
    EXPECT_NO_THROW(validate(d));
    EXPECT_TRUE(is_noncontextual(d.noncontextual_terms()));
    EXPECT_TRUE(inferable_terms(d.noncontextual_terms(), h.paulis()).empty());
  }
}

TEST(Inference, InferableTermsAreInTheClosure) {
  const auto nc = ops({"ZII", "IXI", "ZXI"});
  const auto terms = ops({"ZII", "IXI", "ZXI", "IYI", "IIZ", "ZZI"});
  // ZZI is not a product of commuting members; nothing here is inferable.
  EXPECT_TRUE(inferable_terms(nc, terms).empty());
  EXPECT_EQ(inferable_terms(ops({"ZI", "IZ"}), ops({"ZZ", "XX"})), ops({"ZZ"}));
}

TEST(Validate, DetectsBrokenInvariants) {
  auto d = decompose(example_noncontextual_terms());
  auto bad = d;
  std::swap(bad.cliques[0][0], bad.cliques[1][0]);
  EXPECT_THROW(validate(bad), InvariantError);
  bad = d;
  bad.contextual_terms.push_back(PauliOperator::from_string("ZII"));
  EXPECT_THROW(validate(bad), InvariantError);
}

TEST(Oracle, BruteForceAgreesOnRandomSets) {
  std::mt19937_64 rng(99);
  OracleConfig cfg;
  cfg.assignment_limit = 256;
  int contextual = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<PauliOperator> s;
    const std::size_t k = 1 + rng() % 8;
    for (std::size_t i = 0; i < k; ++i) s.push_back(testing::random_pauli(n, rng));
    const bool expected = brute_force_noncontextual(s, cfg);
    EXPECT_EQ(is_noncontextual(s), expected);
    contextual += expected ? 0 : 1;
  }
  EXPECT_GT(contextual, 20);
}

TEST(Oracle, BruteForceBasics) {
  EXPECT_TRUE(brute_force_noncontextual(ops({"ZI", "IZ", "ZZ"})));
  EXPECT_TRUE(brute_force_noncontextual(ops({"XY", "ZZ"})));
  EXPECT_TRUE(brute_force_noncontextual(ops({"X", "Z"})));
  EXPECT_FALSE(brute_force_noncontextual(ops({"XI", "XX", "ZI", "ZZ"})));
  OracleConfig tiny;
  tiny.assignment_limit = 3;
  EXPECT_THROW(brute_force_noncontextual(ops({"XI", "IX", "ZI", "IZ"}), tiny), ResourceError);
}

}  // namespace
}  // namespace csvqe
