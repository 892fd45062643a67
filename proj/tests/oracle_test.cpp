// Copyright 2026 The cwsmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cwsmod/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cwsmod/errors.hpp"
#include "test_support.hpp"

using namespace cwsmod;
using namespace cwsmod::oracle;

namespace {

std::vector<PauliOperator> ops(std::int64_t d, std::initializer_list<const char*> texts) {
  std::vector<PauliOperator> out;
  for (const char* t : texts) out.push_back(parse_pauli(t, Modulus(d)));
  return out;
}

GeneratorSet example_s() { return GeneratorSet(ops(3, {"X1.Z1.I", "Z1.X1.Z1", "I.Z1.X1"})); }

DenseOperator diag(std::initializer_list<Complex> entries) {
  DenseOperator out(entries.size());
  std::size_t i = 0;
  for (const auto& e : entries) {
    out(i, i) = e;
    ++i;
  }
  return out;
}

}  // namespace

TEST(pauli_matrix, examples) {
  EXPECT_LT(pauli_matrix(parse_pauli("Z1", Modulus(2))).max_abs_diff(diag({1.0, -1.0})), 1e-12);
  const DenseOperator x3 = pauli_matrix(parse_pauli("X1", Modulus(3)));
  DenseOperator shift(3);
  shift(1, 0) = shift(2, 1) = shift(0, 2) = 1.0;
  EXPECT_LT(x3.max_abs_diff(shift), 1e-12);
  const Modulus m2(2);
  const auto x = parse_pauli("X1", m2);
  const auto z = parse_pauli("Z1", m2);
  EXPECT_LT(pauli_matrix(x * z).max_abs_diff(pauli_matrix(x) * pauli_matrix(z)), 1e-12);
  EXPECT_THROW(pauli_matrix(parse_pauli("I.I.I.I.I.I.I", Modulus(3))), LimitExceeded);
}

TEST(pauli_matrix, unitary_random) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Modulus m(std::uniform_int_distribution<std::int64_t>(2, 5)(rng));
    const DenseOperator p = pauli_matrix(cwsmod::testing::random_pauli(rng, m, 2));
    EXPECT_LT((p * p.adjoint()).max_abs_diff(DenseOperator::identity(p.dim())), 1e-12);
  }
}

TEST(joint_projector, examples) {
  const GeneratorSet z(ops(2, {"Z1"}));
  EXPECT_LT(joint_projector(z, ZdVector(Modulus(2), 1)).max_abs_diff(diag({1.0, 0.0})), 1e-12);
  const DenseOperator p = joint_projector(example_s(), ZdVector(Modulus(3), 3));
  EXPECT_NEAR(p.trace().real(), 1.0, 1e-6);
  EXPECT_LT((p * p).max_abs_diff(p), 1e-9);
  const GeneratorSet zz(ops(2, {"Z1.Z1"}));
  EXPECT_NEAR(joint_projector(zz, ZdVector(Modulus(2), 1)).trace().real(), 2.0, 1e-6);
  EXPECT_THROW(joint_projector(zz, ZdVector(Modulus(2), 2)), DimensionMismatch);
}

TEST(joint_projector, eigenspaces_partition_the_space) {
  const GeneratorSet g = example_s();
  const Modulus m(3);
  DenseOperator sum(27);
  cwsmod::testing::for_each_vector(3, 3, [&](const cwsmod::testing::Vec& alpha) {
    sum += joint_projector(g, ZdVector(m, std::span<const std::int64_t>(alpha)));
  });
  EXPECT_LT(sum.max_abs_diff(DenseOperator::identity(27)), 1e-9);
}

TEST(verify_stabilized_dimension, random_groups) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const GeneratorSet g(cwsmod::testing::random_valid_group(rng, d, n, n));
    EXPECT_TRUE(verify_stabilized_dimension(g));
    const auto group = enumerate_group(g);
    EXPECT_LT(group_projector(group.elements).max_abs_diff(joint_projector(g, ZdVector(g.modulus(), g.size()))),
              1e-9);
  }
}

TEST(stabilized_state, examples) {
  const StateVector zero = stabilized_state(GeneratorSet(ops(2, {"Z1"})));
  EXPECT_NEAR(std::abs(zero[0]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(zero[1]), 0.0, 1e-12);

  const GeneratorSet g = example_s();
  const StateVector psi = stabilized_state(g);
  EXPECT_NEAR(norm(psi), 1.0, 1e-12);
  for (const auto& s : g.generators()) {
    StateVector v = apply_operator(pauli_matrix(s), psi);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= psi[i];
    EXPECT_LT(norm(v), 1e-9);
  }
  EXPECT_THROW(stabilized_state(GeneratorSet(ops(2, {"Z1.Z1"}))), InvalidGroup);
}

TEST(code_basis, examples) {
  const CWSCode code(example_s(), ops(3, {"I.I.I", "X1Z1.Z1.Z2", "X1Z2.Z1.Z1"}));
  const auto basis = code_basis(code);
  EXPECT_EQ(basis.size(), 3u);
  EXPECT_EQ(numerical_rank(basis), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(std::abs(inner(basis[i], basis[j])), i == j ? 1.0 : 0.0, 1e-9);
    }
  }
}

TEST(oracle_is_stabilizer, examples) {
  const CWSCode code(example_s(), ops(3, {"I.I.I", "X1Z1.Z1.Z2", "X1Z2.Z1.Z1"}));
  EXPECT_TRUE(oracle_is_stabilizer(code));
  EXPECT_TRUE(oracle_is_stabilizer(CWSCode(example_s(), ops(3, {"I.I.I"}))));
  // Three words whose classical images are not additively closed.
  const CWSCode non(GeneratorSet(ops(2, {"Z1.I", "I.Z1"})), ops(2, {"I.I", "X1.I", "I.X1"}));
  EXPECT_FALSE(oracle_is_stabilizer(non));
  EXPECT_FALSE(is_stabilizer_code(non).is_stabilizer);
}

TEST(oracle_detects, examples) {
  const CWSCode code(example_s(), ops(3, {"I.I.I", "X1Z1.Z1.Z2", "X1Z2.Z1.Z1"}));
  const std::vector<PauliOperator> errors = ops(3, {"I.I.I", "X1Z1.Z1.Z2", "Z1.I.I"});
  const auto verdicts = oracle_detects(code, errors);
  EXPECT_TRUE(verdicts[0]);
  EXPECT_FALSE(verdicts[1]);
  EXPECT_TRUE(verdicts[2]);
}

TEST(numerical_rank, basics) {
  const StateVector a{1.0, 0.0}, b{0.0, 1.0}, c{1.0, 1.0};
  EXPECT_EQ(numerical_rank({a, b, c}), 2u);
  EXPECT_EQ(numerical_rank({a, a}), 1u);
  EXPECT_EQ(numerical_rank({StateVector{0.0, 0.0}}), 0u);
}
