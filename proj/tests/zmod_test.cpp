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

#include "cwsmod/zmod.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cwsmod/errors.hpp"
#include "test_support.hpp"

using namespace cwsmod;
using cwsmod::testing::brute_column_module;
using cwsmod::testing::brute_kernel_size;
using cwsmod::testing::brute_row_module;
using cwsmod::testing::plain;
using cwsmod::testing::random_matrix;
using cwsmod::testing::Vec;

namespace {

const Modulus kD3(3);

ZdMatrix example_rs() {
  return ZdMatrix(kD3, 3, 6, {0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1});
}

ZdMatrix example_rw() {
  return ZdMatrix(kD3, 3, 6, {0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 0, 0, 2, 1, 1, 1, 0, 0});
}

}  // namespace

TEST(modulus, rejects_small_and_huge) {
  EXPECT_THROW(Modulus(1), std::invalid_argument);
  EXPECT_THROW(Modulus(0), std::invalid_argument);
  EXPECT_THROW(Modulus((std::int64_t{1} << 31) + 1), std::invalid_argument);
  EXPECT_NO_THROW(Modulus(std::int64_t{1} << 31));
}

TEST(modulus, arithmetic) {
  const Modulus m(7);
  EXPECT_EQ(m.reduce(-1), 6);
  EXPECT_EQ(m.reduce(15), 1);
  EXPECT_EQ(m.add(5, 4), 2);
  EXPECT_EQ(m.sub(1, 3), 5);
  EXPECT_EQ(m.mul(3, 5), 1);
  EXPECT_EQ(m.neg(2), 5);
  EXPECT_EQ(m.pow(3), 343u);
  EXPECT_THROW(Modulus(1 << 30).pow(3), std::overflow_error);
}

TEST(modulus, cyclic_order) {
  const Modulus m(12);
  for (std::int64_t a = 0; a < 12; ++a) {
    std::uint64_t brute = 1;
    while (m.mul(static_cast<std::int64_t>(brute), a) != 0) ++brute;
    EXPECT_EQ(m.cyclic_order(a), brute) << a;
  }
}

TEST(zd_vector, operations) {
  const Modulus m(5);
  ZdVector a(m, {1, 2, 3});
  const ZdVector b(m, {4, 4, 4});
  EXPECT_EQ(a + b, ZdVector(m, {0, 1, 2}));
  EXPECT_EQ(a - b, ZdVector(m, {2, 3, 4}));
  EXPECT_EQ(-a, ZdVector(m, {4, 3, 2}));
  EXPECT_EQ(a.scaled(3), ZdVector(m, {3, 1, 4}));
  EXPECT_EQ(dot(a, b), (4 + 8 + 12) % 5);
  EXPECT_EQ(concat(a, b).size(), 6u);
  EXPECT_EQ(slice(concat(a, b), 3, 3), b);
  EXPECT_EQ(to_string(a), "1 2 3");
  EXPECT_EQ(to_compact_string(a), "123");
  EXPECT_TRUE(ZdVector(m, 4).is_zero());
  EXPECT_THROW(a += ZdVector(m, 2), DimensionMismatch);
  EXPECT_THROW(a += ZdVector(Modulus(3), 3), DimensionMismatch);
  EXPECT_EQ(ZdVector(m, {-1, 7}), ZdVector(m, {4, 2}));
}

TEST(zd_matrix, basics) {
  const Modulus m(4);
  const ZdMatrix a(m, 2, 3, {1, 2, 3, 0, 1, 2});
  EXPECT_EQ(a.row(1), ZdVector(m, {0, 1, 2}));
  EXPECT_EQ(a.column(2), ZdVector(m, {3, 2}));
  EXPECT_EQ(transpose(a).rows(), 3u);
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(ZdMatrix::identity(m, 3) * transpose(a), transpose(a));
  EXPECT_EQ(ZdVector(m, {1, 1}) * a, ZdVector(m, {1, 3, 1}));
  EXPECT_EQ(a * ZdVector(m, {1, 0, 1}), ZdVector(m, {0, 2}));
  EXPECT_EQ(format_matrix(a), "1 2 3\n0 1 2");
  EXPECT_THROW(a * a, DimensionMismatch);
}

TEST(zd_matrix, symplectic_form) {
  const ZdMatrix lambda = symplectic_form(kD3, 2);
  const ZdMatrix expected(kD3, 4, 4, {0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0});
  EXPECT_EQ(lambda, expected);
}

TEST(zd_matrix, stack) {
  const Modulus m(5);
  const ZdMatrix a(m, 2, 3, {1, 2, 3, 4, 0, 1});
  const ZdMatrix b(m, 1, 3, {2, 2, 2});
  const ZdMatrix s = stack(a, b);
  EXPECT_EQ(s.rows(), 3u);
  EXPECT_EQ(s.cols(), 3u);
  EXPECT_EQ(s.row(2), b.row(0));
  EXPECT_EQ(stack(a, ZdMatrix(m, 0, 3)), a);
  EXPECT_THROW(stack(a, ZdMatrix(m, 1, 2)), DimensionMismatch);
}

TEST(euclid_step, examples) {
  const EuclidStep s1 = euclid_step(Modulus(7), 3, 5);
  EXPECT_EQ(s1.remainder, 2);
  EXPECT_EQ(s1.quotient, 6);
  const EuclidStep s2 = euclid_step(Modulus(6), 1, 4);
  EXPECT_EQ(s2.remainder, 0);
  EXPECT_EQ(s2.quotient, 2);
  const EuclidStep s3 = euclid_step(Modulus(5), 2, 0);
  EXPECT_EQ(s3.remainder, 0);
  EXPECT_EQ(s3.quotient, 0);
  EXPECT_THROW(euclid_step(Modulus(5), 0, 3), std::invalid_argument);
}

TEST(euclid_step, exhaustive_contract) {
  for (std::int64_t d = 2; d <= 12; ++d) {
    const Modulus m(d);
    for (std::int64_t a = 1; a < d; ++a) {
      for (std::int64_t b = 0; b < d; ++b) {
        const EuclidStep s = euclid_step(m, a, b);
        EXPECT_GE(s.remainder, 0);
        EXPECT_LT(s.remainder, a);
        EXPECT_EQ(m.add(m.mul(a, s.quotient), b), s.remainder);
        // The remainder is the smallest value reachable as a*q + b.
        std::int64_t best = d;
        for (std::int64_t q = 0; q < d; ++q) best = std::min(best, m.add(m.mul(a, q), b));
        EXPECT_LE(best, s.remainder);
      }
    }
  }
}

TEST(reduce_vector, examples) {
  const Modulus m6(6);
  const auto r1 = reduce_vector(ZdVector(m6, {2, 4}));
  EXPECT_EQ(r1.reduced, ZdVector(m6, {2, 0}));
  EXPECT_EQ(replay(ZdVector(m6, {2, 4}), r1.ops), r1.reduced);

  const Modulus m5(5);
  EXPECT_EQ(reduce_vector(ZdVector(m5, {3, 0, 0})).reduced, ZdVector(m5, {3, 0, 0}));

  const Modulus m4(4);
  const auto r3 = reduce_vector(ZdVector(m4, {2, 3}));
  EXPECT_EQ(r3.reduced, ZdVector(m4, {1, 0}));
  EXPECT_EQ(replay(ZdVector(m4, {2, 3}), r3.ops), r3.reduced);
  const ZdMatrix before(m4, 1, 2, {2, 3});
  const ZdMatrix after(m4, 1, 2, {1, 0});
  EXPECT_EQ(brute_row_module(before).size(), 4u);
  EXPECT_EQ(brute_row_module(after).size(), 4u);
}

TEST(reduce_vector, random_cyclic_module_preserved) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 12)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const ZdMatrix row = random_matrix(rng, d, 1, len);
    if (row.is_zero()) {
      EXPECT_THROW(reduce_vector(row.row(0)), std::invalid_argument);
      continue;
    }
    const auto r = reduce_vector(row.row(0));
    EXPECT_EQ(replay(row.row(0), r.ops), r.reduced);
    for (std::size_t k = 1; k < len; ++k) EXPECT_EQ(r.reduced[k], 0);
    // First entry generates the same ideal as gcd(entries, d).
    std::int64_t g = d;
    for (std::size_t k = 0; k < len; ++k) g = std::gcd(g, row.at(0, k));
    EXPECT_EQ(std::gcd(r.reduced[0], d), g);
  }
}

TEST(diagonalize, examples) {
  const ZdMatrix t1(kD3, 2, 2, {0, 1, 1, 0});
  EXPECT_EQ(diagonalize(t1).diagonal, ZdMatrix(kD3, 2, 2, {1, 0, 0, 1}));

  const Modulus m4(4);
  const ZdMatrix t2(m4, 2, 2, {2, 2, 2, 2});
  EXPECT_EQ(diagonalize(t2).diagonal, ZdMatrix(m4, 2, 2, {2, 0, 0, 0}));
  EXPECT_EQ(brute_row_module(t2).size(), 2u);

  const Modulus m6(6);
  const ZdMatrix t3(m6, 2, 2, {2, 4, 4, 2});
  const Diagonalization d3 = diagonalize(t3);
  EXPECT_EQ(d3.diagonal.at(0, 1), 0);
  EXPECT_EQ(d3.diagonal.at(1, 0), 0);
  EXPECT_EQ(brute_row_module(d3.diagonal).size(), brute_row_module(t3).size());
  // (4,2) = 2 (2,4) mod 6, so the module is cyclic of order 3.
  EXPECT_EQ(brute_row_module(t3).size(), 3u);
  EXPECT_EQ(row_module_cardinality(t3), 3u);
}

TEST(diagonalize, random_transforms_are_consistent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 12)(rng);
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const ZdMatrix t = random_matrix(rng, d, rows, cols);
    const Diagonalization dz = diagonalize(t);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) EXPECT_EQ(dz.diagonal.at(i, j), 0);
      }
    }
    EXPECT_EQ(replay(t, dz.row_ops, dz.column_ops), dz.diagonal);
    const ZdMatrix u = row_transform(t.modulus(), rows, dz.row_ops);
    const ZdMatrix v = column_transform(t.modulus(), cols, dz.column_ops);
    EXPECT_EQ(u * t * v, dz.diagonal);
  }
}

TEST(row_module_cardinality, examples) {
  const Modulus m4(4);
  EXPECT_EQ(row_module_cardinality(ZdMatrix(m4, 2, 2, {1, 1, 0, 2})), 8u);
  EXPECT_EQ(row_module_cardinality(ZdMatrix(kD3, 1, 3)), 1u);
  EXPECT_EQ(row_module_cardinality(example_rw()), 9u);
  EXPECT_EQ(row_module_cardinality(example_rs()), 27u);
}

TEST(image_cardinality, examples) {
  EXPECT_EQ(image_cardinality(ZdMatrix::identity(Modulus(2), 2)), 4u);
  EXPECT_EQ(image_cardinality(ZdMatrix(Modulus(4), 1, 1, {2})), 2u);
}

TEST(kernel_cardinality, examples) {
  EXPECT_EQ(kernel_cardinality(ZdMatrix(Modulus(4), 1, 1, {2})), 2u);
  const ZdMatrix t = example_rs() * symplectic_form(kD3, 3);
  EXPECT_EQ(kernel_cardinality(t), 27u);
  EXPECT_EQ(brute_kernel_size(t), 27u);
  EXPECT_EQ(kernel_cardinality(ZdMatrix(Modulus(2), 1, 2)), 4u);
}

TEST(cardinalities, random_matrices_match_enumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 12)(rng);
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const ZdMatrix t = random_matrix(rng, d, rows, cols);
    const auto rows_brute = brute_row_module(t).size();
    const auto image_brute = brute_column_module(t).size();
    EXPECT_EQ(row_module_cardinality(t), rows_brute);
    EXPECT_EQ(image_cardinality(t), image_brute);
    EXPECT_EQ(rows_brute, image_brute);
    EXPECT_EQ(kernel_cardinality(t), brute_kernel_size(t));
  }
}

TEST(stack, qutrit_code) {
  const ZdMatrix s = stack(example_rs(), example_rw());
  EXPECT_EQ(s.rows(), 6u);
  EXPECT_EQ(row_module_cardinality(s), 81u);
  EXPECT_EQ(brute_row_module(s).size(), 81u);
}

TEST(intersection_cardinality, examples) {
  EXPECT_EQ(intersection_cardinality(example_rw(), example_rs()), 3u);
  EXPECT_EQ(intersection_cardinality(example_rs(), example_rs()), 27u);
  EXPECT_EQ(intersection_cardinality(example_rs(), ZdMatrix(kD3, 2, 6)), 1u);
}

TEST(intersection_cardinality, random_matches_set_intersection) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 8)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const ZdMatrix a = random_matrix(rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng), cols);
    const ZdMatrix b = random_matrix(rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng), cols);
    const auto sa = brute_row_module(a);
    const auto sb = brute_row_module(b);
    std::size_t common = 0;
    for (const auto& v : sa) common += sb.count(v);
    EXPECT_EQ(intersection_cardinality(a, b), common);
  }
}

TEST(solve_row, examples) {
  const ZdMatrix rw = example_rw();
  const auto module = brute_row_module(rw);
  const ZdVector b(kD3, {2, 0, 1, 1, 0, 0});
  const auto x = solve_row(rw, b);
  EXPECT_EQ(x.has_value(), module.count(plain(b)) == 1);

  const ZdVector zero(kD3, 6);
  const auto x0 = solve_row(rw, zero);
  ASSERT_TRUE(x0.has_value());
  EXPECT_EQ(*x0 * rw, zero);

  EXPECT_FALSE(solve_row(ZdMatrix(Modulus(4), 1, 2, {2, 0}), ZdVector(Modulus(4), {1, 0})));
}

TEST(solve_row, random_membership) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 9)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const ZdMatrix a = random_matrix(rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng), cols);
    const auto module = brute_row_module(a);
    const ZdVector b = random_matrix(rng, d, 1, cols).row(0);
    const auto x = solve_row(a, b);
    EXPECT_EQ(x.has_value(), module.count(plain(b)) == 1);
    if (x) EXPECT_EQ(*x * a, b);
  }
}

TEST(enumerate_row_module, examples) {
  const auto rows = enumerate_row_module(example_rw());
  std::vector<std::string> got;
  for (const auto& v : rows) got.push_back(to_compact_string(v));
  std::sort(got.begin(), got.end());
  std::vector<std::string> expected = {"000000", "010100", "020200", "112100", "211100",
                                       "221200", "122200", "201000", "102000"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);

  EXPECT_EQ(enumerate_row_module(ZdMatrix(kD3, 2, 2)).size(), 1u);

  const Modulus m4(4);
  const auto eight = enumerate_row_module(ZdMatrix(m4, 2, 2, {1, 1, 0, 2}));
  EXPECT_EQ(eight.size(), 8u);
  for (const auto& v : eight) EXPECT_EQ((v[1] - v[0] + 4) % 2, 0);
  EXPECT_THROW(enumerate_row_module(example_rs(), 10), LimitExceeded);
}
