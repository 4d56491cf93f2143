/*
 *   Copyright 2026 The operad_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "generators.hpp"
#include "operad_lab/operad_lab.hpp"
#include "oracles.hpp"

using namespace operad_lab;

namespace {
OrderedSubset T(std::vector<long long> v) { return OrderedSubset(std::move(v)); }
}  // namespace

TEST(OrderedSubset, Validation) {
  EXPECT_THROW(T({2, 2}), std::invalid_argument);
  EXPECT_THROW(T({3, 1}), std::invalid_argument);
  EXPECT_THROW(T({0, 1}), std::invalid_argument);
  EXPECT_EQ(T({1, 3, 4}).to_string(), "{1,3,4}");
  EXPECT_EQ(OrderedSubset().to_string(), "{}");
  EXPECT_EQ(OrderedSubset().last(), 0);
}

TEST(ShiftAdd, Examples) {
  EXPECT_EQ(shift_add(T({2, 5}), 3), T({5, 8}));
  EXPECT_EQ(shift_add(T({2, 5}), -2), T({2, 5}));
  EXPECT_EQ(shift_add(T({2, 5}), -1), T({1, 4}));
  EXPECT_EQ(shift_add(OrderedSubset(), 4), OrderedSubset());
}

TEST(ShiftCompose, Examples) {
  auto M = T({1, 2});
  EXPECT_EQ(compose_shift(M, 1, M), T({1, 2, 3}));
  EXPECT_EQ(compose_shift(M, 2, M), T({1, 2, 3}));
  EXPECT_EQ(compose_shift(T({1, 3, 4}), 2, T({2, 3})), T({1, 4, 5, 6}));
  EXPECT_EQ(compose_shift(T({2, 5, 9}), 3, T({1})), T({2, 5, 9}));
  EXPECT_THROW(compose_shift(M, 3, M), arity_error);
}

TEST(ShiftCompose, MatchesOracle) {
  ShiftOperad op(Field::rationals());
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : op.basis(n, 6))
      for (std::size_t l = 0; l <= 3; ++l)
        for (const auto& y : op.basis(l, 6))
          for (std::size_t i = 1; i <= n; ++i) ASSERT_EQ(compose_shift(x, i, y).entries(), oracle::compose_tuple(x.entries(), i, y.entries()));
}

TEST(ShiftGamma, Examples) {
  auto one = T({1});
  EXPECT_EQ(gamma_shift(T({2, 5, 7}), {one, one, one}), T({2, 5, 7}));
  EXPECT_EQ(gamma_shift(T({1, 3}), {T({1}), T({1, 2})}), T({1, 3, 4}));
  EXPECT_EQ(gamma_shift(T({2}), {T({1, 2})}), T({2, 3}));
  EXPECT_THROW(gamma_shift(T({2}), {}), arity_error);
}

// The block formula equals right-to-left iterated composition, computed through the oracle.
TEST(ShiftGamma, MatchesIteratedOracle) {
  gen::Gen r(5);
  for (int t = 0; t < 1000; ++t) {
    auto x = gen::tuple(r, r.size(1, 4));
    std::vector<OrderedSubset> ys;
    for (std::size_t k = 0; k < x.size(); ++k) ys.push_back(gen::tuple(r, r.size(0, 3), 8));
    auto acc = x.entries();
    for (std::size_t k = x.size(); k >= 1; --k) acc = oracle::compose_tuple(acc, k, ys[k - 1].entries());
    ASSERT_EQ(gamma_shift(x, ys).entries(), acc);
  }
}

TEST(ShiftFaces, Examples) {
  EXPECT_EQ(face_shift(T({2, 5, 7}), 2), T({2, 6}));
  EXPECT_EQ(degeneracy_shift(T({1, 3}), 1), T({1, 2, 4}));
  EXPECT_EQ(face_shift(T({4}), 1), OrderedSubset());
}

TEST(ShiftFaces, ClosedFormsAreCompositions) {
  ShiftOperad op(Field::rationals());
  gen::Gen r(6);
  for (int t = 0; t < 1000; ++t) {
    auto x = gen::tuple(r, r.size(1, 6));
    std::size_t i = r.size(1, x.size());
    ASSERT_EQ(face_shift(x, i), compose_shift(x, i, OrderedSubset()));
    ASSERT_EQ(degeneracy_shift(x, i), compose_shift(x, i, T({1, 2})));
    ASSERT_EQ(face_shift(degeneracy_shift(x, i), i), x);
    ASSERT_EQ(face_shift(degeneracy_shift(x, i), i + 1), x);
  }
}

TEST(ShiftOperad, BasisIsBounded) {
  ShiftOperad op(Field::rationals());
  EXPECT_EQ(op.basis(2, 5).size(), 10u);
  EXPECT_EQ(op.basis(0, 5).size(), 1u);
  EXPECT_EQ(op.basis(6, 5).size(), 0u);
  EXPECT_EQ(op.one(), op.element(T({1})));
  EXPECT_EQ(op.zero_unit(), op.element(OrderedSubset()));
}

// Positive arities compose associatively; X_0 in an inner slot does not.
TEST(ShiftOperad, AssociativityNeedsPositiveArity) {
  gen::Gen r(7);
  for (int t = 0; t < 500; ++t) {
    auto f = gen::tuple(r, r.size(1, 4)), g = gen::tuple(r, r.size(1, 3)), h = gen::tuple(r, r.size(1, 3));
    std::size_t i = r.size(1, f.size()), j = r.size(1, g.size());
    ASSERT_EQ(compose_shift(compose_shift(f, i, g), j + i - 1, h), compose_shift(f, i, compose_shift(g, j, h)));
  }
  auto f = T({1, 3}), g = T({2});
  EXPECT_EQ(compose_shift(f, 1, g), T({2, 4}));
  EXPECT_EQ(compose_shift(compose_shift(f, 1, g), 1, OrderedSubset()), T({3}));
  EXPECT_EQ(compose_shift(f, 1, compose_shift(g, 1, OrderedSubset())), T({2}));
}
