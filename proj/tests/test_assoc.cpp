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

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<Permutation> all_of_size(std::size_t n) {
  AssocOperad op(Field::rationals());
  return op.basis(n);
}

}  // namespace

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_EQ(Permutation::identity(3), P("123"));
  EXPECT_EQ(P("231").inverse(), P("312"));
  EXPECT_EQ(Permutation().to_string(), "()");
  EXPECT_EQ(Permutation::identity(10).to_string(), "1,2,3,4,5,6,7,8,9,10");
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(std::vector<int>{2, 9, 1, 8, 4, 7}), P("261534"));
  EXPECT_EQ(standardize(std::vector<int>{3, 7, 4, 5}), P("1423"));
  EXPECT_EQ(standardize(std::vector<int>{1, 2, 3, 4}), Permutation::identity(4));
  EXPECT_EQ(standardize(std::vector<int>{}), Permutation());
  EXPECT_THROW(standardize(std::vector<int>{1, 2, 1}), std::invalid_argument);
}

TEST(Standardize, MatchesOracle) {
  gen::Gen r(1);
  for (int t = 0; t < 300; ++t) {
    std::vector<int> w;
    for (std::size_t k = 0, n = r.size(0, 8); k < n; ++k) {
      int v = 0;
      do v = static_cast<int>(r.range(-20, 40)); while (std::find(w.begin(), w.end(), v) != w.end());
      w.push_back(v);
    }
    ASSERT_EQ(standardize(w).word(), oracle::standardize(w));
  }
}

TEST(Compose, KnownValuesBothMethods) {
  EXPECT_EQ(compose_blocks(P("4312"), 1, P("231")), P("564312"));
  EXPECT_EQ(compose_formula(P("4312"), 1, P("231")), P("564312"));
  EXPECT_EQ(compose_blocks(P("4312"), 2, P("231")), P("645312"));
  EXPECT_EQ(compose_formula(P("4312"), 2, P("231")), P("645312"));
  EXPECT_EQ(compose_formula(P("3142"), 2, P("1")), P("3142"));
  EXPECT_EQ(compose_blocks(P("1"), 1, P("3142")), P("3142"));
  EXPECT_THROW(compose_formula(P("21"), 3, P("1")), arity_error);
}

// all τ ∈ Σ_n, σ ∈ Σ_l, n ≤ 4, 0 ≤ l ≤ 4, every slot, against substitution in inverse words
TEST(Compose, BothMethodsMatchOracleExhaustively) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& tau : all_of_size(n))
      for (std::size_t l = 0; l <= 4; ++l)
        for (const auto& sigma : all_of_size(l))
          for (std::size_t i = 1; i <= n; ++i) {
            auto expected = oracle::compose(tau.word(), static_cast<int>(i), sigma.word());
            ASSERT_EQ(compose_formula(tau, i, sigma).word(), expected);
            if (l > 0) {
              ASSERT_EQ(compose_blocks(tau, i, sigma).word(), expected);
            }
            if (l > 0) ++cases;
          }
  EXPECT_EQ(cases, 3927u);
}

TEST(Compose, RandomAgainstOracle) {
  gen::Gen r(2);
  for (int t = 0; t < 2000; ++t) {
    auto tau = gen::perm(r, r.size(1, 7)), sigma = gen::perm(r, r.size(1, 7));
    std::size_t i = r.size(1, tau.size());
    auto expected = oracle::compose(tau.word(), static_cast<int>(i), sigma.word());
    ASSERT_EQ(compose_formula(tau, i, sigma).word(), expected);
    ASSERT_EQ(compose_blocks(tau, i, sigma).word(), expected);
  }
}

TEST(Face, KnownValues) {
  EXPECT_EQ(face_assoc(P("4312"), 1), P("312"));
  EXPECT_EQ(face_assoc(P("4312"), 2), P("312"));
  EXPECT_EQ(face_assoc(P("4312"), 3), P("321"));
  EXPECT_EQ(face_assoc(P("4312"), 4), P("321"));
  EXPECT_EQ(face_assoc(P("1"), 1), Permutation());
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat(P("1"), P("1")), P("12"));
  EXPECT_EQ(concat(P("21"), P("1")), P("213"));
  EXPECT_EQ(concat(Permutation(), P("21")), P("21"));
}

TEST(MR, Examples) {
  auto d = mr_coproduct(P("3124"));
  std::vector<std::pair<Permutation, Permutation>> expected = {
      {Permutation(), P("3124")}, {P("1"), P("123")}, {P("21"), P("12")}, {P("312"), P("1")}, {P("3124"), Permutation()}};
  EXPECT_EQ(d, expected);
  std::vector<std::pair<Permutation, Permutation>> one = {{Permutation(), P("1")}, {P("1"), Permutation()}};
  EXPECT_EQ(mr_coproduct(P("1")), one);
}

TEST(MR, MatchesOracleAndAlexanderWhitney) {
  AssocOperad op(Field::rationals());
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& s : all_of_size(n)) {
      auto mr = mr_coproduct(s);
      auto ref = oracle::deconcatenate(s.word());
      ASSERT_EQ(mr.size(), ref.size());
      Tensor<AssocOperad, 2> t(op);
      for (std::size_t k = 0; k < mr.size(); ++k) {
        ASSERT_EQ(mr[k].first.word(), ref[k].first);
        ASSERT_EQ(mr[k].second.word(), ref[k].second);
        t.add_term({mr[k].first, mr[k].second}, op.field().one());
      }
      ASSERT_EQ(aw_coproduct(op.element(s)), t);
      ++count;
    }
  }
  EXPECT_EQ(count, 153u);
}

TEST(Odot, IsConcatenation) {
  AssocOperad op(Field::rationals());
  gen::Gen r(3);
  for (int t = 0; t < 500; ++t) {
    auto a = gen::perm(r, r.size(0, 6)), b = gen::perm(r, r.size(0, 6));
    ASSERT_EQ(odot(op.element(a), op.element(b)), op.element(concat(a, b)));
  }
}

TEST(AssocOperad, BasisAndUnits) {
  AssocOperad op(Field::prime(5));
  EXPECT_EQ(op.basis(4).size(), 24u);
  EXPECT_EQ(op.basis(0).size(), 1u);
  EXPECT_EQ(op.name(), "assoc");
  EXPECT_EQ(op.mult(), op.element(P("12")));
  EXPECT_EQ(op.format_basis(P("4312")), "4312");
}
