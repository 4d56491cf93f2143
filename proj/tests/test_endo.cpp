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

using namespace operad_lab;

namespace {

const Field Q = Field::rationals();

MultiMap random_map(gen::Gen& r, const FinAlgebra& a, std::size_t n) {
  MultiMap f(a.field(), a.dim(), n);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = a.field().from_int(r.range(-2, 2));
  return f;
}

}  // namespace

TEST(FinAlgebra, PresetsAreAssociativeAndUnital) {
  for (const char* p : {"field", "dual", "m2", "upper"}) {
    auto a = FinAlgebra::preset(p, Field::prime(5));
    EXPECT_EQ(a.name(), p);
  }
  EXPECT_EQ(FinAlgebra::preset("m2", Q).dim(), 4u);
  EXPECT_THROW(FinAlgebra::preset("octonions", Q), parse_error);
}

TEST(FinAlgebra, RejectsBadStructureConstants) {
  auto o = Q.one(), z = Q.zero();
  auto at = [](int a, int b, int k) { return static_cast<std::size_t>((a * 2 + b) * 2 + k); };
  // K[x]/(x^2 - 1) with unit e1
  std::vector<Scalar> mul(8, z);
  mul[at(0, 0, 0)] = o;
  mul[at(0, 1, 1)] = o;
  mul[at(1, 0, 1)] = o;
  mul[at(1, 1, 0)] = o;
  EXPECT_NO_THROW(FinAlgebra(Q, 2, mul, {o, z}));
  EXPECT_THROW(FinAlgebra(Q, 2, mul, {z, o}), std::invalid_argument);
  auto broken = mul;
  broken[at(0, 1, 1)] = z;
  EXPECT_THROW(FinAlgebra(Q, 2, broken, {o, z}), std::invalid_argument);
  EXPECT_THROW(FinAlgebra(Q, 2, std::vector<Scalar>(7, z), {o, z}), std::invalid_argument);
  EXPECT_THROW(FinAlgebra(Q, 2, mul, {o}), std::invalid_argument);
  EXPECT_THROW(FinAlgebra(Q, 1, {Field::prime(3).one()}, {o}), field_mismatch);
}

TEST(FinAlgebra, NonAssociativeRejected) {
  auto o = Q.one(), z = Q.zero();
  // unit e1; e2e2 = e3, e2e3 = e2, e3e2 = 0, e3e3 = 0: (e2e2)e2 = e3e2 = 0 but e2(e2e2) = e2e3 = e2
  std::vector<Scalar> mul(27, z);
  auto at = [](int a, int b, int k) { return static_cast<std::size_t>((a * 3 + b) * 3 + k); };
  for (int b = 0; b < 3; ++b) {
    mul[at(0, b, b)] = o;
    mul[at(b, 0, b)] = o;
  }
  mul[at(1, 1, 2)] = o;
  mul[at(1, 2, 1)] = o;
  EXPECT_THROW(FinAlgebra(Q, 3, mul, {o, z, z}), std::invalid_argument);
}

TEST(MultiMap, IndexOrderOutputFastest) {
  MultiMap f(Q, 2, 2);
  EXPECT_EQ(f.size(), 8u);
  EXPECT_EQ(f.index({1, 0}, 1), 5u);
  EXPECT_EQ(MultiMap::digits(2, 2, 2), (std::vector<std::size_t>{1, 0}));
  EXPECT_THROW(MultiMap(Q, 2, 1, std::vector<Scalar>(3, Q.zero())), std::invalid_argument);
}

TEST(EndoOperad, UnitsAndMultiplication) {
  EndoOperad op(FinAlgebra::preset("m2", Q));
  auto id = op.to_multimap(op.one());
  auto mu = op.to_multimap(op.mult());
  auto zero = op.to_multimap(op.zero_unit());
  EXPECT_EQ(compose_endo(op.algebra(), mu, 1, zero), id);
  EXPECT_EQ(compose_endo(op.algebra(), mu, 2, zero), id);
  EXPECT_EQ(hochschild_classical(op.algebra(), id), mu);
  EXPECT_EQ(cup_classical(op.algebra(), id, id), mu);
  EXPECT_EQ(compose_endo(op.algebra(), mu, 1, mu), compose_endo(op.algebra(), mu, 2, mu));
}

TEST(EndoOperad, ComposeAgreesWithDirectEvaluation) {
  for (const char* p : {"dual", "upper", "m2"}) {
    EndoOperad op(FinAlgebra::preset(p, Field::prime(7)));
    gen::Gen r(1);
    for (int t = 0; t < 200; ++t) {
      auto f = gen::element(r, op, r.size(1, 3)), g = gen::element(r, op, r.size(0, 3));
      std::size_t i = r.size(1, f.arity());
      ASSERT_EQ(op.to_multimap(compose(f, i, g)), compose_endo(op.algebra(), op.to_multimap(f), i, op.to_multimap(g)));
      ASSERT_EQ(compose(f, i, op.one()), f);
    }
  }
}

TEST(Hochschild, SquaresToZeroAndCupIsAssociative) {
  for (const char* p : {"field", "dual", "upper"}) {
    auto a = FinAlgebra::preset(p, Field::prime(5));
    gen::Gen r(2);
    for (int t = 0; t < 100; ++t) {
      auto f = random_map(r, a, r.size(0, 3));
      ASSERT_TRUE(hochschild_classical(a, hochschild_classical(a, f)).is_zero());
      auto g = random_map(r, a, r.size(0, 2)), h = random_map(r, a, r.size(0, 2));
      auto f2 = random_map(r, a, r.size(0, 2));
      ASSERT_EQ(cup_classical(a, cup_classical(a, f2, g), h), cup_classical(a, f2, cup_classical(a, g, h)));
    }
  }
}

TEST(Hochschild, OperadicOperationsMatchClassical) {
  for (const char* p : {"field", "dual", "upper", "m2"}) {
    EndoOperad op(FinAlgebra::preset(p, Field::prime(3)));
    const auto& a = op.algebra();
    gen::Gen r(3);
    for (int t = 0; t < 100; ++t) {
      auto f = gen::element(r, op, r.size(0, 3)), g = gen::element(r, op, r.size(0, 2));
      ASSERT_EQ(op.to_multimap(odot(f, g)), cup_classical(a, op.to_multimap(f), op.to_multimap(g)));
      ASSERT_EQ(op.to_multimap(coboundary(f)), hochschild_classical(a, op.to_multimap(f)));
      auto dh = [&](const Element<EndoOperad>& x) { return op.from_multimap(hochschild_classical(a, op.to_multimap(x))); };
      if (f.arity() > 0) {
        ASSERT_EQ(boundary(dh(f)), -dh(boundary(f)));
      }
    }
  }
}

TEST(Hochschild, ArityZeroIsTheAlgebra) {
  auto a = FinAlgebra::preset("upper", Q);
  // z = E12: d_H z (a) = a z - z a
  MultiMap z(Q, 3, 0);
  z[1] = Q.one();
  auto dz = hochschild_classical(a, z);
  // on E11: E11 E12 - E12 E11 = E12
  EXPECT_TRUE(dz.value(0)[1].is_one());
  // on E22: E22 E12 - E12 E22 = -E12
  EXPECT_EQ(dz.value(2)[1], -Q.one());
}
