// Copyright 2026 The aqc-gates Authors
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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/poly.hpp"

namespace aqc {
namespace {

Expr v(const char* n) { return Expr::variable(n); }
Expr k(int c) { return Expr::constant(c); }

TEST(Poly, IdempotentProductCollapsesRepeats) {
  Poly p;
  p.add_term({"x", "x", "y"}, 3);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff({"x", "y"}), Rational(3));
}

TEST(Poly, SpinProductCancelsSquares) {
  Poly p(Domain::spin);
  p.add_term({"s", "s", "t"}, 2);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeff({"t"}), Rational(2));
}

TEST(Poly, EqualityIgnoresRegistryOrder) {
  Poly a;
  a.add_term({"x", "y"}, 1);
  a.add_term({"z"}, -2);
  Poly b;
  b.declare("z");
  b.add_term({"z"}, -2);
  b.add_term({"y", "x"}, 1);
  EXPECT_TRUE(a == b);
  b.add_constant(1);
  EXPECT_FALSE(a == b);
}

TEST(Poly, SquaredEquationExpandsAsExpected) {
  // (z - x - y - 1)^2 = 2(xy - xz - yz) + 3(x + y) - z + 1
  const Poly sq = reduce_idempotent(Expr::power(v("z") - v("x") - v("y") - k(1), 2));
  Poly want;
  want.add_term({"x", "y"}, 2);
  want.add_term({"x", "z"}, -2);
  want.add_term({"y", "z"}, -2);
  want.add_term({"x"}, 3);
  want.add_term({"y"}, 3);
  want.add_term({"z"}, -1);
  want.add_constant(1);
  EXPECT_TRUE(sq == want) << sq.str();
}

TEST(Poly, ReduceAgreesWithLiteralEvaluation) {
  const Expr e = Expr::power(k(1) - v("c") * v("i") + k(2) * v("j") - v("m"), 3);
  const Poly p = reduce_idempotent(e);
  for (int m = 0; m < 16; ++m) {
    Assignment a;
    a.set("c", m & 1).set("i", (m >> 1) & 1).set("j", (m >> 2) & 1).set("m", (m >> 3) & 1);
    EXPECT_EQ(p.eval(a), evaluate(e, a));
  }
}

TEST(Poly, EvalThrowsOnMissingVariable) {
  Poly p;
  p.add_term({"x", "y"}, 1);
  Assignment a;
  a.set("x", 1);
  EXPECT_THROW(p.eval(a), MissingVariableError);
}

TEST(Poly, CombineIsWeightedSum) {
  Poly a;
  a.add_term({"x"}, 1);
  Poly b;
  b.add_term({"x"}, 2);
  b.add_term({"y"}, 1);
  const Poly c = combine({{-1, a}, {3, b}});
  EXPECT_EQ(c.coeff({"x"}), Rational(5));
  EXPECT_EQ(c.coeff({"y"}), Rational(3));
}

TEST(Poly, StrUsesDegreeThenRegistryOrder) {
  Poly p;
  p.declare("x");
  p.declare("y");
  p.declare("z");
  p.add_term({"z"}, -1);
  p.add_term({"x", "y"}, 2);
  p.add_term({"x"}, 3);
  p.add_constant(1);
  EXPECT_EQ(p.str(), "2*x*y + 3*x - z + (offset 1)");
  EXPECT_EQ(Poly().str(), "0");
}

TEST(Poly, RandomSpinConversionPreservesValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    Poly p;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i));
      p.declare(names.back());
      p.add_term({names.back()}, coef(rng));
      for (int j = 0; j < i; ++j) {
        p.add_term({names[j], names[i]}, coef(rng));
      }
    }
    p.add_constant(coef(rng));
    const Poly s = boolean_to_spin(p);
    const Poly back = spin_to_boolean(s);
    EXPECT_TRUE(back == p);
    for (int m = 0; m < (1 << n); ++m) {
      Assignment bits;
      Assignment spins(Domain::spin);
      for (int i = 0; i < n; ++i) {
        bits.set(names[i], (m >> i) & 1);
        spins.set(names[i], ((m >> i) & 1) ? 1 : -1);
      }
      EXPECT_EQ(p.eval(bits), s.eval(spins));
    }
  }
}

TEST(Poly, SpinConversionRejectsCubic) {
  Poly p;
  p.add_term({"x", "y", "z"}, 1);
  EXPECT_THROW(boolean_to_spin(p), DegreeError);
}

TEST(Poly, RenamedAndReordered) {
  Poly p;
  p.add_term({"i", "j"}, 2);
  p.add_term({"k"}, 1);
  const std::vector<std::string> order{"k", "j", "i"};
  const Poly r = p.reordered(order);
  EXPECT_EQ(r.var_names(), order);
  EXPECT_TRUE(r == p);
  const Poly q = p.renamed({{"i", "a"}, {"k", "c"}});
  EXPECT_EQ(q.coeff({"a", "j"}), Rational(2));
  EXPECT_EQ(q.coeff({"c"}), Rational(1));
}

}  // namespace
}  // namespace aqc
