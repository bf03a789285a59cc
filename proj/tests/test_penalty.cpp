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

#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/penalty.hpp"

namespace aqc {
namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(AQC_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Builtin penalties as plain integer functions of (i, j, k, a), with the
// relation each should encode.
struct Row {
  BoolOp op;
  std::function<int(int, int, int, int)> f;
  std::function<bool(int, int, int, int)> ok;
  bool ancilla;
};

const std::vector<Row>& builtin_rows() {
  static const std::vector<Row> rows = {
      {BoolOp::COPY, [](int i, int, int k, int) { return -2 * i * k + i + k; },
       [](int i, int, int k, int) { return k == i; }, false},
      {BoolOp::NOT, [](int i, int, int k, int) { return 2 * i * k - i - k; },
       [](int i, int, int k, int) { return k == 1 - i; }, false},
      {BoolOp::AND, [](int i, int j, int k, int) { return i * j - 2 * (i + j) * k + 3 * k; },
       [](int i, int j, int k, int) { return k == (i & j); }, false},
      {BoolOp::OR, [](int i, int j, int k, int) { return i * j + (i + j) * (1 - 2 * k) + k; },
       [](int i, int j, int k, int) { return k == (i | j); }, false},
      {BoolOp::IMPLIES,
       [](int i, int j, int k, int a) {
         return 4 * i * j + 2 * i * k - 6 * (i + j) * a - 2 * k * a - i - k + 9 * a;
       },
       [](int i, int j, int k, int a) { return k == ((1 - i) | j) && a == (i & j); }, true},
      {BoolOp::XOR,
       [](int i, int j, int k, int a) {
         return 2 * i * j - 2 * (i + j) * k - 4 * (i + j) * a + 4 * k * a + i + j + k + 4 * a;
       },
       [](int i, int j, int k, int a) { return k == (i ^ j) && a == (i & j); }, true},
      {BoolOp::EQUIV,
       [](int i, int j, int k, int a) {
         return 2 * i * j + 2 * (i + j) * k - 4 * (i + j) * a - 4 * k * a - i - j - k + 8 * a;
       },
       [](int i, int j, int k, int a) { return k == 1 - (i ^ j) && a == (i & j); }, true},
  };
  return rows;
}

TEST(Penalty, BuiltinsMatchHandWrittenPenalties) {
  for (const auto& row : builtin_rows()) {
    const Penalty p = builtin_penalty(row.op);
    const bool unary = arity(row.op) == 1;
    int v = std::numeric_limits<int>::max();
    int bad = std::numeric_limits<int>::max();
    for (int m = 0; m < 16; ++m) {
      const int i = m & 1;
      const int j = unary ? 0 : (m >> 1) & 1;
      const int k = (m >> 2) & 1;
      const int a = row.ancilla ? (m >> 3) & 1 : 0;
      if ((unary && (m >> 1) & 1) || (!row.ancilla && (m >> 3) & 1)) {
        continue;
      }
      Assignment s;
      s.set("i", i).set("k", k);
      if (!unary) s.set("j", j);
      if (row.ancilla) s.set("a", a);
      const int value = row.f(i, j, k, a);
      ASSERT_EQ(p.poly().eval(s), Rational(value)) << to_string(row.op);
      if (row.ok(i, j, k, a)) {
        v = std::min(v, value);
      } else {
        bad = std::min(bad, value);
      }
    }
    EXPECT_TRUE(p.report().pass) << to_string(row.op);
    EXPECT_EQ(p.valid_value(), Rational(v)) << to_string(row.op);
    EXPECT_EQ(*p.report().min_invalid, Rational(bad)) << to_string(row.op);
    EXPECT_GE(bad - v, 1);
  }
}

TEST(Penalty, ValidValuesPerOperator) {
  EXPECT_EQ(builtin_penalty(BoolOp::COPY).valid_value(), Rational(0));
  EXPECT_EQ(builtin_penalty(BoolOp::NOT).valid_value(), Rational(-1));
  EXPECT_EQ(builtin_penalty(BoolOp::AND).valid_value(), Rational(0));
  EXPECT_EQ(builtin_penalty(BoolOp::OR).valid_value(), Rational(0));
  EXPECT_EQ(builtin_penalty(BoolOp::IMPLIES).valid_value(), Rational(-1));
  EXPECT_EQ(builtin_penalty(BoolOp::XOR).valid_value(), Rational(0));
  EXPECT_EQ(builtin_penalty(BoolOp::EQUIV).valid_value(), Rational(-1));
}

TEST(Penalty, DerivedOperatorsPassGap) {
  for (BoolOp op : {BoolOp::A, BoolOp::B, BoolOp::C, BoolOp::D, BoolOp::E, BoolOp::CONST0,
                    BoolOp::CONST1}) {
    const Penalty p = builtin_penalty(op);
    EXPECT_TRUE(p.report().pass) << to_string(op);
    EXPECT_LE(p.poly().degree(), 2);
  }
}

TEST(Penalty, EquivIsNegatedXorPlusFourAndBindings) {
  const Poly xr = builtin_penalty(BoolOp::XOR).poly();
  const Poly bind = builtin_penalty(BoolOp::AND).poly().renamed({{"k", "a"}});
  const Poly eq = combine({{-1, xr}, {4, bind}});
  EXPECT_TRUE(eq == builtin_penalty(BoolOp::EQUIV).poly()) << eq.str();
}

TEST(Penalty, NotTableMatchesGolden) {
  const std::vector<std::string> in{"x"};
  const Penalty p = boolean_penalty(BoolOp::NOT, "z", in);
  EXPECT_EQ(p.report().table(RowOrder::valid_first), golden("not_table.txt"));
}

TEST(Penalty, EquationTableMatchesGolden) {
  const Penalty p = equation_to_penalty(
      Expr::variable("z"), Expr::variable("x") + Expr::variable("y") + Expr::constant(1));
  EXPECT_EQ(p.dropped_offset(), Rational(1));
  EXPECT_EQ(p.report().vars, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(p.report().table(RowOrder::descending), golden("equation_table.txt"));
}

TEST(Penalty, EquationSoundnessOnRandomIntegerEquations) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::vector<std::string> names{"p", "q", "r", "w"};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> c(4);
    for (auto& x : c) x = coef(rng);
    const int rhs = coef(rng);
    std::vector<Expr> terms;
    for (int t = 0; t < 4; ++t) {
      terms.push_back(Expr::constant(c[t]) * Expr::variable(names[t]));
    }
    const Penalty p = equation_to_penalty(Expr::sum(terms), Expr::constant(rhs));
    int solutions = 0;
    for (int m = 0; m < 16; ++m) {
      int lhs = 0;
      for (int t = 0; t < 4; ++t) lhs += c[t] * ((m >> t) & 1);
      solutions += lhs == rhs;
    }
    EXPECT_EQ(p.satisfiable(), solutions > 0);
    if (p.satisfiable()) {
      EXPECT_EQ(p.valid_set().size(), static_cast<std::size_t>(solutions));
      EXPECT_TRUE(p.report().pass);
    }
  }
}

TEST(Penalty, UnsatisfiableEquationIsFlagged) {
  const Penalty p = equation_to_penalty(Expr::variable("x") + Expr::variable("y"),
                                        Expr::constant(3));
  EXPECT_FALSE(p.satisfiable());
  EXPECT_TRUE(p.valid_set().empty());
}

TEST(Penalty, NonIntegerEquationIsRejected) {
  EXPECT_THROW(equation_to_penalty(Expr::variable("x"),
                                   Expr::constant(Rational(1) / 2) * Expr::variable("y")),
               std::invalid_argument);
}

TEST(Penalty, SlackRuleAddsOneLessThanVariableCount) {
  const Inequality le{{"x", "y", "z"}, Sense::le, 2};
  const SlackEquation eq = inequality_to_equation(le);
  EXPECT_EQ(eq.slacks, (std::vector<std::string>{"s", "t"}));
  const Penalty p = inequality_to_penalty(le);
  EXPECT_EQ(p.poly().num_vars(), 5u);
  EXPECT_TRUE(p.report().pass);
  const std::vector<std::string> keep{"x", "y", "z"};
  const ValidSet proj = p.valid_set().projected(keep);
  EXPECT_EQ(proj.size(), 7u);  // every assignment except 1,1,1
  EXPECT_FALSE(proj.contains(0b111));
}

TEST(Penalty, StrictSlackUsesMinimalCount) {
  const Inequality le{{"x", "y", "z", "w"}, Sense::le, 1};
  EXPECT_EQ(inequality_to_equation(le, false).slacks.size(), 3u);
  EXPECT_EQ(inequality_to_equation(le, true).slacks.size(), 1u);
  const Inequality ge{{"x", "y", "z"}, Sense::ge, 2};
  EXPECT_EQ(inequality_to_equation(ge, true).slacks.size(), 1u);
  CompileOptions strict;
  strict.strict_slack = true;
  const Penalty p = inequality_to_penalty(ge, strict);
  const std::vector<std::string> keep{"x", "y", "z"};
  EXPECT_EQ(p.valid_set().projected(keep).size(), 4u);
}

TEST(Penalty, SlackNamesAvoidUserVariables) {
  const Inequality le{{"s", "t", "u"}, Sense::le, 1};
  const SlackEquation eq = inequality_to_equation(le);
  for (const auto& n : eq.slacks) {
    EXPECT_NE(n, "s");
    EXPECT_NE(n, "t");
    EXPECT_NE(n, "u");
  }
}

TEST(Penalty, InfeasibleAndVacuousInequalities) {
  EXPECT_THROW(inequality_to_equation({{"x", "y"}, Sense::le, -1}), InfeasibleConstraintError);
  EXPECT_THROW(inequality_to_equation({{"x", "y"}, Sense::ge, 3}), InfeasibleConstraintError);
  EXPECT_TRUE(inequality_to_equation({{"x", "y"}, Sense::le, 2}).vacuous);
  const Penalty p = inequality_to_penalty({{"x", "y"}, Sense::ge, 0});
  EXPECT_TRUE(p.poly().is_zero());
  EXPECT_EQ(p.valid_set().size(), 4u);
}

TEST(Penalty, CorruptedPenaltyFailsGap) {
  Poly p = builtin_penalty(BoolOp::AND).poly();
  p.add_term({"k"}, -2);  // 3k becomes k
  const GapReport r = verify_gap(p, builtin_penalty(BoolOp::AND).valid_set());
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.violation);
  EXPECT_THROW(Penalty::make(p, builtin_penalty(BoolOp::AND).valid_set()), GapViolation);
}

TEST(Penalty, ScalingKeepsThresholdAtOne) {
  const Penalty p = builtin_penalty(BoolOp::NOT).scaled(3);
  EXPECT_EQ(p.valid_value(), Rational(-3));
  EXPECT_EQ(*p.report().gap(), Rational(3));
  EXPECT_THROW(builtin_penalty(BoolOp::NOT).scaled(Rational(1) / 2), std::invalid_argument);
}

TEST(Penalty, QuadratizeRestrictionProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  const std::vector<std::string> names{"a1", "a2", "a3", "a4", "a5"};
  for (int trial = 0; trial < 30; ++trial) {
    Poly p;
    for (const auto& n : names) p.declare(n);
    for (int t = 0; t < 6; ++t) {
      std::vector<std::string> mono;
      for (const auto& n : names) {
        if (rng() % 2) mono.push_back(n);
      }
      p.add_term(std::span<const std::string>(mono), coef(rng));
    }
    const QuadratizeResult q = quadratize(p);
    ASSERT_LE(q.poly.degree(), 2);
    const std::size_t n = names.size();
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      Assignment s;
      for (std::size_t i = 0; i < n; ++i) s.set(names[i], static_cast<int>((m >> i) & 1));
      // Ancillas in creation order; each may depend on earlier ones.
      for (const auto& a : q.ancillas) {
        s.set(a.name, *s.get(a.lhs) * *s.get(a.rhs));
      }
      EXPECT_EQ(q.poly.eval(s), p.eval(s));
    }
  }
}

TEST(Penalty, QuadratizePlanEntriesMustApply) {
  Poly p;
  p.add_term({"x", "y", "z"}, 1);
  QuadratizeOptions opts;
  opts.plan = {{"x", "w", "a"}};
  EXPECT_THROW(quadratize(p, opts), std::invalid_argument);
}

TEST(Penalty, RenamedPenaltyCarriesValidSet) {
  const Penalty p = renamed(builtin_penalty(BoolOp::XOR), {{"i", "x"}, {"k", "z"}, {"a", "q"}});
  EXPECT_EQ(p.valid_set().vars(), (std::vector<std::string>{"x", "j", "z", "q"}));
  EXPECT_EQ(p.ancillas().front(), (AncillaDef{"q", "x", "j"}));
  EXPECT_TRUE(p.report().pass);
}

TEST(Penalty, BooleanPenaltyWithRepeatedOperands) {
  const std::vector<std::string> in{"x", "x"};
  const Penalty p = boolean_penalty(BoolOp::XOR, "z", in);
  // z = x XOR x forces z = 0.
  const std::vector<std::string> keep{"x", "z"};
  const ValidSet proj = p.valid_set().projected(keep);
  EXPECT_EQ(proj.size(), 2u);
  EXPECT_TRUE(proj.contains(0b01));
  EXPECT_FALSE(proj.contains(0b11));
}

TEST(Penalty, GapCheckIsIndependentOfThreadCount) {
  const Penalty p = inequality_to_penalty({{"a", "b", "c", "d", "e", "f", "g", "h"}, Sense::le, 3});
  GapOptions one;
  GapOptions many;
  many.threads = 4;
  const GapReport r1 = verify_gap(p.poly(), p.valid_set(), one);
  const GapReport r4 = verify_gap(p.poly(), p.valid_set(), many);
  EXPECT_EQ(r1.scaled_values, r4.scaled_values);
  EXPECT_EQ(r1.v, r4.v);
  EXPECT_EQ(r1.min_invalid, r4.min_invalid);
}

}  // namespace
}  // namespace aqc
