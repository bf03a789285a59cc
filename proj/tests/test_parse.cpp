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

#include <string>
#include <variant>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/parse.hpp"

namespace aqc {
namespace {

TEST(Parse, EquationWithImplicitProducts) {
  const Constraint c = parse_constraint("z = 2x y + (x - y)^2 + 1");
  ASSERT_TRUE(std::holds_alternative<EquationConstraint>(c));
  const auto& eq = std::get<EquationConstraint>(c);
  for (Mask m = 0; m < 8; ++m) {
    Assignment s;
    const int x = m & 1, y = (m >> 1) & 1, z = (m >> 2) & 1;
    s.set("x", x).set("y", y).set("z", z);
    EXPECT_EQ(evaluate(eq.lhs, s), Rational(z));
    EXPECT_EQ(evaluate(eq.rhs, s), Rational(2 * x * y + (x - y) * (x - y) + 1));
  }
}

TEST(Parse, DecimalCoefficientsAndNoDivision) {
  const Expr e = parse_expression("0.5 a - 0.75");
  Assignment s;
  s.set("a", 1);
  EXPECT_EQ(evaluate(e, s), Rational(-1) / 4);
  EXPECT_THROW(parse_expression("a / 2"), ParseError);
}

TEST(Parse, MultiLetterNamesAreSingleVariables) {
  const Expr e = parse_expression("2xy");
  EXPECT_EQ(e.variables(), (std::vector<std::string>{"xy"}));
}

TEST(Parse, BooleanForms) {
  for (const char* text : {"k = i AND j", "k = AND(i, j)", "k = AND(i,j)"}) {
    const Constraint c = parse_constraint(text);
    ASSERT_TRUE(std::holds_alternative<BooleanConstraint>(c)) << text;
    const auto& b = std::get<BooleanConstraint>(c);
    EXPECT_EQ(b.op, BoolOp::AND);
    EXPECT_EQ(b.output, "k");
    EXPECT_EQ(b.inputs, (std::vector<std::string>{"i", "j"}));
  }
  const auto n = std::get<BooleanConstraint>(parse_constraint("z = NOT x"));
  EXPECT_EQ(n.op, BoolOp::NOT);
  const auto one = std::get<BooleanConstraint>(parse_constraint("z = CONST1"));
  EXPECT_EQ(one.op, BoolOp::CONST1);
  EXPECT_TRUE(one.inputs.empty());
  const auto imp = std::get<BooleanConstraint>(parse_constraint("z = x IMPLIES y"));
  EXPECT_EQ(to_string(Constraint(imp)), "z = IMPLIES(x, y)");
}

TEST(Parse, Inequalities) {
  const auto le = std::get<Inequality>(parse_constraint("x + y + z <= 2"));
  EXPECT_EQ(le.vars, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(le.sense, Sense::le);
  EXPECT_EQ(le.bound, 2);
  const auto ge = std::get<Inequality>(parse_constraint("a + b >= 1"));
  EXPECT_EQ(ge.sense, Sense::ge);
  EXPECT_THROW(parse_constraint("2x + y <= 1"), ParseError);
  EXPECT_THROW(parse_constraint("x + x <= 1"), ParseError);
  EXPECT_THROW(parse_constraint("x + y <= 1/2"), ParseError);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_constraint("x + * y", 7);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_constraint("x + y"), ParseError);
  EXPECT_THROW(parse_constraint("x = (y"), ParseError);
  EXPECT_THROW(parse_constraint("z = x AND"), ParseError);
  EXPECT_THROW(parse_constraint("z = AND(x)"), ParseError);
}

TEST(Parse, ConstraintFileSkipsComments) {
  const auto cs = parse_constraints("# header\nx + y <= 1\n\nz = x XOR y  # trailing\n");
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Inequality>(cs[0]));
  EXPECT_TRUE(std::holds_alternative<BooleanConstraint>(cs[1]));
}

TEST(Parse, AncillaPlan) {
  const AncillaPlanEntry e = parse_ancilla_plan("a=i*j");
  EXPECT_EQ(e.name, "a");
  EXPECT_EQ(e.lhs, "i");
  EXPECT_EQ(e.rhs, "j");
  EXPECT_THROW(parse_ancilla_plan("a=i"), ParseError);
}

TEST(Parse, CompileDispatchesByKind) {
  const Penalty xorp = compile_constraint(parse_constraint("k = i XOR j"));
  EXPECT_TRUE(xorp.report().pass);
  EXPECT_EQ(xorp.ancillas().size(), 1u);
  const Penalty le = compile_constraint(parse_constraint("x + y <= 1"));
  EXPECT_EQ(le.poly().num_vars(), 3u);
  const Penalty eq = compile_constraint(parse_constraint("z = x + y + 1"));
  EXPECT_EQ(eq.dropped_offset(), Rational(1));
}

}  // namespace
}  // namespace aqc
