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

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aqc/boolean_logic.hpp"
#include "aqc/penalty.hpp"
#include "aqc/poly.hpp"

namespace aqc {

struct EquationConstraint {
  Expr lhs = Expr::constant(0);
  Expr rhs = Expr::constant(0);
};

struct BooleanConstraint {
  BoolOp op = BoolOp::AND;
  std::string output;
  std::vector<std::string> inputs;
};

using Constraint = std::variant<EquationConstraint, Inequality, BooleanConstraint>;

/// Parses one constraint:
///
///   z = x + y + 1            equation (any polynomial expression, ^ allowed)
///   x + y + z <= 2           inequality over a sum of distinct variables
///   k = i XOR j              Boolean, infix AND OR XOR IMPLIES EQUIV
///   k = NOT i                Boolean, prefix NOT COPY
///   k = A(i, j)              Boolean, call form for any operator
///
/// `line` is used for error positions.
Constraint parse_constraint(std::string_view text, std::size_t line = 1);

/// One constraint per line; blank lines and `#` comments are skipped.
std::vector<Constraint> parse_constraints(std::string_view text);

/// Polynomial expression on its own.
Expr parse_expression(std::string_view text, std::size_t line = 1);

/// `a=i*j` ancilla naming for quadratization.
AncillaPlanEntry parse_ancilla_plan(std::string_view text);

Penalty compile_constraint(const Constraint& c, const CompileOptions& options = {});

std::string to_string(const Constraint& c);

}  // namespace aqc
