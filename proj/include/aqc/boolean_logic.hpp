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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqc/poly.hpp"

namespace aqc {

/// Unary and binary Boolean operations. The binary opcodes are the ten
/// columns of the two-variable truth table; A..E carry no names of their own.
enum class BoolOp {
  AND,
  OR,
  IMPLIES,
  XOR,
  EQUIV,
  A,  // 1 only on row (0,0)
  B,  // 0 only on row (1,1)
  C,  // 0 only on row (0,1)
  D,  // 1 only on row (0,1)
  E,  // 1 only on row (1,0)
  COPY,
  NOT,
  CONST0,
  CONST1,
};

int arity(BoolOp op);
std::string_view to_string(BoolOp op);
std::optional<BoolOp> parse_bool_op(std::string_view text);

/// The ten binary columns in table order: AND, OR, IMPLIES, XOR, EQUIV, A..E.
std::span<const BoolOp> binary_ops();

struct TruthRow {
  std::vector<std::uint8_t> inputs;
  std::uint8_t output = 0;
};

/// Rows in descending binary order: (1,1), (1,0), (0,1), (0,0) for arity 2.
struct TruthTable {
  int arity = 0;
  std::vector<TruthRow> rows;
};

TruthTable truth_table(BoolOp op);

/// Tab-separated layout with one output column per op, e.g. the full
/// two-variable table for `binary_ops()`.
std::string format_truth_tables(std::span<const BoolOp> ops);

std::uint8_t eval_op(BoolOp op, std::span<const std::uint8_t> inputs);

/// Multilinear polynomial agreeing with `op` on every input row.
Poly op_polynomial(BoolOp op, std::span<const std::string> inputs);

/// Ancilla defined as the product of two other variables: name = lhs * rhs.
struct AncillaDef {
  std::string name;
  std::string lhs;
  std::string rhs;

  bool operator==(const AncillaDef&) const = default;
};

/// Set of full assignments regarded as satisfying a relation. Members are
/// masks over `vars()` (bit i is variable i).
class ValidSet {
 public:
  static constexpr std::size_t kMaxVars = 24;

  ValidSet() = default;
  ValidSet(std::vector<std::string> vars, std::vector<Mask> members);

  /// Enumerates all 2^n assignments of `vars` and keeps those accepted.
  static ValidSet from_predicate(std::vector<std::string> vars,
                                 const std::function<bool(const Assignment&)>& accept);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Appends ancilla variables whose values are fixed by their definitions.
  ValidSet extended(std::span<const AncillaDef> ancillas) const;

  /// Projects onto `keep` (in that order).
  ValidSet projected(std::span<const std::string> keep) const;

  Assignment assignment(Mask m) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Mask> members_;  // sorted, unique
};

/// Assignments of (inputs..., output, ancillas...) with output = op(inputs)
/// and every ancilla equal to its defining product.
ValidSet relation_of(BoolOp op, const std::string& output, std::span<const std::string> inputs,
                     std::span<const AncillaDef> ancillas = {});

}  // namespace aqc
