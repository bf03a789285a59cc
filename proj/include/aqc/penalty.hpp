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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqc/boolean_logic.hpp"
#include "aqc/poly.hpp"

namespace aqc {

enum class RowOrder {
  descending,   // first variable is the most significant bit, all-ones first
  valid_first,  // valid rows, then invalid rows, each descending
};

/// Exhaustive check that valid assignments share one value v and every other
/// assignment scores at least v + 1.
struct GapReport {
  std::vector<std::string> vars;
  ValidSet valid;
  Rational v = 0;
  std::optional<Rational> min_invalid;  // empty when every assignment is valid
  bool valid_values_agree = false;
  bool pass = false;
  std::optional<Mask> violation;
  std::string violation_reason;

  /// value(mask) = scaled_values[mask] / scale.
  std::vector<std::int64_t> scaled_values;
  Rational scale = 1;

  Rational value(Mask m) const;
  bool is_valid(Mask m) const { return valid.contains(m); }
  /// min_invalid - v, or empty when there are no invalid assignments.
  std::optional<Rational> gap() const;

  std::string assignment_str(Mask m) const;
  std::string summary() const;
  /// Tab-separated table: variables, validity, value.
  std::string table(RowOrder order = RowOrder::descending) const;
};

struct GapOptions {
  std::size_t max_vars = ValidSet::kMaxVars;
  unsigned threads = 1;
};

/// Enumerates every assignment of `valid.vars()`. Every variable of `poly`
/// must appear in the valid set.
GapReport verify_gap(const Poly& poly, const ValidSet& valid, const GapOptions& options = {});

class GapViolation : public Error {
 public:
  explicit GapViolation(GapReport report)
      : Error("gap verification failed: " + report.summary()), report_(std::move(report)) {}
  const GapReport& report() const { return report_; }

 private:
  GapReport report_;
};

/// Quadratic penalty whose valid assignments all evaluate to v and whose
/// invalid assignments evaluate to at least v + 1. Only obtainable through
/// `make`, which runs `verify_gap`.
class Penalty {
 public:
  static Penalty make(Poly poly, ValidSet valid, std::vector<AncillaDef> ancillas = {},
                      Rational dropped_offset = 0, std::string provenance = {},
                      std::vector<Rational> ancilla_weights = {});

  /// Penalty for a constraint with no binary solution. Carries the squared
  /// polynomial and an empty valid set; `satisfiable()` is false.
  static Penalty make_unsatisfiable(Poly poly, std::vector<std::string> vars,
                                    Rational dropped_offset, std::string provenance);

  const Poly& poly() const { return poly_; }
  const ValidSet& valid_set() const { return report_.valid; }
  const Rational& valid_value() const { return report_.v; }
  const Rational& dropped_offset() const { return dropped_offset_; }
  const std::vector<AncillaDef>& ancillas() const { return ancillas_; }
  const std::vector<Rational>& ancilla_weights() const { return ancilla_weights_; }
  const GapReport& report() const { return report_; }
  bool satisfiable() const { return satisfiable_; }
  const std::string& provenance() const { return provenance_; }

  /// Whole penalty multiplied by m >= 1; the gap threshold stays 1.
  Penalty scaled(const Rational& m) const;

 private:
  Penalty() = default;

  Poly poly_;
  GapReport report_;
  std::vector<AncillaDef> ancillas_;
  std::vector<Rational> ancilla_weights_;
  Rational dropped_offset_ = 0;
  std::string provenance_;
  bool satisfiable_ = true;
};

struct AncillaPlanEntry {
  std::string lhs;
  std::string rhs;
  std::string name;
};

struct QuadratizeOptions {
  /// Applied first, in order; each entry must replace at least one term.
  /// Remaining high-degree terms use the most frequent pair.
  std::vector<AncillaPlanEntry> plan;
  /// Fixed binding weight for every ancilla. Otherwise the weight is the
  /// number of terms the ancilla replaces plus `extra_weight`.
  std::optional<Rational> weight;
  Rational extra_weight = 0;
};

struct QuadratizeResult {
  Poly poly;
  std::vector<AncillaDef> ancillas;
  std::vector<Rational> weights;
  std::vector<std::size_t> replaced;
};

/// Replaces variable pairs by ancillas inside terms of degree >= 3 only, and
/// adds weight * (uw - 2(u + w)a + 3a) per ancilla. On assignments where each
/// ancilla equals its product the result agrees with `p`.
QuadratizeResult quadratize(const Poly& p, const QuadratizeOptions& options = {});

/// quadratize + verify_gap against `base` extended by the ancillas. Without a
/// fixed weight, raises `extra_weight` 0, 1, ... up to `max_extra` until the
/// gap check passes. Throws GapViolation if it never does.
Penalty quadratize_verified(const Poly& p, const ValidSet& base, QuadratizeOptions options,
                            unsigned max_extra, Rational dropped_offset,
                            std::string provenance);

struct CompileOptions {
  /// Minimal slack count instead of (#variables - 1).
  bool strict_slack = false;
  /// Multiplier m >= 1 applied to the finished penalty.
  Rational scale = 1;
  std::optional<Rational> ancilla_weight;
  unsigned max_weight_escalation = 8;
  std::vector<AncillaPlanEntry> ancilla_plan;
  std::map<std::string, VarKind> kinds;
};

/// Same penalty over renamed variables (valid set and ancilla definitions
/// follow). Names absent from `mapping` are kept.
Penalty renamed(const Penalty& p, const std::map<std::string, std::string>& mapping);

/// Fixed penalties for COPY, NOT, AND, OR, IMPLIES, XOR and EQUIV over
/// i, j (inputs), k (output) and, where needed, a = i*j. Other ops are
/// compiled from k = f(i, j) by the general compiler.
Penalty builtin_penalty(BoolOp op);

/// Penalty for `output = op(inputs)` over the caller's variable names. Uses the
/// builtin penalty when the names are distinct, the general equation route
/// otherwise. The builtin ancilla is renamed if it would clash.
Penalty boolean_penalty(BoolOp op, const std::string& output,
                        std::span<const std::string> inputs, const CompileOptions& options = {});

/// Penalty for `lhs = rhs`: square the difference, reduce, drop the constant,
/// quadratize if needed. Coefficients must be integers.
Penalty equation_to_penalty(const Expr& lhs, const Expr& rhs, const CompileOptions& options = {});

enum class Sense { le, ge };

struct Inequality {
  std::vector<std::string> vars;
  Sense sense = Sense::le;
  std::int64_t bound = 0;
};

struct SlackEquation {
  Expr lhs = Expr::constant(0);
  Expr rhs = Expr::constant(0);
  std::vector<std::string> slacks;
  /// Every binary assignment satisfies the inequality.
  bool vacuous = false;
};

/// sum(vars) <= b becomes sum(vars) + sum(slacks) = b; >= subtracts the
/// slacks. Uses #vars - 1 slacks unless `strict`.
SlackEquation inequality_to_equation(const Inequality& ineq, bool strict = false);

Penalty inequality_to_penalty(const Inequality& ineq, const CompileOptions& options = {});

}  // namespace aqc
