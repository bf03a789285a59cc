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
#include <string_view>
#include <utility>
#include <vector>

#include "aqc/errors.hpp"
#include "aqc/rational.hpp"

namespace aqc {

enum class VarKind { input, output, ancilla, slack };
std::string_view to_string(VarKind kind);
VarKind parse_var_kind(std::string_view text);

/// Value domain of a polynomial's variables: bits {0,1} or spins {-1,+1}.
enum class Domain { binary, spin };
std::string_view to_string(Domain domain);

struct Var {
  std::string name;
  VarKind kind = VarKind::input;

  bool operator==(const Var&) const = default;
};

/// Bit i set means registry variable i is 1 (binary) or +1 (spin).
using Mask = std::uint64_t;

/// Named values, either bits or spins. The two views are related pointwise
/// by s = 2x - 1.
class Assignment {
 public:
  explicit Assignment(Domain view = Domain::binary) : view_(view) {}

  Assignment& set(std::string name, int value);
  std::optional<int> get(std::string_view name) const;

  Domain view() const { return view_; }
  const std::map<std::string, int, std::less<>>& values() const { return values_; }

  Assignment as(Domain view) const;

 private:
  Domain view_;
  std::map<std::string, int, std::less<>> values_;
};

/// Multilinear polynomial with exact coefficients.
///
/// Variables live in an ordered registry; a monomial is keyed by the sorted
/// registry indices of its variables. Registry order drives printing and
/// matrix layout. In the binary domain x*x = x, in the spin domain s*s = 1,
/// so products stay multilinear either way.
class Poly {
 public:
  using Key = std::vector<std::uint32_t>;

  explicit Poly(Domain domain = Domain::binary) : domain_(domain) {}

  static Poly variable(std::string name, VarKind kind = VarKind::input,
                       Domain domain = Domain::binary);
  static Poly constant(Rational value, Domain domain = Domain::binary);

  /// Registers `name` (no-op if present) and returns its index. An existing
  /// variable keeps its original kind.
  std::uint32_t declare(std::string_view name, VarKind kind = VarKind::input);
  std::optional<std::uint32_t> index_of(std::string_view name) const;

  const std::vector<Var>& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  Domain domain() const { return domain_; }
  std::vector<std::string> var_names() const;

  /// Adds coeff * prod(names). Undeclared names are declared as inputs.
  /// Repeated names collapse per the domain's idempotence rule.
  void add_term(std::span<const std::string> names, const Rational& coeff);
  void add_term(std::initializer_list<std::string_view> names, const Rational& coeff);
  void add_constant(const Rational& value) { offset_ += value; }

  /// Coefficient of the monomial over `names`; the empty list gives the offset.
  Rational coeff(std::initializer_list<std::string_view> names) const;

  const std::map<Key, Rational>& terms() const { return terms_; }
  const Rational& offset() const { return offset_; }

  /// Highest monomial degree; 0 for a constant polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty() && offset_ == 0; }

  Rational eval(const Assignment& assignment) const;
  Rational eval(Mask bits) const;

  /// Same polynomial with the registry permuted so `order` comes first.
  Poly reordered(std::span<const std::string> order) const;
  Poly renamed(const std::map<std::string, std::string>& mapping) const;
  Poly with_kinds(const std::map<std::string, VarKind>& kinds) const;
  Poly without_offset() const;

  /// Terms in print order: degree descending, then registry order.
  std::vector<std::pair<Key, Rational>> sorted_terms() const;

  /// Canonical text, e.g. `2*x_i*x_j - 2*x_i*x_k + x_i + 4*x_a + (offset 1)`.
  std::string str() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& scale);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Monomial-for-monomial equality by variable names, independent of
  /// registry order and variable kinds.
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void add_key(Key key, const Rational& coeff);
  /// Index map from `other`'s registry into this one, declaring as needed.
  std::vector<std::uint32_t> absorb_registry(const Poly& other);

  Domain domain_;
  std::vector<Var> vars_;
  std::map<Key, Rational> terms_;
  Rational offset_ = 0;
};

/// sum of weight * poly, in canonical form.
Poly combine(std::span<const std::pair<Rational, Poly>> weighted);
Poly combine(std::initializer_list<std::pair<Rational, Poly>> weighted);

/// Substitutes x = (s + 1) / 2. Rejects degree > 2.
Poly boolean_to_spin(const Poly& p);
/// Substitutes s = 2x - 1. Rejects degree > 2.
Poly spin_to_boolean(const Poly& p);

/// Polynomial expression tree that may contain powers, as written by a user
/// before idempotent reduction.
class Expr {
 public:
  enum class Kind { constant, variable, sum, product, power };

  static Expr constant(Rational value);
  static Expr variable(std::string name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, unsigned exponent);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  const std::string& name() const { return name_; }
  const std::vector<Expr>& children() const { return children_; }
  unsigned exponent() const { return exponent_; }

  /// Variable names in first-appearance order.
  std::vector<std::string> variables() const;
  std::string str() const;

  friend Expr operator+(Expr a, Expr b) { return sum({std::move(a), std::move(b)}); }
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b) { return product({std::move(a), std::move(b)}); }

 private:
  Expr() = default;
  void collect_variables(std::vector<std::string>& out) const;

  Kind kind_ = Kind::constant;
  Rational value_ = 0;
  std::string name_;
  std::vector<Expr> children_;
  unsigned exponent_ = 1;
};

/// Expands `raw` and collapses every power with x^n = x.
Poly reduce_idempotent(const Expr& raw);

/// Evaluates `raw` literally (powers included) on a binary assignment.
Rational evaluate(const Expr& raw, const Assignment& assignment);

}  // namespace aqc
