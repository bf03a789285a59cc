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

#include "aqc/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aqc {

std::string_view to_string(VarKind kind) {
  switch (kind) {
    case VarKind::input:
      return "input";
    case VarKind::output:
      return "output";
    case VarKind::ancilla:
      return "ancilla";
    case VarKind::slack:
      return "slack";
  }
  return "input";
}

VarKind parse_var_kind(std::string_view text) {
  for (VarKind k : {VarKind::input, VarKind::output, VarKind::ancilla, VarKind::slack}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  throw std::invalid_argument("unknown variable kind '" + std::string(text) + "'");
}

std::string_view to_string(Domain domain) {
  return domain == Domain::binary ? "binary" : "spin";
}

Assignment& Assignment::set(std::string name, int value) {
  const bool ok = view_ == Domain::binary ? (value == 0 || value == 1)
                                          : (value == -1 || value == 1);
  if (!ok) {
    throw std::invalid_argument("value " + std::to_string(value) + " for '" + name +
                                "' is outside the " + std::string(to_string(view_)) +
                                " view");
  }
  values_[std::move(name)] = value;
  return *this;
}

std::optional<int> Assignment::get(std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Assignment Assignment::as(Domain view) const {
  if (view == view_) {
    return *this;
  }
  Assignment out(view);
  for (const auto& [name, value] : values_) {
    out.values_[name] = view == Domain::spin ? 2 * value - 1 : (value + 1) / 2;
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly Poly::variable(std::string name, VarKind kind, Domain domain) {
  Poly p(domain);
  auto idx = p.declare(name, kind);
  p.add_key({idx}, 1);
  return p;
}

Poly Poly::constant(Rational value, Domain domain) {
  Poly p(domain);
  p.offset_ = std::move(value);
  return p;
}

std::uint32_t Poly::declare(std::string_view name, VarKind kind) {
  if (auto idx = index_of(name)) {
    return *idx;
  }
  if (name.empty()) {
    throw std::invalid_argument("variable names must be non-empty");
  }
  vars_.push_back(Var{std::string(name), kind});
  return static_cast<std::uint32_t>(vars_.size() - 1);
}

std::optional<std::uint32_t> Poly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) {
      return static_cast<std::uint32_t>(i);
    }
  }
  return std::nullopt;
}

std::vector<std::string> Poly::var_names() const {
  std::vector<std::string> names;
  names.reserve(vars_.size());
  for (const auto& v : vars_) {
    names.push_back(v.name);
  }
  return names;
}

void Poly::add_key(Key key, const Rational& coeff) {
  if (coeff == 0) {
    return;
  }
  std::sort(key.begin(), key.end());
  if (domain_ == Domain::binary) {
    key.erase(std::unique(key.begin(), key.end()), key.end());
  } else {
    // s*s = 1: drop pairs of equal indices.
    Key reduced;
    for (std::size_t i = 0; i < key.size();) {
      std::size_t j = i;
      while (j < key.size() && key[j] == key[i]) {
        ++j;
      }
      if ((j - i) % 2 == 1) {
        reduced.push_back(key[i]);
      }
      i = j;
    }
    key = std::move(reduced);
  }
  if (key.empty()) {
    offset_ += coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void Poly::add_term(std::span<const std::string> names, const Rational& coeff) {
  Key key;
  key.reserve(names.size());
  for (const auto& n : names) {
    key.push_back(declare(n));
  }
  add_key(std::move(key), coeff);
}

void Poly::add_term(std::initializer_list<std::string_view> names, const Rational& coeff) {
  std::vector<std::string> owned(names.begin(), names.end());
  add_term(std::span<const std::string>(owned), coeff);
}

Rational Poly::coeff(std::initializer_list<std::string_view> names) const {
  if (names.size() == 0) {
    return offset_;
  }
  Key key;
  for (auto n : names) {
    auto idx = index_of(n);
    if (!idx) {
      return 0;
    }
    key.push_back(*idx);
  }
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [key, c] : terms_) {
    d = std::max(d, key.size());
  }
  return static_cast<int>(d);
}

Rational Poly::eval(const Assignment& assignment) const {
  const Assignment a = assignment.as(domain_);
  Mask bits = 0;
  if (vars_.size() > 64) {
    throw std::invalid_argument("evaluation supports at most 64 variables");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto v = a.get(vars_[i].name);
    if (!v) {
      throw MissingVariableError(vars_[i].name);
    }
    if (*v == 1) {
      bits |= Mask{1} << i;
    }
  }
  return eval(bits);
}

Rational Poly::eval(Mask bits) const {
  Rational total = offset_;
  for (const auto& [key, c] : terms_) {
    if (domain_ == Domain::binary) {
      bool all = true;
      for (auto idx : key) {
        if (!((bits >> idx) & 1)) {
          all = false;
          break;
        }
      }
      if (all) {
        total += c;
      }
    } else {
      int sign = 1;
      for (auto idx : key) {
        if (!((bits >> idx) & 1)) {
          sign = -sign;
        }
      }
      total += sign > 0 ? c : -c;
    }
  }
  return total;
}

std::vector<std::uint32_t> Poly::absorb_registry(const Poly& other) {
  std::vector<std::uint32_t> map;
  map.reserve(other.vars_.size());
  for (const auto& v : other.vars_) {
    map.push_back(declare(v.name, v.kind));
  }
  return map;
}

Poly Poly::reordered(std::span<const std::string> order) const {
  Poly out(domain_);
  for (const auto& name : order) {
    if (auto idx = index_of(name)) {
      out.declare(name, vars_[*idx].kind);
    } else {
      out.declare(name);
    }
  }
  out += *this;
  return out;
}

Poly Poly::renamed(const std::map<std::string, std::string>& mapping) const {
  Poly out(domain_);
  for (const auto& v : vars_) {
    auto it = mapping.find(v.name);
    out.declare(it == mapping.end() ? v.name : it->second, v.kind);
  }
  // Renaming may merge two variables, so go through names.
  for (const auto& [key, c] : terms_) {
    std::vector<std::string> names;
    for (auto idx : key) {
      auto it = mapping.find(vars_[idx].name);
      names.push_back(it == mapping.end() ? vars_[idx].name : it->second);
    }
    out.add_term(std::span<const std::string>(names), c);
  }
  out.offset_ = offset_;
  return out;
}

Poly Poly::with_kinds(const std::map<std::string, VarKind>& kinds) const {
  Poly out = *this;
  for (auto& v : out.vars_) {
    if (auto it = kinds.find(v.name); it != kinds.end()) {
      v.kind = it->second;
    }
  }
  return out;
}

Poly Poly::without_offset() const {
  Poly out = *this;
  out.offset_ = 0;
  return out;
}

std::vector<std::pair<Poly::Key, Rational>> Poly::sorted_terms() const {
  std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() > b.first.size();
    }
    return a.first < b.first;
  });
  return out;
}

std::string Poly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : sorted_terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    bool need_star = false;
    if (mag != 1) {
      os << to_string(mag);
      need_star = true;
    }
    for (auto idx : key) {
      os << (need_star ? "*" : "") << vars_[idx].name;
      need_star = true;
    }
    first = false;
  }
  if (offset_ != 0) {
    os << (first ? "" : " + ") << "(offset " << to_string(offset_) << ")";
    first = false;
  }
  if (first) {
    os << "0";
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.domain_ != domain_) {
    throw std::invalid_argument("cannot add polynomials over different domains");
  }
  auto map = absorb_registry(other);
  for (const auto& [key, c] : other.terms_) {
    Key k;
    k.reserve(key.size());
    for (auto idx : key) {
      k.push_back(map[idx]);
    }
    add_key(std::move(k), c);
  }
  offset_ += other.offset_;
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += other * Rational(-1); }

Poly& Poly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    offset_ = 0;
    return *this;
  }
  for (auto& [key, c] : terms_) {
    c *= scale;
  }
  offset_ *= scale;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.domain_ != b.domain_) {
    throw std::invalid_argument("cannot multiply polynomials over different domains");
  }
  Poly out(a.domain_);
  out.absorb_registry(a);
  auto bmap = out.absorb_registry(b);
  auto a_terms = a.terms_;
  if (a.offset_ != 0) {
    a_terms.emplace(Poly::Key{}, a.offset_);
  }
  auto b_terms = b.terms_;
  if (b.offset_ != 0) {
    b_terms.emplace(Poly::Key{}, b.offset_);
  }
  for (const auto& [ka, ca] : a_terms) {
    for (const auto& [kb, cb] : b_terms) {
      Poly::Key k = ka;  // a's indices are unchanged in `out`
      for (auto idx : kb) {
        k.push_back(bmap[idx]);
      }
      out.add_key(std::move(k), ca * cb);
    }
  }
  return out;
}

namespace {

using NamedTerms = std::map<std::vector<std::string>, Rational>;

NamedTerms named_terms(const Poly& p) {
  NamedTerms out;
  for (const auto& [key, c] : p.terms()) {
    std::vector<std::string> names;
    for (auto idx : key) {
      names.push_back(p.vars()[idx].name);
    }
    std::sort(names.begin(), names.end());
    out.emplace(std::move(names), c);
  }
  return out;
}

}  // namespace

bool operator==(const Poly& a, const Poly& b) {
  return a.domain_ == b.domain_ && a.offset_ == b.offset_ && named_terms(a) == named_terms(b);
}

Poly combine(std::span<const std::pair<Rational, Poly>> weighted) {
  if (weighted.empty()) {
    return Poly();
  }
  Poly out(weighted.front().second.domain());
  for (const auto& [w, p] : weighted) {
    out += p * w;
  }
  return out;
}

Poly combine(std::initializer_list<std::pair<Rational, Poly>> weighted) {
  return combine(std::span<const std::pair<Rational, Poly>>(weighted.begin(), weighted.size()));
}

namespace {

Poly substitute_domain(const Poly& p, Domain target) {
  if (p.domain() == target) {
    return p;
  }
  if (p.degree() > 2) {
    throw DegreeError("spin/Boolean conversion expects degree <= 2, got " +
                      std::to_string(p.degree()));
  }
  // Per-variable image: x -> (s + 1) / 2 or s -> 2x - 1.
  std::vector<Poly> image;
  Poly out(target);
  for (const auto& v : p.vars()) {
    out.declare(v.name, v.kind);
    Poly var = Poly::variable(v.name, v.kind, target);
    if (target == Domain::spin) {
      image.push_back((var + Poly::constant(1, target)) * Rational(1, 2));
    } else {
      image.push_back(var * Rational(2) - Poly::constant(1, target));
    }
  }
  for (const auto& [key, c] : p.terms()) {
    Poly term = Poly::constant(c, target);
    for (auto idx : key) {
      term = term * image[idx];
    }
    out += term;
  }
  out.add_constant(p.offset());
  return out;
}

}  // namespace

Poly boolean_to_spin(const Poly& p) {
  if (p.domain() != Domain::binary) {
    throw std::invalid_argument("boolean_to_spin expects a binary-domain polynomial");
  }
  return substitute_domain(p, Domain::spin);
}

Poly spin_to_boolean(const Poly& p) {
  if (p.domain() != Domain::spin) {
    throw std::invalid_argument("spin_to_boolean expects a spin-domain polynomial");
  }
  return substitute_domain(p, Domain::binary);
}

// ---------------------------------------------------------------------------

Expr Expr::constant(Rational value) {
  Expr e;
  e.kind_ = Kind::constant;
  e.value_ = std::move(value);
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind_ = Kind::variable;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
  Expr e;
  e.kind_ = Kind::sum;
  e.children_ = std::move(terms);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind_ = Kind::product;
  e.children_ = std::move(factors);
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e;
  e.kind_ = Kind::power;
  e.children_.push_back(std::move(base));
  e.exponent_ = exponent;
  return e;
}

Expr operator-(Expr a, Expr b) {
  return Expr::sum({std::move(a), Expr::product({Expr::constant(-1), std::move(b)})});
}

void Expr::collect_variables(std::vector<std::string>& out) const {
  if (kind_ == Kind::variable) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) {
      out.push_back(name_);
    }
    return;
  }
  for (const auto& c : children_) {
    c.collect_variables(out);
  }
}

std::vector<std::string> Expr::variables() const {
  std::vector<std::string> out;
  collect_variables(out);
  return out;
}

std::string Expr::str() const {
  switch (kind_) {
    case Kind::constant:
      return value_ < 0 ? "(" + to_string(value_) + ")" : to_string(value_);
    case Kind::variable:
      return name_;
    case Kind::sum:
    case Kind::product: {
      std::string sep = kind_ == Kind::sum ? " + " : "*";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        out += (i ? sep : "") + children_[i].str();
      }
      return out + ")";
    }
    case Kind::power:
      return children_.front().str() + "^" + std::to_string(exponent_);
  }
  return {};
}

Poly reduce_idempotent(const Expr& raw) {
  switch (raw.kind()) {
    case Expr::Kind::constant:
      return Poly::constant(raw.value());
    case Expr::Kind::variable:
      return Poly::variable(raw.name());
    case Expr::Kind::sum: {
      Poly out;
      for (const auto& c : raw.children()) {
        out += reduce_idempotent(c);
      }
      return out;
    }
    case Expr::Kind::product: {
      Poly out = Poly::constant(1);
      for (const auto& c : raw.children()) {
        out = out * reduce_idempotent(c);
      }
      return out;
    }
    case Expr::Kind::power: {
      const Poly base = reduce_idempotent(raw.children().front());
      Poly out = Poly::constant(1);
      for (unsigned i = 0; i < raw.exponent(); ++i) {
        out = out * base;
      }
      return out;
    }
  }
  return Poly();
}

Rational evaluate(const Expr& raw, const Assignment& assignment) {
  switch (raw.kind()) {
    case Expr::Kind::constant:
      return raw.value();
    case Expr::Kind::variable: {
      auto v = assignment.as(Domain::binary).get(raw.name());
      if (!v) {
        throw MissingVariableError(raw.name());
      }
      return *v;
    }
    case Expr::Kind::sum: {
      Rational total = 0;
      for (const auto& c : raw.children()) {
        total += evaluate(c, assignment);
      }
      return total;
    }
    case Expr::Kind::product: {
      Rational total = 1;
      for (const auto& c : raw.children()) {
        total *= evaluate(c, assignment);
      }
      return total;
    }
    case Expr::Kind::power: {
      const Rational base = evaluate(raw.children().front(), assignment);
      Rational total = 1;
      for (unsigned i = 0; i < raw.exponent(); ++i) {
        total *= base;
      }
      return total;
    }
  }
  return 0;
}

}  // namespace aqc
