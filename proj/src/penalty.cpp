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

#include "aqc/penalty.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace aqc {

// ---------------------------------------------------------------------------
// GapReport

Rational GapReport::value(Mask m) const {
  return Rational(scaled_values.at(m)) / scale;
}

std::optional<Rational> GapReport::gap() const {
  if (!min_invalid) {
    return std::nullopt;
  }
  return *min_invalid - v;
}

std::string GapReport::assignment_str(Mask m) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    os << (i ? " " : "") << vars[i] << "=" << ((m >> i) & 1);
  }
  return os.str();
}

std::string GapReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " v=" << to_string(v);
  if (min_invalid) {
    os << " min_invalid=" << to_string(*min_invalid) << " gap=" << to_string(*gap());
  } else {
    os << " min_invalid=none";
  }
  os << " valid=" << valid.size() << "/" << (std::uint64_t{1} << vars.size());
  if (violation) {
    os << " violation: " << assignment_str(*violation) << " (" << violation_reason << ")";
  }
  return os.str();
}

std::string GapReport::table(RowOrder order) const {
  const std::size_t n = vars.size();
  // Row r in descending order: variable 0 is the most significant bit of r.
  auto mask_of_row = [n](Mask r) {
    Mask m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((r >> (n - 1 - i)) & 1) {
        m |= Mask{1} << i;
      }
    }
    return m;
  };
  std::vector<Mask> rows;
  const Mask total = Mask{1} << n;
  for (Mask r = total; r-- > 0;) {
    rows.push_back(mask_of_row(r));
  }
  if (order == RowOrder::valid_first) {
    std::stable_partition(rows.begin(), rows.end(), [this](Mask m) { return is_valid(m); });
  }
  std::ostringstream os;
  for (const auto& name : vars) {
    os << name << '\t';
  }
  os << "valid\tvalue\n";
  for (Mask m : rows) {
    for (std::size_t i = 0; i < n; ++i) {
      os << ((m >> i) & 1) << '\t';
    }
    os << (is_valid(m) ? "true" : "false") << '\t' << to_string(value(m)) << '\n';
  }
  return os.str();
}

namespace {

struct ScaledTerm {
  Mask mask;
  std::int64_t coeff;
};

std::int64_t checked_int64(const Rational& r) {
  auto v = to_int64(r);
  if (!v || *v > (std::int64_t{1} << 52) || *v < -(std::int64_t{1} << 52)) {
    throw Error("coefficient " + to_string(r) + " is too large for exhaustive evaluation");
  }
  return *v;
}

}  // namespace

GapReport verify_gap(const Poly& poly, const ValidSet& valid, const GapOptions& options) {
  if (poly.domain() != Domain::binary) {
    throw std::invalid_argument("verify_gap expects a binary-domain polynomial");
  }
  const auto& vars = valid.vars();
  const std::size_t n = vars.size();
  if (n > options.max_vars) {
    throw SolverLimitError("gap verification over " + std::to_string(n) +
                           " variables exceeds the exhaustive limit of " +
                           std::to_string(options.max_vars));
  }
  std::vector<Mask> position(poly.num_vars());
  for (std::size_t i = 0; i < poly.num_vars(); ++i) {
    auto idx = valid.index_of(poly.vars()[i].name);
    if (!idx) {
      throw std::invalid_argument("polynomial variable '" + poly.vars()[i].name +
                                  "' is not covered by the valid set");
    }
    position[i] = *idx;
  }

  GapReport report;
  report.vars = vars;
  report.valid = valid;

  std::vector<Rational> coeffs{poly.offset()};
  for (const auto& [key, c] : poly.terms()) {
    coeffs.push_back(c);
  }
  report.scale = common_denominator(coeffs);
  const std::int64_t offset = checked_int64(poly.offset() * report.scale);
  std::vector<ScaledTerm> terms;
  for (const auto& [key, c] : poly.terms()) {
    Mask m = 0;
    for (auto idx : key) {
      m |= Mask{1} << position[idx];
    }
    terms.push_back({m, checked_int64(c * report.scale)});
  }

  const Mask total = Mask{1} << n;
  report.scaled_values.assign(total, 0);
  auto fill = [&](Mask begin, Mask end) {
    for (Mask m = begin; m < end; ++m) {
      std::int64_t value = offset;
      for (const auto& t : terms) {
        if ((m & t.mask) == t.mask) {
          value += t.coeff;
        }
      }
      report.scaled_values[m] = value;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
  if (threads == 1 || total < 4096) {
    fill(0, total);
  } else {
    std::vector<std::jthread> workers;
    const Mask chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const Mask begin = std::min<Mask>(total, t * chunk);
      const Mask end = std::min<Mask>(total, begin + chunk);
      workers.emplace_back(fill, begin, end);
    }
  }

  const auto& vals = report.scaled_values;
  if (valid.empty()) {
    const auto it = std::min_element(vals.begin(), vals.end());
    report.v = Rational(*it) / report.scale;
    report.violation_reason = "no assignment satisfies the relation";
    return report;
  }
  std::int64_t v = vals[valid.members().front()];
  for (Mask m : valid.members()) {
    v = std::min(v, vals[m]);
  }
  report.v = Rational(v) / report.scale;
  report.valid_values_agree = true;
  for (Mask m : valid.members()) {
    if (vals[m] != v) {
      report.valid_values_agree = false;
      report.violation = m;
      report.violation_reason = "valid assignment has value " +
                                to_string(Rational(vals[m]) / report.scale) +
                                ", expected " + to_string(report.v);
      break;
    }
  }
  std::optional<std::int64_t> min_invalid;
  Mask argmin = 0;
  for (Mask m = 0; m < total; ++m) {
    if (valid.contains(m)) {
      continue;
    }
    if (!min_invalid || vals[m] < *min_invalid) {
      min_invalid = vals[m];
      argmin = m;
    }
  }
  if (min_invalid) {
    report.min_invalid = Rational(*min_invalid) / report.scale;
  }
  const bool gap_ok = !report.min_invalid || *report.min_invalid >= report.v + 1;
  if (!gap_ok && !report.violation) {
    report.violation = argmin;
    report.violation_reason = "invalid assignment has value " + to_string(*report.min_invalid) +
                              ", expected >= " + to_string(report.v + 1);
  }
  report.pass = report.valid_values_agree && gap_ok;
  return report;
}

// ---------------------------------------------------------------------------
// Penalty

Penalty Penalty::make(Poly poly, ValidSet valid, std::vector<AncillaDef> ancillas,
                      Rational dropped_offset, std::string provenance,
                      std::vector<Rational> ancilla_weights) {
  if (poly.degree() > 2) {
    throw DegreeError("penalty polynomial has degree " + std::to_string(poly.degree()) +
                      "; quadratize it first");
  }
  GapReport report = verify_gap(poly, valid);
  if (!report.pass) {
    throw GapViolation(std::move(report));
  }
  Penalty p;
  p.poly_ = std::move(poly);
  p.report_ = std::move(report);
  p.ancillas_ = std::move(ancillas);
  p.ancilla_weights_ = std::move(ancilla_weights);
  p.dropped_offset_ = std::move(dropped_offset);
  p.provenance_ = std::move(provenance);
  return p;
}

Penalty Penalty::make_unsatisfiable(Poly poly, std::vector<std::string> vars,
                                    Rational dropped_offset, std::string provenance) {
  Penalty p;
  p.report_ = verify_gap(poly, ValidSet(std::move(vars), {}));
  p.poly_ = std::move(poly);
  p.dropped_offset_ = std::move(dropped_offset);
  p.provenance_ = std::move(provenance);
  p.satisfiable_ = false;
  return p;
}

Penalty Penalty::scaled(const Rational& m) const {
  if (m < 1) {
    throw std::invalid_argument("penalty multiplier must be >= 1, got " + to_string(m));
  }
  if (!satisfiable_) {
    Penalty p = *this;
    p.poly_ *= m;
    p.dropped_offset_ *= m;
    p.report_ = verify_gap(p.poly_, p.report_.valid);
    return p;
  }
  std::vector<Rational> weights = ancilla_weights_;
  for (auto& w : weights) {
    w *= m;
  }
  return make(poly_ * m, report_.valid, ancillas_, dropped_offset_ * m, provenance_,
              std::move(weights));
}

// ---------------------------------------------------------------------------
// Quadratization

namespace {

Poly and_binding(const std::string& u, const std::string& w, const std::string& anc) {
  Poly p;
  p.declare(u);
  p.declare(w);
  p.declare(anc, VarKind::ancilla);
  p.add_term({u, w}, 1);
  p.add_term({u, anc}, -2);
  p.add_term({w, anc}, -2);
  p.add_term({anc}, 3);
  return p;
}

std::string fresh_name(const Poly& p, const std::vector<std::string>& reserved) {
  auto taken = [&](const std::string& n) {
    return p.index_of(n).has_value() ||
           std::find(reserved.begin(), reserved.end(), n) != reserved.end();
  };
  for (char c = 'a'; c <= 'z'; ++c) {
    std::string n(1, c);
    if (!taken(n)) {
      return n;
    }
  }
  for (int i = 1;; ++i) {
    std::string n = "anc" + std::to_string(i);
    if (!taken(n)) {
      return n;
    }
  }
}

// Replaces {u, w} by `anc` in every term of degree >= 3 containing both.
std::size_t substitute_pair(Poly& cur, std::uint32_t u, std::uint32_t w,
                            const std::string& anc) {
  Poly next(cur.domain());
  for (const auto& v : cur.vars()) {
    next.declare(v.name, v.kind);
  }
  const auto a = next.declare(anc, VarKind::ancilla);
  std::size_t replaced = 0;
  for (const auto& [key, c] : cur.terms()) {
    const bool has_u = std::binary_search(key.begin(), key.end(), u);
    const bool has_w = std::binary_search(key.begin(), key.end(), w);
    std::vector<std::string> names;
    if (key.size() >= 3 && has_u && has_w) {
      for (auto idx : key) {
        if (idx != u && idx != w) {
          names.push_back(next.vars()[idx].name);
        }
      }
      names.push_back(next.vars()[a].name);
      ++replaced;
    } else {
      for (auto idx : key) {
        names.push_back(next.vars()[idx].name);
      }
    }
    next.add_term(std::span<const std::string>(names), c);
  }
  next.add_constant(cur.offset());
  cur = std::move(next);
  return replaced;
}

}  // namespace

QuadratizeResult quadratize(const Poly& p, const QuadratizeOptions& options) {
  if (p.domain() != Domain::binary) {
    throw std::invalid_argument("quadratize expects a binary-domain polynomial");
  }
  if (options.weight && *options.weight < 1) {
    throw std::invalid_argument("ancilla weight must be >= 1");
  }
  QuadratizeResult out{p, {}, {}, {}};
  std::vector<std::string> reserved;
  for (const auto& e : options.plan) {
    reserved.push_back(e.name);
  }

  auto apply = [&](const std::string& u, const std::string& w, std::string anc) {
    auto ui = out.poly.index_of(u);
    auto wi = out.poly.index_of(w);
    if (!ui || !wi || *ui == *wi) {
      throw std::invalid_argument("ancilla pair (" + u + ", " + w + ") is not valid here");
    }
    if (out.poly.index_of(anc)) {
      throw std::invalid_argument("ancilla name '" + anc + "' is already in use");
    }
    const std::size_t count = substitute_pair(out.poly, *ui, *wi, anc);
    if (count == 0) {
      throw std::invalid_argument("ancilla " + anc + " = " + u + "*" + w +
                                  " replaces no term of degree >= 3");
    }
    const Rational weight =
        options.weight ? *options.weight : Rational(count) + options.extra_weight;
    out.poly += and_binding(u, w, anc) * weight;
    out.ancillas.push_back({anc, u, w});
    out.weights.push_back(weight);
    out.replaced.push_back(count);
  };

  for (const auto& e : options.plan) {
    apply(e.lhs, e.rhs, e.name);
  }
  while (out.poly.degree() > 2) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> counts;
    for (const auto& [key, c] : out.poly.terms()) {
      if (key.size() < 3) {
        continue;
      }
      for (std::size_t x = 0; x < key.size(); ++x) {
        for (std::size_t y = x + 1; y < key.size(); ++y) {
          ++counts[{key[x], key[y]}];
        }
      }
    }
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) {
        best = it;
      }
    }
    const std::string u = out.poly.vars()[best->first.first].name;
    const std::string w = out.poly.vars()[best->first.second].name;
    apply(u, w, fresh_name(out.poly, reserved));
  }
  return out;
}

Penalty quadratize_verified(const Poly& p, const ValidSet& base, QuadratizeOptions options,
                            unsigned max_extra, Rational dropped_offset,
                            std::string provenance) {
  const unsigned attempts = options.weight ? 1 : max_extra + 1;
  std::optional<GapViolation> last;
  for (unsigned extra = 0; extra < attempts; ++extra) {
    options.extra_weight = extra;
    QuadratizeResult q = quadratize(p, options);
    ValidSet valid = base.extended(q.ancillas);
    try {
      return Penalty::make(std::move(q.poly), std::move(valid), std::move(q.ancillas),
                           dropped_offset, provenance, std::move(q.weights));
    } catch (const GapViolation& e) {
      last = e;
    }
  }
  throw *last;
}

// ---------------------------------------------------------------------------
// Builtins and compilation

namespace {

Poly builtin_literal(BoolOp op) {
  Poly p;
  const bool unary = op == BoolOp::COPY || op == BoolOp::NOT;
  p.declare("i");
  if (!unary) {
    p.declare("j");
  }
  p.declare("k", VarKind::output);
  const bool has_ancilla =
      op == BoolOp::IMPLIES || op == BoolOp::XOR || op == BoolOp::EQUIV;
  if (has_ancilla) {
    p.declare("a", VarKind::ancilla);
  }
  switch (op) {
    case BoolOp::COPY:  // -2 x_i x_k + x_i + x_k
      p.add_term({"i", "k"}, -2);
      p.add_term({"i"}, 1);
      p.add_term({"k"}, 1);
      break;
    case BoolOp::NOT:  // 2 x_i x_k - x_i - x_k
      p.add_term({"i", "k"}, 2);
      p.add_term({"i"}, -1);
      p.add_term({"k"}, -1);
      break;
    case BoolOp::AND:  // x_i x_j - 2(x_i + x_j) x_k + 3 x_k
      p.add_term({"i", "j"}, 1);
      p.add_term({"i", "k"}, -2);
      p.add_term({"j", "k"}, -2);
      p.add_term({"k"}, 3);
      break;
    case BoolOp::OR:  // x_i x_j + (x_i + x_j)(1 - 2 x_k) + x_k
      p.add_term({"i", "j"}, 1);
      p.add_term({"i"}, 1);
      p.add_term({"j"}, 1);
      p.add_term({"i", "k"}, -2);
      p.add_term({"j", "k"}, -2);
      p.add_term({"k"}, 1);
      break;
    case BoolOp::IMPLIES:
      // 4 x_i x_j + 2 x_i x_k - 6(x_i + x_j) x_a - 2 x_k x_a - x_i - x_k + 9 x_a
      p.add_term({"i", "j"}, 4);
      p.add_term({"i", "k"}, 2);
      p.add_term({"i", "a"}, -6);
      p.add_term({"j", "a"}, -6);
      p.add_term({"k", "a"}, -2);
      p.add_term({"i"}, -1);
      p.add_term({"k"}, -1);
      p.add_term({"a"}, 9);
      break;
    case BoolOp::XOR:
      // 2 x_i x_j - 2(x_i + x_j) x_k - 4(x_i + x_j) x_a + 4 x_k x_a
      //   + x_i + x_j + x_k + 4 x_a
      p.add_term({"i", "j"}, 2);
      p.add_term({"i", "k"}, -2);
      p.add_term({"j", "k"}, -2);
      p.add_term({"i", "a"}, -4);
      p.add_term({"j", "a"}, -4);
      p.add_term({"k", "a"}, 4);
      p.add_term({"i"}, 1);
      p.add_term({"j"}, 1);
      p.add_term({"k"}, 1);
      p.add_term({"a"}, 4);
      break;
    case BoolOp::EQUIV:
      // 2 x_i x_j + 2(x_i + x_j) x_k - 4(x_i + x_j) x_a - 4 x_k x_a
      //   - x_i - x_j - x_k + 8 x_a
      p.add_term({"i", "j"}, 2);
      p.add_term({"i", "k"}, 2);
      p.add_term({"j", "k"}, 2);
      p.add_term({"i", "a"}, -4);
      p.add_term({"j", "a"}, -4);
      p.add_term({"k", "a"}, -4);
      p.add_term({"i"}, -1);
      p.add_term({"j"}, -1);
      p.add_term({"k"}, -1);
      p.add_term({"a"}, 8);
      break;
    default:
      throw std::logic_error("no literal penalty for " + std::string(to_string(op)));
  }
  return p;
}

Expr to_expr(const Poly& p) {
  std::vector<Expr> terms;
  for (const auto& [key, c] : p.sorted_terms()) {
    std::vector<Expr> factors{Expr::constant(c)};
    for (auto idx : key) {
      factors.push_back(Expr::variable(p.vars()[idx].name));
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  terms.push_back(Expr::constant(p.offset()));
  return Expr::sum(std::move(terms));
}

void require_integer_coefficients(const Poly& p) {
  if (!is_integer(p.offset())) {
    throw std::invalid_argument("equation constants must be integers");
  }
  for (const auto& [key, c] : p.terms()) {
    if (!is_integer(c)) {
      throw std::invalid_argument("equation coefficients must be integers, got " +
                                  to_string(c));
    }
  }
}

}  // namespace

Penalty renamed(const Penalty& p, const std::map<std::string, std::string>& mapping) {
  auto name = [&](const std::string& n) {
    auto it = mapping.find(n);
    return it == mapping.end() ? n : it->second;
  };
  std::vector<std::string> vars;
  for (const auto& v : p.valid_set().vars()) {
    vars.push_back(name(v));
  }
  std::vector<AncillaDef> ancillas;
  for (const auto& a : p.ancillas()) {
    ancillas.push_back({name(a.name), name(a.lhs), name(a.rhs)});
  }
  if (!p.satisfiable()) {
    return Penalty::make_unsatisfiable(p.poly().renamed(mapping), std::move(vars),
                                       p.dropped_offset(), p.provenance());
  }
  return Penalty::make(p.poly().renamed(mapping),
                       ValidSet(std::move(vars), p.valid_set().members()), std::move(ancillas),
                       p.dropped_offset(), p.provenance(), p.ancilla_weights());
}

Penalty builtin_penalty(BoolOp op) {
  switch (op) {
    case BoolOp::COPY:
    case BoolOp::NOT:
    case BoolOp::AND:
    case BoolOp::OR:
    case BoolOp::IMPLIES:
    case BoolOp::XOR:
    case BoolOp::EQUIV: {
      Poly poly = builtin_literal(op);
      std::vector<std::string> inputs{"i"};
      if (arity(op) == 2) {
        inputs.push_back("j");
      }
      std::vector<AncillaDef> ancillas;
      if (poly.index_of("a")) {
        ancillas.push_back({"a", "i", "j"});
      }
      ValidSet valid = relation_of(op, "k", inputs, ancillas);
      return Penalty::make(std::move(poly), std::move(valid), std::move(ancillas), 0,
                           "builtin:" + std::string(to_string(op)));
    }
    default:
      break;
  }
  std::vector<std::string> inputs;
  if (arity(op) >= 1) {
    inputs.push_back("i");
  }
  if (arity(op) == 2) {
    inputs.push_back("j");
  }
  CompileOptions opts;
  opts.kinds["k"] = VarKind::output;
  Penalty p = equation_to_penalty(Expr::variable("k"), to_expr(op_polynomial(op, inputs)), opts);
  // Re-issue with the relation's own provenance; the valid set is identical.
  return Penalty::make(p.poly(), p.valid_set(), p.ancillas(), p.dropped_offset(),
                       "derived:" + std::string(to_string(op)), p.ancilla_weights());
}

Penalty boolean_penalty(BoolOp op, const std::string& output,
                        std::span<const std::string> inputs, const CompileOptions& options) {
  if (static_cast<int>(inputs.size()) != arity(op)) {
    throw std::invalid_argument(std::string(to_string(op)) + " takes " +
                                std::to_string(arity(op)) + " inputs");
  }
  std::vector<std::string> names(inputs.begin(), inputs.end());
  names.push_back(output);
  const bool distinct = std::set<std::string>(names.begin(), names.end()).size() == names.size();
  if (!distinct) {
    CompileOptions opts = options;
    opts.kinds.emplace(output, VarKind::output);
    // Repeated operands can cancel; keep every operand declared.
    std::vector<Expr> rhs{to_expr(op_polynomial(op, inputs))};
    for (const auto& n : inputs) {
      rhs.push_back(Expr::constant(0) * Expr::variable(n));
    }
    return equation_to_penalty(Expr::variable(output), Expr::sum(std::move(rhs)), opts);
  }
  std::map<std::string, std::string> mapping{{"k", output}};
  if (inputs.size() >= 1) mapping["i"] = inputs[0];
  if (inputs.size() == 2) mapping["j"] = inputs[1];
  std::string anc = "a";
  for (unsigned n = 1; std::find(names.begin(), names.end(), anc) != names.end(); ++n) {
    anc = "anc" + std::to_string(n);
  }
  Penalty base = builtin_penalty(op);
  if (base.poly().index_of("a")) {
    mapping["a"] = anc;
  }
  Penalty p = renamed(base, mapping);
  return options.scale == 1 ? p : p.scaled(options.scale);
}

Penalty equation_to_penalty(const Expr& lhs, const Expr& rhs, const CompileOptions& options) {
  if (options.scale < 1) {
    throw std::invalid_argument("penalty multiplier must be >= 1");
  }
  const Expr diff_expr = lhs - rhs;
  const Poly diff = reduce_idempotent(diff_expr);
  require_integer_coefficients(diff);

  // Plain variables sorted by name, then slacks in order of appearance.
  std::vector<std::string> names = lhs.variables();
  for (const auto& n : rhs.variables()) {
    if (std::find(names.begin(), names.end(), n) == names.end()) {
      names.push_back(n);
    }
  }
  auto kind_of = [&](const std::string& n) {
    auto it = options.kinds.find(n);
    return it == options.kinds.end() ? VarKind::input : it->second;
  };
  std::vector<std::string> order;
  for (const auto& n : names) {
    if (kind_of(n) != VarKind::slack) {
      order.push_back(n);
    }
  }
  std::sort(order.begin(), order.end());
  for (const auto& n : names) {
    if (kind_of(n) == VarKind::slack) {
      order.push_back(n);
    }
  }

  Poly squared = reduce_idempotent(Expr::power(diff_expr, 2)).reordered(order);
  std::map<std::string, VarKind> kinds;
  for (const auto& n : order) {
    kinds[n] = kind_of(n);
  }
  squared = squared.with_kinds(kinds);
  const Rational dropped = squared.offset() * options.scale;
  Poly poly = squared.without_offset() * options.scale;

  const std::string provenance = "equation:" + lhs.str() + " = " + rhs.str();
  ValidSet valid = ValidSet::from_predicate(
      order, [&](const Assignment& a) { return diff.eval(a) == 0; });
  if (valid.empty()) {
    if (poly.degree() > 2) {
      QuadratizeOptions q;
      q.plan = options.ancilla_plan;
      q.weight = options.ancilla_weight;
      poly = quadratize(poly, q).poly;
    }
    auto vars = poly.var_names();
    return Penalty::make_unsatisfiable(std::move(poly), std::move(vars), dropped, provenance);
  }
  if (poly.degree() <= 2) {
    return Penalty::make(std::move(poly), std::move(valid), {}, dropped, provenance);
  }
  QuadratizeOptions q;
  q.plan = options.ancilla_plan;
  q.weight = options.ancilla_weight;
  return quadratize_verified(poly, valid, std::move(q), options.max_weight_escalation, dropped,
                             provenance);
}

SlackEquation inequality_to_equation(const Inequality& ineq, bool strict) {
  const auto n = static_cast<std::int64_t>(ineq.vars.size());
  if (n == 0) {
    throw std::invalid_argument("inequality needs at least one variable");
  }
  std::set<std::string> distinct(ineq.vars.begin(), ineq.vars.end());
  if (static_cast<std::int64_t>(distinct.size()) != n) {
    throw std::invalid_argument("inequality variables must be distinct");
  }
  const bool le = ineq.sense == Sense::le;
  // Range of sum(vars) is [0, n].
  if ((le && ineq.bound < 0) || (!le && ineq.bound > n)) {
    throw InfeasibleConstraintError("inequality bound " + std::to_string(ineq.bound) +
                                    " cannot be met by any binary assignment");
  }
  std::vector<Expr> sum;
  for (const auto& v : ineq.vars) {
    sum.push_back(Expr::variable(v));
  }
  SlackEquation eq;
  eq.rhs = Expr::constant(ineq.bound);
  if ((le && ineq.bound >= n) || (!le && ineq.bound <= 0)) {
    eq.vacuous = true;
    eq.lhs = Expr::sum(std::move(sum));
    return eq;
  }
  // Slack capacity needed: b (for <=) or n - b (for >=), both <= n - 1.
  const std::int64_t needed = le ? ineq.bound : n - ineq.bound;
  const std::int64_t count = strict ? needed : n - 1;
  static constexpr std::string_view kPreferred[] = {"s", "t", "u", "v", "w"};
  auto used = [&](const std::string& s) {
    return distinct.count(s) > 0 ||
           std::find(eq.slacks.begin(), eq.slacks.end(), s) != eq.slacks.end();
  };
  for (std::int64_t k = 0, next = 1; k < count; ++k) {
    std::string name;
    for (auto p : kPreferred) {
      if (!used(std::string(p))) {
        name = p;
        break;
      }
    }
    while (name.empty() || used(name)) {
      name = "s" + std::to_string(next++);
    }
    eq.slacks.push_back(name);
    Expr s = Expr::variable(name);
    sum.push_back(le ? s : Expr::product({Expr::constant(-1), s}));
  }
  eq.lhs = Expr::sum(std::move(sum));
  return eq;
}

Penalty inequality_to_penalty(const Inequality& ineq, const CompileOptions& options) {
  SlackEquation eq = inequality_to_equation(ineq, options.strict_slack);
  if (eq.vacuous) {
    Poly zero;
    for (const auto& v : ineq.vars) {
      zero.declare(v);
    }
    ValidSet all = ValidSet::from_predicate(ineq.vars, [](const Assignment&) { return true; });
    return Penalty::make(std::move(zero), std::move(all), {}, 0, "inequality:vacuous");
  }
  CompileOptions opts = options;
  for (const auto& s : eq.slacks) {
    opts.kinds[s] = VarKind::slack;
  }
  return equation_to_penalty(eq.lhs, eq.rhs, opts);
}

}  // namespace aqc
