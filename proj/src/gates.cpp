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

#include "aqc/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "aqc/errors.hpp"

namespace aqc {
namespace {

using Terms = std::initializer_list<std::pair<std::initializer_list<std::string_view>, int>>;

Poly literal(std::initializer_list<std::pair<std::string_view, VarKind>> vars, Terms terms) {
  Poly p;
  for (const auto& [name, kind] : vars) {
    p.declare(name, kind);
  }
  for (const auto& [names, c] : terms) {
    p.add_term(names, c);
  }
  return p;
}

std::vector<GateRow> table_of(std::size_t n, const std::function<std::vector<int>(const std::vector<int>&)>& f) {
  std::vector<GateRow> rows;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    std::vector<int> in(n);
    for (std::size_t k = 0; k < n; ++k) {
      in[k] = static_cast<int>((m >> (n - 1 - k)) & 1);
    }
    rows.push_back({in, f(in)});
  }
  return rows;
}

std::vector<int> fredkin_fn(const std::vector<int>& in) {
  const int c = in[0];
  const int i = in[1];
  const int j = in[2];
  return {c, (1 - c) * i + c * j, c * i + (1 - c) * j};
}

std::vector<int> toffoli_fn(const std::vector<int>& in) {
  return {in[0], in[1], in[2] ^ (in[0] & in[1])};
}

std::map<std::string, VarKind> kinds_for(const GateSpec& g) {
  std::map<std::string, VarKind> kinds;
  for (const auto& [name, role] : g.roles) {
    if (role == "ancilla") {
      kinds[name] = VarKind::ancilla;
    } else if (role == "result" || role == "output") {
      kinds[name] = VarKind::output;
    } else {
      kinds[name] = VarKind::input;
    }
  }
  return kinds;
}

Penalty rekind(const Penalty& p, const std::map<std::string, VarKind>& kinds) {
  return Penalty::make(p.poly().with_kinds(kinds), p.valid_set(), p.ancillas(),
                       p.dropped_offset(), p.provenance(), p.ancilla_weights());
}

const std::vector<std::string> kFredkinOrder{"c", "i", "j", "m", "p"};

QuadratizeOptions fredkin_plan() {
  QuadratizeOptions q;
  q.plan = {{"c", "m", "a"}, {"c", "p", "b"}};
  return q;
}

GateSpec fredkin_shell(Penalty penalty, std::string name) {
  GateSpec g(std::move(name), std::move(penalty));
  g.inputs = {"c", "i", "j"};
  g.outputs = {"c", "m", "p"};
  g.roles = {{"c", "control"}, {"i", "input"}, {"j", "input"}, {"m", "output"}, {"p", "output"}};
  for (const auto& a : g.penalty.ancillas()) {
    g.roles[a.name] = "ancilla";
  }
  g.truth_table = table_of(3, fredkin_fn);
  g.freed = {"i", "j"};
  for (const auto& a : g.penalty.ancillas()) {
    g.freed.push_back(a.name);
  }
  return g;
}

}  // namespace

std::vector<int> GateSpec::apply(std::span<const int> in) const {
  for (const auto& row : truth_table) {
    if (std::equal(row.in.begin(), row.in.end(), in.begin(), in.end())) {
      return row.out;
    }
  }
  throw std::invalid_argument("input row not in the truth table of " + name);
}

ModelInfo GateSpec::info() const { return ModelInfo{"gate:" + name, roles}; }

QuboMatrix<Rational> GateSpec::qubo() const { return penalty_to_qubo(penalty.poly(), info()); }

Poly cnot_reference() {
  return literal({{"i", VarKind::input}, {"j", VarKind::input}, {"k", VarKind::output},
                  {"a", VarKind::ancilla}},
                 {{{"i", "j"}, 2}, {{"i", "k"}, -2}, {{"j", "k"}, -2}, {{"i", "a"}, -4},
                  {{"j", "a"}, -4}, {{"k", "a"}, 4}, {{"i"}, 1}, {{"j"}, 1}, {{"k"}, 1},
                  {{"a"}, 4}});
}

Poly toffoli_reference() {
  return literal({{"c_1", VarKind::input}, {"c_2", VarKind::input}, {"t", VarKind::input},
                  {"r", VarKind::output}, {"a", VarKind::ancilla}, {"b", VarKind::ancilla}},
                 {{{"a", "b"}, -4}, {{"a", "r"}, 4}, {{"a", "t"}, -4}, {{"b", "c_1"}, -2},
                  {{"b", "c_2"}, -2}, {{"b", "r"}, -2}, {{"b", "t"}, 2}, {{"c_1", "c_2"}, 1},
                  {{"r", "t"}, -2}, {{"a"}, 4}, {{"b"}, 4}, {{"r"}, 1}, {{"t"}, 1}});
}

Poly fredkin_reference() {
  return literal({{"c", VarKind::input}, {"i", VarKind::input}, {"j", VarKind::input},
                  {"m", VarKind::output}, {"p", VarKind::output}, {"a", VarKind::ancilla},
                  {"b", VarKind::ancilla}},
                 {{{"a", "c"}, -4}, {{"a", "i"}, 2}, {{"a", "j"}, -2}, {{"a", "m"}, -4},
                  {{"b", "c"}, -4}, {{"b", "i"}, -2}, {{"b", "j"}, 2}, {{"b", "p"}, -4},
                  {{"c", "m"}, 2}, {{"c", "p"}, 2}, {{"i", "m"}, -2}, {{"j", "p"}, -2},
                  {{"a"}, 6}, {{"b"}, 6}, {{"i"}, 1}, {{"j"}, 1}, {{"m"}, 1}, {{"p"}, 1}});
}

GateSpec cnot_gate() {
  // Exclusive-or penalty with target i, control j, result k, a = ij.
  Penalty xor_pen = builtin_penalty(BoolOp::XOR);
  GateSpec g("cnot", xor_pen);
  g.inputs = {"j", "i"};
  g.outputs = {"j", "k"};
  g.roles = {{"i", "target"}, {"j", "control"}, {"k", "result"}, {"a", "ancilla"}};
  g.truth_table = table_of(2, [](const std::vector<int>& in) {
    return std::vector<int>{in[0], in[0] ^ in[1]};
  });
  g.freed = {"i", "a"};
  g.notes = "control and result carry the information; target and ancilla are free afterwards";
  g.penalty = rekind(xor_pen, kinds_for(g));
  return g;
}

GateSpec toffoli_gate() {
  // CNOT on (b, t) with b bound to c_1 c_2 by the AND penalty.
  const Poly xor_part =
      builtin_penalty(BoolOp::XOR).poly().renamed({{"i", "b"}, {"j", "t"}, {"k", "r"}});
  const Poly and_part =
      builtin_penalty(BoolOp::AND).poly().renamed({{"i", "c_1"}, {"j", "c_2"}, {"k", "b"}});
  const std::vector<std::string> order{"c_1", "c_2", "t", "r", "a", "b"};
  Poly poly = combine({{1, xor_part}, {1, and_part}}).reordered(order);

  ValidSet valid = ValidSet::from_predicate(order, [](const Assignment& s) {
    const int c1 = *s.get("c_1");
    const int c2 = *s.get("c_2");
    const int t = *s.get("t");
    const int b = c1 & c2;
    return *s.get("b") == b && *s.get("a") == (b & t) && *s.get("r") == (b ^ t);
  });
  std::vector<AncillaDef> ancillas{{"b", "c_1", "c_2"}, {"a", "b", "t"}};
  Penalty pen = Penalty::make(poly, valid, ancillas, 0, "gate:toffoli");
  GateSpec g("toffoli", pen);
  g.inputs = {"c_1", "c_2", "t"};
  g.outputs = {"c_1", "c_2", "r"};
  g.roles = {{"c_1", "control"}, {"c_2", "control"}, {"t", "target"},
             {"r", "result"},    {"a", "ancilla"},   {"b", "ancilla"}};
  g.truth_table = table_of(3, toffoli_fn);
  g.freed = {"t", "a", "b"};
  g.notes = "one CNOT on (b, t) plus the AND binding b = c_1 c_2";
  g.penalty = rekind(pen, kinds_for(g));
  return g;
}

Poly fredkin_squared() {
  const Expr one = Expr::constant(1);
  const Expr c = Expr::variable("c");
  const Expr i = Expr::variable("i");
  const Expr j = Expr::variable("j");
  const Expr m = Expr::variable("m");
  const Expr p = Expr::variable("p");
  const Poly sq_m = reduce_idempotent(Expr::power((one - c) * i + c * j - m, 2));
  const Poly sq_p = reduce_idempotent(Expr::power(c * i + (one - c) * j - p, 2));
  return combine({{1, sq_m}, {1, sq_p}}).reordered(kFredkinOrder);
}

ValidSet fredkin_relation() {
  return ValidSet::from_predicate(kFredkinOrder, [](const Assignment& s) {
    const auto out = fredkin_fn({*s.get("c"), *s.get("i"), *s.get("j")});
    return *s.get("m") == out[1] && *s.get("p") == out[2];
  });
}

GapReport fredkin_weight_check(const Rational& weight) {
  QuadratizeOptions opts = fredkin_plan();
  opts.weight = weight;
  QuadratizeResult q = quadratize(fredkin_squared(), opts);
  return verify_gap(q.poly, fredkin_relation().extended(q.ancillas));
}

GateSpec fredkin_gate() {
  // Default binding weight is the number of cubic terms each ancilla
  // replaces, i.e. 2 here.
  Penalty pen = quadratize_verified(fredkin_squared(), fredkin_relation(), fredkin_plan(), 0, 0,
                                    "gate:fredkin");
  GateSpec g = fredkin_shell(pen, "fredkin");
  g.notes = "ancillas a = cm, b = cp, each binding added twice";
  g.penalty = rekind(pen, kinds_for(g));
  return g;
}

GateSpec fredkin_gate_9x9() {
  QuadratizeOptions opts;
  opts.plan = {{"i", "m", "d"}, {"j", "m", "e"}, {"i", "p", "f"}, {"j", "p", "g"}};
  Penalty pen = quadratize_verified(fredkin_squared(), fredkin_relation(), opts, 7, 0,
                                    "gate:fredkin9");
  GateSpec g = fredkin_shell(pen, "fredkin9");
  std::ostringstream notes;
  notes << "ancillas d = im, e = jm, f = ip, g = jp; binding weight "
        << to_string(pen.ancilla_weights().front()) << "; coefficient range "
        << to_string(coefficient_range(penalty_to_qubo(pen.poly()))) << " vs "
        << to_string(coefficient_range(penalty_to_qubo(fredkin_reference()))) << " for the 7x7";
  g.notes = notes.str();
  g.penalty = rekind(pen, kinds_for(g));
  return g;
}

GateRun run_gate(const GateSpec& gate, std::span<const int> inputs) {
  if (inputs.size() != gate.inputs.size()) {
    throw std::invalid_argument(gate.name + " takes " + std::to_string(gate.inputs.size()) +
                                " inputs");
  }
  std::vector<HardClamp> clamps;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    clamps.push_back({gate.inputs[k], inputs[k]});
  }
  GateRun run;
  run.result = solve_exhaustive(gate.qubo(), clamps);
  run.ground_value = run.result.ground_value;
  run.unique = run.result.unique();
  for (const auto& out : gate.outputs) {
    run.outputs.push_back(run.result.value(0, out));
  }
  return run;
}

ReverseReport reverse_check(const GateSpec& gate) {
  ReverseReport rep;
  for (const auto& row : gate.truth_table) {
    const GateRun fwd = run_gate(gate, row.in);
    const GateRun back = run_gate(gate, fwd.outputs);
    const bool ok = fwd.unique && back.unique && back.outputs == row.in;
    std::ostringstream os;
    auto bits = [&](const std::vector<int>& v) {
      std::string s;
      for (int b : v) s += static_cast<char>('0' + b);
      return s;
    };
    os << bits(row.in) << " -> " << bits(fwd.outputs) << " -> " << bits(back.outputs)
       << (ok ? "" : "  MISMATCH");
    rep.lines.push_back(os.str());
    rep.ok = rep.ok && ok;
  }
  return rep;
}

FieldPair hadamard_apply(FieldPair f, double tolerance) {
  if (!std::isfinite(f.hi) || !std::isfinite(f.hj) || std::abs(f.norm2() - 1.0) > tolerance) {
    throw std::domain_error("field pair is not normalized (h_i^2 + h_j^2 != 1)");
  }
  constexpr double r = std::numbers::sqrt2 / 2.0;
  return {(f.hi + f.hj) * r, (f.hi - f.hj) * r};
}

Poly force_one_penalty(const std::string& var) {
  Poly p;
  p.add_term({var}, -1);
  return p;
}

std::vector<std::string> gate_names() { return {"cnot", "toffoli", "fredkin", "fredkin9", "hadamard"}; }

GateSpec gate_by_name(std::string_view name) {
  if (name == "cnot") return cnot_gate();
  if (name == "toffoli") return toffoli_gate();
  if (name == "fredkin") return fredkin_gate();
  if (name == "fredkin9") return fredkin_gate_9x9();
  if (name == "hadamard") {
    throw std::invalid_argument("hadamard is a field transform and has no penalty");
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& n : gate_names()) {
    if (n == "hadamard") {
      os << "hadamard  2 fields  (h_i, h_j) -> ((h_i + h_j)/sqrt2, (h_i - h_j)/sqrt2)\n";
      continue;
    }
    const GateSpec g = gate_by_name(n);
    os << n << std::string(10 - n.size(), ' ') << g.penalty.poly().num_vars() << " vars  in:";
    for (const auto& v : g.inputs) os << ' ' << v;
    os << "  out:";
    for (const auto& v : g.outputs) os << ' ' << v;
    os << "  free after:";
    for (const auto& v : g.freed) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace aqc
