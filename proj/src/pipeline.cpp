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

#include "aqc/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aqc/errors.hpp"

namespace aqc {
namespace {

struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Word> words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void require_identifier(const Word& w, std::size_t line) {
  if (!is_identifier(w.text)) {
    throw ParseError("'" + w.text + "' is not a valid wire name", line, w.column);
  }
}

bool is_gate(std::string_view w) {
  return w == "cnot" || w == "toffoli" || w == "fredkin" || w == "fredkin9";
}

const GateSpec& cached_gate(const std::string& name) {
  static const std::map<std::string, GateSpec> cache = [] {
    std::map<std::string, GateSpec> m;
    for (const char* n : {"cnot", "toffoli", "fredkin", "fredkin9"}) {
      m.emplace(n, gate_by_name(n));
    }
    return m;
  }();
  return cache.at(name);
}

std::string source_of(const GateApplication& g, std::size_t ordinal) {
  return g.gate + "#" + std::to_string(ordinal) + " (line " + std::to_string(g.line) + ")";
}

bool valid_under(const Penalty& p, const Poly& stage_poly, Mask state) {
  Mask local = 0;
  const auto& vars = p.valid_set().vars();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const auto idx = stage_poly.index_of(vars[k]);
    if (idx && ((state >> *idx) & 1)) {
      local |= Mask{1} << k;
    }
  }
  return p.valid_set().contains(local);
}

}  // namespace

GatePorts gate_ports(std::string_view gate) {
  if (gate == "cnot") {
    return {{{"control", "j"}, {"target", "i"}}, {"k"}};
  }
  if (gate == "toffoli") {
    return {{{"c1", "c_1"}, {"c2", "c_2"}, {"t", "t"}}, {"r"}};
  }
  if (gate == "fredkin" || gate == "fredkin9") {
    return {{{"c", "c"}, {"i", "i"}, {"j", "j"}}, {"m", "p"}};
  }
  throw std::invalid_argument("unknown gate '" + std::string(gate) + "'");
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool explicit_stages = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto w = words(line);
    if (w.empty()) {
      continue;
    }
    const std::string& kw = w[0].text;
    if (kw == "input" || kw == "output") {
      if (w.size() < 2) {
        throw ParseError("'" + kw + "' needs at least one wire", lineno, w[0].column);
      }
      for (std::size_t k = 1; k < w.size(); ++k) {
        require_identifier(w[k], lineno);
        (kw == "input" ? c.inputs : c.outputs).push_back(w[k].text);
      }
    } else if (kw == "stage") {
      if (w.size() != 1) {
        throw ParseError("'stage' takes no arguments", lineno, w[1].column);
      }
      explicit_stages = true;
      ++c.stage_count;
    } else if (kw == "constraint") {
      const std::size_t offset = w.size() > 1 ? w[1].column - 1 : line.size();
      ConstraintApplication app{EquationConstraint{}, "", lineno, 0};
      try {
        app.constraint = parse_constraint(line.substr(offset), lineno);
      } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(msg.substr(msg.find(": ") + 2), lineno, e.column() + offset);
      }
      app.text = std::string(line.substr(offset));
      while (!app.text.empty() && std::isspace(static_cast<unsigned char>(app.text.back()))) {
        app.text.pop_back();
      }
      if (!explicit_stages) {
        ++c.stage_count;
      }
      c.stage_count = std::max<std::size_t>(c.stage_count, 1);
      app.stage = c.stage_count;
      c.steps.emplace_back(std::move(app));
    } else if (is_gate(kw)) {
      GateApplication g;
      g.gate = kw;
      g.line = lineno;
      const GatePorts ports = gate_ports(kw);
      std::size_t k = 1;
      for (; k < w.size() && w[k].text != "->"; ++k) {
        const auto eq = w[k].text.find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected port=wire", lineno, w[k].column);
        }
        const std::string key = w[k].text.substr(0, eq);
        const Word wire{w[k].text.substr(eq + 1), w[k].column + eq + 1};
        auto it = std::find_if(ports.inputs.begin(), ports.inputs.end(),
                               [&](const auto& p) { return p.first == key; });
        if (it == ports.inputs.end()) {
          throw ParseError("unknown port '" + key + "' for " + kw, lineno, w[k].column);
        }
        require_identifier(wire, lineno);
        if (!g.wires.emplace(it->second, wire.text).second) {
          throw ParseError("port '" + key + "' given twice", lineno, w[k].column);
        }
      }
      for (const auto& [key, var] : ports.inputs) {
        if (!g.wires.count(var)) {
          throw ParseError(kw + " needs port '" + key + "'", lineno, w[0].column);
        }
      }
      if (k == w.size()) {
        throw ParseError("expected '->' and result wires", lineno, line.size() + 1);
      }
      ++k;
      for (const auto& var : ports.results) {
        if (k == w.size() || w[k].text.find('=') != std::string::npos) {
          throw ParseError(kw + " produces " + std::to_string(ports.results.size()) +
                               " result wire(s)",
                           lineno, k < w.size() ? w[k].column : line.size() + 1);
        }
        require_identifier(w[k], lineno);
        g.wires.emplace(var, w[k].text);
        ++k;
      }
      for (; k < w.size(); ++k) {
        const auto eq = w[k].text.find('=');
        if (eq == std::string::npos) {
          throw ParseError("unexpected '" + w[k].text + "'", lineno, w[k].column);
        }
        const std::string var = w[k].text.substr(0, eq);
        const Word alias{w[k].text.substr(eq + 1), w[k].column + eq + 1};
        require_identifier(alias, lineno);
        const auto& pv = cached_gate(kw).penalty.poly();
        if (!pv.index_of(var) || g.wires.count(var)) {
          throw ParseError("'" + var + "' is not an internal variable of " + kw, lineno,
                           w[k].column);
        }
        g.internal[var] = alias.text;
      }
      if (!explicit_stages) {
        ++c.stage_count;
      }
      c.stage_count = std::max<std::size_t>(c.stage_count, 1);
      g.stage = c.stage_count;
      c.steps.emplace_back(std::move(g));
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno, w[0].column);
    }
  }
  return c;
}

CompiledCircuit compile_circuit(const Circuit& circuit) {
  CompiledCircuit out;
  out.circuit = circuit;
  std::map<std::string, std::size_t> defined_in;
  for (const auto& in : circuit.inputs) {
    if (!defined_in.emplace(in, 0).second) {
      throw CircuitError("input '" + in + "' declared twice");
    }
  }
  std::set<std::string> internal_names;
  std::map<std::string, std::size_t> ordinals;
  std::size_t constraint_count = 0;

  for (std::size_t s = 1; s <= circuit.stage_count; ++s) {
    Stage st;
    st.index = s;
    std::map<std::string, std::string> roles;
    std::set<std::string> freed;

    auto consume = [&](const std::string& wire, const std::string& where) {
      auto it = defined_in.find(wire);
      if (it == defined_in.end()) {
        throw CircuitError(where + ": wire '" + wire + "' is used before it is defined");
      }
    };
    auto produce = [&](const std::string& wire, const std::string& where) {
      if (defined_in.count(wire) || internal_names.count(wire)) {
        throw CircuitError(where + ": wire '" + wire + "' is already defined");
      }
      defined_in[wire] = s;
      st.produced.push_back(wire);
    };

    for (const auto& step : circuit.steps) {
      if (const auto* g = std::get_if<GateApplication>(&step); g && g->stage == s) {
        const GateSpec& spec = cached_gate(g->gate);
        const std::size_t ordinal = ++ordinals[g->gate];
        const std::string where = source_of(*g, ordinal);
        const GatePorts ports = gate_ports(g->gate);
        std::map<std::string, std::string> mapping;
        std::set<std::string> seen;
        for (const auto& [key, var] : ports.inputs) {
          const std::string& wire = g->wires.at(var);
          consume(wire, where);
          if (!seen.insert(wire).second) {
            throw ExclusivityError(where + ": wire '" + wire + "' is bound to two ports", wire);
          }
          mapping[var] = wire;
          roles[wire] = spec.roles.at(var);
        }
        for (const auto& var : ports.results) {
          const std::string& wire = g->wires.at(var);
          if (seen.count(wire)) {
            throw CircuitError(where + ": result wire '" + wire + "' is also an input");
          }
          produce(wire, where);
          mapping[var] = wire;
          roles[wire] = spec.roles.at(var);
        }
        for (const auto& v : spec.penalty.poly().vars()) {
          if (mapping.count(v.name)) {
            continue;
          }
          auto alias = g->internal.find(v.name);
          const std::string name = alias != g->internal.end()
                                       ? alias->second
                                       : g->gate + std::to_string(ordinal) + "_" + v.name;
          if (defined_in.count(name) || !internal_names.insert(name).second) {
            throw CircuitError(where + ": internal name '" + name + "' is already in use");
          }
          mapping[v.name] = name;
          roles[name] = spec.roles.count(v.name) ? spec.roles.at(v.name) : "ancilla";
        }
        for (const auto& f : spec.freed) {
          freed.insert(mapping.at(f));
        }
        Penalty p = renamed(spec.penalty, mapping);
        for (const auto& v : p.poly().vars()) {
          st.exclusive.insert(v.name);
        }
        st.penalties.push_back({where, std::move(p), true});
      } else if (const auto* c = std::get_if<ConstraintApplication>(&step); c && c->stage == s) {
        const std::size_t ordinal = ++constraint_count;
        const std::string where = "constraint (line " + std::to_string(c->line) + ")";
        Penalty p = compile_constraint(c->constraint);
        std::map<std::string, std::string> mapping;
        for (const auto& v : p.poly().vars()) {
          if (v.kind == VarKind::slack || v.kind == VarKind::ancilla) {
            const std::string name = "con" + std::to_string(ordinal) + "_" + v.name;
            if (defined_in.count(name) || !internal_names.insert(name).second) {
              throw CircuitError(where + ": internal name '" + name + "' is already in use");
            }
            mapping[v.name] = name;
            roles[name] = std::string(to_string(v.kind));
            freed.insert(name);
          }
        }
        // Unsatisfiable constraints have an empty valid set but still
        // rename cleanly.
        p = renamed(p, mapping);
        for (const auto& v : p.poly().vars()) {
          const std::string& name = v.name;
          if (internal_names.count(name)) {
            if (mapping.end() == std::find_if(mapping.begin(), mapping.end(),
                                              [&](const auto& m) { return m.second == name; })) {
              // Reaching into another penalty's internal variable.
              throw ExclusivityError(where + ": variable '" + name +
                                         "' is internal to a gate",
                                     name);
            }
            continue;
          }
          auto it = defined_in.find(name);
          if (it == defined_in.end()) {
            produce(name, where);
            roles.emplace(name, "output");
          }
        }
        st.penalties.push_back({where, std::move(p), false});
      }
    }

    // Exclusivity: a gate variable may appear in its own penalty only.
    std::map<std::string, std::vector<std::string>> users;
    for (const auto& sp : st.penalties) {
      for (const auto& v : sp.penalty.poly().vars()) {
        users[v.name].push_back(sp.source);
      }
    }
    for (const auto& [name, who] : users) {
      if (who.size() > 1 && st.exclusive.count(name)) {
        throw ExclusivityError("stage " + std::to_string(s) + ": gate variable '" + name +
                                   "' is shared by " + who[0] + " and " + who[1],
                               name);
      }
    }

    std::vector<std::pair<Rational, Poly>> parts;
    for (const auto& sp : st.penalties) {
      parts.emplace_back(1, sp.penalty.poly());
      for (const auto& v : sp.penalty.poly().vars()) {
        auto it = defined_in.find(v.name);
        if (it != defined_in.end() && it->second < s &&
            std::find(st.clamped.begin(), st.clamped.end(), v.name) == st.clamped.end()) {
          st.clamped.push_back(v.name);
        }
      }
    }
    const Poly poly = combine(parts);
    if (poly.degree() > 2) {
      throw DegreeError("stage " + std::to_string(s) + " Hamiltonian is not quadratic");
    }
    st.hamiltonian = penalty_to_qubo(poly, ModelInfo{"stage:" + std::to_string(s), roles});
    st.freed.assign(freed.begin(), freed.end());
    out.stages.push_back(std::move(st));
  }
  for (const auto& o : circuit.outputs) {
    if (!defined_in.count(o)) {
      throw CircuitError("output '" + o + "' is never defined");
    }
  }
  return out;
}

int QubitAllocator::acquire(const std::string& name) {
  if (auto it = held_.find(name); it != held_.end()) {
    return it->second;
  }
  int q;
  if (reuse_ && !free_.empty()) {
    q = *free_.begin();
    free_.erase(free_.begin());
  } else {
    q = next_++;
  }
  held_[name] = q;
  return q;
}

void QubitAllocator::release(const std::string& name) {
  auto it = held_.find(name);
  if (it == held_.end()) {
    return;
  }
  free_.insert(it->second);
  held_.erase(it);
}

std::optional<int> QubitAllocator::holder(const std::string& name) const {
  auto it = held_.find(name);
  if (it == held_.end()) {
    return std::nullopt;
  }
  return it->second;
}

PipelineTrace run_pipeline(const CompiledCircuit& compiled, std::span<const int> inputs,
                           const PipelineOptions& options) {
  const Circuit& circuit = compiled.circuit;
  if (inputs.size() != circuit.inputs.size()) {
    throw CircuitError("circuit takes " + std::to_string(circuit.inputs.size()) +
                       " inputs, got " + std::to_string(inputs.size()));
  }
  PipelineTrace trace;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k] != 0 && inputs[k] != 1) {
      throw CircuitError("input values must be 0 or 1");
    }
    trace.wires[circuit.inputs[k]] = inputs[k];
  }
  std::map<std::string, std::size_t> last_use;
  for (const auto& st : compiled.stages) {
    for (const auto& v : st.hamiltonian.vars()) {
      last_use[v.name] = st.index;
    }
  }
  const std::set<std::string> keep(circuit.outputs.begin(), circuit.outputs.end());
  QubitAllocator alloc(options.reuse_qubits);

  for (const auto& st : compiled.stages) {
    StageTrace t;
    t.index = st.index;
    const auto& H = st.hamiltonian;
    for (const auto& v : H.vars()) {
      t.qubits[v.name] = alloc.acquire(v.name);
    }
    for (const auto& w : st.clamped) {
      t.clamps.push_back({w, trace.wires.at(w)});
    }
    try {
      if (options.field_clamp) {
        IsingModel<Rational> m = qubo_to_ising(H);
        for (const auto& c : t.clamps) {
          Clamp applied;
          m = apply_clamp(m, c.var, c.value ? 1 : -1, &applied);
          t.field_clamps.push_back(applied);
        }
        t.result = options.anneal ? solve_anneal(m, {}, *options.anneal)
                                  : solve_exhaustive(m, {}, options.solve);
      } else {
        t.result = options.anneal ? solve_anneal(H, t.clamps, *options.anneal)
                                  : solve_exhaustive(H, t.clamps, options.solve);
      }
    } catch (const SolverLimitError& e) {
      throw StageError(StageError::Kind::solver_limit, st.index, e.what());
    }
    const SolveResult& r = t.result;
    if (r.ground_states.size() != 1) {
      std::ostringstream os;
      os << r.ground_states.size() << " ground states at value " << to_string(r.ground_value)
         << ":";
      for (Mask g : r.ground_states) {
        os << "\n ";
        for (std::size_t i = 0; i < r.vars.size(); ++i) {
          os << ' ' << r.vars[i].name << '=' << ((g >> i) & 1);
        }
      }
      throw StageError(StageError::Kind::non_unique, st.index, os.str());
    }
    const Mask state = r.ground_states.front();
    auto bit = [&](const std::string& name) {
      for (std::size_t i = 0; i < H.vars().size(); ++i) {
        if (H.vars()[i].name == name) {
          return static_cast<int>((state >> i) & 1);
        }
      }
      throw MissingVariableError(name);
    };
    for (const auto& c : t.clamps) {
      if (bit(c.var) != c.value) {
        throw StageError(StageError::Kind::unsatisfied, st.index,
                         "clamp on '" + c.var + "' did not hold in the ground state");
      }
    }
    const Poly stage_poly = qubo_to_poly(H);
    for (const auto& sp : st.penalties) {
      if (!sp.penalty.satisfiable() || !valid_under(sp.penalty, stage_poly, state)) {
        throw StageError(StageError::Kind::unsatisfied, st.index,
                         sp.source + " is not satisfied by the ground state");
      }
    }
    for (const auto& w : st.produced) {
      const int b = bit(w);
      trace.wires[w] = b;
      t.outputs.emplace_back(w, b);
    }
    t.freed = st.freed;
    for (const auto& v : H.vars()) {
      const bool freed = std::find(st.freed.begin(), st.freed.end(), v.name) != st.freed.end();
      const bool dead = last_use[v.name] <= st.index && !keep.count(v.name);
      if (freed || dead) {
        alloc.release(v.name);
      }
    }
    trace.stages.push_back(std::move(t));
  }
  for (const auto& o : circuit.outputs) {
    trace.outputs.emplace_back(o, trace.wires.at(o));
  }
  trace.qubits_used = alloc.used();
  return trace;
}

std::string PipelineTrace::report() const {
  std::ostringstream os;
  for (const auto& t : stages) {
    os << "stage " << t.index << '\n';
    os << "  clamps:";
    for (const auto& c : t.clamps) {
      os << ' ' << c.var << '=' << c.value;
    }
    if (!t.field_clamps.empty()) {
      os << "  (fields:";
      for (const auto& c : t.field_clamps) {
        os << ' ' << c.var << ' ' << (c.spin > 0 ? "-" : "+") << to_string(c.magnitude);
      }
      os << ')';
    }
    os << '\n';
    os << "  ground value: " << to_string(t.result.ground_value) << " (" << t.result.method
       << ")\n";
    os << "  outputs:";
    for (const auto& [w, b] : t.outputs) {
      os << ' ' << w << '=' << b;
    }
    os << "\n  freed:";
    for (const auto& f : t.freed) {
      os << ' ' << f;
    }
    os << "\n  qubits:";
    for (const auto& v : t.result.vars) {
      os << ' ' << v.name << ':' << t.qubits.at(v.name);
    }
    os << '\n';
  }
  os << "outputs:";
  for (const auto& [w, b] : outputs) {
    os << ' ' << w << '=' << b;
  }
  os << "\nqubits used: " << qubits_used << '\n';
  return os.str();
}

std::map<std::string, int> classical_eval(const Circuit& circuit, std::span<const int> inputs) {
  if (inputs.size() != circuit.inputs.size()) {
    throw CircuitError("circuit takes " + std::to_string(circuit.inputs.size()) + " inputs");
  }
  std::map<std::string, int> w;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    w[circuit.inputs[k]] = inputs[k];
  }
  auto get = [&](const std::string& name) {
    auto it = w.find(name);
    if (it == w.end()) {
      throw CircuitError("wire '" + name + "' has no value");
    }
    return it->second;
  };
  for (const auto& step : circuit.steps) {
    if (const auto* g = std::get_if<GateApplication>(&step)) {
      const GateSpec& spec = cached_gate(g->gate);
      std::vector<int> in;
      for (const auto& var : spec.inputs) {
        in.push_back(get(g->wires.at(var)));
      }
      const auto out = spec.apply(in);
      for (std::size_t k = 0; k < out.size(); ++k) {
        w[g->wires.at(spec.outputs[k])] = out[k];
      }
      continue;
    }
    const auto& c = std::get<ConstraintApplication>(step);
    if (const auto* b = std::get_if<BooleanConstraint>(&c.constraint)) {
      std::vector<std::uint8_t> in;
      for (const auto& v : b->inputs) {
        in.push_back(static_cast<std::uint8_t>(get(v)));
      }
      const int value = eval_op(b->op, in);
      if (auto it = w.find(b->output); it != w.end() && it->second != value) {
        throw CircuitError("constraint on line " + std::to_string(c.line) + " is violated");
      }
      w[b->output] = value;
    } else if (const auto* e = std::get_if<EquationConstraint>(&c.constraint)) {
      auto known = [&](const Expr& x) {
        for (const auto& v : x.variables()) {
          if (!w.count(v)) return false;
        }
        return true;
      };
      auto assign = [&] {
        Assignment a;
        for (const auto& [k, v] : w) a.set(k, v);
        return a;
      };
      const Expr* target = nullptr;
      const Expr* source = nullptr;
      if (e->lhs.kind() == Expr::Kind::variable && !w.count(e->lhs.name()) && known(e->rhs)) {
        target = &e->lhs;
        source = &e->rhs;
      } else if (e->rhs.kind() == Expr::Kind::variable && !w.count(e->rhs.name()) &&
                 known(e->lhs)) {
        target = &e->rhs;
        source = &e->lhs;
      }
      if (target) {
        const Rational v = evaluate(*source, assign());
        if (v != 0 && v != 1) {
          throw CircuitError("constraint on line " + std::to_string(c.line) +
                             " has no binary solution for '" + target->name() + "'");
        }
        w[target->name()] = v == 1 ? 1 : 0;
      } else if (known(e->lhs) && known(e->rhs)) {
        if (evaluate(e->lhs, assign()) != evaluate(e->rhs, assign())) {
          throw CircuitError("constraint on line " + std::to_string(c.line) + " is violated");
        }
      } else {
        throw CircuitError("constraint on line " + std::to_string(c.line) +
                           " does not define its variables");
      }
    } else {
      const auto& q = std::get<Inequality>(c.constraint);
      std::int64_t sum = 0;
      for (const auto& v : q.vars) {
        sum += get(v);
      }
      if (q.sense == Sense::le ? sum > q.bound : sum < q.bound) {
        throw CircuitError("constraint on line " + std::to_string(c.line) + " is violated");
      }
    }
  }
  return w;
}

HadamardStage hadamard_stage(FieldPair in, bool reuse_inputs) {
  QubitAllocator alloc(reuse_inputs);
  HadamardStage st;
  st.input_qubits = {alloc.acquire("i"), alloc.acquire("j")};
  st.out = hadamard_apply(in);
  // The input fields are consumed by the transform.
  alloc.release("i");
  alloc.release("j");
  st.output_qubits = {alloc.acquire("p"), alloc.acquire("q")};
  st.qubits_used = alloc.used();
  return st;
}

}  // namespace aqc
