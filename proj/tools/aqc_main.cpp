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

// aqc: compile constraints and gates to QUBO/Ising models, verify penalty
// gaps, solve for ground states, and run staged circuits.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqc/errors.hpp"
#include "aqc/feasibility.hpp"
#include "aqc/gates.hpp"
#include "aqc/hamiltonian.hpp"
#include "aqc/model_io.hpp"
#include "aqc/parse.hpp"
#include "aqc/pipeline.hpp"
#include "aqc/solver.hpp"

namespace {

using namespace aqc;
using json = nlohmann::ordered_json;

// Documented in README.md; every failure mode has its own code.
enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kGapFailed = 4,
  kInfeasible = 5,
  kDegree = 6,
  kExclusivity = 7,
  kCircuit = 8,
  kNonUnique = 9,
  kUnsatisfied = 10,
  kSolverLimit = 11,
  kSweepMismatch = 12,
  kIo = 13,
  kMissingVariable = 14,
  kCertificate = 15,
  kInvalid = 16,
};

class IoError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw IoError("cannot write '" + path + "'");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

struct CompileFlags {
  bool strict_slack = false;
  std::string scale = "1";
  std::optional<std::string> ancilla_weight;
  std::vector<std::string> ancillas;

  CompileOptions options() const {
    CompileOptions o;
    o.strict_slack = strict_slack;
    o.scale = parse_rational(scale);
    if (ancilla_weight) {
      o.ancilla_weight = parse_rational(*ancilla_weight);
    }
    for (const auto& a : ancillas) {
      o.ancilla_plan.push_back(parse_ancilla_plan(a));
    }
    return o;
  }

  void attach(CLI::App* cmd) {
    cmd->add_flag("--strict-slack", strict_slack,
                  "Use the minimal slack count instead of one less than the variable count");
    cmd->add_option("--scale", scale, "Multiply the finished penalty by m >= 1");
    cmd->add_option("--ancilla-weight", ancilla_weight, "Fixed weight for ancilla bindings");
    cmd->add_option("--ancilla", ancillas, "Ancilla naming for quadratization, e.g. a=i*j");
  }
};

/// What a TARGET argument resolves to.
struct Target {
  std::string label;
  std::optional<Penalty> penalty;
  QuboMatrix<Rational> qubo;
  std::optional<IsingModel<Rational>> ising;  // set when a file holds an Ising model
};

bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }

Target resolve(const std::string& spec, const CompileOptions& opts) {
  Target t;
  t.label = spec;
  if (starts_with(spec, "gate:")) {
    const GateSpec g = gate_by_name(spec.substr(5));
    t.penalty = g.penalty;
    t.qubo = g.qubo();
    return t;
  }
  if (starts_with(spec, "builtin:")) {
    auto op = parse_bool_op(spec.substr(8));
    if (!op) {
      throw ParseError("unknown operator '" + spec.substr(8) + "'", 1, 9);
    }
    Penalty p = builtin_penalty(*op);
    t.qubo = penalty_to_qubo(p);
    t.penalty = std::move(p);
    return t;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    Model m = read_model(slurp(spec));
    if (auto* q = std::get_if<QuboMatrix<Rational>>(&m)) {
      t.qubo = *q;
    } else {
      t.ising = std::get<IsingModel<Rational>>(m);
      t.qubo = ising_to_qubo(*t.ising);
    }
    return t;
  }
  Penalty p = compile_constraint(parse_constraint(spec), opts);
  if (p.poly().degree() > 2) {
    throw DegreeError("penalty has degree " + std::to_string(p.poly().degree()));
  }
  t.qubo = penalty_to_qubo(p);
  t.penalty = std::move(p);
  return t;
}

/// Valid set for `verify --relation`.
ValidSet relation_set(const std::string& spec, const CompileOptions& opts) {
  if (starts_with(spec, "gate:") || starts_with(spec, "builtin:")) {
    return resolve(spec, opts).penalty->valid_set();
  }
  return compile_constraint(parse_constraint(spec), opts).valid_set();
}

QuboMatrix<Rational> without_offset(const QuboMatrix<Rational>& q) {
  return QuboMatrix<Rational>(q.vars(), q.upper(), Rational(0), q.info());
}

json report_json(const GapReport& r, RowOrder order) {
  json j;
  j["pass"] = r.pass;
  j["vars"] = r.vars;
  j["v"] = to_string(r.v);
  j["min_invalid"] = r.min_invalid ? json(to_string(*r.min_invalid)) : json(nullptr);
  j["gap"] = r.gap() ? json(to_string(*r.gap())) : json(nullptr);
  j["violation"] = r.violation ? json(r.assignment_str(*r.violation)) : json(nullptr);
  auto rows = json::array();
  std::istringstream table(r.table(order));
  std::string line;
  std::getline(table, line);  // header
  while (std::getline(table, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) {
      cells.push_back(cell);
    }
    json row;
    for (std::size_t k = 0; k < r.vars.size(); ++k) {
      row[r.vars[k]] = std::stoi(cells[k]);
    }
    row["valid"] = cells[r.vars.size()] == "true";
    row["value"] = cells[r.vars.size() + 1];
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

json solve_json(const SolveResult& r) {
  json j;
  j["method"] = r.method;
  j["ground_value"] = to_string(r.ground_value);
  auto states = json::array();
  for (std::size_t k = 0; k < r.ground_states.size(); ++k) {
    json s;
    for (const auto& v : r.vars) {
      s[v.name] = r.value(k, v.name);
    }
    states.push_back(std::move(s));
  }
  j["ground_states"] = std::move(states);
  if (r.method == "exhaustive") {
    j["states_visited"] = r.states_visited;
  } else {
    j["sweeps"] = r.sweeps;
    auto vals = json::array();
    for (const auto& v : r.restart_values) {
      vals.push_back(to_string(v));
    }
    j["restart_values"] = std::move(vals);
    j["hits"] = r.hits(r.ground_value);
  }
  return j;
}

json trace_json(const PipelineTrace& t) {
  json j;
  auto stages = json::array();
  for (const auto& s : t.stages) {
    json js;
    js["stage"] = s.index;
    json clamps = json::object();
    for (const auto& c : s.clamps) {
      clamps[c.var] = c.value;
    }
    js["clamps"] = std::move(clamps);
    js["ground_value"] = to_string(s.result.ground_value);
    json outs = json::object();
    for (const auto& [w, b] : s.outputs) {
      outs[w] = b;
    }
    js["outputs"] = std::move(outs);
    js["freed"] = s.freed;
    json qubits = json::object();
    for (const auto& v : s.result.vars) {
      qubits[v.name] = s.qubits.at(v.name);
    }
    js["qubits"] = std::move(qubits);
    stages.push_back(std::move(js));
  }
  j["stages"] = std::move(stages);
  json outs = json::object();
  for (const auto& [w, b] : t.outputs) {
    outs[w] = b;
  }
  j["outputs"] = std::move(outs);
  j["qubits_used"] = t.qubits_used;
  return j;
}

std::optional<AnnealParams> anneal_params(bool anneal, const std::optional<std::uint64_t>& seed,
                                          std::size_t sweeps, std::size_t restarts, double t0,
                                          double t1) {
  if (!anneal) {
    return std::nullopt;
  }
  if (!seed) {
    throw CLI::ValidationError("--anneal", "requires --seed");
  }
  AnnealParams p;
  p.seed = *seed;
  p.sweeps = sweeps;
  p.restarts = restarts;
  p.t_initial = t0;
  p.t_final = t1;
  p.validate();
  return p;
}

std::vector<HardClamp> parse_clamps(const std::vector<std::string>& specs) {
  std::vector<HardClamp> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--clamp", "expected name=value, got '" + s + "'");
    }
    out.push_back({s.substr(0, eq), std::stoi(s.substr(eq + 1))});
  }
  return out;
}

std::string prove_text(const InfeasibilityCertificate& cert) { return cert.str(); }

int run(int argc, char** argv) {
  CLI::App app{"Penalty compiler, verifier and staged solver for binary quadratic models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "aqc 1.0.0");

  // compile
  std::string c_target;
  bool c_matrix = false;
  bool c_upper = false;
  bool c_no_offset = false;
  std::optional<std::string> c_out;
  CompileFlags c_flags;
  auto* compile = app.add_subcommand("compile", "Compile a constraint or gate:NAME to a penalty");
  compile->add_option("target", c_target, "Constraint text, gate:NAME or builtin:OP")->required();
  compile->add_flag("--matrix", c_matrix, "Print the symmetric matrix");
  compile->add_flag("--upper", c_upper, "Print the matrix with each pair once");
  compile->add_flag("--no-offset", c_no_offset, "Drop the constant from written files");
  compile->add_option("-o,--out", c_out, "Write PREFIX.coo and PREFIX.json");
  c_flags.attach(compile);

  // verify
  std::string v_target;
  std::optional<std::string> v_relation;
  std::optional<std::string> v_prove;
  bool v_valid_first = false;
  bool v_json = false;
  CompileFlags v_flags;
  auto* verify = app.add_subcommand("verify", "Check the penalty gap exhaustively");
  verify->add_option("target", v_target, "Model file, constraint, gate:NAME or builtin:OP")
      ->required();
  verify->add_option("--relation", v_relation,
                     "Relation the model must encode (constraint, gate:NAME, builtin:OP)");
  verify->add_option("--prove-no-quadratic", v_prove,
                     "Comma-separated variables; decide if a quadratic penalty over them exists");
  verify->add_flag("--valid-first", v_valid_first, "List valid rows first");
  verify->add_flag("--json", v_json, "Machine-readable output");
  v_flags.attach(verify);

  // solve
  std::string s_target;
  std::vector<std::string> s_clamps;
  bool s_field = false;
  bool s_anneal = false;
  bool s_json = false;
  std::optional<std::uint64_t> s_seed;
  std::size_t s_sweeps = 1000;
  std::size_t s_restarts = 16;
  double s_t0 = 10.0;
  double s_t1 = 0.02;
  CompileFlags s_flags;
  auto* solve = app.add_subcommand("solve", "Find ground states");
  solve->add_option("target", s_target, "Model file, constraint, gate:NAME or builtin:OP")
      ->required();
  solve->add_option("--clamp", s_clamps, "Fix a variable: name=value (0/1, or -1/1 for Ising)");
  solve->add_flag("--field-clamp", s_field, "Clamp through local fields instead of fixing");
  solve->add_flag("--anneal", s_anneal, "Simulated annealing instead of enumeration");
  solve->add_option("--seed", s_seed, "Annealing seed (required with --anneal)");
  solve->add_option("--sweeps", s_sweeps, "Annealing sweeps per restart");
  solve->add_option("--restarts", s_restarts, "Annealing restarts");
  solve->add_option("--t-initial", s_t0, "Initial temperature");
  solve->add_option("--t-final", s_t1, "Final temperature");
  solve->add_flag("--json", s_json, "Machine-readable output");
  s_flags.attach(solve);

  // pipeline
  std::string p_file;
  std::optional<std::string> p_inputs;
  bool p_sweep = false;
  bool p_field = false;
  bool p_no_reuse = false;
  bool p_anneal = false;
  bool p_json = false;
  std::optional<std::uint64_t> p_seed;
  std::size_t p_sweeps = 1000;
  std::size_t p_restarts = 16;
  auto* pipeline = app.add_subcommand("pipeline", "Run a staged circuit");
  pipeline->add_option("circuit", p_file, "Circuit file")->required();
  pipeline->add_option("--inputs", p_inputs, "Comma-separated input bits, e.g. 1,0");
  pipeline->add_flag("--sweep", p_sweep, "Run every input and compare with direct evaluation");
  pipeline->add_flag("--field-clamp", p_field, "Wire stages through local fields");
  pipeline->add_flag("--no-reuse", p_no_reuse, "Never reuse freed qubits");
  pipeline->add_flag("--anneal", p_anneal, "Anneal each stage instead of enumerating");
  pipeline->add_option("--seed", p_seed, "Annealing seed (required with --anneal)");
  pipeline->add_option("--sweeps", p_sweeps, "Annealing sweeps per restart");
  pipeline->add_option("--restarts", p_restarts, "Annealing restarts");
  pipeline->add_flag("--json", p_json, "Machine-readable output");

  // emit
  std::string e_target;
  std::string e_format = "coord";
  bool e_ising = false;
  bool e_no_offset = false;
  std::optional<std::string> e_out;
  CompileFlags e_flags;
  auto* emit = app.add_subcommand("emit", "Write a model in one of the file formats");
  emit->add_option("target", e_target, "Model file, constraint, gate:NAME or builtin:OP")
      ->required();
  emit->add_option("--format", e_format, "coord, json, matrix or upper")
      ->check(CLI::IsMember({"coord", "json", "matrix", "upper"}));
  emit->add_flag("--ising", e_ising, "Convert to spin variables first");
  emit->add_flag("--no-offset", e_no_offset, "Drop the constant");
  emit->add_option("-o,--out", e_out, "Output file (default stdout)");
  e_flags.attach(emit);

  // catalog
  bool k_tables = false;
  auto* catalog = app.add_subcommand("catalog", "List gates and Boolean penalties");
  catalog->add_flag("--truth-tables", k_tables, "Also print the two-input truth tables");

  // prove
  std::string r_relation;
  std::string r_vars;
  auto* prove = app.add_subcommand("prove", "Decide whether a quadratic penalty exists");
  prove->add_option("relation", r_relation, "Constraint, gate:NAME or builtin:OP")->required();
  prove->add_option("--vars", r_vars, "Comma-separated variables (at most 5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (*compile) {
    const Target t = resolve(c_target, c_flags.options());
    if (t.penalty) {
      std::cout << "penalty: " << t.penalty->poly().str() << '\n';
      std::cout << "dropped constant: " << to_string(t.penalty->dropped_offset()) << '\n';
      for (const auto& a : t.penalty->ancillas()) {
        std::cout << "ancilla: " << a.name << " = " << a.lhs << "*" << a.rhs << '\n';
      }
      std::cout << "gap: " << t.penalty->report().summary() << '\n';
    }
    if (c_matrix || c_upper) {
      std::cout << emit_matrix(t.qubo, c_upper ? MatrixStyle::upper : MatrixStyle::symmetric);
    }
    if (c_out) {
      const Model m = c_no_offset ? without_offset(t.qubo) : t.qubo;
      spill(*c_out + ".coo", write_coordinate(m));
      spill(*c_out + ".json", write_structured(m));
      std::cout << "wrote " << *c_out << ".coo and " << *c_out << ".json\n";
    }
    if (t.penalty && !t.penalty->satisfiable()) {
      std::cerr << "warning: constraint has no binary solution\n";
      return kInfeasible;
    }
    return kOk;
  }

  if (*verify) {
    const CompileOptions opts = v_flags.options();
    const Target t = resolve(v_target, opts);
    std::optional<ValidSet> valid;
    if (v_relation) {
      valid = relation_set(*v_relation, opts);
    } else if (t.penalty) {
      valid = t.penalty->valid_set();
    } else if (!v_prove) {
      throw CLI::ValidationError("--relation", "a model file needs --relation");
    }
    if (v_prove) {
      const auto vars = split_list(*v_prove);
      const ValidSet& rel = valid ? *valid : t.penalty->valid_set();
      const auto cert = prove_no_quadratic(rel, vars);
      std::cout << prove_text(cert);
      return cert.recheck() ? kOk : kCertificate;
    }
    const Poly poly = qubo_to_poly(t.qubo);
    const GapReport rep = verify_gap(poly, *valid);
    const RowOrder order = v_valid_first ? RowOrder::valid_first : RowOrder::descending;
    if (v_json) {
      std::cout << report_json(rep, order).dump(2) << '\n';
    } else {
      std::cout << rep.table(order) << rep.summary() << '\n';
    }
    return rep.pass ? kOk : kGapFailed;
  }

  if (*solve) {
    const Target t = resolve(s_target, s_flags.options());
    const auto params = anneal_params(s_anneal, s_seed, s_sweeps, s_restarts, s_t0, s_t1);
    std::vector<HardClamp> clamps = parse_clamps(s_clamps);
    SolveResult r;
    ModelInfo info = t.ising ? t.ising->info() : t.qubo.info();
    if (t.ising || s_field) {
      IsingModel<Rational> m = t.ising ? *t.ising : qubo_to_ising(t.qubo);
      if (!t.ising) {
        for (auto& c : clamps) {
          c.value = c.value ? 1 : -1;
        }
      }
      if (s_field) {
        for (const auto& c : clamps) {
          m = apply_clamp(m, c.var, c.value, nullptr);
        }
        clamps.clear();
      }
      r = params ? solve_anneal(m, clamps, *params) : solve_exhaustive(m, clamps);
      if (!t.ising) {
        // Same energies and masks; report bits for binary models.
        r.domain = Domain::binary;
      }
    } else {
      r = params ? solve_anneal(t.qubo, clamps, *params) : solve_exhaustive(t.qubo, clamps);
    }
    if (s_json) {
      std::cout << solve_json(r).dump(2) << '\n';
    } else {
      std::cout << r.report(info);
    }
    return kOk;
  }

  if (*pipeline) {
    const Circuit circuit = parse_circuit(slurp(p_file));
    const CompiledCircuit compiled = compile_circuit(circuit);
    PipelineOptions opts;
    opts.field_clamp = p_field;
    opts.reuse_qubits = !p_no_reuse;
    opts.anneal = anneal_params(p_anneal, p_seed, p_sweeps, p_restarts, 10.0, 0.02);
    if (p_sweep) {
      const std::size_t n = circuit.inputs.size();
      std::size_t mismatches = 0;
      json rows = json::array();
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        std::vector<int> in(n);
        for (std::size_t k = 0; k < n; ++k) {
          in[k] = static_cast<int>((m >> (n - 1 - k)) & 1);
        }
        const PipelineTrace t = run_pipeline(compiled, in, opts);
        const auto ref = classical_eval(circuit, in);
        bool ok = true;
        std::string bits_in;
        std::string bits_out;
        for (int b : in) bits_in += static_cast<char>('0' + b);
        for (const auto& [w, b] : t.outputs) {
          bits_out += static_cast<char>('0' + b);
          ok = ok && ref.at(w) == b;
        }
        mismatches += ok ? 0 : 1;
        if (p_json) {
          rows.push_back({{"inputs", bits_in}, {"outputs", bits_out}, {"match", ok}});
        } else {
          std::cout << bits_in << " -> " << bits_out << (ok ? "" : "  MISMATCH") << '\n';
        }
      }
      if (p_json) {
        std::cout << json{{"rows", rows}, {"mismatches", mismatches}}.dump(2) << '\n';
      } else {
        std::cout << "mismatches: " << mismatches << '\n';
      }
      return mismatches == 0 ? kOk : kSweepMismatch;
    }
    std::vector<int> in;
    if (p_inputs) {
      for (const auto& b : split_list(*p_inputs)) {
        in.push_back(std::stoi(b));
      }
    }
    const PipelineTrace t = run_pipeline(compiled, in, opts);
    std::cout << (p_json ? trace_json(t).dump(2) + "\n" : t.report());
    return kOk;
  }

  if (*emit) {
    const Target t = resolve(e_target, e_flags.options());
    std::string text;
    if (e_format == "matrix" || e_format == "upper") {
      text = emit_matrix(e_no_offset ? without_offset(t.qubo) : t.qubo,
                         e_format == "upper" ? MatrixStyle::upper : MatrixStyle::symmetric);
    } else {
      Model m;
      if (e_ising || t.ising) {
        IsingModel<Rational> is = t.ising ? *t.ising : qubo_to_ising(t.qubo);
        if (e_no_offset) {
          is = IsingModel<Rational>(is.vars(), is.h(), is.J(), Rational(0), is.info());
        }
        m = std::move(is);
      } else {
        m = e_no_offset ? without_offset(t.qubo) : t.qubo;
      }
      text = e_format == "json" ? write_structured(m) : write_coordinate(m);
    }
    if (e_out) {
      spill(*e_out, text);
    } else {
      std::cout << text;
    }
    return kOk;
  }

  if (*catalog) {
    std::cout << catalog_text();
    std::cout << '\n';
    for (BoolOp op : {BoolOp::COPY, BoolOp::NOT, BoolOp::AND, BoolOp::OR, BoolOp::IMPLIES,
                      BoolOp::XOR, BoolOp::EQUIV}) {
      const Penalty p = builtin_penalty(op);
      std::cout << to_string(op) << std::string(8 - to_string(op).size(), ' ')
                << p.poly().str() << "   [" << p.report().summary() << "]\n";
    }
    if (k_tables) {
      std::cout << '\n' << format_truth_tables(binary_ops());
    }
    return kOk;
  }

  if (*prove) {
    const ValidSet rel = relation_set(r_relation, {});
    const auto cert = prove_no_quadratic(rel, split_list(r_vars));
    std::cout << prove_text(cert);
    return cert.recheck() ? kOk : kCertificate;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const aqc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const aqc::GapViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGapFailed;
  } catch (const aqc::InfeasibleConstraintError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const aqc::DegreeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegree;
  } catch (const aqc::ExclusivityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExclusivity;
  } catch (const aqc::CircuitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCircuit;
  } catch (const aqc::StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case aqc::StageError::Kind::non_unique: return kNonUnique;
      case aqc::StageError::Kind::unsatisfied: return kUnsatisfied;
      case aqc::StageError::Kind::solver_limit: return kSolverLimit;
    }
    return kInternal;
  } catch (const aqc::SolverLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolverLimit;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const aqc::MissingVariableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMissingVariable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
