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

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aqc/gates.hpp"
#include "aqc/parse.hpp"
#include "aqc/solver.hpp"

namespace aqc {

struct GateApplication {
  std::string gate;  // cnot, toffoli, fredkin, fredkin9
  /// Gate variable -> wire, for inputs and outputs.
  std::map<std::string, std::string> wires;
  /// Gate variable -> user name for internal variables (optional).
  std::map<std::string, std::string> internal;
  std::size_t line = 0;
  std::size_t stage = 0;
};

struct ConstraintApplication {
  Constraint constraint;
  std::string text;
  std::size_t line = 0;
  std::size_t stage = 0;
};

using CircuitStep = std::variant<GateApplication, ConstraintApplication>;

/// Line-oriented circuit:
///
///   input a b c
///   cnot control=a target=b -> r1
///   toffoli c1=a c2=c t=r1 -> r2 a=anc1 b=anc2
///   fredkin c=a i=b j=c -> m p
///   constraint z = r2 AND m
///   stage
///   output r2 m
///
/// Every gate or constraint opens its own stage until the first `stage` line;
/// after that, steps join the current stage until the next `stage`. Trailing
/// `name=alias` pairs on a gate rename its internal variables.
struct Circuit {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<CircuitStep> steps;
  std::size_t stage_count = 0;
};

Circuit parse_circuit(std::string_view text);

/// Port names per gate: gate variable for each `port=` key and the result
/// variables that follow `->`.
struct GatePorts {
  std::vector<std::pair<std::string, std::string>> inputs;  // port key, gate variable
  std::vector<std::string> results;                         // gate variables
};
GatePorts gate_ports(std::string_view gate);

struct StagePenalty {
  std::string source;  // "cnot#1", "constraint line 4", ...
  Penalty penalty;
  bool gate = false;
};

struct Stage {
  std::size_t index = 0;  // 1-based
  std::vector<StagePenalty> penalties;
  QuboMatrix<Rational> hamiltonian;
  /// Wires known before the stage runs, clamped.
  std::vector<std::string> clamped;
  /// Wires produced here.
  std::vector<std::string> produced;
  /// Variables owned by a gate; each appears in exactly one penalty.
  std::set<std::string> exclusive;
  /// Variables that carry nothing after the stage.
  std::vector<std::string> freed;
};

struct CompiledCircuit {
  Circuit circuit;
  std::vector<Stage> stages;
};

CompiledCircuit compile_circuit(const Circuit& circuit);

/// Hands out physical qubit indices; released qubits are reused lowest first
/// when reuse is on.
class QubitAllocator {
 public:
  explicit QubitAllocator(bool reuse = true) : reuse_(reuse) {}

  int acquire(const std::string& name);
  void release(const std::string& name);
  std::optional<int> holder(const std::string& name) const;
  /// Number of distinct physical qubits ever used.
  std::size_t used() const { return static_cast<std::size_t>(next_); }

 private:
  bool reuse_;
  int next_ = 0;
  std::set<int> free_;
  std::map<std::string, int> held_;
};

struct PipelineOptions {
  /// Wire stage inputs through local fields instead of fixing them.
  bool field_clamp = false;
  bool reuse_qubits = true;
  std::optional<AnnealParams> anneal;
  SolveOptions solve;
};

struct StageTrace {
  std::size_t index = 0;
  std::vector<HardClamp> clamps;
  std::vector<Clamp> field_clamps;
  SolveResult result;
  std::vector<std::pair<std::string, int>> outputs;
  std::vector<std::string> freed;
  std::map<std::string, int> qubits;
};

struct PipelineTrace {
  std::vector<StageTrace> stages;
  std::map<std::string, int> wires;
  std::vector<std::pair<std::string, int>> outputs;
  std::size_t qubits_used = 0;

  std::string report() const;
};

/// Inputs follow `circuit.inputs` order.
PipelineTrace run_pipeline(const CompiledCircuit& compiled, std::span<const int> inputs,
                           const PipelineOptions& options = {});

/// Direct evaluation from gate truth tables and constraint semantics.
/// Throws CircuitError for constraints that do not define their outputs.
std::map<std::string, int> classical_eval(const Circuit& circuit, std::span<const int> inputs);

struct HadamardStage {
  FieldPair out;
  std::vector<int> input_qubits;
  std::vector<int> output_qubits;
  std::size_t qubits_used = 0;
};

/// Field transform between stages. With reuse, p and q take over the input
/// qubits (2 in total); otherwise they get fresh ones (4).
HadamardStage hadamard_stage(FieldPair in, bool reuse_inputs = true);

}  // namespace aqc
