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
#include <span>
#include <string>
#include <vector>

#include "aqc/hamiltonian.hpp"
#include "aqc/penalty.hpp"
#include "aqc/solver.hpp"

namespace aqc {

struct GateRow {
  std::vector<int> in;
  std::vector<int> out;
};

/// A reversible gate as a verified penalty plus its classical contract.
struct GateSpec {
  GateSpec(std::string name, Penalty penalty) : name(std::move(name)), penalty(std::move(penalty)) {}

  std::string name;
  Penalty penalty;
  /// Clamped variables, in truth-table column order.
  std::vector<std::string> inputs;
  /// Variables read after the solve; position k corresponds to inputs[k].
  std::vector<std::string> outputs;
  /// Role per variable: control, target, result, input, output, ancilla.
  std::map<std::string, std::string> roles;
  /// Rows in ascending input order.
  std::vector<GateRow> truth_table;
  /// Variables that carry no information once the gate has run.
  std::vector<std::string> freed;
  std::string notes;

  std::vector<int> apply(std::span<const int> in) const;
  QuboMatrix<Rational> qubo() const;
  ModelInfo info() const;
};

/// Reference polynomials as printed for the three gates.
Poly cnot_reference();
Poly toffoli_reference();
Poly fredkin_reference();

GateSpec cnot_gate();
GateSpec toffoli_gate();
GateSpec fredkin_gate();
/// Alternative Fredkin quadratization with d = im, e = jm, f = ip, g = jp.
/// Binding weights are raised uniformly until the gap check passes.
GateSpec fredkin_gate_9x9();

/// Squared Fredkin output equations, summed (cubic).
Poly fredkin_squared();
ValidSet fredkin_relation();
/// Fredkin quadratization with a fixed binding weight, checked but not
/// required to pass.
GapReport fredkin_weight_check(const Rational& weight);

struct GateRun {
  std::vector<int> outputs;
  Rational ground_value = 0;
  bool unique = false;
  SolveResult result;
};

/// Clamps the gate inputs and solves exhaustively.
GateRun run_gate(const GateSpec& gate, std::span<const int> inputs);

struct ReverseReport {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Runs each row forward, feeds the outputs back in, and checks the original
/// inputs come out again.
ReverseReport reverse_check(const GateSpec& gate);

/// Local-field pair (h_i, h_j).
struct FieldPair {
  double hi = 0.0;
  double hj = 0.0;

  double norm2() const { return hi * hi + hj * hj; }
};

inline constexpr double kFieldTolerance = 1e-12;

/// ((h_i + h_j)/sqrt2, (h_i - h_j)/sqrt2). Throws std::domain_error when the
/// input is not normalized.
FieldPair hadamard_apply(FieldPair f, double tolerance = kFieldTolerance);

/// Penalty -x_v, which favours x_v = 1 (s_v = +1).
Poly force_one_penalty(const std::string& var);

/// Names accepted by gate_by_name plus "hadamard".
std::vector<std::string> gate_names();
/// Throws std::invalid_argument for unknown names and for "hadamard", which
/// has no penalty.
GateSpec gate_by_name(std::string_view name);
std::string catalog_text();

}  // namespace aqc
