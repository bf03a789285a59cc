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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/feasibility.hpp"
#include "aqc/gates.hpp"
#include "aqc/hamiltonian.hpp"

namespace aqc {
namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(AQC_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Expected outputs per gate, written out by hand.
std::vector<int> expected(const std::string& gate, const std::vector<int>& in) {
  if (gate == "cnot") return {in[0], in[0] ^ in[1]};              // (control, target)
  if (gate == "toffoli") return {in[0], in[1], in[2] ^ (in[0] & in[1])};
  return in[0] ? std::vector<int>{1, in[2], in[1]} : in;          // fredkin
}

TEST(Gates, MatricesMatchGoldenFiles) {
  EXPECT_EQ(emit_matrix(cnot_gate().qubo()), golden("cnot_symmetric.txt"));
  EXPECT_EQ(emit_matrix(toffoli_gate().qubo()), golden("toffoli_symmetric.txt"));
  EXPECT_EQ(emit_matrix(fredkin_gate().qubo()), golden("fredkin_symmetric.txt"));
}

TEST(Gates, ConstructionsEqualReferencePolynomials) {
  EXPECT_TRUE(cnot_gate().penalty.poly() == cnot_reference());
  EXPECT_TRUE(toffoli_gate().penalty.poly() == toffoli_reference());
  EXPECT_TRUE(fredkin_gate().penalty.poly() == fredkin_reference());
}

TEST(Gates, EveryClampedRowHasUniqueZeroGroundState) {
  for (const GateSpec& g : {cnot_gate(), toffoli_gate(), fredkin_gate(), fredkin_gate_9x9()}) {
    const std::size_t n = g.inputs.size();
    ASSERT_EQ(g.truth_table.size(), std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      std::vector<int> in(n);
      for (std::size_t k = 0; k < n; ++k) in[k] = static_cast<int>((m >> (n - 1 - k)) & 1);
      const GateRun run = run_gate(g, in);
      EXPECT_TRUE(run.unique) << g.name;
      EXPECT_EQ(run.ground_value, Rational(0)) << g.name;
      const std::string base = g.name == "fredkin9" ? "fredkin" : g.name;
      EXPECT_EQ(run.outputs, expected(base, in)) << g.name;
      EXPECT_EQ(g.apply(in), expected(base, in));
    }
  }
}

TEST(Gates, ReversibleByReapplication) {
  for (const GateSpec& g : {cnot_gate(), toffoli_gate(), fredkin_gate()}) {
    const ReverseReport r = reverse_check(g);
    EXPECT_TRUE(r.ok) << g.name;
    EXPECT_EQ(r.lines.size(), g.truth_table.size());
  }
}

TEST(Gates, FredkinBindingWeightOneFails) {
  const GapReport weak = fredkin_weight_check(1);
  EXPECT_FALSE(weak.pass);
  ASSERT_TRUE(weak.violation.has_value());
  EXPECT_TRUE(fredkin_weight_check(2).pass);
}

TEST(Gates, FredkinOutputAloneHasNoQuadraticPenalty) {
  const std::vector<std::string> vars{"c", "i", "j", "m"};
  const InfeasibilityCertificate cert = prove_no_quadratic(fredkin_relation(), vars);
  EXPECT_FALSE(cert.feasible);
  EXPECT_TRUE(cert.recheck());
}

TEST(Gates, NineVariableFredkinVerifies) {
  const GateSpec g = fredkin_gate_9x9();
  EXPECT_EQ(g.penalty.poly().num_vars(), 9u);
  EXPECT_TRUE(g.penalty.report().pass);
  EXPECT_LE(g.penalty.poly().degree(), 2);
  EXPECT_FALSE(g.notes.empty());
  EXPECT_GT(coefficient_range(g.qubo()), Rational(0));
}

TEST(Gates, RolesAndFreedVariables) {
  const GateSpec c = cnot_gate();
  EXPECT_EQ(c.roles.at("j"), "control");
  EXPECT_EQ(c.roles.at("i"), "target");
  EXPECT_EQ(c.roles.at("a"), "ancilla");
  const GateSpec t = toffoli_gate();
  for (const auto& v : t.freed) {
    EXPECT_EQ(std::find(t.outputs.begin(), t.outputs.end(), v), t.outputs.end()) << v;
  }
  EXPECT_EQ(t.info().provenance, "gate:toffoli");
}

TEST(Gates, HadamardFieldTransform) {
  const double r = 1.0 / std::sqrt(2.0);
  const FieldPair a = hadamard_apply({1.0, 0.0});
  EXPECT_NEAR(a.hi, r, 1e-15);
  EXPECT_NEAR(a.hj, r, 1e-15);
  const FieldPair b = hadamard_apply({0.0, 1.0});
  EXPECT_NEAR(b.hi, r, 1e-15);
  EXPECT_NEAR(b.hj, -r, 1e-15);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 1000; ++t) {
    const double th = angle(rng);
    const FieldPair f{std::cos(th), std::sin(th)};
    const FieldPair once = hadamard_apply(f);
    EXPECT_NEAR(once.norm2(), 1.0, 1e-12);
    const FieldPair twice = hadamard_apply(once);
    EXPECT_NEAR(twice.hi, f.hi, 1e-12);
    EXPECT_NEAR(twice.hj, f.hj, 1e-12);
  }
  EXPECT_THROW(hadamard_apply({1.0, 1.0}), std::domain_error);
  EXPECT_THROW(hadamard_apply({NAN, 0.0}), std::domain_error);
}

TEST(Gates, ForceOnePenalty) {
  const Poly p = force_one_penalty("q");
  EXPECT_EQ(p.eval(Mask{1}), Rational(-1));
  EXPECT_EQ(p.eval(Mask{0}), Rational(0));
}

TEST(Gates, Catalog) {
  EXPECT_EQ(gate_by_name("toffoli").name, "toffoli");
  EXPECT_THROW(gate_by_name("hadamard"), std::invalid_argument);
  EXPECT_THROW(gate_by_name("swap"), std::invalid_argument);
  const std::string text = catalog_text();
  for (const auto& n : gate_names()) EXPECT_NE(text.find(n), std::string::npos) << n;
}

}  // namespace
}  // namespace aqc
