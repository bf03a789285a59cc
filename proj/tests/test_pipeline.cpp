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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/pipeline.hpp"
#include "circuit_oracle.hpp"

namespace aqc {
namespace {

std::vector<int> bits_of(Mask m, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<int>((m >> (n - 1 - k)) & 1);
  return v;
}

TEST(Pipeline, RandomCircuitsMatchOracle) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 12; ++t) {
    const testing::RandomCircuit rc = testing::random_circuit(rng);
    const Circuit c = parse_circuit(rc.text);
    const CompiledCircuit cc = compile_circuit(c);
    PipelineOptions o;
    o.field_clamp = t % 2 == 1;
    o.reuse_qubits = t % 3 != 0;
    for (Mask m = 0; m < (Mask{1} << rc.inputs.size()); ++m) {
      const std::vector<int> in = bits_of(m, rc.inputs.size());
      const auto want = testing::oracle_eval(rc, in);
      const PipelineTrace trace = run_pipeline(cc, in, o);
      ASSERT_EQ(trace.outputs.size(), rc.outputs.size()) << rc.text;
      for (const auto& [wire, value] : trace.outputs) {
        EXPECT_EQ(value, want.at(wire)) << rc.text << wire;
      }
      const auto classical = classical_eval(c, in);
      for (const auto& w : rc.outputs) EXPECT_EQ(classical.at(w), want.at(w));
    }
  }
}

TEST(Pipeline, OneStagePerStepByDefault) {
  const Circuit c = parse_circuit(
      "input a b c\ncnot control=a target=b -> r\nfredkin c=r i=a j=c -> m p\n"
      "constraint z = m AND p\noutput z\n");
  EXPECT_EQ(c.stage_count, 3u);
  const CompiledCircuit cc = compile_circuit(c);
  ASSERT_EQ(cc.stages.size(), 3u);
  std::vector<std::string> clamped = cc.stages[1].clamped;
  std::sort(clamped.begin(), clamped.end());
  EXPECT_EQ(clamped, (std::vector<std::string>{"a", "c", "r"}));
  EXPECT_EQ(cc.stages[1].produced, (std::vector<std::string>{"m", "p"}));
}

TEST(Pipeline, ExplicitStagesGroupSteps) {
  const Circuit c = parse_circuit(
      "input a b c d\nstage\ncnot control=a target=b -> r\ncnot control=c target=d -> s\n"
      "stage\nconstraint z = r XOR s\noutput z\n");
  const CompiledCircuit cc = compile_circuit(c);
  ASSERT_EQ(cc.stages.size(), 2u);
  EXPECT_EQ(cc.stages[0].penalties.size(), 2u);
  for (Mask m = 0; m < 16; ++m) {
    const std::vector<int> in = bits_of(m, 4);
    const PipelineTrace t = run_pipeline(cc, in);
    EXPECT_EQ(t.outputs.at(0).second, in[0] ^ in[1] ^ in[2] ^ in[3]);
  }
}

TEST(Pipeline, GateInternalsAreExclusive) {
  EXPECT_THROW(compile_circuit(parse_circuit(
                   "input x y\nstage\ncnot control=x target=y -> r a=q\nconstraint q + x <= 1\n")),
               ExclusivityError);
  EXPECT_THROW(compile_circuit(parse_circuit(
                   "input x y\ncnot control=x target=y -> r\nconstraint r + cnot1_a <= 1\n")),
               ExclusivityError);
}

TEST(Pipeline, CircuitErrors) {
  EXPECT_THROW(parse_circuit("input x y\ncnot control=x targt=y -> r\n"), ParseError);
  EXPECT_THROW(parse_circuit("input x y\nswap x y\n"), ParseError);
  EXPECT_THROW(compile_circuit(parse_circuit("input x\ncnot control=x target=q -> r\n")),
               CircuitError);
  EXPECT_THROW(compile_circuit(parse_circuit("input x y\ncnot control=x target=y -> x\n")),
               CircuitError);
  const CompiledCircuit cc =
      compile_circuit(parse_circuit("input x y\ncnot control=x target=y -> r\n"));
  EXPECT_THROW(run_pipeline(cc, std::vector<int>{1}), CircuitError);
}

TEST(Pipeline, UnderdeterminedStageIsReported) {
  const CompiledCircuit cc =
      compile_circuit(parse_circuit("input x\nconstraint x + y <= 1\noutput y\n"));
  try {
    run_pipeline(cc, std::vector<int>{0});
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.kind(), StageError::Kind::non_unique);
    EXPECT_EQ(e.stage(), 1u);
  }
}

TEST(Pipeline, UnsatisfiedStageIsReported) {
  const CompiledCircuit cc =
      compile_circuit(parse_circuit("input x y\nconstraint x + y <= 0\n"));
  try {
    run_pipeline(cc, std::vector<int>{1, 1});
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.kind(), StageError::Kind::unsatisfied);
  }
}

TEST(Pipeline, AnnealedStagesAgreeOnSmallCircuit) {
  const CompiledCircuit cc = compile_circuit(
      parse_circuit("input a b c\ntoffoli c1=a c2=b t=c -> r\noutput r\n"));
  PipelineOptions o;
  o.anneal = AnnealParams{};
  o.anneal->seed = 9;
  for (Mask m = 0; m < 8; ++m) {
    const std::vector<int> in = bits_of(m, 3);
    const PipelineTrace t = run_pipeline(cc, in, o);
    EXPECT_EQ(t.outputs.at(0).second, in[2] ^ (in[0] & in[1]));
  }
}

TEST(Pipeline, QubitAllocatorReusesLowestIndex) {
  QubitAllocator a(true);
  EXPECT_EQ(a.acquire("x"), 0);
  EXPECT_EQ(a.acquire("y"), 1);
  EXPECT_EQ(a.acquire("z"), 2);
  a.release("y");
  a.release("x");
  EXPECT_EQ(a.acquire("w"), 0);
  EXPECT_EQ(a.acquire("v"), 1);
  EXPECT_EQ(a.used(), 3u);
  EXPECT_EQ(a.holder("z"), 2);
  EXPECT_FALSE(a.holder("y").has_value());
  QubitAllocator b(false);
  b.acquire("x");
  b.release("x");
  EXPECT_EQ(b.acquire("y"), 1);
  EXPECT_EQ(b.used(), 2u);
}

TEST(Pipeline, ReuseNeverUsesMoreQubits) {
  const CompiledCircuit cc = compile_circuit(parse_circuit(
      "input a b c\ncnot control=a target=b -> r\ntoffoli c1=r c2=c t=a -> s\n"
      "fredkin c=s i=r j=c -> m p\noutput m p\n"));
  PipelineOptions reuse;
  PipelineOptions fresh;
  fresh.reuse_qubits = false;
  const std::vector<int> in{1, 0, 1};
  const PipelineTrace t1 = run_pipeline(cc, in, reuse);
  const PipelineTrace t2 = run_pipeline(cc, in, fresh);
  EXPECT_LT(t1.qubits_used, t2.qubits_used);
  EXPECT_EQ(t1.outputs, t2.outputs);
}

TEST(Pipeline, HadamardStageQubits) {
  const HadamardStage a = hadamard_stage({1.0, 0.0}, true);
  EXPECT_EQ(a.qubits_used, 2u);
  EXPECT_EQ(a.input_qubits, a.output_qubits);
  const HadamardStage b = hadamard_stage({0.0, 1.0}, false);
  EXPECT_EQ(b.qubits_used, 4u);
  EXPECT_NEAR(b.out.hj, -1.0 / std::sqrt(2.0), 1e-15);
}

}  // namespace
}  // namespace aqc
