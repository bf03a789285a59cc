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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/gates.hpp"
#include "aqc/hamiltonian.hpp"
#include "aqc/solver.hpp"

namespace aqc {
namespace {

QuboMatrix<Rational> random_qubo(std::mt19937_64& rng, Eigen::Index n, int spread = 4) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::vector<Var> vars;
  MatrixX<Rational> Q = MatrixX<Rational>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    vars.push_back({"x" + std::to_string(i), VarKind::input});
    for (Eigen::Index j = i; j < n; ++j) Q(i, j) = Rational(num(rng)) / (1 + rng() % 2);
  }
  return QuboMatrix<Rational>(vars, Q, Rational(num(rng)));
}

// Plain enumeration, no Gray code and no threads.
std::pair<Rational, std::vector<Mask>> brute(const QuboMatrix<Rational>& q, Mask fixed_mask,
                                             Mask fixed_bits) {
  Rational best = 0;
  std::vector<Mask> arg;
  bool first = true;
  for (Mask m = 0; m < (Mask{1} << q.size()); ++m) {
    if ((m & fixed_mask) != fixed_bits) continue;
    const Rational e = q.energy(m);
    if (first || e < best) {
      best = e;
      arg.clear();
      first = false;
    }
    if (e == best) arg.push_back(m);
  }
  return {best, arg};
}

TEST(Solver, ExhaustiveMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const QuboMatrix<Rational> q = random_qubo(rng, 1 + t % 13, t % 2 ? 1 : 4);
    const auto [best, arg] = brute(q, 0, 0);
    for (unsigned threads : {1u, 3u}) {
      SolveOptions o;
      o.threads = threads;
      const SolveResult r = solve_exhaustive(q, {}, o);
      ASSERT_EQ(r.ground_value, best);
      ASSERT_EQ(r.ground_states, arg);
    }
  }
}

TEST(Solver, HardClampsRestrictTheSearch) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const QuboMatrix<Rational> q = random_qubo(rng, 3 + t % 8);
    const std::vector<HardClamp> clamps{{"x0", 1}, {"x2", 0}};
    const auto [best, arg] = brute(q, 0b101, 0b001);
    const SolveResult r = solve_exhaustive(q, clamps);
    EXPECT_EQ(r.ground_value, best);
    EXPECT_EQ(r.ground_states, arg);
    EXPECT_EQ(r.value(0, "x0"), 1);
  }
}

TEST(Solver, IsingClampsUseSpins) {
  const IsingModel<Rational> m = qubo_to_ising(cnot_gate().qubo());
  const std::vector<HardClamp> clamps{{"i", 1}, {"j", 1}};
  const SolveResult r = solve_exhaustive(m, clamps);
  ASSERT_TRUE(r.unique());
  EXPECT_EQ(r.value(0, "k"), -1);
  EXPECT_EQ(r.value(0, "a"), 1);
  const std::vector<HardClamp> bad{{"i", 0}};
  EXPECT_THROW(solve_exhaustive(m, bad), std::invalid_argument);
}

TEST(Solver, ClampErrors) {
  const QuboMatrix<Rational> q = cnot_gate().qubo();
  const std::vector<HardClamp> missing{{"zz", 1}};
  EXPECT_THROW(solve_exhaustive(q, missing), MissingVariableError);
  const std::vector<HardClamp> conflict{{"i", 1}, {"i", 0}};
  EXPECT_THROW(solve_exhaustive(q, conflict), std::invalid_argument);
}

TEST(Solver, DegenerateModelReportsAllMinimizers) {
  const QuboMatrix<Rational> q({{"x", VarKind::input}, {"y", VarKind::input}},
                               MatrixX<Rational>::Zero(2, 2));
  const SolveResult r = solve_exhaustive(q);
  EXPECT_EQ(r.ground_states, (std::vector<Mask>{0, 1, 2, 3}));
  EXPECT_FALSE(r.unique());
}

TEST(Solver, FreeVariableLimit) {
  std::mt19937_64 rng(33);
  const QuboMatrix<Rational> q = random_qubo(rng, 10);
  SolveOptions o;
  o.max_free_vars = 8;
  EXPECT_THROW(solve_exhaustive(q, {}, o), SolverLimitError);
  const std::vector<HardClamp> clamps{{"x0", 0}, {"x1", 1}};
  EXPECT_NO_THROW(solve_exhaustive(q, clamps, o));
}

TEST(Solver, TemperatureScheduleIsGeometric) {
  AnnealParams p;
  p.sweeps = 50;
  double prev = p.t_initial;
  for (std::size_t k = 0; k < p.sweeps; ++k) {
    const double t = p.temperature(k);
    EXPECT_LT(t, prev);
    prev = t;
  }
  EXPECT_NEAR(p.temperature(p.sweeps - 1), p.t_final, 1e-12);
  AnnealParams bad;
  bad.t_final = 20;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = AnnealParams{};
  bad.sweeps = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Solver, AnnealNeverBeatsExactAndIsReproducible) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 15; ++t) {
    const QuboMatrix<Rational> q = random_qubo(rng, 4 + t % 10);
    const SolveResult exact = solve_exhaustive(q);
    AnnealParams p;
    p.sweeps = 200;
    p.restarts = 8;
    p.seed = 100 + static_cast<std::uint64_t>(t);
    const SolveResult a = solve_anneal(q, {}, p);
    EXPECT_GE(a.ground_value, exact.ground_value);
    ASSERT_EQ(a.restart_values.size(), p.restarts);
    for (const auto& v : a.restart_values) EXPECT_GE(v, exact.ground_value);
    EXPECT_EQ(a.ground_value, *std::min_element(a.restart_values.begin(), a.restart_values.end()));
    for (Mask m : a.ground_states) EXPECT_EQ(q.energy(m), a.ground_value);
    p.threads = 3;
    const SolveResult b = solve_anneal(q, {}, p);
    EXPECT_EQ(a.restart_values, b.restart_values);
    EXPECT_EQ(a.ground_states, b.ground_states);
  }
}

TEST(Solver, AnnealFindsGateGroundStates) {
  const GateSpec g = toffoli_gate();
  const QuboMatrix<Rational> q = g.qubo();
  AnnealParams p;
  p.seed = 7;
  const std::vector<HardClamp> clamps{{"c_1", 1}, {"c_2", 1}, {"t", 0}};
  const SolveResult r = solve_anneal(q, clamps, p);
  EXPECT_EQ(r.ground_value, Rational(0));
  EXPECT_GE(r.hits(0), 1u);
  EXPECT_EQ(r.value(0, "r"), 1);
}

TEST(Solver, Splitmix64ReferenceValue) {
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafull);
}

}  // namespace
}  // namespace aqc
