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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aqc/hamiltonian.hpp"

namespace aqc {

/// Hard fix of one variable, in the model's own domain (bit for QUBO,
/// spin for Ising).
struct HardClamp {
  std::string var;
  int value = 0;
};

struct SolveResult {
  std::vector<Var> vars;
  Domain domain = Domain::binary;
  /// Exact minimum (exhaustive) or best value found (anneal).
  Rational ground_value = 0;
  /// Minimizers, ascending. Bit i set means x_i = 1 (or s_i = +1).
  std::vector<Mask> ground_states;
  std::string method;
  std::uint64_t states_visited = 0;
  std::uint64_t sweeps = 0;
  /// Anneal only: exact value reached by each restart.
  std::vector<Rational> restart_values;

  bool unique() const { return ground_states.size() == 1; }
  /// Value of variable `name` in ground state `k`, in the model's domain.
  int value(std::size_t k, std::string_view name) const;
  /// Number of restarts that reached `target`.
  std::size_t hits(const Rational& target) const;
  std::string report(const ModelInfo& info = {}) const;
};

struct SolveOptions {
  /// 0 means the environment/default limit.
  std::size_t max_free_vars = 0;
  unsigned threads = 0;
};

/// Free-variable limit for exhaustive solves: AQC_EXHAUSTIVE_LIMIT, or 24.
std::size_t exhaustive_limit();

SolveResult solve_exhaustive(const QuboMatrix<Rational>& q, std::span<const HardClamp> clamps = {},
                             const SolveOptions& opts = {});
SolveResult solve_exhaustive(const IsingModel<Rational>& m, std::span<const HardClamp> clamps = {},
                             const SolveOptions& opts = {});

struct AnnealParams {
  std::size_t sweeps = 1000;
  double t_initial = 10.0;
  double t_final = 0.02;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  /// Temperature used during sweep k (geometric, strictly decreasing, last
  /// sweep at t_final).
  double temperature(std::size_t k) const;
  void validate() const;
};

SolveResult solve_anneal(const IsingModel<Rational>& m, std::span<const HardClamp> clamps,
                         const AnnealParams& params);
SolveResult solve_anneal(const QuboMatrix<Rational>& q, std::span<const HardClamp> clamps,
                         const AnnealParams& params);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace aqc
