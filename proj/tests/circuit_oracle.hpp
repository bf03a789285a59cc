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

// Random circuit generator and an independent classical oracle for tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace aqc::testing {

struct RandomStep {
  std::string kind;  // cnot, toffoli, fredkin, or a boolean operator
  std::vector<std::string> in;
  std::vector<std::string> out;
};

struct RandomCircuit {
  std::vector<std::string> inputs;
  std::vector<RandomStep> steps;
  std::vector<std::string> outputs;
  std::string text;
};

inline int oracle_op(const std::string& op, const std::vector<int>& v) {
  if (op == "AND") return v[0] & v[1];
  if (op == "OR") return v[0] | v[1];
  if (op == "XOR") return v[0] ^ v[1];
  if (op == "EQUIV") return 1 - (v[0] ^ v[1]);
  if (op == "IMPLIES") return (1 - v[0]) | v[1];
  if (op == "NOT") return 1 - v[0];
  return v[0];  // COPY
}

/// Evaluates the circuit by composing hand-written truth tables.
inline std::map<std::string, int> oracle_eval(const RandomCircuit& c, const std::vector<int>& in) {
  std::map<std::string, int> w;
  for (std::size_t k = 0; k < c.inputs.size(); ++k) w[c.inputs[k]] = in[k];
  for (const auto& s : c.steps) {
    std::vector<int> v;
    for (const auto& n : s.in) v.push_back(w.at(n));
    if (s.kind == "cnot") {
      w[s.out[0]] = v[0] ^ v[1];
    } else if (s.kind == "toffoli") {
      w[s.out[0]] = v[2] ^ (v[0] & v[1]);
    } else if (s.kind == "fredkin") {
      w[s.out[0]] = v[0] ? v[2] : v[1];
      w[s.out[1]] = v[0] ? v[1] : v[2];
    } else {
      w[s.out[0]] = oracle_op(s.kind, v);
    }
  }
  return w;
}

/// At most `max_steps` steps and `max_wires` wires in total.
inline RandomCircuit random_circuit(std::mt19937_64& rng, std::size_t max_steps = 4,
                                    std::size_t max_wires = 6) {
  RandomCircuit c;
  const std::size_t n_in = 2 + rng() % 2;
  for (std::size_t k = 0; k < n_in; ++k) c.inputs.push_back("w" + std::to_string(k));
  std::vector<std::string> wires = c.inputs;
  static const std::vector<std::string> kinds{"cnot", "toffoli", "fredkin", "AND", "OR",
                                              "XOR", "EQUIV", "IMPLIES", "NOT"};
  auto pick = [&](std::size_t count) {
    std::vector<std::string> pool = wires;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    return pool;
  };
  const std::size_t steps = 1 + rng() % max_steps;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::string> options;
    for (const auto& k : kinds) {
      const std::size_t need = k == "toffoli" || k == "fredkin" ? 3 : k == "NOT" ? 1 : 2;
      const std::size_t fresh = k == "fredkin" ? 2 : 1;
      if (need <= wires.size() && wires.size() + fresh <= max_wires) options.push_back(k);
    }
    if (options.empty()) break;
    RandomStep st;
    st.kind = options[rng() % options.size()];
    st.in = pick(st.kind == "toffoli" || st.kind == "fredkin" ? 3 : st.kind == "NOT" ? 1 : 2);
    const std::size_t fresh = st.kind == "fredkin" ? 2 : 1;
    for (std::size_t f = 0; f < fresh; ++f) {
      st.out.push_back("w" + std::to_string(wires.size()));
      wires.push_back(st.out.back());
    }
    c.steps.push_back(st);
  }
  c.outputs.assign(wires.begin() + static_cast<std::ptrdiff_t>(n_in), wires.end());

  std::ostringstream os;
  os << "input";
  for (const auto& n : c.inputs) os << ' ' << n;
  os << '\n';
  for (const auto& s : c.steps) {
    if (s.kind == "cnot") {
      os << "cnot control=" << s.in[0] << " target=" << s.in[1] << " -> " << s.out[0];
    } else if (s.kind == "toffoli") {
      os << "toffoli c1=" << s.in[0] << " c2=" << s.in[1] << " t=" << s.in[2] << " -> "
         << s.out[0];
    } else if (s.kind == "fredkin") {
      os << "fredkin c=" << s.in[0] << " i=" << s.in[1] << " j=" << s.in[2] << " -> "
         << s.out[0] << ' ' << s.out[1];
    } else if (s.kind == "NOT") {
      os << "constraint " << s.out[0] << " = NOT " << s.in[0];
    } else {
      os << "constraint " << s.out[0] << " = " << s.in[0] << ' ' << s.kind << ' ' << s.in[1];
    }
    os << '\n';
  }
  os << "output";
  for (const auto& n : c.outputs) os << ' ' << n;
  os << '\n';
  c.text = os.str();
  return c;
}

}  // namespace aqc::testing
