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

#include "aqc/hamiltonian.hpp"

#include <sstream>

namespace aqc {

QuboMatrix<Rational> penalty_to_qubo(const Poly& p, ModelInfo info) {
  if (p.domain() != Domain::binary) {
    throw std::invalid_argument("penalty_to_qubo expects a binary-domain polynomial");
  }
  if (p.degree() > 2) {
    throw DegreeError("QUBO needs degree <= 2, got " + std::to_string(p.degree()));
  }
  const auto n = static_cast<Eigen::Index>(p.num_vars());
  MatrixX<Rational> Q = MatrixX<Rational>::Zero(n, n);
  for (const auto& [key, c] : p.terms()) {
    if (key.size() == 1) {
      Q(key[0], key[0]) = c;
    } else {
      Q(key[0], key[1]) = c;
    }
  }
  return QuboMatrix<Rational>(p.vars(), std::move(Q), p.offset(), std::move(info));
}

QuboMatrix<Rational> penalty_to_qubo(const Penalty& p) {
  return penalty_to_qubo(p.poly(), ModelInfo{p.provenance(), {}});
}

Poly qubo_to_poly(const QuboMatrix<Rational>& q) {
  Poly p;
  for (const auto& v : q.vars()) {
    p.declare(v.name, v.kind);
  }
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    p.add_term({q.vars()[i].name}, q.linear(i));
    for (Eigen::Index j = i + 1; j < q.size(); ++j) {
      p.add_term({q.vars()[i].name, q.vars()[j].name}, q.upper()(i, j));
    }
  }
  p.add_constant(q.offset());
  return p;
}

Poly ising_to_poly(const IsingModel<Rational>& m) {
  Poly p(Domain::spin);
  for (const auto& v : m.vars()) {
    p.declare(v.name, v.kind);
  }
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    p.add_term({m.vars()[i].name}, m.h()(i));
    for (Eigen::Index j = i + 1; j < m.size(); ++j) {
      p.add_term({m.vars()[i].name, m.vars()[j].name}, m.J()(i, j));
    }
  }
  p.add_constant(m.offset());
  return p;
}

std::string emit_matrix(const QuboMatrix<Rational>& q, MatrixStyle style) {
  const MatrixX<Rational> M = style == MatrixStyle::symmetric ? q.symmetric() : q.upper();
  std::ostringstream os;
  for (const auto& v : q.vars()) {
    os << '\t' << v.name;
  }
  os << '\n';
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    os << q.vars()[i].name;
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      os << '\t';
      if (M(i, j) != 0) {
        os << to_string(M(i, j));
      }
    }
    os << '\n';
  }
  return os.str();
}

Rational coefficient_range(const QuboMatrix<Rational>& q) {
  Rational best = 0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    for (Eigen::Index j = i; j < q.size(); ++j) {
      best = std::max(best, detail::abs_value(q.upper()(i, j)));
    }
  }
  return best;
}

IsingModel<Rational> apply_clamp(const IsingModel<Rational>& m, std::string_view var, int spin,
                                 Clamp* applied) {
  if (spin != 1 && spin != -1) {
    throw std::invalid_argument("clamp spin must be -1 or +1");
  }
  auto idx = m.index_of(var);
  if (!idx) {
    throw std::invalid_argument("cannot clamp unknown variable '" + std::string(var) + "'");
  }
  IsingModel<Rational> out = m;
  const Rational magnitude = m.clamp_magnitude(*idx);
  out.add_field(*idx, Rational(-spin) * magnitude);
  if (applied) {
    *applied = Clamp{std::string(var), spin, magnitude};
  }
  return out;
}

}  // namespace aqc
