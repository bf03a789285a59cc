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

#include "aqc/feasibility.hpp"

#include <sstream>

#include "aqc/penalty.hpp"

namespace aqc {

FeasibilityResult solve_feasibility(const LinearSystem& system) {
  const Eigen::Index m = system.A.rows();
  const Eigen::Index n = system.A.cols();
  if (system.b.size() != m || static_cast<Eigen::Index>(system.equality.size()) != m) {
    throw std::invalid_argument("linear system dimensions disagree");
  }
  Eigen::Index surplus_count = 0;
  for (bool eq : system.equality) {
    surplus_count += eq ? 0 : 1;
  }
  // Columns: x+ (n), x- (n), surplus, artificial (m), rhs.
  const Eigen::Index surplus0 = 2 * n;
  const Eigen::Index art0 = surplus0 + surplus_count;
  const Eigen::Index rhs = art0 + m;
  MatrixX<Rational> T = MatrixX<Rational>::Zero(m, rhs + 1);
  std::vector<int> sign(m);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index r = 0, s = 0; r < m; ++r) {
    sign[r] = system.b(r) < 0 ? -1 : 1;
    const Rational sg = sign[r];
    for (Eigen::Index j = 0; j < n; ++j) {
      T(r, j) = sg * system.A(r, j);
      T(r, n + j) = -sg * system.A(r, j);
    }
    if (!system.equality[r]) {
      T(r, surplus0 + s++) = -sg;
    }
    T(r, art0 + r) = 1;
    T(r, rhs) = sg * system.b(r);
    basis[r] = art0 + r;
  }
  // Reduced costs of the phase-one objective sum(artificials).
  VectorX<Rational> cost = VectorX<Rational>::Zero(rhs + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    cost(art0 + r) = 1;
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    cost -= T.row(r).transpose();
  }

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < rhs; ++j) {
      if (cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      break;
    }
    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (T(r, enter) > 0) {
        Rational ratio = T(r, rhs) / T(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
    }
    if (leave < 0) {
      throw std::logic_error("phase-one simplex is unbounded");
    }
    const Rational pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r != leave && T(r, enter) != 0) {
        const Rational f = T(r, enter);
        T.row(r) -= f * T.row(leave);
      }
    }
    const Rational f = cost(enter);
    cost -= f * T.row(leave).transpose();
    basis[leave] = enter;
  }

  FeasibilityResult result;
  // cost(rhs) holds minus the phase-one objective.
  if (cost(rhs) == 0) {
    result.feasible = true;
    VectorX<Rational> full = VectorX<Rational>::Zero(rhs);
    for (Eigen::Index r = 0; r < m; ++r) {
      full(basis[r]) = T(r, rhs);
    }
    result.x = full.head(n) - full.segment(n, n);
    return result;
  }
  result.y.resize(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    // Dual of row r is 1 - reduced cost of its artificial column.
    result.y(r) = Rational(sign[r]) * (Rational(1) - cost(art0 + r));
  }
  return result;
}

bool satisfies(const LinearSystem& system, const VectorX<Rational>& x) {
  if (x.size() != system.A.cols()) {
    return false;
  }
  const VectorX<Rational> ax = system.A * x;
  for (Eigen::Index r = 0; r < ax.size(); ++r) {
    if (system.equality[r] ? ax(r) != system.b(r) : ax(r) < system.b(r)) {
      return false;
    }
  }
  return true;
}

bool is_farkas_certificate(const LinearSystem& system, const VectorX<Rational>& y) {
  if (y.size() != system.A.rows()) {
    return false;
  }
  for (Eigen::Index r = 0; r < y.size(); ++r) {
    if (!system.equality[r] && y(r) < 0) {
      return false;
    }
  }
  const VectorX<Rational> yA = system.A.transpose() * y;
  for (Eigen::Index j = 0; j < yA.size(); ++j) {
    if (yA(j) != 0) {
      return false;
    }
  }
  return y.dot(system.b) > 0;
}

namespace {

struct Column {
  std::vector<std::size_t> vars;  // empty = constant
};

std::vector<Column> quadratic_columns(std::size_t n) {
  std::vector<Column> cols{{}};
  for (std::size_t u = 0; u < n; ++u) {
    cols.push_back({{u}});
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      cols.push_back({{u, w}});
    }
  }
  return cols;
}

}  // namespace

InfeasibilityCertificate prove_no_quadratic(const ValidSet& valid,
                                            std::span<const std::string> allowed) {
  if (allowed.size() > 5) {
    throw std::invalid_argument("prove_no_quadratic supports at most 5 variables");
  }
  InfeasibilityCertificate cert;
  cert.vars.assign(allowed.begin(), allowed.end());
  cert.valid = valid.projected(allowed);

  const std::size_t n = allowed.size();
  const auto cols = quadratic_columns(n);
  const Eigen::Index rows = Eigen::Index{1} << n;
  LinearSystem& sys = cert.system;
  sys.A = MatrixX<Rational>::Zero(rows, static_cast<Eigen::Index>(cols.size()));
  sys.b = VectorX<Rational>::Zero(rows);
  for (const auto& c : cols) {
    std::string name = "1";
    for (std::size_t k = 0; k < c.vars.size(); ++k) {
      name = (k ? name + "*" : std::string()) + cert.vars[c.vars[k]];
    }
    sys.column_names.push_back(name);
  }
  // The constant column absorbs v, so take v = 0 without loss of generality.
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Mask m = static_cast<Mask>(r);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool on = true;
      for (auto v : cols[j].vars) {
        on = on && ((m >> v) & 1);
      }
      sys.A(r, static_cast<Eigen::Index>(j)) = on ? 1 : 0;
    }
    const bool ok = cert.valid.contains(m);
    sys.equality.push_back(ok);
    sys.b(r) = ok ? 0 : 1;
    std::string label;
    for (std::size_t v = 0; v < n; ++v) {
      label += (v ? " " : "") + cert.vars[v] + "=" + std::to_string((m >> v) & 1);
    }
    sys.row_labels.push_back(label + (ok ? "  (= v)" : "  (>= v+1)"));
  }

  FeasibilityResult res = solve_feasibility(sys);
  cert.feasible = res.feasible;
  if (res.feasible) {
    cert.witness = res.x;
    Poly p;
    for (const auto& v : cert.vars) {
      p.declare(v);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<std::string> names;
      for (auto v : cols[j].vars) {
        names.push_back(cert.vars[v]);
      }
      if (names.empty()) {
        p.add_constant(res.x(static_cast<Eigen::Index>(j)));
      } else {
        p.add_term(std::span<const std::string>(names), res.x(static_cast<Eigen::Index>(j)));
      }
    }
    cert.penalty = std::move(p);
  } else {
    cert.witness = res.y;
  }
  return cert;
}

bool InfeasibilityCertificate::recheck() const {
  if (!feasible) {
    return is_farkas_certificate(system, witness);
  }
  return satisfies(system, witness) && penalty && verify_gap(*penalty, valid).pass;
}

std::string InfeasibilityCertificate::str() const {
  std::ostringstream os;
  os << "variables:";
  for (const auto& v : vars) {
    os << ' ' << v;
  }
  os << "\nunknowns:";
  for (const auto& c : system.column_names) {
    os << ' ' << c;
  }
  os << "\nrows: " << system.A.rows() << " (valid rows fixed at v = 0, others >= 1)\n";
  if (feasible) {
    os << "result: FEASIBLE\n";
    os << "witness penalty: " << penalty->str() << '\n';
  } else {
    os << "result: INFEASIBLE (no quadratic penalty over these variables)\n";
    os << "farkas multipliers (y >= 0 on inequality rows, y^T A = 0, y^T b > 0):\n";
    for (Eigen::Index r = 0; r < witness.size(); ++r) {
      if (witness(r) != 0) {
        os << "  " << to_string(witness(r)) << "\t" << system.row_labels[r] << '\n';
      }
    }
    os << "y^T b = " << to_string(witness.dot(system.b)) << '\n';
  }
  os << "recheck: " << (recheck() ? "ok" : "FAILED") << '\n';
  return os.str();
}

}  // namespace aqc
