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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aqc/boolean_logic.hpp"
#include "aqc/poly.hpp"

namespace aqc {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Rows `A x = b` (equality) or `A x >= b`, over free (unbounded) x.
struct LinearSystem {
  MatrixX<Rational> A;
  VectorX<Rational> b;
  std::vector<bool> equality;
  std::vector<std::string> column_names;
  std::vector<std::string> row_labels;
};

struct FeasibilityResult {
  bool feasible = false;
  VectorX<Rational> x;  // a solution, when feasible
  /// Farkas multipliers when infeasible: y >= 0 on inequality rows,
  /// y^T A = 0 and y^T b > 0.
  VectorX<Rational> y;
};

/// Exact phase-one simplex with Bland's rule.
FeasibilityResult solve_feasibility(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const VectorX<Rational>& x);
bool is_farkas_certificate(const LinearSystem& system, const VectorX<Rational>& y);

/// Outcome of searching for a quadratic penalty over a fixed variable set.
struct InfeasibilityCertificate {
  std::vector<std::string> vars;
  ValidSet valid;
  LinearSystem system;
  bool feasible = false;
  /// Coefficient vector (feasible) or Farkas multipliers (infeasible).
  VectorX<Rational> witness;
  /// Penalty built from the coefficient vector, when feasible.
  std::optional<Poly> penalty;

  /// Re-checks the witness by substitution into the linear system and, for a
  /// feasible result, by exhaustive gap verification.
  bool recheck() const;
  std::string str() const;
};

/// Decides whether some polynomial over {1, x_u, x_u x_w} of `allowed` takes
/// one value v on the valid assignments and >= v + 1 on all others. The
/// valid set is projected onto `allowed` first.
InfeasibilityCertificate prove_no_quadratic(const ValidSet& valid,
                                            std::span<const std::string> allowed);

}  // namespace aqc
