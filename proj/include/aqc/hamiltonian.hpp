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

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "aqc/feasibility.hpp"
#include "aqc/penalty.hpp"
#include "aqc/poly.hpp"

namespace aqc {

/// Where a model came from and what each variable does in it.
struct ModelInfo {
  std::string provenance;
  /// Role per variable name (e.g. "control", "target"); variables without an
  /// entry fall back to their kind.
  std::map<std::string, std::string> roles;

  bool operator==(const ModelInfo&) const = default;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

inline void check_names(const std::vector<Var>& vars, Eigen::Index n) {
  if (static_cast<Eigen::Index>(vars.size()) != n) {
    throw std::invalid_argument("variable list does not match matrix size");
  }
}

}  // namespace detail

/// Quadratic form over x in {0,1}^n:
///   offset + sum_i Q(i,i) x_i + sum_{i<j} Q(i,j) x_i x_j.
/// Storage is upper-triangular; each pair is stored once.
template <typename Scalar = Rational>
class QuboMatrix {
 public:
  using Matrix = MatrixX<Scalar>;

  QuboMatrix() = default;
  QuboMatrix(std::vector<Var> vars, Matrix upper, Scalar offset = Scalar(0), ModelInfo info = {})
      : vars_(std::move(vars)), q_(std::move(upper)), offset_(std::move(offset)),
        info_(std::move(info)) {
    if (q_.rows() != q_.cols()) {
      throw std::invalid_argument("QUBO matrix must be square");
    }
    detail::check_names(vars_, q_.rows());
    for (Eigen::Index i = 0; i < q_.rows(); ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        if (q_(i, j) != Scalar(0)) {
          throw std::invalid_argument("QUBO storage must be upper-triangular");
        }
      }
    }
  }

  const std::vector<Var>& vars() const { return vars_; }
  Eigen::Index size() const { return q_.rows(); }
  const Matrix& upper() const { return q_; }
  const Scalar& offset() const { return offset_; }
  const ModelInfo& info() const { return info_; }
  ModelInfo& info() { return info_; }

  const Scalar& linear(Eigen::Index i) const { return q_(i, i); }
  /// Coupling of an unordered pair.
  const Scalar& quadratic(Eigen::Index i, Eigen::Index j) const {
    return i < j ? q_(i, j) : q_(j, i);
  }

  /// Display form: each off-diagonal coefficient written in both positions.
  /// Reading it back through a full i != j double sum would double-count.
  Matrix symmetric() const {
    Matrix s = q_;
    s.template triangularView<Eigen::StrictlyLower>() =
        q_.transpose().template triangularView<Eigen::StrictlyLower>();
    return s;
  }

  Scalar energy(Mask bits) const {
    Scalar e = offset_;
    for (Eigen::Index i = 0; i < size(); ++i) {
      if (!((bits >> i) & 1)) {
        continue;
      }
      e += q_(i, i);
      for (Eigen::Index j = i + 1; j < size(); ++j) {
        if ((bits >> j) & 1) {
          e += q_(i, j);
        }
      }
    }
    return e;
  }

  template <typename Other>
  QuboMatrix<Other> cast() const {
    return QuboMatrix<Other>(vars_, q_.template cast<Other>(), static_cast<Other>(offset_),
                             info_);
  }

  bool operator==(const QuboMatrix& o) const {
    return vars_ == o.vars_ && q_ == o.q_ && offset_ == o.offset_ && info_ == o.info_;
  }

 private:
  std::vector<Var> vars_;
  Matrix q_;
  Scalar offset_ = Scalar(0);
  ModelInfo info_;
};

/// Ising objective over s in {-1,+1}^n:
///   offset + sum_i h_i s_i + sum_{i<j} J(i,j) s_i s_j.
/// Minimizers prefer s_i = +1 where h_i < 0.
template <typename Scalar = Rational>
class IsingModel {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  IsingModel() = default;
  IsingModel(std::vector<Var> vars, Vector h, Matrix j, Scalar offset = Scalar(0),
             ModelInfo info = {})
      : vars_(std::move(vars)), h_(std::move(h)), j_(std::move(j)),
        offset_(std::move(offset)), info_(std::move(info)) {
    if (j_.rows() != j_.cols() || j_.rows() != h_.size()) {
      throw std::invalid_argument("Ising h and J dimensions disagree");
    }
    detail::check_names(vars_, h_.size());
    for (Eigen::Index i = 0; i < j_.rows(); ++i) {
      for (Eigen::Index k = 0; k <= i; ++k) {
        if (j_(i, k) != Scalar(0)) {
          throw std::invalid_argument("Ising couplings must be strictly upper-triangular");
        }
      }
    }
  }

  const std::vector<Var>& vars() const { return vars_; }
  Eigen::Index size() const { return h_.size(); }
  const Vector& h() const { return h_; }
  const Matrix& J() const { return j_; }
  const Scalar& offset() const { return offset_; }
  const ModelInfo& info() const { return info_; }
  ModelInfo& info() { return info_; }

  const Scalar& coupling(Eigen::Index i, Eigen::Index j) const {
    return i < j ? j_(i, j) : j_(j, i);
  }

  std::optional<Eigen::Index> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].name == name) {
        return static_cast<Eigen::Index>(i);
      }
    }
    return std::nullopt;
  }

  /// Bit i set means s_i = +1.
  Scalar energy(Mask spins_up) const {
    Scalar e = offset_;
    auto s = [&](Eigen::Index i) { return ((spins_up >> i) & 1) ? 1 : -1; };
    for (Eigen::Index i = 0; i < size(); ++i) {
      e += s(i) > 0 ? h_(i) : Scalar(-h_(i));
      for (Eigen::Index k = i + 1; k < size(); ++k) {
        e += s(i) * s(k) > 0 ? j_(i, k) : Scalar(-j_(i, k));
      }
    }
    return e;
  }

  /// Field magnitude that forces a spin regardless of its neighbours:
  /// |h_i| + sum_j |J_ij| + 1.
  Scalar clamp_magnitude(Eigen::Index i) const {
    Scalar m = detail::abs_value(h_(i)) + Scalar(1);
    for (Eigen::Index k = 0; k < size(); ++k) {
      if (k != i) {
        m += detail::abs_value(coupling(i, k));
      }
    }
    return m;
  }

  void add_field(Eigen::Index i, const Scalar& delta) { h_(i) += delta; }

  template <typename Other>
  IsingModel<Other> cast() const {
    return IsingModel<Other>(vars_, h_.template cast<Other>(), j_.template cast<Other>(),
                             static_cast<Other>(offset_), info_);
  }

  bool operator==(const IsingModel& o) const {
    return vars_ == o.vars_ && h_ == o.h_ && j_ == o.j_ && offset_ == o.offset_ &&
           info_ == o.info_;
  }

 private:
  std::vector<Var> vars_;
  Vector h_;
  Matrix j_;
  Scalar offset_ = Scalar(0);
  ModelInfo info_;
};

/// x = (s + 1) / 2.
template <typename Scalar>
IsingModel<Scalar> qubo_to_ising(const QuboMatrix<Scalar>& q) {
  const Eigen::Index n = q.size();
  VectorX<Scalar> h = VectorX<Scalar>::Zero(n);
  MatrixX<Scalar> J = MatrixX<Scalar>::Zero(n, n);
  Scalar offset = q.offset();
  const Scalar half(Scalar(1) / Scalar(2));
  const Scalar quarter(Scalar(1) / Scalar(4));
  for (Eigen::Index i = 0; i < n; ++i) {
    h(i) += half * q.linear(i);
    offset += half * q.linear(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar c = q.upper()(i, j);
      J(i, j) = quarter * c;
      h(i) += quarter * c;
      h(j) += quarter * c;
      offset += quarter * c;
    }
  }
  return IsingModel<Scalar>(q.vars(), std::move(h), std::move(J), std::move(offset), q.info());
}

/// s = 2x - 1.
template <typename Scalar>
QuboMatrix<Scalar> ising_to_qubo(const IsingModel<Scalar>& m) {
  const Eigen::Index n = m.size();
  MatrixX<Scalar> Q = MatrixX<Scalar>::Zero(n, n);
  Scalar offset = m.offset();
  for (Eigen::Index i = 0; i < n; ++i) {
    Q(i, i) += Scalar(2) * m.h()(i);
    offset -= m.h()(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar c = m.J()(i, j);
      Q(i, j) += Scalar(4) * c;
      Q(i, i) -= Scalar(2) * c;
      Q(j, j) -= Scalar(2) * c;
      offset += c;
    }
  }
  return QuboMatrix<Scalar>(m.vars(), std::move(Q), std::move(offset), m.info());
}

/// Coefficients of a binary polynomial of degree <= 2: linear terms on the
/// diagonal, quadratic terms above it, offset carried along.
QuboMatrix<Rational> penalty_to_qubo(const Poly& p, ModelInfo info = {});
QuboMatrix<Rational> penalty_to_qubo(const Penalty& p);

/// Inverse of penalty_to_qubo.
Poly qubo_to_poly(const QuboMatrix<Rational>& q);
/// Spin-domain polynomial with the same values.
Poly ising_to_poly(const IsingModel<Rational>& m);

enum class MatrixStyle { symmetric, upper };

/// Tab-separated matrix with a name header row; zero entries are blank.
std::string emit_matrix(const QuboMatrix<Rational>& q, MatrixStyle style = MatrixStyle::symmetric);

/// Largest |entry| of the matrix (offset excluded).
Rational coefficient_range(const QuboMatrix<Rational>& q);

/// A field-based clamp: h_var += -spin * magnitude.
struct Clamp {
  std::string var;
  int spin = 1;
  Rational magnitude = 0;
};

/// Adds a field of magnitude |h_i| + sum_j |J_ij| + 1 pushing `var` to
/// `spin`. Every ground state of the result has s_var = spin.
IsingModel<Rational> apply_clamp(const IsingModel<Rational>& m, std::string_view var, int spin,
                                 Clamp* applied = nullptr);

}  // namespace aqc
