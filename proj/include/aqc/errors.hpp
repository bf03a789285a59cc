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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aqc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed constraint, circuit or model text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class MissingVariableError : public Error {
 public:
  explicit MissingVariableError(std::string var)
      : Error("variable '" + var + "' is not assigned"), var_(std::move(var)) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

/// A polynomial of the wrong degree reached a consumer that needs degree <= 2.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Constraint that no binary assignment (or slack assignment) can satisfy.
class InfeasibleConstraintError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was asked for more variables than the configured limit.
class SolverLimitError : public Error {
 public:
  using Error::Error;
};

/// A gate qubit is shared with another penalty in the same stage.
class ExclusivityError : public Error {
 public:
  ExclusivityError(const std::string& message, std::string var)
      : Error(message), var_(std::move(var)) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

/// Circuit that parses but does not make sense: unknown or redefined wires,
/// wrong ports, bad input counts.
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// Failure while executing one pipeline stage. `stage` is 1-based.
class StageError : public Error {
 public:
  enum class Kind { non_unique, unsatisfied, solver_limit };

  StageError(Kind kind, std::size_t stage, const std::string& message)
      : Error("stage " + std::to_string(stage) + ": " + message), kind_(kind), stage_(stage) {}

  Kind kind() const { return kind_; }
  std::size_t stage() const { return stage_; }

 private:
  Kind kind_;
  std::size_t stage_;
};

}  // namespace aqc
