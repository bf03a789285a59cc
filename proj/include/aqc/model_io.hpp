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

#include <string>
#include <string_view>
#include <variant>

#include "aqc/hamiltonian.hpp"

namespace aqc {

/// Exact model as stored on disk.
using Model = std::variant<QuboMatrix<Rational>, IsingModel<Rational>>;

/// Coordinate text:
///
///   # aqc-coordinate 1
///   # type qubo
///   # variables i:input j:input k:output a:ancilla
///   # roles i=target j=control
///   # offset 0
///   # provenance gate:cnot
///   0 0 1
///   0 1 2
///
/// One `row col coeff` line per nonzero entry, row <= col, in row-major order;
/// `i i` rows are linear terms (QUBO diagonal, Ising h).
std::string write_coordinate(const Model& model);
Model read_coordinate(std::string_view text);

/// Structured JSON document with the same content.
std::string write_structured(const Model& model);
Model read_structured(std::string_view text);

/// Picks the reader from the first non-blank character.
Model read_model(std::string_view text);

}  // namespace aqc
