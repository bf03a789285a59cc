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

#include "aqc/boolean_logic.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace aqc {
namespace {

struct OpInfo {
  BoolOp op;
  std::string_view name;
  int arity;
  // Outputs for rows in descending order: (1,1),(1,0),(0,1),(0,0) or (1),(0).
  std::array<std::uint8_t, 4> column;
};

constexpr std::array<OpInfo, 14> kOps = {{
    {BoolOp::AND, "AND", 2, {1, 0, 0, 0}},
    {BoolOp::OR, "OR", 2, {1, 1, 1, 0}},
    {BoolOp::IMPLIES, "IMPLIES", 2, {1, 0, 1, 1}},
    {BoolOp::XOR, "XOR", 2, {0, 1, 1, 0}},
    {BoolOp::EQUIV, "EQUIV", 2, {1, 0, 0, 1}},
    {BoolOp::A, "A", 2, {0, 0, 0, 1}},
    {BoolOp::B, "B", 2, {0, 1, 1, 1}},
    {BoolOp::C, "C", 2, {1, 1, 0, 1}},
    {BoolOp::D, "D", 2, {0, 0, 1, 0}},
    {BoolOp::E, "E", 2, {0, 1, 0, 0}},
    {BoolOp::COPY, "COPY", 1, {1, 0, 0, 0}},
    {BoolOp::NOT, "NOT", 1, {0, 1, 0, 0}},
    {BoolOp::CONST0, "CONST0", 0, {0, 0, 0, 0}},
    {BoolOp::CONST1, "CONST1", 0, {1, 0, 0, 0}},
}};

constexpr std::array<BoolOp, 10> kBinary = {BoolOp::AND, BoolOp::OR, BoolOp::IMPLIES,
                                            BoolOp::XOR, BoolOp::EQUIV, BoolOp::A,
                                            BoolOp::B,   BoolOp::C,  BoolOp::D,
                                            BoolOp::E};

const OpInfo& info(BoolOp op) {
  for (const auto& i : kOps) {
    if (i.op == op) {
      return i;
    }
  }
  throw std::invalid_argument("unknown BoolOp");
}

}  // namespace

int arity(BoolOp op) { return info(op).arity; }

std::string_view to_string(BoolOp op) { return info(op).name; }

std::optional<BoolOp> parse_bool_op(std::string_view text) {
  for (const auto& i : kOps) {
    if (i.name == text) {
      return i.op;
    }
  }
  return std::nullopt;
}

std::span<const BoolOp> binary_ops() { return kBinary; }

TruthTable truth_table(BoolOp op) {
  const auto& i = info(op);
  TruthTable t;
  t.arity = i.arity;
  const std::size_t rows = std::size_t{1} << i.arity;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t value = rows - 1 - r;  // descending
    TruthRow row;
    for (int b = i.arity - 1; b >= 0; --b) {
      row.inputs.push_back(static_cast<std::uint8_t>((value >> b) & 1));
    }
    row.output = i.column[r];
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string format_truth_tables(std::span<const BoolOp> ops) {
  if (ops.empty()) {
    return {};
  }
  const int n = arity(ops.front());
  for (auto op : ops) {
    if (arity(op) != n) {
      throw std::invalid_argument("format_truth_tables needs ops of equal arity");
    }
  }
  static constexpr std::array<std::string_view, 2> kInputs = {"x_i", "x_j"};
  std::ostringstream os;
  for (int b = 0; b < n; ++b) {
    os << kInputs[b] << '\t';
  }
  for (std::size_t c = 0; c < ops.size(); ++c) {
    os << (c ? "\t" : "") << to_string(ops[c]);
  }
  os << '\n';
  const auto first = truth_table(ops.front());
  for (std::size_t r = 0; r < first.rows.size(); ++r) {
    for (auto bit : first.rows[r].inputs) {
      os << int(bit) << '\t';
    }
    for (std::size_t c = 0; c < ops.size(); ++c) {
      os << (c ? "\t" : "") << int(truth_table(ops[c]).rows[r].output);
    }
    os << '\n';
  }
  return os.str();
}

std::uint8_t eval_op(BoolOp op, std::span<const std::uint8_t> inputs) {
  const auto& i = info(op);
  if (static_cast<int>(inputs.size()) != i.arity) {
    throw std::invalid_argument(std::string(i.name) + " expects " + std::to_string(i.arity) +
                                " inputs, got " + std::to_string(inputs.size()));
  }
  std::size_t value = 0;
  for (auto bit : inputs) {
    if (bit > 1) {
      throw std::invalid_argument("Boolean inputs must be 0 or 1");
    }
    value = (value << 1) | bit;
  }
  const std::size_t rows = std::size_t{1} << i.arity;
  return i.column[rows - 1 - value];
}

Poly op_polynomial(BoolOp op, std::span<const std::string> inputs) {
  const auto table = truth_table(op);
  if (static_cast<int>(inputs.size()) != table.arity) {
    throw std::invalid_argument("op_polynomial: arity mismatch for " +
                                std::string(to_string(op)));
  }
  Poly out;
  for (const auto& name : inputs) {
    out.declare(name);
  }
  // Sum over true rows of the product of literals.
  for (const auto& row : table.rows) {
    if (!row.output) {
      continue;
    }
    Poly term = Poly::constant(1);
    for (std::size_t b = 0; b < inputs.size(); ++b) {
      Poly x = Poly::variable(inputs[b]);
      term = term * (row.inputs[b] ? x : Poly::constant(1) - x);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------

ValidSet::ValidSet(std::vector<std::string> vars, std::vector<Mask> members)
    : vars_(std::move(vars)), members_(std::move(members)) {
  if (vars_.size() > 64) {
    throw std::invalid_argument("ValidSet supports at most 64 variables");
  }
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) {
    throw std::invalid_argument("ValidSet variable names must be distinct");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ValidSet ValidSet::from_predicate(std::vector<std::string> vars,
                                  const std::function<bool(const Assignment&)>& accept) {
  if (vars.size() > kMaxVars) {
    throw SolverLimitError("valid-set enumeration over " + std::to_string(vars.size()) +
                           " variables exceeds the limit of " + std::to_string(kMaxVars));
  }
  std::vector<Mask> members;
  const Mask total = Mask{1} << vars.size();
  for (Mask m = 0; m < total; ++m) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a.set(vars[i], static_cast<int>((m >> i) & 1));
    }
    if (accept(a)) {
      members.push_back(m);
    }
  }
  return ValidSet(std::move(vars), std::move(members));
}

bool ValidSet::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

std::optional<std::size_t> ValidSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

ValidSet ValidSet::extended(std::span<const AncillaDef> ancillas) const {
  std::vector<std::string> vars = vars_;
  std::vector<Mask> members = members_;
  for (const auto& def : ancillas) {
    auto find = [&](const std::string& n) -> std::size_t {
      auto it = std::find(vars.begin(), vars.end(), n);
      if (it == vars.end()) {
        throw std::invalid_argument("ancilla '" + def.name + "' refers to unknown variable '" +
                                    n + "'");
      }
      return static_cast<std::size_t>(it - vars.begin());
    };
    if (std::find(vars.begin(), vars.end(), def.name) != vars.end()) {
      throw std::invalid_argument("ancilla '" + def.name + "' already exists");
    }
    const auto l = find(def.lhs);
    const auto r = find(def.rhs);
    const std::size_t bit = vars.size();
    vars.push_back(def.name);
    for (auto& m : members) {
      if (((m >> l) & 1) && ((m >> r) & 1)) {
        m |= Mask{1} << bit;
      }
    }
  }
  return ValidSet(std::move(vars), std::move(members));
}

ValidSet ValidSet::projected(std::span<const std::string> keep) const {
  std::vector<std::size_t> idx;
  for (const auto& n : keep) {
    auto i = index_of(n);
    if (!i) {
      throw std::invalid_argument("cannot project onto unknown variable '" + n + "'");
    }
    idx.push_back(*i);
  }
  std::vector<Mask> members;
  for (Mask m : members_) {
    Mask p = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      p |= ((m >> idx[b]) & 1) << b;
    }
    members.push_back(p);
  }
  return ValidSet(std::vector<std::string>(keep.begin(), keep.end()), std::move(members));
}

Assignment ValidSet::assignment(Mask m) const {
  Assignment a;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    a.set(vars_[i], static_cast<int>((m >> i) & 1));
  }
  return a;
}

ValidSet relation_of(BoolOp op, const std::string& output, std::span<const std::string> inputs,
                     std::span<const AncillaDef> ancillas) {
  if (static_cast<int>(inputs.size()) != arity(op)) {
    throw std::invalid_argument("relation_of: " + std::string(to_string(op)) + " expects " +
                                std::to_string(arity(op)) + " inputs");
  }
  std::vector<std::string> vars(inputs.begin(), inputs.end());
  vars.push_back(output);
  std::vector<Mask> members;
  const std::size_t n = inputs.size();
  for (Mask in = 0; in < (Mask{1} << n); ++in) {
    std::vector<std::uint8_t> bits;
    for (std::size_t b = 0; b < n; ++b) {
      bits.push_back(static_cast<std::uint8_t>((in >> b) & 1));
    }
    Mask m = in;
    if (eval_op(op, bits)) {
      m |= Mask{1} << n;
    }
    members.push_back(m);
  }
  return ValidSet(std::move(vars), std::move(members)).extended(ancillas);
}

}  // namespace aqc
