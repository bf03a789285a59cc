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

#include "aqc/model_io.hpp"

#include <sstream>

#include <json.hpp>

namespace aqc {
namespace {

struct Entry {
  Eigen::Index row;
  Eigen::Index col;
  Rational value;
};

struct Parts {
  bool ising = false;
  std::vector<Var> vars;
  ModelInfo info;
  Rational offset = 0;
  std::vector<Entry> entries;
};

Parts split(const Model& model) {
  Parts p;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        p.ising = std::is_same_v<T, IsingModel<Rational>>;
        p.vars = m.vars();
        p.info = m.info();
        p.offset = m.offset();
        for (Eigen::Index i = 0; i < m.size(); ++i) {
          for (Eigen::Index j = i; j < m.size(); ++j) {
            Rational v;
            if constexpr (std::is_same_v<T, IsingModel<Rational>>) {
              v = i == j ? m.h()(i) : m.J()(i, j);
            } else {
              v = m.upper()(i, j);
            }
            if (v != 0) {
              p.entries.push_back({i, j, v});
            }
          }
        }
      },
      model);
  return p;
}

Model join(Parts p) {
  const auto n = static_cast<Eigen::Index>(p.vars.size());
  for (const auto& e : p.entries) {
    if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n || e.row > e.col) {
      throw std::invalid_argument("matrix entry (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) + ") is out of range");
    }
  }
  if (p.ising) {
    VectorX<Rational> h = VectorX<Rational>::Zero(n);
    MatrixX<Rational> J = MatrixX<Rational>::Zero(n, n);
    for (const auto& e : p.entries) {
      (e.row == e.col ? h(e.row) : J(e.row, e.col)) = e.value;
    }
    return IsingModel<Rational>(std::move(p.vars), std::move(h), std::move(J),
                                std::move(p.offset), std::move(p.info));
  }
  MatrixX<Rational> Q = MatrixX<Rational>::Zero(n, n);
  for (const auto& e : p.entries) {
    Q(e.row, e.col) = e.value;
  }
  return QuboMatrix<Rational>(std::move(p.vars), std::move(Q), std::move(p.offset),
                              std::move(p.info));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string write_coordinate(const Model& model) {
  const Parts p = split(model);
  std::ostringstream os;
  os << "# aqc-coordinate 1\n";
  os << "# type " << (p.ising ? "ising" : "qubo") << '\n';
  os << "# variables";
  for (const auto& v : p.vars) {
    os << ' ' << v.name << ':' << to_string(v.kind);
  }
  os << '\n';
  os << "# roles";
  for (const auto& [name, role] : p.info.roles) {
    os << ' ' << name << '=' << role;
  }
  os << '\n';
  os << "# offset " << to_string(p.offset) << '\n';
  os << "# provenance " << p.info.provenance << '\n';
  for (const auto& e : p.entries) {
    os << e.row << ' ' << e.col << ' ' << to_string(e.value) << '\n';
  }
  return os.str();
}

Model read_coordinate(std::string_view text) {
  Parts p;
  bool saw_header = false;
  bool saw_type = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) {
      continue;
    }
    if (t[0] == '#') {
      std::string body = t.substr(1);
      if (!body.empty() && body[0] == ' ') {
        body.erase(0, 1);
      }
      const auto sp = body.find(' ');
      const std::string key = body.substr(0, sp);
      const std::string rest = sp == std::string::npos ? "" : body.substr(sp + 1);
      std::istringstream words(rest);
      std::string w;
      if (key == "aqc-coordinate") {
        saw_header = true;
      } else if (key == "type") {
        if (rest != "qubo" && rest != "ising") {
          throw ParseError("unknown model type '" + rest + "'", lineno, 1);
        }
        p.ising = rest == "ising";
        saw_type = true;
      } else if (key == "variables") {
        while (words >> w) {
          const auto colon = w.rfind(':');
          if (colon == std::string::npos) {
            p.vars.push_back({w, VarKind::input});
          } else {
            try {
              p.vars.push_back({w.substr(0, colon), parse_var_kind(w.substr(colon + 1))});
            } catch (const std::invalid_argument& e) {
              throw ParseError(e.what(), lineno, 1);
            }
          }
        }
      } else if (key == "roles") {
        while (words >> w) {
          const auto eq = w.find('=');
          if (eq == std::string::npos) {
            throw ParseError("role entries look like name=role", lineno, 1);
          }
          p.info.roles[w.substr(0, eq)] = w.substr(eq + 1);
        }
      } else if (key == "offset") {
        try {
          p.offset = parse_rational(trim(rest));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), lineno, 1);
        }
      } else if (key == "provenance") {
        p.info.provenance = rest;
      }
      continue;
    }
    std::istringstream fields(t);
    long long r = 0;
    long long c = 0;
    std::string value;
    std::string extra;
    if (!(fields >> r >> c >> value) || (fields >> extra)) {
      throw ParseError("expected 'row col coeff'", lineno, 1);
    }
    try {
      p.entries.push_back({r, c, parse_rational(value)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  if (!saw_header || !saw_type) {
    throw ParseError("missing '# aqc-coordinate' or '# type' header", 1, 1);
  }
  try {
    return join(std::move(p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

std::string write_structured(const Model& model) {
  const Parts p = split(model);
  nlohmann::ordered_json doc;
  doc["format"] = "aqc-hamiltonian";
  doc["version"] = 1;
  doc["type"] = p.ising ? "ising" : "qubo";
  doc["provenance"] = p.info.provenance;
  auto vars = nlohmann::ordered_json::array();
  for (const auto& v : p.vars) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name;
    jv["kind"] = std::string(to_string(v.kind));
    if (auto it = p.info.roles.find(v.name); it != p.info.roles.end()) {
      jv["role"] = it->second;
    }
    vars.push_back(std::move(jv));
  }
  doc["variables"] = std::move(vars);
  doc["offset"] = to_string(p.offset);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : p.entries) {
    entries.push_back(nlohmann::ordered_json::array({e.row, e.col, to_string(e.value)}));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

Model read_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    if (doc.at("format") != "aqc-hamiltonian") {
      throw ParseError("not an aqc-hamiltonian document", 1, 1);
    }
    Parts p;
    const std::string type = doc.at("type");
    if (type != "qubo" && type != "ising") {
      throw ParseError("unknown model type '" + type + "'", 1, 1);
    }
    p.ising = type == "ising";
    p.info.provenance = doc.value("provenance", "");
    for (const auto& jv : doc.at("variables")) {
      Var v{jv.at("name"), parse_var_kind(jv.at("kind").get<std::string>())};
      if (jv.contains("role")) {
        p.info.roles[v.name] = jv.at("role").get<std::string>();
      }
      p.vars.push_back(std::move(v));
    }
    p.offset = parse_rational(doc.at("offset").get<std::string>());
    for (const auto& je : doc.at("entries")) {
      p.entries.push_back({je.at(0).get<Eigen::Index>(), je.at(1).get<Eigen::Index>(),
                           parse_rational(je.at(2).get<std::string>())});
    }
    return join(std::move(p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what(), 1, 1);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

Model read_model(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    return read_structured(text);
  }
  return read_coordinate(text);
}

}  // namespace aqc
