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

#include "aqc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "aqc/errors.hpp"

namespace aqc {
namespace {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen, comma, eq, le, ge, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) {
        ++j;
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "<=" || two == ">=") {
      out.push_back({two == "<=" ? Tok::le : Tok::ge, std::string(two), col});
      i += 2;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ',': k = Tok::comma; break;
      case '=': k = Tok::eq; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back({k, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

bool is_infix_op(const std::string& w) {
  return w == "AND" || w == "OR" || w == "XOR" || w == "IMPLIES" || w == "EQUIV";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, line_, at.column);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      fail(std::string("expected ") + what, peek());
    }
    return next();
  }
  bool at_end() const { return peek().kind == Tok::end; }

  Expr expr() {
    Expr e = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Expr t = term();
      e = minus ? e - std::move(t) : e + std::move(t);
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
      } else if (!starts_factor(peek())) {
        break;
      }
      e = e * unary();
    }
    return e;
  }

  Expr unary() {
    if (peek().kind == Tok::minus) {
      next();
      return Expr::constant(-1) * unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind == Tok::caret) {
      next();
      const Token& t = expect(Tok::number, "an integer exponent");
      if (t.text.find('.') != std::string::npos) {
        fail("exponent must be a non-negative integer", t);
      }
      const unsigned long n = std::stoul(t.text);
      if (n > 64) {
        fail("exponent too large", t);
      }
      return Expr::power(std::move(base), static_cast<unsigned>(n));
    }
    return base;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        try {
          return Expr::constant(parse_rational(t.text));
        } catch (const std::invalid_argument&) {
          fail("bad number '" + t.text + "'", t);
        }
      }
      case Tok::ident:
        if (parse_bool_op(t.text) && (peek(1).kind == Tok::lparen || is_infix_op(t.text))) {
          fail("Boolean operator '" + t.text + "' inside an arithmetic expression", t);
        }
        next();
        return Expr::variable(t.text);
      case Tok::lparen: {
        next();
        Expr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      default:
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
  }

  std::size_t pos() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }

 private:
  static bool starts_factor(const Token& t) {
    return t.kind == Tok::number || t.kind == Tok::ident || t.kind == Tok::lparen;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::optional<BooleanConstraint> try_boolean(Parser& p, const std::string& output) {
  const Token& head = p.peek();
  if (head.kind != Tok::ident) {
    return std::nullopt;
  }
  auto op_of = [&](const Token& t) {
    auto op = parse_bool_op(t.text);
    if (!op) {
      p.fail("unknown operator '" + t.text + "'", t);
    }
    return *op;
  };
  auto operand = [&] {
    const Token& t = p.expect(Tok::ident, "a variable name");
    return t.text;
  };
  BooleanConstraint b;
  b.output = output;
  if (p.peek(1).kind == Tok::lparen && parse_bool_op(head.text)) {
    // Call form: OP(x, y)
    b.op = op_of(p.next());
    p.next();
    if (p.peek().kind != Tok::rparen) {
      b.inputs.push_back(operand());
      while (p.peek().kind == Tok::comma) {
        p.next();
        b.inputs.push_back(operand());
      }
    }
    p.expect(Tok::rparen, "')'");
  } else if (head.text == "NOT" || head.text == "COPY") {
    b.op = op_of(p.next());
    b.inputs.push_back(operand());
  } else if (head.text == "CONST0" || head.text == "CONST1") {
    b.op = op_of(p.next());
  } else if (p.peek(1).kind == Tok::ident && is_infix_op(p.peek(1).text)) {
    b.inputs.push_back(operand());
    b.op = op_of(p.next());
    b.inputs.push_back(operand());
  } else {
    return std::nullopt;
  }
  if (static_cast<int>(b.inputs.size()) != arity(b.op)) {
    p.fail(std::string(to_string(b.op)) + " takes " + std::to_string(arity(b.op)) +
               " operand(s)",
           head);
  }
  if (!p.at_end()) {
    p.fail("unexpected '" + p.peek().text + "' after Boolean form", p.peek());
  }
  return b;
}

/// Unit-coefficient sum of distinct variables, or empty if `e` is not one.
std::optional<std::vector<std::string>> unit_sum(const Expr& e) {
  std::vector<std::string> vars;
  const Poly p = reduce_idempotent(e);
  if (p.offset() != 0 || p.degree() > 1) {
    return std::nullopt;
  }
  for (const auto& [key, c] : p.terms()) {
    if (c != 1) {
      return std::nullopt;
    }
  }
  for (const auto& [key, c] : p.sorted_terms()) {
    vars.push_back(p.vars()[key.front()].name);
  }
  return vars;
}

}  // namespace

Expr parse_expression(std::string_view text, std::size_t line) {
  Parser p(lex(text, line), line);
  Expr e = p.expr();
  if (!p.at_end()) {
    p.fail("unexpected '" + p.peek().text + "'", p.peek());
  }
  return e;
}

Constraint parse_constraint(std::string_view text, std::size_t line) {
  Parser p(lex(text, line), line);
  if (p.at_end()) {
    p.fail("empty constraint", p.peek());
  }
  // Boolean form: ident '=' <boolean rhs>
  if (p.peek().kind == Tok::ident && p.peek(1).kind == Tok::eq) {
    const std::string out = p.peek().text;
    const std::size_t save = p.pos();
    p.next();
    p.next();
    if (auto b = try_boolean(p, out)) {
      return *b;
    }
    p.rewind(save);
  }
  Expr lhs = p.expr();
  const Token& rel = p.next();
  if (rel.kind != Tok::eq && rel.kind != Tok::le && rel.kind != Tok::ge) {
    p.fail("expected '=', '<=' or '>='", rel);
  }
  const std::size_t rhs_col = p.peek().column;
  Expr rhs = p.expr();
  if (!p.at_end()) {
    p.fail("unexpected '" + p.peek().text + "'", p.peek());
  }
  if (rel.kind == Tok::eq) {
    return EquationConstraint{std::move(lhs), std::move(rhs)};
  }
  auto vars = unit_sum(lhs);
  if (!vars || vars->empty()) {
    throw ParseError("inequalities need a sum of distinct variables on the left", line, 1);
  }
  const Poly bound = reduce_idempotent(rhs);
  auto b = bound.terms().empty() ? to_int64(bound.offset()) : std::nullopt;
  if (!b) {
    throw ParseError("inequality bound must be an integer constant", line, rhs_col);
  }
  return Inequality{std::move(*vars), rel.kind == Tok::le ? Sense::le : Sense::ge, *b};
}

std::vector<Constraint> parse_constraints(std::string_view text) {
  std::vector<Constraint> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view row = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    ++line;
    if (auto hash = row.find('#'); hash != std::string_view::npos) {
      row = row.substr(0, hash);
    }
    if (row.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.push_back(parse_constraint(row, line));
    }
    if (nl == std::string_view::npos) {
      break;
    }
    start = nl + 1;
  }
  return out;
}

AncillaPlanEntry parse_ancilla_plan(std::string_view text) {
  Parser p(lex(text, 1), 1);
  AncillaPlanEntry e;
  e.name = p.expect(Tok::ident, "an ancilla name").text;
  p.expect(Tok::eq, "'='");
  e.lhs = p.expect(Tok::ident, "a variable name").text;
  p.expect(Tok::star, "'*'");
  e.rhs = p.expect(Tok::ident, "a variable name").text;
  if (!p.at_end()) {
    p.fail("unexpected '" + p.peek().text + "'", p.peek());
  }
  if (e.lhs == e.rhs) {
    throw ParseError("ancilla must multiply two distinct variables", 1, 1);
  }
  return e;
}

Penalty compile_constraint(const Constraint& c, const CompileOptions& options) {
  return std::visit(
      [&](const auto& k) -> Penalty {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, EquationConstraint>) {
          return equation_to_penalty(k.lhs, k.rhs, options);
        } else if constexpr (std::is_same_v<T, Inequality>) {
          return inequality_to_penalty(k, options);
        } else {
          return boolean_penalty(k.op, k.output, k.inputs, options);
        }
      },
      c);
}

std::string to_string(const Constraint& c) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, EquationConstraint>) {
          os << k.lhs.str() << " = " << k.rhs.str();
        } else if constexpr (std::is_same_v<T, Inequality>) {
          for (std::size_t i = 0; i < k.vars.size(); ++i) {
            os << (i ? " + " : "") << k.vars[i];
          }
          os << (k.sense == Sense::le ? " <= " : " >= ") << k.bound;
        } else {
          os << k.output << " = " << to_string(k.op) << "(";
          for (std::size_t i = 0; i < k.inputs.size(); ++i) {
            os << (i ? ", " : "") << k.inputs[i];
          }
          os << ")";
        }
        return os.str();
      },
      c);
}

}  // namespace aqc
