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

#include "aqc/rational.hpp"

#include <stdexcept>

namespace aqc {

std::string to_string(const Rational& r) {
  if (is_integer(r)) {
    return boost::multiprecision::numerator(r).str();
  }
  return r.str();
}

namespace {

// GMP reads a leading 0 as octal and 0x as hex; accept decimal digits only.
Integer decimal(std::string_view digits, bool negative) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a decimal integer");
  }
  const auto nz = digits.find_first_not_of('0');
  const std::string body(nz == std::string_view::npos ? "0" : digits.substr(nz));
  return Integer((negative ? "-" : "") + body);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  try {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
      const Integer den = decimal(body.substr(slash + 1), false);
      if (den == 0) {
        throw std::invalid_argument("zero denominator");
      }
      return Rational(decimal(body.substr(0, slash), negative)) / Rational(den);
    }
    const auto dot = body.find('.');
    if (dot == std::string_view::npos) {
      return Rational(decimal(body, negative));
    }
    const std::string digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
    const std::string scale = "1" + std::string(body.size() - dot - 1, '0');
    return Rational(decimal(digits, negative)) / Rational(Integer(scale));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::optional<std::int64_t> to_int64(const Rational& r) {
  if (!is_integer(r)) {
    return std::nullopt;
  }
  const auto n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace aqc
