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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace aqc {

/// Exact scalar used for every penalty, QUBO and Ising coefficient.
/// Expression templates are off so the type composes cleanly with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "3", "-1/2", ...
std::string to_string(const Rational& r);

/// Parses "3", "-1/2" or a decimal like "0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Numerator as int64 when the value is an integer that fits.
std::optional<std::int64_t> to_int64(const Rational& r);

/// Least common multiple of the denominators of `values`.
template <typename Range>
Rational common_denominator(const Range& values) {
  Integer lcm = 1;
  for (const Rational& v : values) {
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(v)));
  }
  return Rational(lcm);
}

}  // namespace aqc
