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

#include <vector>

#include <gtest/gtest.h>

#include "aqc/rational.hpp"

namespace aqc {
namespace {

TEST(Rational, PrintsIntegersBareAndFractionsReduced) {
  EXPECT_EQ(to_string(Rational(-3)), "-3");
  EXPECT_EQ(to_string(Rational(6) / 4), "3/2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1) / 3);
  EXPECT_EQ(parse_rational("0.25"), Rational(1) / 4);
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3) / 2);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("x1"), std::invalid_argument);
  EXPECT_THROW(parse_rational("."), std::invalid_argument);
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("3/06"), Rational(1) / 2);
  EXPECT_THROW(parse_rational("0x10"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Rational, RoundTripsThroughText) {
  for (const char* s : {"0", "1", "-17", "5/3", "-7/12", "123456789012345678901234567890"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
}

TEST(Rational, Int64ConversionRejectsFractionsAndOverflow) {
  EXPECT_EQ(to_int64(Rational(-42)), -42);
  EXPECT_FALSE(to_int64(Rational(1) / 2));
  EXPECT_FALSE(to_int64(parse_rational("99999999999999999999")));
}

TEST(Rational, CommonDenominatorIsLcm) {
  std::vector<Rational> v{Rational(1) / 4, Rational(5) / 6, Rational(3)};
  EXPECT_EQ(common_denominator(v), Rational(12));
  std::vector<Rational> none;
  EXPECT_EQ(common_denominator(none), Rational(1));
}

}  // namespace
}  // namespace aqc
