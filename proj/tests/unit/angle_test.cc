// Copyright 2026 The qfd Authors
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

#include <gtest/gtest.h>

#include "qfd/angle.h"
#include "qfd/errors.h"

namespace qfd {
namespace {

TEST(Angle, ParsesMultiplesOfPi) {
  EXPECT_EQ(*Angle::parse("3pi/2").pi_fraction(), (Rational{3, 2}));
  EXPECT_EQ(*Angle::parse("3*pi/4").pi_fraction(), (Rational{3, 4}));
  EXPECT_EQ(*Angle::parse("-pi").pi_fraction(), (Rational{-1, 1}));
  EXPECT_EQ(*Angle::parse(" 2 pi ").pi_fraction(), (Rational{2, 1}));
  EXPECT_EQ(*Angle::parse("6pi/8").pi_fraction(), (Rational{3, 4}));
  EXPECT_TRUE(Angle::parse("0").exact());
}

TEST(Angle, ParsesRadians) {
  const Angle a = Angle::parse("1.25");
  EXPECT_FALSE(a.exact());
  EXPECT_DOUBLE_EQ(a.radians(), 1.25);
}

TEST(Angle, RejectsGarbage) {
  EXPECT_THROW(Angle::parse(""), ValidationError);
  EXPECT_THROW(Angle::parse("pie"), ValidationError);
  EXPECT_THROW(Angle::parse("pi/0"), ValidationError);
  EXPECT_THROW(Angle::parse("x1"), ValidationError);
}

TEST(Angle, TextRoundTrips) {
  for (const char* s : {"0", "pi", "-pi", "3pi/2", "pi/8", "17pi/32"}) {
    EXPECT_EQ(Angle::parse(s).to_string(), s);
    EXPECT_EQ(compare(Angle::parse(Angle::parse(s).to_string()), Angle::parse(s), 0.0), 0);
  }
}

TEST(Angle, ExactArithmeticAndComparison) {
  const Angle a = Angle::pi_multiple(1, 2) + Angle::pi_multiple(1, 8);
  EXPECT_EQ(*a.pi_fraction(), (Rational{5, 8}));
  EXPECT_EQ(*(Angle::pi_multiple(3, 2) - Angle::pi_multiple(1, 8)).pi_fraction(), (Rational{11, 8}));
  EXPECT_EQ(*Angle::pi_multiple(3, 4).scaled(2, 3).pi_fraction(), (Rational{1, 2}));
  // 2 pi * 5 / 16 sits exactly on 5pi/8; exact comparison must not be fooled by rounding.
  EXPECT_EQ(compare(Angle::pi_multiple(10, 16), a, 0.0), 0);
  EXPECT_LT(compare(Angle::pi_multiple(1, 3), Angle::pi_multiple(1, 2)), 0);
}

TEST(Angle, MixedComparisonUsesSlack) {
  const Angle inexact = Angle::from_radians(kPi / 2 + 1e-13);
  EXPECT_EQ(compare(inexact, Angle::pi_multiple(1, 2)), 0);
  EXPECT_GT(compare(inexact, Angle::pi_multiple(1, 2), 0.0), 0);
}

}  // namespace
}  // namespace qfd
