// Copyright 2026 The tropaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "tropaut/rational.hpp"

#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "tropaut/multigraph.hpp"

namespace tropaut {
namespace {

TEST(RationalTest, ReducesAndNormalisesSign) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::Parse("3"), Rational(3));
  EXPECT_EQ(Rational::Parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::Parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("10/-4"), Rational(-5, 2));
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", " 1", "1/2/3",
                          "99999999999999999999"}) {
    EXPECT_THROW(Rational::Parse(bad), InvalidArgument) << bad;
  }
}

TEST(RationalTest, ToStringRoundTrips) {
  EXPECT_EQ(Rational(1, 2).to_string(), "1/2");
  EXPECT_EQ(Rational(-4, 2).to_string(), "-2");
  std::ostringstream out;
  out << Rational(7, 3);
  EXPECT_EQ(out.str(), "7/3");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational r(static_cast<std::int64_t>(rng() % 2001) - 1000,
                     static_cast<std::int64_t>(rng() % 999) + 1);
    EXPECT_EQ(Rational::Parse(r.to_string()), r);
  }
}

TEST(RationalTest, Arithmetic) {
  const Rational half(1, 2), third(1, 3);
  EXPECT_EQ(half + third, Rational(5, 6));
  EXPECT_EQ(half - third, Rational(1, 6));
  EXPECT_EQ(half * third, Rational(1, 6));
  EXPECT_EQ(half / third, Rational(3, 2));
  Rational sum;
  for (int i = 0; i < 4; ++i) sum += Rational(1, 4);
  EXPECT_EQ(sum, Rational(1));
  EXPECT_THROW(half / Rational(0), DomainError);
}

TEST(RationalTest, OrderingMatchesCrossMultiplication) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 200) - 100;
    const std::int64_t b = static_cast<std::int64_t>(rng() % 50) + 1;
    const std::int64_t c = static_cast<std::int64_t>(rng() % 200) - 100;
    const std::int64_t d = static_cast<std::int64_t>(rng() % 50) + 1;
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
    EXPECT_EQ(x + y - y, x);
    if (c != 0) EXPECT_EQ(x * y / y, x);
  }
}

TEST(RationalTest, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, DomainError);
  EXPECT_THROW(big * Rational(2), DomainError);
  EXPECT_EQ(big - big, Rational(0));
}

}  // namespace
}  // namespace tropaut
