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

#include <charconv>
#include <limits>

#include "tropaut/multigraph.hpp"

namespace tropaut {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(__int128 value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const __int128 g = Gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!FitsInt64(numerator) || !FitsInt64(denominator)) {
    throw DomainError("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  const std::int64_t p = ParseInteger(text.substr(0, slash), text);
  const std::int64_t q = ParseInteger(text.substr(slash + 1), text);
  if (q == 0) {
    throw InvalidArgument("malformed rational '" + std::string(text) +
                          "': zero denominator");
  }
  return Rational(p, q);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::FromWide(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::FromWide(
      static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero");
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 left = static_cast<__int128>(a.num_) * b.den_;
  const __int128 right = static_cast<__int128>(b.num_) * a.den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.to_string();
}

}  // namespace tropaut
