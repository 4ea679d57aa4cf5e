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
#ifndef TROPAUT_RATIONAL_HPP_
#define TROPAUT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tropaut {

// Exact fraction, always reduced with a positive denominator. Arithmetic
// goes through 128-bit intermediates and throws DomainError when a result
// does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_positive() const { return num_ > 0; }

  // Accepts "n", "-n" and "p/q".
  static Rational Parse(std::string_view text);
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational FromWide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

}  // namespace tropaut

#endif  // TROPAUT_RATIONAL_HPP_
