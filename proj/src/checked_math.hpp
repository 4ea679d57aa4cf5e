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

#ifndef TROPAUT_SRC_CHECKED_MATH_HPP_
#define TROPAUT_SRC_CHECKED_MATH_HPP_

#include <cstdint>

#include "tropaut/multigraph.hpp"

namespace tropaut::internal {

inline std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("group order exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("group order exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t Factorial(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out = CheckedMul(out, i);
  return out;
}

}  // namespace tropaut::internal

#endif  // TROPAUT_SRC_CHECKED_MATH_HPP_
