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
#include "tropaut/extremal.hpp"

#include "checked_math.hpp"

namespace tropaut {

std::string_view to_string(ExtremalTag tag) {
  switch (tag) {
    case ExtremalTag::kBanana:
      return "A_banana";
    case ExtremalTag::kBouquet:
      return "B_bouquet";
    case ExtremalTag::kLollipop:
      return "C_lollipop";
    case ExtremalTag::kNone:
      break;
  }
  return "none";
}

std::string_view to_string(FixedPointClass kind) {
  switch (kind) {
    case FixedPointClass::kTrivial:
      return "trivial";
    case FixedPointClass::kBanana1Subdivision:
      return "banana1_subdivision";
    case FixedPointClass::kBouquetAtCutVertex:
      return "B_at_cut_vertex";
    case FixedPointClass::kLollipopAtStarCenter:
      return "C_at_star_center";
    case FixedPointClass::kNone:
      break;
  }
  return "none";
}

std::uint64_t fixed_point_bound(int g) {
  if (g < 0) throw InvalidArgument("negative genus");
  if (g > 62) throw DomainError("bound exceeds 64 bits");
  return internal::CheckedMul(internal::CheckedMul(1, std::uint64_t{1} << g),
                              internal::Factorial(g));
}

std::uint64_t hurwitz_bound(int g) {
  if (g < 2) {
    throw DomainError("the automorphism bound needs genus >= 2, got " +
                      std::to_string(g));
  }
  return g == 2 ? 12 : fixed_point_bound(g);
}

std::uint64_t refined_fixed_point_bound(int g, int d) {
  const int rest = g - d + 1;
  if (rest > 62) throw DomainError("bound exceeds 64 bits");
  if (rest < 0 || d < 0) {
    throw DomainError("refined bound needs 0 <= d <= g + 1");
  }
  return internal::CheckedMul(
      internal::CheckedMul(std::uint64_t{1} << rest, internal::Factorial(d)),
      internal::Factorial(rest));
}

}  // namespace tropaut
