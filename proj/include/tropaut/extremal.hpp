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
#ifndef TROPAUT_EXTREMAL_HPP_
#define TROPAUT_EXTREMAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tropaut {

// Shapes attaining the automorphism bound of a connected leafless graph of
// Betti number g >= 2:
//   A: banana(g) with all g+1 edges subdivided equally, g in {2, 3};
//   B: bouquet(g) with all loops subdivided equally (>= 2 pieces), g >= 3;
//   C: lollipop(g) with equal loop (>= 2) and equal bridge (>= 1) pieces,
//      g >= 3.
enum class ExtremalTag { kNone, kBanana, kBouquet, kLollipop };

struct ExtremalClass {
  ExtremalTag tag = ExtremalTag::kNone;
  // Subdivision counts: {c} for A and B, {loop count, bridge count} for C.
  // Empty for metric classification.
  std::vector<int> counts;

  friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

std::string_view to_string(ExtremalTag tag);

// Pairs (G, x) attaining #Aut(G)_x = 2^g g!.
enum class FixedPointClass {
  kNone,
  kTrivial,               // single vertex, no edges
  kBanana1Subdivision,    // cycle of length >= 2, any vertex
  kBouquetAtCutVertex,    // class B shape (g >= 2) at its hub
  kLollipopAtStarCenter,  // class C shape (g >= 2) at the star centre
};

std::string_view to_string(FixedPointClass kind);

// 12 for g = 2 and 2^g g! for g >= 3. Throws DomainError for g < 2.
std::uint64_t hurwitz_bound(int g);
// 2^g g! for every g >= 0.
std::uint64_t fixed_point_bound(int g);
// 2^(g-d+1) d! (g-d+1)!, requires g - d + 1 >= 0.
std::uint64_t refined_fixed_point_bound(int g, int d);

}  // namespace tropaut

#endif  // TROPAUT_EXTREMAL_HPP_
