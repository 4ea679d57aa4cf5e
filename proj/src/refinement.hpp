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

#ifndef TROPAUT_SRC_REFINEMENT_HPP_
#define TROPAUT_SRC_REFINEMENT_HPP_

#include <span>
#include <vector>

namespace tropaut::internal {

// Colour refinement on a complete "pair profile" matrix (n x n, symmetric,
// 0 meaning no adjacency). Starts from `initial` and splits cells by the
// multiset of (profile, neighbour cell) until stable. Cell numbers are
// ranks of sorted signatures, so they depend only on the values passed in,
// never on vertex indices.
std::vector<int> RefineCells(int n, std::span<const int> profile,
                             std::span<const int> initial);

}  // namespace tropaut::internal

#endif  // TROPAUT_SRC_REFINEMENT_HPP_
