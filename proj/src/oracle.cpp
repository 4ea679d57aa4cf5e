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

// Brute-force automorphism count. Deliberately shares nothing with the
// backtracking search beyond the graph type.

#include <algorithm>
#include <numeric>
#include <vector>

#include "checked_math.hpp"
#include "tropaut/automorphism.hpp"

namespace tropaut {

std::uint64_t automorphism_count_oracle(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kOracleVertexLimit) {
    throw InvalidArgument("oracle limited to " +
                          std::to_string(kOracleVertexLimit) + " vertices");
  }
  std::vector<int> mult(static_cast<std::size_t>(n) * n, 0);
  for (const Endpoints& ends : g.edges()) {
    ++mult[ends.u * n + ends.v];
    if (!ends.is_loop()) ++mult[ends.v * n + ends.u];
  }
  std::vector<VertexId> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t ways = 1;
    for (int u = 0; u < n && ways != 0; ++u) {
      for (int v = u; v < n; ++v) {
        const int m = mult[u * n + v];
        if (m == 0) continue;
        if (mult[sigma[u] * n + sigma[v]] != m) {
          ways = 0;
          break;
        }
        ways = internal::CheckedMul(ways, internal::Factorial(m));
      }
    }
    total = internal::CheckedAdd(total, ways);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace tropaut
