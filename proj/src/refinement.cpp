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

#include "refinement.hpp"

#include <algorithm>
#include <utility>

namespace tropaut::internal {
namespace {

std::vector<int> RankSignatures(const std::vector<std::vector<int>>& keys) {
  std::vector<std::vector<int>> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> rank(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    rank[v] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
        distinct.begin());
  }
  return rank;
}

int CountCells(const std::vector<int>& cells) {
  return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
}

}  // namespace

std::vector<int> RefineCells(int n, std::span<const int> profile,
                             std::span<const int> initial) {
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> row;
    for (int w = 0; w < n; ++w) {
      if (w != v && profile[v * n + w] != 0) row.push_back(profile[v * n + w]);
    }
    std::sort(row.begin(), row.end());
    keys[v] = {initial.empty() ? 0 : initial[v], profile[v * n + v]};
    keys[v].insert(keys[v].end(), row.begin(), row.end());
  }
  std::vector<int> cells = RankSignatures(keys);
  int count = CountCells(cells);

  while (count < n) {
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> around;
      for (int w = 0; w < n; ++w) {
        if (w != v && profile[v * n + w] != 0) {
          around.emplace_back(profile[v * n + w], cells[w]);
        }
      }
      std::sort(around.begin(), around.end());
      keys[v].assign(1, cells[v]);
      for (const auto& [p, c] : around) {
        keys[v].push_back(p);
        keys[v].push_back(c);
      }
    }
    std::vector<int> refined = RankSignatures(keys);
    const int refined_count = CountCells(refined);
    cells = std::move(refined);
    if (refined_count == count) break;
    count = refined_count;
  }
  return cells;
}

}  // namespace tropaut::internal
