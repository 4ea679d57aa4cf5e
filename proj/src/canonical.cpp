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

#include <algorithm>
#include <utility>
#include <vector>

#include "refinement.hpp"
#include "tropaut/automorphism.hpp"

namespace tropaut {
namespace {

// Lexicographic minimisation of the multiplicity matrix, serialised column
// by column over the upper triangle: (0,0), (0,1), (1,1), (0,2), ... so that
// fixing the first j positions fixes a prefix of the code. Positions are
// filled cell by cell in refinement order, which every isomorphism
// respects, so the minimum is still a complete invariant.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, std::vector<int> mult, std::vector<int> cells)
      : n_(n), mult_(std::move(mult)), used_(n, false), position_(n, -1) {
    std::vector<int> sorted = std::move(cells);
    cell_of_vertex_ = sorted;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position_ = std::move(sorted);
  }

  CanonicalCode Run() {
    current_.push_back(static_cast<char>(n_));
    Visit(0);
    return best_;
  }

 private:
  void Visit(int j) {
    if (j == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::pair<std::string, VertexId>> options;
    for (VertexId v = 0; v < n_; ++v) {
      if (used_[v] || cell_of_vertex_[v] != cell_of_position_[j]) continue;
      std::string column;
      for (int i = 0; i < j; ++i) {
        column.push_back(static_cast<char>(mult_[position_[i] * n_ + v]));
      }
      column.push_back(static_cast<char>(mult_[v * n_ + v]));
      options.emplace_back(std::move(column), v);
    }
    std::sort(options.begin(), options.end());
    const std::size_t length = current_.size() + static_cast<std::size_t>(j) + 1;
    for (const auto& [column, v] : options) {
      current_ += column;
      if (have_best_ && current_.compare(0, length, best_, 0, length) > 0) {
        current_.resize(current_.size() - column.size());
        break;
      }
      used_[v] = true;
      position_[j] = v;
      Visit(j + 1);
      used_[v] = false;
      current_.resize(current_.size() - column.size());
    }
  }

  const int n_;
  const std::vector<int> mult_;
  std::vector<int> cell_of_vertex_;
  std::vector<int> cell_of_position_;
  std::vector<bool> used_;
  std::vector<VertexId> position_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_form(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kCanonicalVertexLimit) {
    throw InvalidArgument("canonical form limited to " +
                          std::to_string(kCanonicalVertexLimit) + " vertices");
  }
  std::vector<int> mult(static_cast<std::size_t>(n) * n, 0);
  for (const Endpoints& ends : g.edges()) {
    ++mult[ends.u * n + ends.v];
    if (!ends.is_loop()) ++mult[ends.v * n + ends.u];
  }
  if (std::any_of(mult.begin(), mult.end(), [](int m) { return m > 255; })) {
    throw InvalidArgument("edge multiplicity above 255 in canonical form");
  }
  std::vector<int> cells = internal::RefineCells(n, mult, {});
  return CanonicalSearch(n, std::move(mult), std::move(cells)).Run();
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    // Still enforce the guard so callers see consistent errors.
    if (a.num_vertices() > kCanonicalVertexLimit ||
        b.num_vertices() > kCanonicalVertexLimit) {
      throw InvalidArgument("canonical form limited to " +
                            std::to_string(kCanonicalVertexLimit) + " vertices");
    }
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::string to_hex(const CanonicalCode& code) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (const char c : code) {
    const auto byte = static_cast<unsigned char>(c);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return out;
}

}  // namespace tropaut
