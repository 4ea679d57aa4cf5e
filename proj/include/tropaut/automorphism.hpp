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

#ifndef TROPAUT_AUTOMORPHISM_HPP_
#define TROPAUT_AUTOMORPHISM_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropaut/multigraph.hpp"

namespace tropaut {

// A pair of permutations (f_V, f_E). It is an automorphism when every edge
// e with endpoints {a, b} is sent to an edge with endpoints {f_V(a), f_V(b)}.
struct GraphMap {
  std::vector<VertexId> vertex_perm;
  std::vector<EdgeId> edge_perm;

  static GraphMap Identity(const Multigraph& g);
  bool is_identity() const;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
  friend auto operator<=>(const GraphMap&, const GraphMap&) = default;
};

// (outer o inner)(c) = outer(inner(c)).
GraphMap compose(const GraphMap& outer, const GraphMap& inner);
GraphMap inverse(const GraphMap& f);

// Cells fixed pointwise by a stabilizer.
struct CellSet {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

inline constexpr std::uint64_t kDefaultElementCap = 10000;

struct AutomorphismGroup {
  std::uint64_t order = 1;
  std::vector<GraphMap> generators;
  // Every element, present iff order <= the element cap of the search.
  std::optional<std::vector<GraphMap>> elements;
};

// Throws InvalidArgument when the permutation sizes do not match `g`.
bool is_automorphism(const Multigraph& g, const GraphMap& f);

// Aut(G): backtracking over vertex images, pruned by refined vertex
// invariants; every complete vertex map admits prod (class size)! edge
// bijections over its parallel classes.
AutomorphismGroup automorphisms(const Multigraph& g,
                                std::uint64_t element_cap = kDefaultElementCap);

// Automorphisms that preserve the given vertex and edge colors. Empty spans
// mean "uncolored". This is the engine behind stabilizers and isometries.
AutomorphismGroup colored_automorphisms(
    const Multigraph& g, std::span<const int> vertex_colors,
    std::span<const int> edge_colors,
    std::uint64_t element_cap = kDefaultElementCap);

// Aut(G)_S: automorphisms fixing every listed vertex and edge.
AutomorphismGroup stabilizer(const Multigraph& g, const CellSet& fixed,
                             std::uint64_t element_cap = kDefaultElementCap);

// Independent count: sum over all n! vertex permutations of the product over
// parallel classes of [mult preserved] * mult!. Requires n <= 8.
std::uint64_t automorphism_count_oracle(const Multigraph& g);
inline constexpr int kOracleVertexLimit = 8;

// The map induced on G/S by an automorphism f that leaves S invariant.
GraphMap quotient_map(const Multigraph& g, std::span<const EdgeId> contracted,
                      const GraphMap& f);
GraphMap quotient_map(const Multigraph& g, const Contraction& quotient,
                      std::span<const EdgeId> contracted, const GraphMap& f);

// Byte string; equal for two graphs iff they are isomorphic. Requires n <= 10.
using CanonicalCode = std::string;
inline constexpr int kCanonicalVertexLimit = 10;

CanonicalCode canonical_form(const Multigraph& g);
bool are_isomorphic(const Multigraph& a, const Multigraph& b);
// Lowercase hex rendering of a code, for reports.
std::string to_hex(const CanonicalCode& code);

// Checks m! n! <= l! (m + n - l)! exactly. Requires m, n >= l >= 1.
bool factorial_inequality_check(int l, int m, int n);

// Restricting Aut(G)_{x, e_1..e_d} to the leafless core G'' of G minus the
// closed star of x. Thrown when G'' is empty.
class EmptyCoreError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct RestrictionWitness {
  Subgraph core;                // G'' with its embedding into G
  VertexId anchor = 0;          // y, as a vertex of the core
  std::uint64_t stabilizer_order = 0;       // #Aut(G)_{x, e_1..e_d}
  std::uint64_t core_stabilizer_order = 0;  // #Aut(G'')_y
  std::vector<GraphMap> restrictions;       // one per stabilizer element
  bool injective = false;
};

RestrictionWitness restriction_to_core(
    const Multigraph& g, VertexId x,
    std::uint64_t element_cap = 1'000'000);

// Closed star of x: the vertex and every edge incident to it.
CellSet closed_star(const Multigraph& g, VertexId x);

// The set S = (E_G \ E_G'') plus the endpoints of those edges.
CellSet outside_core_cells(const Multigraph& g, const Subgraph& core);

}  // namespace tropaut

#endif  // TROPAUT_AUTOMORPHISM_HPP_
