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
#ifndef TROPAUT_FAMILIES_HPP_
#define TROPAUT_FAMILIES_HPP_

#include <string_view>

#include "tropaut/extremal.hpp"
#include "tropaut/metric.hpp"
#include "tropaut/multigraph.hpp"

namespace tropaut {

// Two vertices joined by g+1 parallel edges.
Multigraph banana(int g);
// One vertex carrying g loops.
Multigraph bouquet(int g);
// Star with hub 0 and spokes 1..g, one loop per spoke. Edges 0..g-1 are the
// bridges (0, i), edges g..2g-1 the loops at spoke i.
Multigraph lollipop(int g);

// The graphs ruled out in the equality analysis of the bound, identified
// from the constraints they must satisfy:
//   h1: K4, the loopless bridgeless 3-regular graph on 4 vertices with
//       24 automorphisms;
//   h2: 4-cycle 0-1-2-3 with edges 0-1 and 2-3 doubled (16 automorphisms);
//   h:  u=0, x=1, v=2 with u-x and x-v doubled, plus doubled paths u-3 and
//       v-4 (32 automorphisms).
Multigraph h1();
Multigraph h2();
Multigraph h();

// Builds a named family member: banana, bouquet, lollipop (using g), or h1,
// h2, h (g ignored).
Multigraph make_family(std::string_view name, int g);

// Attaches n unit-length pendant edges at vertex v.
MetricGraph leaf_burst(const MetricGraph& m, VertexId v, int n);

// Recognises the banana, bouquet and lollipop classes from the smoothed graph.
// Requires a connected leafless graph of Betti number >= 2.
ExtremalClass classify_extremal(const Multigraph& g);

// Recognises the pairs (G, x) with #Aut(G)_x = 2^g g!. Requires a connected
// leafless graph.
FixedPointClass classify_fixed_point_extremal(const Multigraph& g, VertexId x);

}  // namespace tropaut

#endif  // TROPAUT_FAMILIES_HPP_
