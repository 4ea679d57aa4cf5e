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
#ifndef TROPAUT_ENUMERATION_HPP_
#define TROPAUT_ENUMERATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropaut/automorphism.hpp"
#include "tropaut/extremal.hpp"
#include "tropaut/metric.hpp"
#include "tropaut/multigraph.hpp"

namespace tropaut {

// Connected multigraphs of a fixed Betti number with every degree at least
// min_degree (2 or 3) and at most max_vertices vertices. For min_degree 3
// the handshake identity sum(deg - 2) = 2g - 2 caps the vertex count at
// 2g - 2, and the effective bound is clamped accordingly.
struct EnumSpec {
  int betti = 2;
  int max_vertices = 4;
  int min_degree = 2;
};

inline constexpr int kEnumerationVertexLimit = 8;

struct EnumeratedGraph {
  CanonicalCode code;
  Multigraph graph;
};

// One representative per isomorphism class, sorted by canonical code. For
// each vertex count n the n + g - 1 edges are distributed over vertex pairs
// and loop slots so as to realise every admissible degree sequence (sorted
// non-increasing); candidates are deduplicated by canonical form.
// `jobs` threads compute canonical forms.
std::vector<EnumeratedGraph> enumerate_leafless(const EnumSpec& spec,
                                                int jobs = 1);

// Every connected multigraph (loops allowed, leaves allowed) with at most
// max_vertices vertices and at most max_edges edges, up to isomorphism.
std::vector<EnumeratedGraph> enumerate_connected(int max_vertices,
                                                 int max_edges);

struct GraphFinding {
  CanonicalCode code;
  Multigraph graph;
  std::uint64_t order = 0;
  ExtremalClass extremal;
  std::string detail;
};

struct VerificationReport {
  EnumSpec spec;
  std::uint64_t graph_count = 0;
  std::uint64_t max_aut_order = 0;
  std::uint64_t bound = 0;
  std::vector<GraphFinding> violations;  // #Aut(G) > bound
  std::vector<GraphFinding> extremal;    // #Aut(G) == bound
  // Graphs where "has an extremal tag" and "attains the bound"
  // disagree, in either direction.
  std::vector<GraphFinding> classification_mismatches;
  std::int64_t runtime_ms = 0;

  bool ok() const {
    return violations.empty() && classification_mismatches.empty();
  }
};

// Requires spec.betti >= 2.
VerificationReport verify_bound(const EnumSpec& spec, int jobs = 1);

struct FixedPointReport {
  VertexId vertex = 0;
  int betti = 0;
  std::uint64_t order = 0;  // #Aut(G)_x
  std::uint64_t bound = 0;  // 2^g g!
  int components = 0;       // components of G minus x
  int incident_edges = 0;   // d
  bool bridgeless = false;
  // 2^(g-d+1) d! (g-d+1)!, when G is bridgeless and G minus x has at most
  // one component.
  std::optional<std::uint64_t> refined_bound;
  FixedPointClass extremal = FixedPointClass::kNone;

  bool ok() const {
    return order <= bound && (!refined_bound || order <= *refined_bound);
  }
};

// Requires a connected leafless graph.
FixedPointReport fixed_point_report(const Multigraph& g, VertexId x);

struct FixedPointFinding {
  CanonicalCode code;
  Multigraph graph;
  FixedPointReport report;
  std::string detail;
};

struct FixedPointSweepReport {
  EnumSpec spec;
  std::uint64_t graph_count = 0;
  std::uint64_t pair_count = 0;
  std::uint64_t refined_checked = 0;
  std::vector<FixedPointFinding> violations;
  std::vector<FixedPointFinding> equality;
  std::vector<FixedPointFinding> classification_mismatches;
  std::int64_t runtime_ms = 0;

  bool ok() const {
    return violations.empty() && classification_mismatches.empty();
  }
};

// Requires spec.betti >= 1.
FixedPointSweepReport verify_fixed_point_bound(const EnumSpec& spec,
                                               int jobs = 1);

struct RandomMetricOptions {
  std::vector<Rational> palette = {Rational(1), Rational(2), Rational(3),
                                   Rational(1, 2)};
  // 0 picks a small default per genus.
  int max_vertices = 0;
};

struct MetricTrial {
  MetricGraph metric;
  MetricBoundReport report;
};

struct RandomMetricReport {
  int genus = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int max_vertices = 0;
  std::vector<Rational> palette;
  int ok_count = 0;
  int attained = 0;  // trials reaching the bound
  std::uint64_t max_order = 0;
  std::uint64_t bound = 0;
  std::vector<MetricTrial> violations;
  // Trials where the structural class and bound equality disagree.
  std::vector<MetricTrial> classification_mismatches;

  bool ok() const {
    return violations.empty() && classification_mismatches.empty();
  }
};

// Requires 2 <= g <= 5. Deterministic for a given seed.
RandomMetricReport random_metric_sweep(int g, int trials, std::uint64_t seed,
                                       const RandomMetricOptions& options = {});

}  // namespace tropaut

#endif  // TROPAUT_ENUMERATION_HPP_
