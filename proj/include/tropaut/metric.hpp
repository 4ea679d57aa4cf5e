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
#ifndef TROPAUT_METRIC_HPP_
#define TROPAUT_METRIC_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tropaut/automorphism.hpp"
#include "tropaut/extremal.hpp"
#include "tropaut/multigraph.hpp"
#include "tropaut/rational.hpp"

namespace tropaut {

// A model (G, l) of a metric graph: a multigraph and a positive rational
// length on every edge.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(Multigraph graph, std::vector<Rational> lengths);
  // Every edge of length one.
  static MetricGraph Unit(Multigraph graph);

  const Multigraph& graph() const { return graph_; }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& length(EdgeId e) const { return lengths_.at(e); }

 private:
  Multigraph graph_;
  std::vector<Rational> lengths_;
};

// Topological genus; throws InvalidArgument on disconnected input.
int genus(const MetricGraph& m);

// Model with every suppressible 2-valent vertex merged away.
struct SmoothedGraph {
  MetricGraph metric;
  std::vector<VertexId> vertex_origin;         // surviving input vertex
  std::vector<std::vector<EdgeId>> edge_paths;  // input edges, in path order
};

// Requires a connected graph of genus >= 2. Leaves are kept as vertices.
SmoothedGraph smooth(const MetricGraph& m);

// Provenance of one edge of the canonical model.
struct ModelEdgeOrigin {
  std::vector<EdgeId> path;  // input edges of the smoothed edge it lies on
  int half = 0;              // 0: whole edge; 1 or 2: half of a split loop
};

// Loopless model whose vertices are the points of valence != 2 and the
// midpoints of loops. Each loop of length L becomes two parallel edges of
// length L/2.
struct CanonicalModel {
  MetricGraph model;
  // Input vertex behind each model vertex; nullopt for a loop midpoint.
  std::vector<std::optional<VertexId>> vertex_origin;
  std::vector<ModelEdgeOrigin> edge_origin;
};

CanonicalModel canonical_model(const MetricGraph& m);

// Aut(Gamma): length-preserving automorphisms of the canonical model. The
// model is loopless, so each isometry is determined by its GraphMap.
struct IsometryGroup {
  CanonicalModel model;
  AutomorphismGroup group;
};

IsometryGroup isometry_group(const MetricGraph& m,
                             std::uint64_t element_cap = kDefaultElementCap);

struct MetricBoundReport {
  int genus = 0;
  std::uint64_t order = 0;
  std::uint64_t bound = 0;
  bool ok = false;
  ExtremalClass extremal;
};

// Requires a connected leafless metric graph of genus >= 2.
MetricBoundReport verify_metric_bound(const MetricGraph& m);

// Structural recognition of the equality cases for metric graphs: banana
// (g = 2, 3) or bouquet (g >= 3) with one common length, or lollipop
// (g >= 3) with common loop and common bridge lengths.
ExtremalClass classify_metric_extremal(const MetricGraph& m);

// Subdivides every edge e into counts[e] pieces of the given lengths, which
// must sum to the original length. Used for model-independence checks.
MetricGraph subdivide_metric(const MetricGraph& m,
                             const std::vector<std::vector<Rational>>& pieces);

MetricGraph scale(const MetricGraph& m, const Rational& factor);

}  // namespace tropaut

#endif  // TROPAUT_METRIC_HPP_
