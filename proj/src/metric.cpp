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
#include "tropaut/metric.hpp"

#include <algorithm>
#include <map>

#include "skeleton.hpp"

namespace tropaut {

MetricGraph::MetricGraph(Multigraph graph, std::vector<Rational> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
  if (static_cast<int>(lengths_.size()) != graph_.num_edges()) {
    throw InvalidArgument("expected " + std::to_string(graph_.num_edges()) +
                          " edge lengths, got " +
                          std::to_string(lengths_.size()));
  }
  for (std::size_t e = 0; e < lengths_.size(); ++e) {
    if (!lengths_[e].is_positive()) {
      throw InvalidArgument("length of edge " + std::to_string(e) +
                            " must be positive, got " + lengths_[e].to_string());
    }
  }
}

MetricGraph MetricGraph::Unit(Multigraph graph) {
  std::vector<Rational> lengths(graph.num_edges(), Rational(1));
  return MetricGraph(std::move(graph), std::move(lengths));
}

int genus(const MetricGraph& m) {
  if (!is_connected(m.graph())) {
    throw InvalidArgument("genus requires a connected metric graph");
  }
  return betti_number(m.graph());
}

namespace {

void RequireBoundShape(const MetricGraph& m, bool need_leafless) {
  const int g = genus(m);
  if (need_leafless && !is_leafless(m.graph())) {
    throw InvalidArgument("metric graph must be leafless");
  }
  if (g < 2) {
    throw DomainError("operation requires genus >= 2, got genus " +
                      std::to_string(g));
  }
}

struct WorkEdge {
  VertexId a = 0;
  VertexId b = 0;
  Rational length;
  std::vector<EdgeId> path;  // from a to b
  bool alive = true;
};

}  // namespace

SmoothedGraph smooth(const MetricGraph& m) {
  RequireBoundShape(m, /*need_leafless=*/false);
  const Multigraph& g = m.graph();
  std::vector<WorkEdge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Endpoints& ends = g.endpoints(e);
    edges.push_back({ends.u, ends.v, m.length(e), {e}, true});
  }
  std::vector<bool> alive(g.num_vertices(), true);

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!alive[v]) continue;
      std::vector<std::size_t> around;
      int valence = 0;
      bool has_loop = false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const WorkEdge& w = edges[i];
        if (!w.alive || (w.a != v && w.b != v)) continue;
        around.push_back(i);
        if (w.a == w.b) {
          valence += 2;
          has_loop = true;
        } else {
          ++valence;
        }
      }
      if (valence != 2 || has_loop) continue;
      // Merge the two edges through v into one edge between their far ends.
      WorkEdge& first = edges[around[0]];
      WorkEdge& second = edges[around[1]];
      WorkEdge merged;
      merged.a = first.a == v ? first.b : first.a;
      merged.b = second.a == v ? second.b : second.a;
      merged.length = first.length + second.length;
      merged.path = first.path;
      if (first.a == v) std::reverse(merged.path.begin(), merged.path.end());
      if (second.a == v) {
        merged.path.insert(merged.path.end(), second.path.begin(),
                           second.path.end());
      } else {
        merged.path.insert(merged.path.end(), second.path.rbegin(),
                           second.path.rend());
      }
      first.alive = second.alive = false;
      alive[v] = false;
      edges.push_back(std::move(merged));
      changed = true;
    }
  }

  std::vector<const WorkEdge*> kept;
  for (const WorkEdge& w : edges) {
    if (w.alive) kept.push_back(&w);
  }
  // Order edges by their smallest input edge so the result does not depend
  // on the merge order.
  std::sort(kept.begin(), kept.end(), [](const WorkEdge* x, const WorkEdge* y) {
    return *std::min_element(x->path.begin(), x->path.end()) <
           *std::min_element(y->path.begin(), y->path.end());
  });
  SmoothedGraph result;
  std::vector<VertexId> index(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!alive[v]) continue;
    index[v] = static_cast<VertexId>(result.vertex_origin.size());
    result.vertex_origin.push_back(v);
  }
  std::vector<Endpoints> ends;
  std::vector<Rational> lengths;
  for (const WorkEdge* w : kept) {
    // Store paths oriented from the smaller to the larger endpoint.
    std::vector<EdgeId> path = w->path;
    if (index[w->a] > index[w->b]) std::reverse(path.begin(), path.end());
    ends.emplace_back(index[w->a], index[w->b]);
    lengths.push_back(w->length);
    result.edge_paths.push_back(std::move(path));
  }
  result.metric =
      MetricGraph(Multigraph(static_cast<int>(result.vertex_origin.size()),
                             std::move(ends)),
                  std::move(lengths));
  return result;
}

CanonicalModel canonical_model(const MetricGraph& m) {
  const SmoothedGraph smoothed = smooth(m);
  const Multigraph& h = smoothed.metric.graph();
  CanonicalModel result;
  for (const VertexId v : smoothed.vertex_origin) {
    result.vertex_origin.emplace_back(v);
  }
  int next_vertex = h.num_vertices();
  std::vector<Endpoints> ends;
  std::vector<Rational> lengths;
  const Rational half(1, 2);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Endpoints& pair = h.endpoints(e);
    const Rational& length = smoothed.metric.length(e);
    if (!pair.is_loop()) {
      ends.push_back(pair);
      lengths.push_back(length);
      result.edge_origin.push_back({smoothed.edge_paths[e], 0});
      continue;
    }
    const VertexId midpoint = next_vertex++;
    result.vertex_origin.emplace_back(std::nullopt);
    for (const int which : {1, 2}) {
      ends.emplace_back(pair.u, midpoint);
      lengths.push_back(length * half);
      result.edge_origin.push_back({smoothed.edge_paths[e], which});
    }
  }
  result.model = MetricGraph(Multigraph(next_vertex, std::move(ends)),
                             std::move(lengths));
  return result;
}

IsometryGroup isometry_group(const MetricGraph& m, std::uint64_t element_cap) {
  IsometryGroup result;
  result.model = canonical_model(m);
  const std::vector<Rational>& lengths = result.model.model.lengths();
  std::vector<Rational> distinct = lengths;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> colors;
  colors.reserve(lengths.size());
  for (const Rational& length : lengths) {
    colors.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), length) -
        distinct.begin()));
  }
  result.group = colored_automorphisms(result.model.model.graph(), {}, colors,
                                       element_cap);
  return result;
}

ExtremalClass classify_metric_extremal(const MetricGraph& m) {
  const internal::Skeleton skeleton = internal::DescribeSkeleton(m);
  ExtremalClass result;
  const int g = skeleton.genus;
  switch (skeleton.kind) {
    case internal::SkeletonKind::kBanana:
      if ((g == 2 || g == 3) && internal::AllEqual(skeleton.edge_lengths)) {
        result.tag = ExtremalTag::kBanana;
      }
      break;
    case internal::SkeletonKind::kBouquet:
      if (g >= 3 && internal::AllEqual(skeleton.loop_lengths)) {
        result.tag = ExtremalTag::kBouquet;
      }
      break;
    case internal::SkeletonKind::kLollipop:
      if (g >= 3 && internal::AllEqual(skeleton.loop_lengths) &&
          internal::AllEqual(skeleton.bridge_lengths)) {
        result.tag = ExtremalTag::kLollipop;
      }
      break;
    default:
      break;
  }
  return result;
}

MetricBoundReport verify_metric_bound(const MetricGraph& m) {
  RequireBoundShape(m, /*need_leafless=*/true);
  MetricBoundReport report;
  report.genus = genus(m);
  report.order = isometry_group(m, /*element_cap=*/0).group.order;
  report.bound = hurwitz_bound(report.genus);
  report.ok = report.order <= report.bound;
  report.extremal = classify_metric_extremal(m);
  return report;
}

MetricGraph subdivide_metric(const MetricGraph& m,
                             const std::vector<std::vector<Rational>>& pieces) {
  const Multigraph& g = m.graph();
  if (static_cast<int>(pieces.size()) != g.num_edges()) {
    throw InvalidArgument("need one piece list per edge");
  }
  std::vector<int> counts;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Rational total;
    for (const Rational& piece : pieces[e]) total += piece;
    if (pieces[e].empty() || total != m.length(e)) {
      throw InvalidArgument("pieces of edge " + std::to_string(e) +
                            " do not sum to its length");
    }
    counts.push_back(static_cast<int>(pieces[e].size()));
  }
  Subdivision sub = subdivide(g, counts);
  std::vector<Rational> lengths(sub.graph.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (std::size_t i = 0; i < pieces[e].size(); ++i) {
      lengths[sub.edge_paths[e][i]] = pieces[e][i];
    }
  }
  return MetricGraph(std::move(sub.graph), std::move(lengths));
}

MetricGraph scale(const MetricGraph& m, const Rational& factor) {
  std::vector<Rational> lengths;
  for (const Rational& length : m.lengths()) lengths.push_back(length * factor);
  return MetricGraph(m.graph(), std::move(lengths));
}

}  // namespace tropaut
