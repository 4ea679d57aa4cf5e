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
#include "skeleton.hpp"

#include <algorithm>

namespace tropaut::internal {

bool AllEqual(const std::vector<Rational>& values) {
  return std::adjacent_find(values.begin(), values.end(),
                            std::not_equal_to<>()) == values.end();
}

Skeleton DescribeSkeleton(const MetricGraph& m) {
  const SmoothedGraph smoothed = smooth(m);
  const Multigraph& h = smoothed.metric.graph();
  Skeleton s;
  s.genus = betti_number(h);
  const int g = s.genus;

  if (h.num_vertices() == 1) {
    s.kind = SkeletonKind::kBouquet;
    s.hub = smoothed.vertex_origin[0];
    s.loop_lengths = smoothed.metric.lengths();
    return s;
  }
  if (h.num_vertices() == 2 && h.multiplicity(0, 1) == h.num_edges()) {
    s.kind = SkeletonKind::kBanana;
    s.edge_lengths = smoothed.metric.lengths();
    return s;
  }

  // Lollipop: one loopless hub joined by a single edge to each of g spokes,
  // every spoke carrying exactly one loop. With g = 2 the hub is 2-valent
  // and has been smoothed away, leaving a dumbbell.
  auto spoke_shape = [&](VertexId v, VertexId hub) {
    int loops = 0;
    int links = 0;
    for (const EdgeId e : h.incident_edges(v)) {
      const Endpoints& ends = h.endpoints(e);
      if (ends.is_loop()) {
        ++loops;
      } else if (ends.other(v) == hub) {
        ++links;
      } else {
        return false;
      }
    }
    return loops == 1 && links == 1;
  };
  auto collect = [&](Skeleton* out) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      auto& bucket =
          h.endpoints(e).is_loop() ? out->loop_lengths : out->bridge_lengths;
      bucket.push_back(smoothed.metric.length(e));
    }
  };

  if (g == 2 && h.num_vertices() == 2 && spoke_shape(0, 1) &&
      spoke_shape(1, 0)) {
    s.kind = SkeletonKind::kDumbbell;
    collect(&s);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (h.endpoints(e).is_loop()) continue;
      // Paths are oriented from the smaller smoothed endpoint (vertex 0).
      VertexId at = smoothed.vertex_origin[0];
      s.bridge_path.push_back(at);
      for (const EdgeId input : smoothed.edge_paths[e]) {
        at = m.graph().endpoints(input).other(at);
        s.bridge_path.push_back(at);
      }
    }
    return s;
  }

  if (g >= 3 && h.num_vertices() == g + 1) {
    for (VertexId hub = 0; hub < h.num_vertices(); ++hub) {
      if (loop_count(h, hub) != 0 || degree(h, hub) != g) continue;
      bool all_spokes = true;
      for (VertexId v = 0; v < h.num_vertices() && all_spokes; ++v) {
        if (v != hub) all_spokes = spoke_shape(v, hub);
      }
      if (all_spokes) {
        s.kind = SkeletonKind::kLollipop;
        s.hub = smoothed.vertex_origin[hub];
        collect(&s);
        return s;
      }
    }
  }
  return s;
}

}  // namespace tropaut::internal
