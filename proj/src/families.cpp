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
#include "tropaut/families.hpp"

#include <string>

#include "skeleton.hpp"

namespace tropaut {

Multigraph banana(int g) {
  if (g < 1) throw InvalidArgument("banana needs g >= 1");
  return Multigraph(2, std::vector<Endpoints>(g + 1, Endpoints(0, 1)));
}

Multigraph bouquet(int g) {
  if (g < 1) throw InvalidArgument("bouquet needs g >= 1");
  return Multigraph(1, std::vector<Endpoints>(g, Endpoints(0, 0)));
}

Multigraph lollipop(int g) {
  if (g < 2) throw InvalidArgument("lollipop needs g >= 2");
  std::vector<Endpoints> edges;
  for (VertexId spoke = 1; spoke <= g; ++spoke) edges.emplace_back(0, spoke);
  for (VertexId spoke = 1; spoke <= g; ++spoke) edges.emplace_back(spoke, spoke);
  return Multigraph(g + 1, std::move(edges));
}

Multigraph h1() {
  return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multigraph h2() {
  return Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}});
}

Multigraph h() {
  return Multigraph(
      5, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 3}, {0, 3}, {2, 4}, {2, 4}});
}

Multigraph make_family(std::string_view name, int g) {
  if (name == "banana") return banana(g);
  if (name == "bouquet") return bouquet(g);
  if (name == "lollipop") return lollipop(g);
  if (name == "h1") return h1();
  if (name == "h2") return h2();
  if (name == "h") return h();
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

MetricGraph leaf_burst(const MetricGraph& m, VertexId v, int n) {
  if (!m.graph().is_valid_vertex(v)) {
    throw InvalidArgument("invalid vertex index " + std::to_string(v));
  }
  if (n < 1) throw InvalidArgument("leaf_burst needs n >= 1");
  std::vector<Endpoints> edges(m.graph().edges().begin(),
                               m.graph().edges().end());
  std::vector<Rational> lengths = m.lengths();
  const int base = m.graph().num_vertices();
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(v, base + i);
    lengths.emplace_back(1);
  }
  return MetricGraph(Multigraph(base + n, std::move(edges)),
                     std::move(lengths));
}

namespace {

void RequireConnectedLeafless(const Multigraph& g) {
  if (!is_connected(g)) throw InvalidArgument("graph must be connected");
  if (!is_leafless(g)) throw InvalidArgument("graph must be leafless");
}

// Chain lengths of a unit-length model are integers.
int Count(const Rational& r) { return static_cast<int>(r.numerator()); }

}  // namespace

ExtremalClass classify_extremal(const Multigraph& g) {
  RequireConnectedLeafless(g);
  const int betti = betti_number(g);
  if (betti < 2) {
    throw DomainError("classification needs Betti number >= 2, got " +
                      std::to_string(betti));
  }
  const internal::Skeleton s =
      internal::DescribeSkeleton(MetricGraph::Unit(g));
  ExtremalClass result;
  switch (s.kind) {
    case internal::SkeletonKind::kBanana:
      if ((betti == 2 || betti == 3) && internal::AllEqual(s.edge_lengths)) {
        result.tag = ExtremalTag::kBanana;
        result.counts = {Count(s.edge_lengths.front())};
      }
      break;
    case internal::SkeletonKind::kBouquet:
      if (betti >= 3 && internal::AllEqual(s.loop_lengths) &&
          Count(s.loop_lengths.front()) >= 2) {
        result.tag = ExtremalTag::kBouquet;
        result.counts = {Count(s.loop_lengths.front())};
      }
      break;
    case internal::SkeletonKind::kLollipop:
      if (betti >= 3 && internal::AllEqual(s.loop_lengths) &&
          internal::AllEqual(s.bridge_lengths) &&
          Count(s.loop_lengths.front()) >= 2) {
        result.tag = ExtremalTag::kLollipop;
        result.counts = {Count(s.loop_lengths.front()),
                         Count(s.bridge_lengths.front())};
      }
      break;
    default:
      break;
  }
  return result;
}

FixedPointClass classify_fixed_point_extremal(const Multigraph& g,
                                              VertexId x) {
  if (!g.is_valid_vertex(x)) {
    throw InvalidArgument("invalid vertex index " + std::to_string(x));
  }
  RequireConnectedLeafless(g);
  const int betti = betti_number(g);
  if (betti == 0) {
    // A connected leafless graph of Betti number 0 is a single vertex.
    return FixedPointClass::kTrivial;
  }
  if (betti == 1) {
    // Leafless and unicyclic means a cycle; length one is the bare loop,
    // whose only automorphism is the identity.
    return g.num_vertices() >= 2 ? FixedPointClass::kBanana1Subdivision
                                 : FixedPointClass::kNone;
  }
  const internal::Skeleton s =
      internal::DescribeSkeleton(MetricGraph::Unit(g));
  const bool loops_ok = internal::AllEqual(s.loop_lengths) &&
                        !s.loop_lengths.empty() &&
                        Count(s.loop_lengths.front()) >= 2;
  switch (s.kind) {
    case internal::SkeletonKind::kBouquet:
      if (loops_ok && s.hub == x) return FixedPointClass::kBouquetAtCutVertex;
      break;
    case internal::SkeletonKind::kLollipop:
      if (loops_ok && internal::AllEqual(s.bridge_lengths) && s.hub == x) {
        return FixedPointClass::kLollipopAtStarCenter;
      }
      break;
    case internal::SkeletonKind::kDumbbell: {
      // lollipop(2) with both bridges cut into c pieces: the chain between
      // the loops has length 2c and x sits at its middle.
      const std::size_t length = s.bridge_path.size() - 1;
      if (loops_ok && length % 2 == 0 && s.bridge_path[length / 2] == x) {
        return FixedPointClass::kLollipopAtStarCenter;
      }
      break;
    }
    default:
      break;
  }
  return FixedPointClass::kNone;
}

}  // namespace tropaut
