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

#include "tropaut/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "checked_math.hpp"
#include "refinement.hpp"

namespace tropaut {

GraphMap GraphMap::Identity(const Multigraph& g) {
  GraphMap f;
  f.vertex_perm.resize(g.num_vertices());
  f.edge_perm.resize(g.num_edges());
  std::iota(f.vertex_perm.begin(), f.vertex_perm.end(), 0);
  std::iota(f.edge_perm.begin(), f.edge_perm.end(), 0);
  return f;
}

bool GraphMap::is_identity() const {
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) {
    if (vertex_perm[i] != static_cast<VertexId>(i)) return false;
  }
  for (std::size_t i = 0; i < edge_perm.size(); ++i) {
    if (edge_perm[i] != static_cast<EdgeId>(i)) return false;
  }
  return true;
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  if (outer.vertex_perm.size() != inner.vertex_perm.size() ||
      outer.edge_perm.size() != inner.edge_perm.size()) {
    throw InvalidArgument("cannot compose maps of different sizes");
  }
  GraphMap f;
  f.vertex_perm.resize(inner.vertex_perm.size());
  f.edge_perm.resize(inner.edge_perm.size());
  for (std::size_t v = 0; v < inner.vertex_perm.size(); ++v) {
    f.vertex_perm[v] = outer.vertex_perm[inner.vertex_perm[v]];
  }
  for (std::size_t e = 0; e < inner.edge_perm.size(); ++e) {
    f.edge_perm[e] = outer.edge_perm[inner.edge_perm[e]];
  }
  return f;
}

GraphMap inverse(const GraphMap& f) {
  GraphMap inv;
  inv.vertex_perm.resize(f.vertex_perm.size());
  inv.edge_perm.resize(f.edge_perm.size());
  for (std::size_t v = 0; v < f.vertex_perm.size(); ++v) {
    inv.vertex_perm[f.vertex_perm[v]] = static_cast<VertexId>(v);
  }
  for (std::size_t e = 0; e < f.edge_perm.size(); ++e) {
    inv.edge_perm[f.edge_perm[e]] = static_cast<EdgeId>(e);
  }
  return inv;
}

namespace {

template <typename T>
bool IsPermutation(const std::vector<T>& images) {
  std::vector<bool> hit(images.size(), false);
  for (const T image : images) {
    if (image < 0 || static_cast<std::size_t>(image) >= images.size() ||
        hit[image]) {
      return false;
    }
    hit[image] = true;
  }
  return true;
}

}  // namespace

bool is_automorphism(const Multigraph& g, const GraphMap& f) {
  if (static_cast<int>(f.vertex_perm.size()) != g.num_vertices() ||
      static_cast<int>(f.edge_perm.size()) != g.num_edges()) {
    throw InvalidArgument("map size does not match the graph");
  }
  if (!IsPermutation(f.vertex_perm) || !IsPermutation(f.edge_perm)) {
    return false;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Endpoints& ends = g.endpoints(e);
    const Endpoints moved(f.vertex_perm[ends.u], f.vertex_perm[ends.v]);
    if (g.endpoints(f.edge_perm[e]) != moved) return false;
  }
  return true;
}

namespace {

// Backtracking search for colour-preserving automorphisms.
//
// Edges are grouped into blocks: the edges of one parallel class carrying
// one colour. A vertex map is admissible iff it sends every pair {u, v} to a
// pair with the same sorted colour multiset ("profile"); each admissible
// vertex map then extends in exactly prod_blocks (block size)! ways.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Multigraph& g, std::span<const int> vertex_colors,
                     std::span<const int> edge_colors, std::uint64_t cap)
      : g_(g), n_(g.num_vertices()), cap_(cap) {
    if (!vertex_colors.empty() &&
        static_cast<int>(vertex_colors.size()) != n_) {
      throw InvalidArgument("vertex colouring has the wrong size");
    }
    if (!edge_colors.empty() &&
        static_cast<int>(edge_colors.size()) != g.num_edges()) {
      throw InvalidArgument("edge colouring has the wrong size");
    }
    BuildBlocks(edge_colors);
    BuildProfiles();
    std::vector<int> initial(n_, 0);
    if (!vertex_colors.empty()) {
      initial.assign(vertex_colors.begin(), vertex_colors.end());
    }
    cell_ = internal::RefineCells(n_, profile_, initial);
    BuildOrder();
  }

  AutomorphismGroup Run() {
    kernel_order_ = 1;
    for (const Block& block : blocks_) {
      kernel_order_ =
          internal::CheckedMul(kernel_order_, internal::Factorial(block.edges.size()));
    }
    image_.assign(n_, -1);
    used_.assign(n_, false);
    Extend(0);

    AutomorphismGroup group;
    group.order = internal::CheckedMul(vertex_map_count_, kernel_order_);
    group.generators = std::move(vertex_generators_);
    for (const Block& block : blocks_) {
      const std::size_t size = block.edges.size();
      if (size < 2) continue;
      GraphMap swap = GraphMap::Identity(g_);
      std::swap(swap.edge_perm[block.edges[0]], swap.edge_perm[block.edges[1]]);
      group.generators.push_back(std::move(swap));
      if (size > 2) {
        GraphMap cycle = GraphMap::Identity(g_);
        for (std::size_t i = 0; i < size; ++i) {
          cycle.edge_perm[block.edges[i]] = block.edges[(i + 1) % size];
        }
        group.generators.push_back(std::move(cycle));
      }
    }
    if (keep_vertex_maps_ && group.order <= cap_) {
      std::vector<GraphMap> elements;
      elements.reserve(group.order);
      for (const std::vector<VertexId>& sigma : vertex_maps_) {
        ExpandEdgeBijections(sigma, &elements);
      }
      group.elements = std::move(elements);
    }
    return group;
  }

 private:
  struct Block {
    Endpoints pair;
    int color = 0;
    std::vector<EdgeId> edges;  // ascending
  };

  void BuildBlocks(std::span<const int> edge_colors) {
    std::map<std::pair<Endpoints, int>, int> index;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      const int color = edge_colors.empty() ? 0 : edge_colors[e];
      const auto key = std::make_pair(g_.endpoints(e), color);
      auto [it, inserted] = index.emplace(key, static_cast<int>(blocks_.size()));
      if (inserted) blocks_.push_back(Block{key.first, color, {}});
      blocks_[it->second].edges.push_back(e);
    }
    block_index_ = std::move(index);
  }

  void BuildProfiles() {
    std::map<Endpoints, std::vector<int>> colors_on_pair;
    for (const Block& block : blocks_) {
      auto& colors = colors_on_pair[block.pair];
      colors.insert(colors.end(), block.edges.size(), block.color);
    }
    std::map<std::vector<int>, int> interned;
    profile_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto& [pair, colors] : colors_on_pair) {
      std::sort(colors.begin(), colors.end());
      const int id =
          interned.emplace(colors, static_cast<int>(interned.size()) + 1)
              .first->second;
      profile_[pair.u * n_ + pair.v] = id;
      profile_[pair.v * n_ + pair.u] = id;
    }
    // Interned ids depend on discovery order; re-rank by the sorted colour
    // multisets so that the refinement sees the same values for both sides
    // of every comparison.
    std::vector<int> remap(interned.size() + 1, 0);
    int rank = 1;
    for (const auto& [colors, id] : interned) remap[id] = rank++;
    for (int& p : profile_) p = remap[p];
  }

  // Breadth-first order starting from a vertex in a smallest cell, so every
  // vertex after the first of its component is adjacent to an earlier one.
  void BuildOrder() {
    std::vector<int> cell_size(n_ + 1, 0);
    for (const int c : cell_) ++cell_size[c];
    candidates_.assign(n_ + 1, {});
    for (VertexId v = 0; v < n_; ++v) candidates_[cell_[v]].push_back(v);

    std::vector<bool> placed(n_, false);
    while (static_cast<int>(order_.size()) < n_) {
      VertexId start = -1;
      for (VertexId v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (start < 0 || cell_size[cell_[v]] < cell_size[cell_[start]]) {
          start = v;
        }
      }
      std::size_t head = order_.size();
      order_.push_back(start);
      placed[start] = true;
      while (head < order_.size()) {
        const VertexId v = order_[head++];
        for (const EdgeId e : g_.incident_edges(v)) {
          const VertexId w = g_.endpoints(e).other(v);
          if (!placed[w]) {
            placed[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool Compatible(int depth, VertexId v, VertexId w) const {
    for (int j = 0; j < depth; ++j) {
      const VertexId earlier = order_[j];
      if (profile_[v * n_ + earlier] != profile_[w * n_ + image_[earlier]]) {
        return false;
      }
    }
    return true;
  }

  void Extend(int depth) {
    if (depth == n_) {
      RecordLeaf();
      return;
    }
    const VertexId v = order_[depth];
    // Trying v itself first makes the identity the first leaf.
    auto visit = [&](VertexId w) {
      if (used_[w] || !Compatible(depth, v, w)) return;
      image_[v] = w;
      used_[w] = true;
      Extend(depth + 1);
      used_[w] = false;
      image_[v] = -1;
    };
    visit(v);
    for (const VertexId w : candidates_[cell_[v]]) {
      if (w != v) visit(w);
    }
  }

  void RecordLeaf() {
    vertex_map_count_ = internal::CheckedAdd(vertex_map_count_, 1);
    if (keep_vertex_maps_) {
      if (internal::CheckedMul(vertex_map_count_, kernel_order_) <= cap_) {
        vertex_maps_.push_back(image_);
      } else {
        keep_vertex_maps_ = false;
        vertex_maps_.clear();
      }
    }
    // One generator per (first moved base position, image) pair: a set of
    // coset representatives along the stabiliser chain of the base order.
    for (int k = 0; k < n_; ++k) {
      const VertexId base = order_[k];
      if (image_[base] == base) continue;
      if (seen_branches_.emplace(k, image_[base]).second) {
        vertex_generators_.push_back(Lift(image_));
      }
      break;
    }
  }

  const Block& TargetBlock(const Block& block,
                           const std::vector<VertexId>& sigma) const {
    const Endpoints moved(sigma[block.pair.u], sigma[block.pair.v]);
    return blocks_[block_index_.at({moved, block.color})];
  }

  // The extension of sigma matching each block to its image in index order.
  GraphMap Lift(const std::vector<VertexId>& sigma) const {
    GraphMap f;
    f.vertex_perm = sigma;
    f.edge_perm.resize(g_.num_edges());
    for (const Block& block : blocks_) {
      const Block& target = TargetBlock(block, sigma);
      for (std::size_t i = 0; i < block.edges.size(); ++i) {
        f.edge_perm[block.edges[i]] = target.edges[i];
      }
    }
    return f;
  }

  void ExpandEdgeBijections(const std::vector<VertexId>& sigma,
                            std::vector<GraphMap>* out) const {
    GraphMap f = Lift(sigma);
    std::vector<std::vector<std::size_t>> choice(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      choice[b].resize(blocks_[b].edges.size());
      std::iota(choice[b].begin(), choice[b].end(), 0);
    }
    // Odometer over the per-block permutations, lexicographic in block order.
    while (true) {
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Block& target = TargetBlock(blocks_[b], sigma);
        for (std::size_t i = 0; i < blocks_[b].edges.size(); ++i) {
          f.edge_perm[blocks_[b].edges[i]] = target.edges[choice[b][i]];
        }
      }
      out->push_back(f);
      std::size_t b = blocks_.size();
      while (b > 0) {
        --b;
        if (std::next_permutation(choice[b].begin(), choice[b].end())) break;
        if (b == 0) return;
      }
      if (blocks_.empty()) return;
    }
  }

  const Multigraph& g_;
  const int n_;
  const std::uint64_t cap_;
  std::vector<Block> blocks_;
  std::map<std::pair<Endpoints, int>, int> block_index_;
  std::vector<int> profile_;
  std::vector<int> cell_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<VertexId> order_;

  std::vector<VertexId> image_;
  std::vector<bool> used_;
  std::uint64_t kernel_order_ = 1;
  std::uint64_t vertex_map_count_ = 0;
  bool keep_vertex_maps_ = true;
  std::vector<std::vector<VertexId>> vertex_maps_;
  std::set<std::pair<int, VertexId>> seen_branches_;
  std::vector<GraphMap> vertex_generators_;
};

}  // namespace

AutomorphismGroup colored_automorphisms(const Multigraph& g,
                                        std::span<const int> vertex_colors,
                                        std::span<const int> edge_colors,
                                        std::uint64_t element_cap) {
  return AutomorphismSearch(g, vertex_colors, edge_colors, element_cap).Run();
}

AutomorphismGroup automorphisms(const Multigraph& g,
                                std::uint64_t element_cap) {
  return colored_automorphisms(g, {}, {}, element_cap);
}

AutomorphismGroup stabilizer(const Multigraph& g, const CellSet& fixed,
                             std::uint64_t element_cap) {
  // Every fixed cell gets a colour of its own.
  std::vector<int> vertex_colors(g.num_vertices(), 0);
  std::vector<int> edge_colors(g.num_edges(), 0);
  int next = 1;
  for (const VertexId v : fixed.vertices) {
    if (!g.is_valid_vertex(v)) {
      throw InvalidArgument("invalid vertex index " + std::to_string(v));
    }
    if (vertex_colors[v] == 0) vertex_colors[v] = next++;
  }
  next = 1;
  for (const EdgeId e : fixed.edges) {
    if (!g.is_valid_edge(e)) {
      throw InvalidArgument("invalid edge index " + std::to_string(e));
    }
    if (edge_colors[e] == 0) edge_colors[e] = next++;
  }
  return colored_automorphisms(g, vertex_colors, edge_colors, element_cap);
}

GraphMap quotient_map(const Multigraph& g, std::span<const EdgeId> contracted,
                      const GraphMap& f) {
  return quotient_map(g, contract(g, contracted), contracted, f);
}

GraphMap quotient_map(const Multigraph& g, const Contraction& quotient,
                      std::span<const EdgeId> contracted, const GraphMap& f) {
  if (static_cast<int>(f.vertex_perm.size()) != g.num_vertices() ||
      static_cast<int>(f.edge_perm.size()) != g.num_edges()) {
    throw InvalidArgument("map size does not match the graph");
  }
  std::vector<bool> in_set(g.num_edges(), false);
  for (const EdgeId e : contracted) {
    if (!g.is_valid_edge(e)) {
      throw InvalidArgument("invalid edge index " + std::to_string(e));
    }
    in_set[e] = true;
  }
  for (const EdgeId e : contracted) {
    if (!in_set[f.edge_perm[e]]) {
      throw InvalidArgument("contracted edge set is not invariant under the map");
    }
  }
  GraphMap induced;
  induced.vertex_perm.assign(quotient.graph.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexId from = quotient.projection[v];
    const VertexId to = quotient.projection[f.vertex_perm[v]];
    if (induced.vertex_perm[from] >= 0 && induced.vertex_perm[from] != to) {
      throw InvalidArgument("map does not respect the contraction classes");
    }
    induced.vertex_perm[from] = to;
  }
  std::vector<EdgeId> position(g.num_edges(), -1);
  for (EdgeId i = 0; i < quotient.graph.num_edges(); ++i) {
    position[quotient.edge_origin[i]] = i;
  }
  induced.edge_perm.resize(quotient.graph.num_edges());
  for (EdgeId i = 0; i < quotient.graph.num_edges(); ++i) {
    induced.edge_perm[i] = position[f.edge_perm[quotient.edge_origin[i]]];
  }
  return induced;
}

CellSet closed_star(const Multigraph& g, VertexId x) {
  CellSet star;
  star.vertices.push_back(x);
  for (const EdgeId e : g.incident_edges(x)) star.edges.push_back(e);
  return star;
}

CellSet outside_core_cells(const Multigraph& g, const Subgraph& core) {
  std::vector<bool> in_core(g.num_edges(), false);
  for (const EdgeId e : core.edge_origin) in_core[e] = true;
  std::set<VertexId> touched;
  CellSet cells;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_core[e]) continue;
    cells.edges.push_back(e);
    touched.insert(g.endpoints(e).u);
    touched.insert(g.endpoints(e).v);
  }
  cells.vertices.assign(touched.begin(), touched.end());
  return cells;
}

RestrictionWitness restriction_to_core(const Multigraph& g, VertexId x,
                                       std::uint64_t element_cap) {
  if (!g.is_valid_vertex(x)) {
    throw InvalidArgument("invalid vertex index " + std::to_string(x));
  }
  if (!is_connected(g) || !is_leafless(g)) {
    throw InvalidArgument("restriction_to_core requires a connected leafless graph");
  }
  const VertexId gone[] = {x};
  const Subgraph rest = remove_vertices(g, gone);
  const Subgraph peeled = leafless_core(rest.graph);
  if (peeled.graph.empty()) {
    throw EmptyCoreError("the leafless core of G minus the star of vertex " +
                         std::to_string(x) + " is empty");
  }

  RestrictionWitness witness;
  witness.core.graph = peeled.graph;
  for (const VertexId v : peeled.vertex_origin) {
    witness.core.vertex_origin.push_back(rest.vertex_origin[v]);
  }
  for (const EdgeId e : peeled.edge_origin) {
    witness.core.edge_origin.push_back(rest.edge_origin[e]);
  }
  const Subgraph& core = witness.core;

  const CellSet outside = outside_core_cells(g, core);
  std::vector<VertexId> core_index(g.num_vertices(), -1);
  for (VertexId c = 0; c < core.graph.num_vertices(); ++c) {
    core_index[core.vertex_origin[c]] = c;
  }
  std::vector<EdgeId> core_edge_index(g.num_edges(), -1);
  for (EdgeId c = 0; c < core.graph.num_edges(); ++c) {
    core_edge_index[core.edge_origin[c]] = c;
  }
  witness.anchor = -1;
  for (const VertexId v : outside.vertices) {
    if (core_index[v] >= 0) {
      witness.anchor = core_index[v];
      break;
    }
  }
  if (witness.anchor < 0) {
    throw DomainError("no anchor vertex shared by the core and its complement");
  }

  const AutomorphismGroup stab =
      stabilizer(g, closed_star(g, x), element_cap);
  if (!stab.elements) {
    throw DomainError("stabilizer of order " + std::to_string(stab.order) +
                      " exceeds the element cap");
  }
  witness.stabilizer_order = stab.order;
  const CellSet anchor_set{{witness.anchor}, {}};
  witness.core_stabilizer_order = stabilizer(core.graph, anchor_set, 0).order;

  for (const GraphMap& f : *stab.elements) {
    GraphMap restricted;
    restricted.vertex_perm.resize(core.graph.num_vertices());
    restricted.edge_perm.resize(core.graph.num_edges());
    for (VertexId c = 0; c < core.graph.num_vertices(); ++c) {
      const VertexId image = core_index[f.vertex_perm[core.vertex_origin[c]]];
      if (image < 0) throw DomainError("stabilizer element leaves the core");
      restricted.vertex_perm[c] = image;
    }
    for (EdgeId c = 0; c < core.graph.num_edges(); ++c) {
      const EdgeId image = core_edge_index[f.edge_perm[core.edge_origin[c]]];
      if (image < 0) throw DomainError("stabilizer element leaves the core");
      restricted.edge_perm[c] = image;
    }
    witness.restrictions.push_back(std::move(restricted));
  }
  std::vector<GraphMap> sorted = witness.restrictions;
  std::sort(sorted.begin(), sorted.end());
  witness.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return witness;
}

bool factorial_inequality_check(int l, int m, int n) {
  if (l < 1 || m < l || n < l) {
    throw InvalidArgument("factorial inequality needs m, n >= l >= 1");
  }
  // m! n! <= l! (m+n-l)!  <=>  (l+1)...(m) <= (n+1)...(m+n-l).
  unsigned __int128 left = 1;
  unsigned __int128 right = 1;
  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 96;
  for (int i = l + 1; i <= m; ++i) {
    left *= static_cast<unsigned>(i);
    if (left > kLimit) throw DomainError("factorial inequality operands too large");
  }
  for (int i = n + 1; i <= m + n - l; ++i) {
    right *= static_cast<unsigned>(i);
    if (right > kLimit) throw DomainError("factorial inequality operands too large");
  }
  return left <= right;
}

}  // namespace tropaut
