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

#include "tropaut/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace tropaut {

Multigraph::Multigraph(int num_vertices, std::vector<Endpoints> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) {
    throw InvalidArgument("negative vertex count");
  }
  incidence_.resize(num_vertices);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Endpoints& ends = edges_[e];
    if (!is_valid_vertex(ends.u) || !is_valid_vertex(ends.v)) {
      throw InvalidArgument("edge " + std::to_string(e) +
                            " has an endpoint outside [0, " +
                            std::to_string(num_vertices) + ")");
    }
    incidence_[ends.u].push_back(e);
    if (!ends.is_loop()) incidence_[ends.v].push_back(e);
  }
}

void Multigraph::CheckVertex(VertexId v) const {
  if (!is_valid_vertex(v)) {
    throw InvalidArgument("invalid vertex index " + std::to_string(v));
  }
}

const Endpoints& Multigraph::endpoints(EdgeId e) const {
  if (!is_valid_edge(e)) {
    throw InvalidArgument("invalid edge index " + std::to_string(e));
  }
  return edges_[e];
}

std::span<const EdgeId> Multigraph::incident_edges(VertexId v) const {
  CheckVertex(v);
  return incidence_[v];
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  CheckVertex(u);
  CheckVertex(v);
  const Endpoints key(u, v);
  int count = 0;
  for (const EdgeId e : incidence_[u]) {
    if (edges_[e] == key) ++count;
  }
  return count;
}

int degree(const Multigraph& g, VertexId v) {
  int d = 0;
  for (const EdgeId e : g.incident_edges(v)) {
    d += g.endpoints(e).is_loop() ? 2 : 1;
  }
  return d;
}

int loop_count(const Multigraph& g, VertexId v) {
  int loops = 0;
  for (const EdgeId e : g.incident_edges(v)) {
    if (g.endpoints(e).is_loop()) ++loops;
  }
  return loops;
}

bool is_leafless(const Multigraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (degree(g, v) == 1) return false;
  }
  return true;
}

std::vector<int> component_labels(const Multigraph& g) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const EdgeId e : g.incident_edges(v)) {
        const VertexId w = g.endpoints(e).other(v);
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  const std::vector<int> label = component_labels(g);
  const int count =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<VertexId>> classes(count);
  for (VertexId v = 0; v < g.num_vertices(); ++v) classes[label[v]].push_back(v);
  return classes;
}

bool is_connected(const Multigraph& g) {
  return connected_components(g).size() <= 1;
}

int betti_number(const Multigraph& g) {
  return g.num_edges() - g.num_vertices() +
         static_cast<int>(connected_components(g).size());
}

namespace {

// One DFS computing both bridges and articulation points. Parallel edges are
// handled by skipping only the tree edge itself (by id), not every edge back
// to the parent.
struct LowLink {
  explicit LowLink(const Multigraph& graph)
      : g(graph),
        order(graph.num_vertices(), -1),
        low(graph.num_vertices(), 0),
        is_cut(graph.num_vertices(), false) {
    for (VertexId root = 0; root < g.num_vertices(); ++root) {
      if (order[root] >= 0) continue;
      int children = 0;
      Visit(root, /*parent_edge=*/-1, &children);
      if (children > 1) is_cut[root] = true;
    }
  }

  void Visit(VertexId v, EdgeId parent_edge, int* root_children) {
    order[v] = low[v] = clock++;
    for (const EdgeId e : g.incident_edges(v)) {
      if (e == parent_edge) continue;
      const Endpoints& ends = g.endpoints(e);
      if (ends.is_loop()) continue;
      const VertexId w = ends.other(v);
      if (order[w] < 0) {
        if (parent_edge < 0) ++*root_children;
        Visit(w, e, root_children);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) bridge_edges.push_back(e);
        if (parent_edge >= 0 && low[w] >= order[v]) is_cut[v] = true;
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  }

  const Multigraph& g;
  std::vector<int> order;
  std::vector<int> low;
  std::vector<bool> is_cut;
  std::vector<EdgeId> bridge_edges;
  int clock = 0;
};

}  // namespace

std::vector<EdgeId> bridges(const Multigraph& g) {
  LowLink search(g);
  std::sort(search.bridge_edges.begin(), search.bridge_edges.end());
  return search.bridge_edges;
}

std::vector<VertexId> cut_vertices(const Multigraph& g) {
  LowLink search(g);
  std::vector<VertexId> result;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (search.is_cut[v]) result.push_back(v);
  }
  return result;
}

Contraction contract(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> removed(g.num_edges(), false);
  for (const EdgeId e : edges) {
    const Endpoints& ends = g.endpoints(e);
    removed[e] = true;
    const VertexId a = find(ends.u);
    const VertexId b = find(ends.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  Contraction result;
  result.projection.assign(g.num_vertices(), -1);
  std::vector<VertexId> class_index(g.num_vertices(), -1);
  int classes = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexId root = find(v);
    if (class_index[root] < 0) class_index[root] = classes++;
    result.projection[v] = class_index[root];
  }
  std::vector<Endpoints> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (removed[e]) continue;
    const Endpoints& ends = g.endpoints(e);
    kept.emplace_back(result.projection[ends.u], result.projection[ends.v]);
    result.edge_origin.push_back(e);
  }
  result.graph = Multigraph(classes, std::move(kept));
  return result;
}

Subdivision subdivide(const Multigraph& g, std::span<const int> counts) {
  if (static_cast<int>(counts.size()) != g.num_edges()) {
    throw InvalidArgument("subdivision needs one count per edge: got " +
                          std::to_string(counts.size()) + " for " +
                          std::to_string(g.num_edges()) + " edges");
  }
  int next_vertex = g.num_vertices();
  std::vector<Endpoints> edges;
  Subdivision result;
  result.edge_paths.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (counts[e] < 1) {
      throw InvalidArgument("subdivision count for edge " + std::to_string(e) +
                            " must be positive");
    }
    const Endpoints& ends = g.endpoints(e);
    VertexId from = ends.u;
    for (int piece = 0; piece < counts[e]; ++piece) {
      const VertexId to = piece + 1 == counts[e] ? ends.v : next_vertex++;
      result.edge_paths[e].push_back(static_cast<EdgeId>(edges.size()));
      edges.emplace_back(from, to);
      from = to;
    }
  }
  result.graph = Multigraph(next_vertex, std::move(edges));
  return result;
}

Subdivision subdivide_uniform(const Multigraph& g, int count) {
  const std::vector<int> counts(g.num_edges(), count);
  return subdivide(g, counts);
}

namespace {

Subgraph KeepCells(const Multigraph& g, const std::vector<bool>& keep_vertex,
                   const std::vector<bool>& keep_edge) {
  Subgraph sub;
  std::vector<VertexId> index(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!keep_vertex[v]) continue;
    index[v] = static_cast<VertexId>(sub.vertex_origin.size());
    sub.vertex_origin.push_back(v);
  }
  std::vector<Endpoints> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep_edge[e]) continue;
    const Endpoints& ends = g.endpoints(e);
    edges.emplace_back(index[ends.u], index[ends.v]);
    sub.edge_origin.push_back(e);
  }
  sub.graph = Multigraph(static_cast<int>(sub.vertex_origin.size()),
                         std::move(edges));
  return sub;
}

}  // namespace

Subgraph leafless_core(const Multigraph& g) {
  std::vector<bool> alive_vertex(g.num_vertices(), true);
  std::vector<bool> alive_edge(g.num_edges(), true);
  std::vector<int> deg(g.num_vertices());
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    deg[v] = degree(g, v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (!alive_vertex[v]) continue;
    alive_vertex[v] = false;
    // A vertex of degree <= 1 has no live loops, so at most one live edge.
    for (const EdgeId e : g.incident_edges(v)) {
      if (!alive_edge[e]) continue;
      alive_edge[e] = false;
      const VertexId w = g.endpoints(e).other(v);
      if (--deg[w] == 1 || deg[w] == 0) queue.push_back(w);
    }
  }
  return KeepCells(g, alive_vertex, alive_edge);
}

Subgraph remove_vertices(const Multigraph& g, std::span<const VertexId> gone) {
  std::vector<bool> keep_vertex(g.num_vertices(), true);
  for (const VertexId v : gone) {
    if (!g.is_valid_vertex(v)) {
      throw InvalidArgument("invalid vertex index " + std::to_string(v));
    }
    keep_vertex[v] = false;
  }
  std::vector<bool> keep_edge(g.num_edges(), true);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Endpoints& ends = g.endpoints(e);
    keep_edge[e] = keep_vertex[ends.u] && keep_vertex[ends.v];
  }
  return KeepCells(g, keep_vertex, keep_edge);
}

Subgraph edge_induced(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> keep_vertex(g.num_vertices(), false);
  std::vector<bool> keep_edge(g.num_edges(), false);
  for (const EdgeId e : edges) {
    const Endpoints& ends = g.endpoints(e);
    keep_edge[e] = true;
    keep_vertex[ends.u] = keep_vertex[ends.v] = true;
  }
  return KeepCells(g, keep_vertex, keep_edge);
}

CutDecomposition decompose_at(const Multigraph& g, VertexId x) {
  if (!g.is_valid_vertex(x)) {
    throw InvalidArgument("invalid vertex index " + std::to_string(x));
  }
  if (!is_connected(g)) {
    throw InvalidArgument("decompose_at requires a connected graph");
  }
  CutDecomposition result;
  result.cut_vertex = x;

  const VertexId gone[] = {x};
  const Subgraph rest = remove_vertices(g, gone);
  const std::vector<int> label = component_labels(rest.graph);
  const int k = static_cast<int>(connected_components(rest.graph).size());

  // Component of every original vertex other than x.
  std::vector<int> component(g.num_vertices(), -1);
  for (VertexId v = 0; v < rest.graph.num_vertices(); ++v) {
    component[rest.vertex_origin[v]] = label[v];
  }
  std::vector<std::vector<EdgeId>> part_edges(k);
  std::vector<EdgeId> loops_at_x;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Endpoints& ends = g.endpoints(e);
    if (ends.is_loop() && ends.u == x) {
      loops_at_x.push_back(e);
      continue;
    }
    const VertexId inner = ends.u == x ? ends.v : ends.u;
    part_edges[component[inner]].push_back(e);
  }

  auto make_part = [&](const std::vector<EdgeId>& edges, int comp) {
    std::vector<bool> keep_vertex(g.num_vertices(), false);
    std::vector<bool> keep_edge(g.num_edges(), false);
    keep_vertex[x] = true;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (comp >= 0 && component[v] == comp) keep_vertex[v] = true;
    }
    for (const EdgeId e : edges) keep_edge[e] = true;
    // Move x to the front so vertex 0 is the marked copy.
    Subgraph sub = KeepCells(g, keep_vertex, keep_edge);
    std::vector<VertexId> perm(sub.graph.num_vertices());
    const auto x_pos = static_cast<VertexId>(
        std::find(sub.vertex_origin.begin(), sub.vertex_origin.end(), x) -
        sub.vertex_origin.begin());
    for (VertexId v = 0; v < sub.graph.num_vertices(); ++v) {
      perm[v] = v == x_pos ? 0 : (v < x_pos ? v + 1 : v);
    }
    Subgraph moved;
    moved.graph = relabel(sub.graph, perm);
    moved.vertex_origin.resize(sub.vertex_origin.size());
    for (VertexId v = 0; v < sub.graph.num_vertices(); ++v) {
      moved.vertex_origin[perm[v]] = sub.vertex_origin[v];
    }
    moved.edge_origin = sub.edge_origin;
    return moved;
  };

  for (int comp = 0; comp < k; ++comp) {
    result.parts.push_back(make_part(part_edges[comp], comp));
  }
  for (const EdgeId loop : loops_at_x) {
    result.parts.push_back(make_part({loop}, -1));
  }
  for (const Subgraph& part : result.parts) {
    result.part_betti.push_back(betti_number(part.graph));
  }
  return result;
}

Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw InvalidArgument("relabeling has the wrong size");
  }
  std::vector<Endpoints> edges;
  edges.reserve(g.num_edges());
  for (const Endpoints& ends : g.edges()) {
    edges.emplace_back(perm[ends.u], perm[ends.v]);
  }
  return Multigraph(g.num_vertices(), std::move(edges));
}

std::string to_string(const Multigraph& g) {
  std::ostringstream out;
  out << "Multigraph(" << g.num_vertices() << " vertices;";
  for (const Endpoints& ends : g.edges()) {
    out << ' ' << ends.u << '-' << ends.v;
  }
  out << ')';
  return out.str();
}

}  // namespace tropaut
