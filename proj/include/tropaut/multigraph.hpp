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

#ifndef TROPAUT_MULTIGRAPH_HPP_
#define TROPAUT_MULTIGRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropaut {

// Vertices and edges are dense indices into the owning graph. Edge identity
// is positional: two edges with equal endpoints are distinct parallel edges.
using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Raised for malformed input: bad indices, bad counts, violated
// preconditions on the shape of a graph.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is mathematically undefined for its input (for
// instance bound checks on metric graphs of genus < 2).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unordered endpoint pair, stored with u <= v. A loop has u == v.
struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  Endpoints() = default;
  Endpoints(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  bool contains(VertexId w) const { return u == w || v == w; }
  // The endpoint that is not `w`; `w` itself for a loop.
  VertexId other(VertexId w) const { return u == w ? v : u; }

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
  friend auto operator<=>(const Endpoints&, const Endpoints&) = default;
};

// Finite undirected multigraph with loops. Immutable after construction;
// every structural operation returns a new graph.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int num_vertices, std::vector<Endpoints> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return num_vertices_ == 0; }

  const Endpoints& endpoints(EdgeId e) const;
  std::span<const Endpoints> edges() const { return edges_; }

  // Edges incident to `v`, ascending. A loop at `v` is listed once.
  std::span<const EdgeId> incident_edges(VertexId v) const;

  bool is_valid_vertex(VertexId v) const {
    return v >= 0 && v < num_vertices_;
  }
  bool is_valid_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  // Number of edges between u and v (loops at u when u == v).
  int multiplicity(VertexId u, VertexId v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void CheckVertex(VertexId v) const;

  int num_vertices_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Vertex-deleted, edge-deleted or otherwise derived graphs carry the map
// back to the cells of the graph they were cut from.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;  // subgraph vertex -> parent vertex
  std::vector<EdgeId> edge_origin;      // subgraph edge -> parent edge
};

struct CutDecomposition {
  VertexId cut_vertex = 0;
  // Each part is G_i = U_i plus the cut vertex; vertex 0 of every part is
  // the marked copy of the cut vertex.
  std::vector<Subgraph> parts;
  std::vector<int> part_betti;
};

struct Contraction {
  Multigraph graph;
  std::vector<VertexId> projection;  // V_G -> V_{G/S}
  std::vector<EdgeId> edge_origin;   // E_{G/S} -> E_G \ S, ascending
};

struct Subdivision {
  Multigraph graph;
  // Edge e of the input becomes the path edge_paths[e], listed from the
  // endpoint `u` of e towards `v`.
  std::vector<std::vector<EdgeId>> edge_paths;
};

// Degree with each loop counted twice.
int degree(const Multigraph& g, VertexId v);
int loop_count(const Multigraph& g, VertexId v);

bool is_leafless(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Vertex classes by reachability, each ascending, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
// Component index per vertex, numbered as in connected_components().
std::vector<int> component_labels(const Multigraph& g);

int betti_number(const Multigraph& g);

std::vector<EdgeId> bridges(const Multigraph& g);
std::vector<VertexId> cut_vertices(const Multigraph& g);

Contraction contract(const Multigraph& g, std::span<const EdgeId> edges);

// counts[e] >= 1 for every edge.
Subdivision subdivide(const Multigraph& g, std::span<const int> counts);
Subdivision subdivide_uniform(const Multigraph& g, int count);

// Maximum subgraph of minimum degree >= 2, obtained by peeling isolated
// vertices and leaves. Possibly empty.
Subgraph leafless_core(const Multigraph& g);

// Deletes the listed vertices together with all edges touching them.
Subgraph remove_vertices(const Multigraph& g, std::span<const VertexId> gone);

// Subgraph spanned by the given edges and their endpoints.
Subgraph edge_induced(const Multigraph& g, std::span<const EdgeId> edges);

CutDecomposition decompose_at(const Multigraph& g, VertexId x);

// Relabels vertices: vertex v of `g` becomes perm[v]. Edge order is kept.
Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm);

std::string to_string(const Multigraph& g);

}  // namespace tropaut

#endif  // TROPAUT_MULTIGRAPH_HPP_
