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
#include "tropaut/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "tropaut/families.hpp"

namespace tropaut {
namespace {

using CandidateSink = std::function<void(const Multigraph&)>;

// Fills the upper triangle of a multiplicity matrix row by row so that
// vertex v ends with degree exactly degrees[v] (loops count twice).
class MatrixFiller {
 public:
  MatrixFiller(std::vector<int> degrees, const CandidateSink& sink)
      : n_(static_cast<int>(degrees.size())),
        remaining_(std::move(degrees)),
        mult_(static_cast<std::size_t>(n_) * n_, 0),
        sink_(sink) {}

  void Run() { Row(0); }

 private:
  void Row(int i) {
    if (i == n_) {
      Emit();
      return;
    }
    for (int loops = remaining_[i] / 2; loops >= 0; --loops) {
      remaining_[i] -= 2 * loops;
      mult_[i * n_ + i] = loops;
      Spread(i, i + 1);
      mult_[i * n_ + i] = 0;
      remaining_[i] += 2 * loops;
    }
  }

  void Spread(int i, int j) {
    if (remaining_[i] == 0) {
      Row(i + 1);
      return;
    }
    if (j == n_) return;
    int later = 0;
    for (int k = j; k < n_; ++k) later += remaining_[k];
    if (later < remaining_[i]) return;
    for (int m = std::min(remaining_[i], remaining_[j]); m >= 0; --m) {
      remaining_[i] -= m;
      remaining_[j] -= m;
      mult_[i * n_ + j] = m;
      Spread(i, j + 1);
      mult_[i * n_ + j] = 0;
      remaining_[i] += m;
      remaining_[j] += m;
    }
  }

  void Emit() {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<Endpoints> edges;
    int merged = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        const int m = mult_[i * n_ + j];
        for (int k = 0; k < m; ++k) edges.emplace_back(i, j);
        if (m > 0 && find(i) != find(j)) {
          parent[find(i)] = find(j);
          ++merged;
        }
      }
    }
    if (merged != n_ - 1) return;
    sink_(Multigraph(n_, std::move(edges)));
  }

  const int n_;
  std::vector<int> remaining_;
  std::vector<int> mult_;
  const CandidateSink& sink_;
};

// Non-increasing sequences of n values, each at least low, summing to
// total.
void ForEachDegreeSequence(int n, int total, int low,
                           const std::function<void(std::vector<int>)>& f) {
  std::vector<int> seq;
  std::function<void(int, int)> extend = [&](int cap, int left) {
    const int slots = n - static_cast<int>(seq.size());
    if (slots == 0) {
      if (left == 0) f(seq);
      return;
    }
    const int high = std::min(cap, left - (slots - 1) * low);
    for (int d = high; d >= low; --d) {
      seq.push_back(d);
      extend(d, left - d);
      seq.pop_back();
    }
  };
  extend(total, total);
}

void ForEachCandidate(int n, int num_edges, int min_degree,
                      const CandidateSink& sink) {
  ForEachDegreeSequence(n, 2 * num_edges, min_degree,
                        [&](std::vector<int> degrees) {
                          MatrixFiller(std::move(degrees), sink).Run();
                        });
}

Multigraph DecodeCanonical(const CanonicalCode& code) {
  const int n = static_cast<unsigned char>(code[0]);
  std::vector<Endpoints> edges;
  std::size_t k = 1;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const int m = static_cast<unsigned char>(code[k++]);
      for (int c = 0; c < m; ++c) edges.emplace_back(i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Multigraph(n, std::move(edges));
}

std::vector<EnumeratedGraph> Deduplicate(std::vector<Multigraph> candidates,
                                         int jobs) {
  std::vector<CanonicalCode> codes(candidates.size());
  internal::ParallelFor(candidates.size(), jobs, [&](std::size_t i) {
    codes[i] = canonical_form(candidates[i]);
  });
  candidates.clear();
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<EnumeratedGraph> out;
  out.reserve(codes.size());
  for (CanonicalCode& code : codes) {
    Multigraph graph = DecodeCanonical(code);
    out.push_back({std::move(code), std::move(graph)});
  }
  return out;
}

int EffectiveMaxVertices(const EnumSpec& spec) {
  if (spec.betti < 1) throw InvalidArgument("betti must be at least 1");
  if (spec.min_degree != 2 && spec.min_degree != 3) {
    throw InvalidArgument("min_degree must be 2 or 3");
  }
  if (spec.max_vertices < 1) {
    throw InvalidArgument("max_vertices must be at least 1");
  }
  if (spec.max_vertices > kEnumerationVertexLimit) {
    throw InvalidArgument("enumeration limited to " +
                          std::to_string(kEnumerationVertexLimit) +
                          " vertices");
  }
  if (spec.min_degree == 3) {
    return std::min(spec.max_vertices, std::max(1, 2 * spec.betti - 2));
  }
  return spec.max_vertices;
}

std::int64_t ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_leafless(const EnumSpec& spec,
                                                int jobs) {
  const int max_n = EffectiveMaxVertices(spec);
  std::vector<Multigraph> candidates;
  const CandidateSink sink = [&](const Multigraph& g) {
    candidates.push_back(g);
  };
  for (int n = 1; n <= max_n; ++n) {
    ForEachCandidate(n, n + spec.betti - 1, spec.min_degree, sink);
  }
  return Deduplicate(std::move(candidates), jobs);
}

std::vector<EnumeratedGraph> enumerate_connected(int max_vertices,
                                                 int max_edges) {
  if (max_vertices < 1 || max_vertices > kEnumerationVertexLimit) {
    throw InvalidArgument("max_vertices must lie in 1.." +
                          std::to_string(kEnumerationVertexLimit));
  }
  if (max_edges < 0) throw InvalidArgument("max_edges must be nonnegative");
  std::vector<Multigraph> candidates;
  const CandidateSink sink = [&](const Multigraph& g) {
    candidates.push_back(g);
  };
  for (int n = 1; n <= max_vertices; ++n) {
    for (int e = n - 1; e <= max_edges; ++e) {
      ForEachCandidate(n, e, n == 1 ? 0 : 1, sink);
    }
  }
  return Deduplicate(std::move(candidates), 1);
}

VerificationReport verify_bound(const EnumSpec& spec, int jobs) {
  if (spec.betti < 2) throw InvalidArgument("verify_bound needs betti >= 2");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.spec = spec;
  report.bound = hurwitz_bound(spec.betti);

  const std::vector<EnumeratedGraph> graphs = enumerate_leafless(spec, jobs);
  std::vector<GraphFinding> findings(graphs.size());
  internal::ParallelFor(graphs.size(), jobs, [&](std::size_t i) {
    GraphFinding& f = findings[i];
    f.code = graphs[i].code;
    f.graph = graphs[i].graph;
    f.order = automorphisms(f.graph, /*element_cap=*/0).order;
    f.extremal = classify_extremal(f.graph);
  });

  report.graph_count = graphs.size();
  for (GraphFinding& f : findings) {
    report.max_aut_order = std::max(report.max_aut_order, f.order);
    const bool attains = f.order == report.bound;
    const bool classified = f.extremal.tag != ExtremalTag::kNone;
    if (f.order > report.bound) {
      f.detail = "order " + std::to_string(f.order) + " exceeds bound " +
                 std::to_string(report.bound);
      report.violations.push_back(f);
    }
    if (attains != classified) {
      f.detail = attains ? "attains the bound but is unclassified"
                         : std::string("classified ") +
                               std::string(to_string(f.extremal.tag)) +
                               " but order is " + std::to_string(f.order);
      report.classification_mismatches.push_back(f);
    }
    if (attains) {
      f.detail.clear();
      report.extremal.push_back(std::move(f));
    }
  }
  report.runtime_ms = ElapsedMs(start);
  return report;
}

FixedPointReport fixed_point_report(const Multigraph& g, VertexId x) {
  if (!g.is_valid_vertex(x)) {
    throw InvalidArgument("invalid vertex " + std::to_string(x));
  }
  if (!is_connected(g) || !is_leafless(g)) {
    throw InvalidArgument("fixed-point report needs a connected leafless graph");
  }
  FixedPointReport r;
  r.vertex = x;
  r.betti = betti_number(g);
  r.order = stabilizer(g, CellSet{{x}, {}}, /*element_cap=*/0).order;
  r.bound = fixed_point_bound(r.betti);
  const VertexId gone[] = {x};
  const Subgraph rest = remove_vertices(g, gone);
  r.components = static_cast<int>(connected_components(rest.graph).size());
  r.incident_edges = static_cast<int>(g.incident_edges(x).size());
  r.bridgeless = bridges(g).empty();
  if (r.bridgeless && r.components <= 1 &&
      r.betti - r.incident_edges + 1 >= 0) {
    r.refined_bound = refined_fixed_point_bound(r.betti, r.incident_edges);
  }
  r.extremal = classify_fixed_point_extremal(g, x);
  return r;
}

FixedPointSweepReport verify_fixed_point_bound(const EnumSpec& spec,
                                               int jobs) {
  const auto start = std::chrono::steady_clock::now();
  FixedPointSweepReport report;
  report.spec = spec;
  const std::vector<EnumeratedGraph> graphs = enumerate_leafless(spec, jobs);
  std::vector<std::vector<FixedPointReport>> per_graph(graphs.size());
  internal::ParallelFor(graphs.size(), jobs, [&](std::size_t i) {
    const Multigraph& g = graphs[i].graph;
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
      per_graph[i].push_back(fixed_point_report(g, x));
    }
  });

  report.graph_count = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const FixedPointReport& r : per_graph[i]) {
      ++report.pair_count;
      if (r.refined_bound) ++report.refined_checked;
      auto finding = [&](std::string detail) {
        return FixedPointFinding{graphs[i].code, graphs[i].graph, r,
                                 std::move(detail)};
      };
      if (r.order > r.bound) {
        report.violations.push_back(finding("order exceeds bound"));
      }
      if (r.refined_bound && r.order > *r.refined_bound) {
        report.violations.push_back(finding("order exceeds refined bound"));
      }
      const bool attains = r.order == r.bound;
      const bool classified = r.extremal != FixedPointClass::kNone;
      if (attains != classified) {
        report.classification_mismatches.push_back(finding(
            attains ? "attains the bound but is unclassified"
                    : "classified but below the bound"));
      }
      if (attains) report.equality.push_back(finding(""));
    }
  }
  report.runtime_ms = ElapsedMs(start);
  return report;
}

RandomMetricReport random_metric_sweep(int g, int trials, std::uint64_t seed,
                                       const RandomMetricOptions& options) {
  if (g < 2 || g > 5) throw InvalidArgument("random sweep needs 2 <= g <= 5");
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  if (options.palette.empty()) throw InvalidArgument("palette is empty");
  for (const Rational& length : options.palette) {
    if (!length.is_positive()) {
      throw InvalidArgument("palette lengths must be positive");
    }
  }
  RandomMetricReport report;
  report.genus = g;
  report.trials = trials;
  report.seed = seed;
  report.palette = options.palette;
  report.max_vertices = options.max_vertices > 0 ? options.max_vertices : 4;
  report.bound = hurwitz_bound(g);

  const std::vector<EnumeratedGraph> pool =
      enumerate_leafless({g, report.max_vertices, 2});
  std::mt19937_64 rng(seed);
  const std::size_t colours = options.palette.size();
  for (int t = 0; t < trials; ++t) {
    const Multigraph& graph = pool[rng() % pool.size()].graph;
    // One trial in three uses a single length for every edge.
    const bool uniform = rng() % 3 == 0;
    const Rational shared = options.palette[rng() % colours];
    std::vector<Rational> lengths;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      lengths.push_back(uniform ? shared : options.palette[rng() % colours]);
    }
    MetricGraph metric(graph, std::move(lengths));
    MetricBoundReport r = verify_metric_bound(metric);
    report.max_order = std::max(report.max_order, r.order);
    if (r.ok) ++report.ok_count;
    const bool attains = r.order == r.bound;
    if (attains) ++report.attained;
    const bool classified = r.extremal.tag != ExtremalTag::kNone;
    if (!r.ok) report.violations.push_back({metric, r});
    if (attains != classified) {
      report.classification_mismatches.push_back({metric, r});
    }
  }
  return report;
}

}  // namespace tropaut
