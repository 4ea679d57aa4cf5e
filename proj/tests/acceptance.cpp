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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "test_util.hpp"
#include "tropaut/automorphism.hpp"
#include "tropaut/enumeration.hpp"
#include "tropaut/families.hpp"
#include "tropaut/metric.hpp"

namespace tropaut {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure notes for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& note) {
    if (!ok) {
      if (!failures_.empty()) failures_ += "; ";
      failures_ += note;
    }
  }
  template <typename T>
  void ExpectEq(const T& got, const T& want, const std::string& what) {
    std::ostringstream note;
    note << what << " = " << got << ", expected " << want;
    Expect(got == want, note.str());
  }
  bool ok() const { return failures_.empty(); }
  const std::string& failures() const { return failures_; }

 private:
  std::string failures_;
};

Multigraph Lollipop(int g, int bridge_count, int loop_count) {
  std::vector<int> counts(g, bridge_count);
  counts.insert(counts.end(), g, loop_count);
  return subdivide(lollipop(g), counts).graph;
}

std::string NamedOrders(Check& c) {
  struct Case {
    const char* name;
    Multigraph graph;
    std::uint64_t order;
  };
  const Case cases[] = {{"banana(2)", banana(2), 12},
                        {"bouquet(1)", bouquet(1), 1},
                        {"h1", h1(), 24},
                        {"h2", h2(), 16},
                        {"h", h(), 32}};
  double slowest = 0;
  for (const Case& k : cases) {
    const auto start = Clock::now();
    const std::uint64_t order = automorphisms(k.graph).order;
    const double s = Seconds(start);
    slowest = std::max(slowest, s);
    c.ExpectEq(order, k.order, std::string("|Aut(") + k.name + ")|");
    c.ExpectEq(automorphism_count_oracle(k.graph), k.order,
               std::string("oracle ") + k.name);
    c.Expect(s < 1.0, std::string(k.name) + " took over 1 s");
  }
  return "5 orders, slowest " + std::to_string(slowest * 1000) + " ms";
}

std::string ExtremalFamilies(Check& c) {
  struct Case {
    std::string name;
    Multigraph graph;
    std::uint64_t order;
  };
  std::vector<Case> cases;
  for (int g = 2; g <= 3; ++g) {
    for (int k = 1; k <= 3; ++k) {
      cases.push_back({"banana(" + std::to_string(g) + ") x" + std::to_string(k),
                       subdivide_uniform(banana(g), k).graph,
                       g == 2 ? 12u : 48u});
    }
  }
  const std::uint64_t bouquet_orders[] = {48, 384, 3840};
  for (int g = 3; g <= 5; ++g) {
    cases.push_back({"bouquet(" + std::to_string(g) + ") x2",
                     subdivide_uniform(bouquet(g), 2).graph,
                     bouquet_orders[g - 3]});
  }
  cases.push_back({"lollipop(3)", Lollipop(3, 1, 2), 48});
  cases.push_back({"lollipop(4)", Lollipop(4, 1, 2), 384});
  for (const Case& k : cases) {
    c.ExpectEq(automorphisms(k.graph).order, k.order, "|Aut(" + k.name + ")|");
    c.Expect(classify_extremal(k.graph).tag != ExtremalTag::kNone,
             k.name + " unclassified");
  }
  return std::to_string(cases.size()) + " graphs";
}

std::string OracleEquivalence(Check& c) {
  const auto start = Clock::now();
  const std::vector<EnumeratedGraph> graphs = enumerate_connected(4, 7);
  int mismatches = 0;
  for (const EnumeratedGraph& e : graphs) {
    if (automorphisms(e.graph, 0).order != automorphism_count_oracle(e.graph)) {
      ++mismatches;
      c.Expect(false, "mismatch on " + to_string(e.graph));
    }
  }
  const double s = Seconds(start);
  c.Expect(graphs.size() >= 100, "fewer than 100 graphs");
  c.Expect(s < 120.0, "took over 2 minutes");
  return std::to_string(graphs.size()) + " graphs, " +
         std::to_string(mismatches) + " mismatches, " + std::to_string(s) +
         " s";
}

std::string BoundSweeps(Check& c) {
  std::ostringstream out;
  struct Case {
    int betti, max_n;
    std::uint64_t bound;
  };
  for (const Case k : {Case{2, 8, 12}, Case{3, 6, 48}, Case{4, 6, 384}}) {
    const VerificationReport r = verify_bound({k.betti, k.max_n, 2});
    const std::string tag = "g=" + std::to_string(k.betti);
    c.ExpectEq(r.bound, k.bound, tag + " bound");
    c.ExpectEq(r.violations.size(), std::size_t{0}, tag + " violations");
    c.ExpectEq(r.classification_mismatches.size(), std::size_t{0},
               tag + " classification mismatches");
    c.Expect(r.runtime_ms < 10 * 60 * 1000, tag + " over 10 minutes");
    if (k.betti == 2) {
      std::set<CanonicalCode> expected, found;
      for (int count = 1; 2 + 3 * (count - 1) <= k.max_n; ++count) {
        expected.insert(canonical_form(subdivide_uniform(banana(2), count).graph));
      }
      for (const GraphFinding& f : r.extremal) found.insert(f.code);
      c.Expect(found == expected,
               "g=2 extremal set is not the subdivided bananas");
    }
    out << tag << ": " << r.graph_count << " graphs, max " << r.max_aut_order
        << ", " << r.extremal.size() << " extremal, " << r.runtime_ms
        << " ms; ";
  }
  return out.str();
}

std::string FixedPointSweeps(Check& c) {
  std::ostringstream out;
  const FixedPointReport trivial = fixed_point_report(Multigraph(1, {}), 0);
  c.Expect(trivial.ok() && trivial.order == trivial.bound &&
               trivial.extremal == FixedPointClass::kTrivial,
           "trivial graph");
  std::uint64_t refined = 0;
  for (const auto& [betti, max_n] : {std::pair{1, 8}, {2, 8}, {3, 6}}) {
    const FixedPointSweepReport r = verify_fixed_point_bound({betti, max_n, 2});
    const std::string tag = "g=" + std::to_string(betti);
    c.ExpectEq(r.violations.size(), std::size_t{0}, tag + " violations");
    c.ExpectEq(r.classification_mismatches.size(), std::size_t{0},
               tag + " equality/class mismatches");
    refined += r.refined_checked;
    out << tag << ": " << r.pair_count << " pairs, " << r.equality.size()
        << " equal, " << r.refined_checked << " refined; ";
  }
  c.Expect(refined > 0, "no refined-bound instance checked");
  return out.str();
}

std::string BridgeContraction(Check& c) {
  int graphs = 0;
  std::uint64_t elements = 0;
  for (const auto& [betti, max_n] : {std::pair{2, 8}, {3, 6}, {4, 6}}) {
    for (const EnumeratedGraph& e : enumerate_leafless({betti, max_n, 2})) {
      const Multigraph& g = e.graph;
      const std::vector<EdgeId> s = bridges(g);
      if (s.empty()) continue;
      ++graphs;
      const Contraction quotient = contract(g, s);
      c.Expect(betti_number(quotient.graph) == betti_number(g),
               "Betti changed on " + to_string(g));
      const AutomorphismGroup group = automorphisms(g, 1'000'000);
      if (!group.elements) {
        c.Expect(false, "elements not materialised for " + to_string(g));
        continue;
      }
      std::set<GraphMap> images;
      for (const GraphMap& f : *group.elements) {
        const GraphMap q = quotient_map(g, quotient, s, f);
        c.Expect(is_automorphism(quotient.graph, q),
                 "induced map is not an automorphism on " + to_string(g));
        images.insert(q);
      }
      elements += group.elements->size();
      c.Expect(images.size() == group.elements->size(),
               "not injective on " + to_string(g));
    }
  }
  return std::to_string(graphs) + " graphs with bridges, " +
         std::to_string(elements) + " elements";
}

MetricGraph RandomResubdivision(const MetricGraph& m, std::mt19937_64& rng) {
  std::vector<std::vector<Rational>> pieces;
  for (EdgeId e = 0; e < m.graph().num_edges(); ++e) {
    const int count = static_cast<int>(rng() % 3) + 1;
    std::vector<Rational> weights;
    Rational total;
    for (int i = 0; i < count; ++i) {
      weights.emplace_back(static_cast<std::int64_t>(rng() % 4) + 1);
      total += weights.back();
    }
    std::vector<Rational> split;
    for (const Rational& w : weights) split.push_back(m.length(e) * w / total);
    pieces.push_back(std::move(split));
  }
  return subdivide_metric(m, pieces);
}

std::string MetricChecks(Check& c) {
  const Multigraph b = banana(2);
  struct Case {
    std::vector<Rational> lengths;
    std::uint64_t order;
  };
  for (const Case& k : {Case{{1, 1, 1}, 12}, Case{{1, 1, 2}, 4},
                        Case{{1, 2, 3}, 2}}) {
    const MetricGraph m(b, k.lengths);
    const std::string tag = "banana(2) lengths " + k.lengths[0].to_string() +
                            "," + k.lengths[1].to_string() + "," +
                            k.lengths[2].to_string();
    c.ExpectEq(isometry_group(m).group.order, k.order, tag);
    c.ExpectEq(testing::BruteIsometryCount(m), k.order, tag + " (filter oracle)");
  }
  std::ostringstream out;
  for (int g = 2; g <= 4; ++g) {
    const RandomMetricReport r = random_metric_sweep(g, 100, 42);
    c.Expect(r.ok() && r.ok_count == 100,
             "random sweep g=" + std::to_string(g) + " not ok");
    out << "g=" << g << " ok " << r.ok_count << "/100; ";
  }
  std::mt19937_64 rng(20260101);
  const std::vector<MetricGraph> bases = {
      MetricGraph(b, {1, 1, 2}), MetricGraph::Unit(banana(3)),
      MetricGraph(bouquet(3), {2, 2, 2}),
      MetricGraph(lollipop(3), {7, 7, 7, 2, 2, 2}),
      MetricGraph(h2(), {1, 1, 2, 3, 3, 2})};
  int resubdivisions = 0;
  for (const MetricGraph& base : bases) {
    const std::uint64_t order = isometry_group(base, 0).group.order;
    for (int trial = 0; trial < 50; ++trial) {
      ++resubdivisions;
      const std::uint64_t got =
          isometry_group(RandomResubdivision(base, rng), 0).group.order;
      c.Expect(got == order, "model dependence on " + to_string(base.graph()));
    }
  }
  out << resubdivisions << " re-subdivisions";
  return out.str();
}

std::string LeafBurst(Check& c) {
  const MetricGraph b = MetricGraph::Unit(banana(2));
  const std::uint64_t three = isometry_group(leaf_burst(b, 0, 3), 0).group.order;
  const std::uint64_t four = isometry_group(leaf_burst(b, 0, 4), 0).group.order;
  c.Expect(three >= 6, "n=3 order " + std::to_string(three) + " < 6");
  c.Expect(four >= 24, "n=4 order " + std::to_string(four) + " < 24");
  return "n=3: " + std::to_string(three) + ", n=4: " + std::to_string(four);
}

}  // namespace
}  // namespace tropaut

int main() {
  using tropaut::Check;
  struct Criterion {
    const char* name;
    std::function<std::string(Check&)> run;
  };
  const Criterion criteria[] = {
      {"named automorphism orders", tropaut::NamedOrders},
      {"extremal families attain the bound", tropaut::ExtremalFamilies},
      {"backtracking order equals brute-force oracle", tropaut::OracleEquivalence},
      {"exhaustive bound sweeps and extremal classification", tropaut::BoundSweeps},
      {"fixed-point bound sweeps", tropaut::FixedPointSweeps},
      {"bridge contraction injective and Betti-preserving",
       tropaut::BridgeContraction},
      {"metric graph isometry checks", tropaut::MetricChecks},
      {"leaf attachment symmetric groups", tropaut::LeafBurst},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Check check;
    std::string detail;
    try {
      detail = criterion.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.ok();
    if (!ok) ++failed;
    std::printf("%s %d %s: %s%s%s\n", ok ? "PASS" : "FAIL", index,
                criterion.name, detail.c_str(), ok ? "" : " | ",
                check.failures().c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
