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


#include "tropaut/cli.hpp"

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tropaut/automorphism.hpp"
#include "tropaut/enumeration.hpp"
#include "tropaut/families.hpp"
#include "tropaut/io.hpp"
#include "tropaut/metric.hpp"
#include "tropaut/multigraph.hpp"

namespace tropaut::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string family;
  int g = 2;
  std::vector<int> counts;
};

struct Options {
  bool json = false;
  bool timing = false;
  int jobs = 1;
  std::uint64_t cap = kDefaultElementCap;
  int betti = 2;
  int max_vertices = 0;
  int min_degree = 2;
  int g = 2;
  int trials = 100;
  std::uint64_t seed = 42;
  int vertex = -1;
  int leaves = 0;
  std::vector<int> edges;
  GraphSource source;
};

const std::vector<std::string> kFamilies = {"banana", "bouquet", "lollipop",
                                            "h1",     "h2",      "h"};

void AddSource(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("file", src.path, "Graph JSON file; '-' or absent: stdin");
  cmd->add_option("--family", src.family, "Named family instead of a file")
      ->check(CLI::IsMember(kFamilies));
  cmd->add_option("--g", src.g, "Genus parameter of the family");
  cmd->add_option("--counts", src.counts,
                  "Subdivision counts: one value for every edge, or one per "
                  "edge")
      ->delimiter(',');
}

void AddJson(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Emit JSON");
}

std::vector<int> ExpandCounts(const std::vector<int>& counts, int edges) {
  if (counts.size() == 1) return std::vector<int>(edges, counts[0]);
  if (static_cast<int>(counts.size()) != edges) {
    throw InvalidArgument("--counts needs 1 or " + std::to_string(edges) +
                          " values");
  }
  return counts;
}

GraphDocument Load(const GraphSource& src, std::istream& in) {
  GraphDocument doc;
  if (!src.family.empty()) {
    if (!src.path.empty()) throw UsageError("give a file or --family, not both");
    doc.graph = make_family(src.family, src.g);
    doc.name = src.family;
  } else if (src.path.empty() || src.path == "-") {
    doc = read_graph(in);
  } else {
    doc = read_graph_file(src.path);
  }
  if (!src.counts.empty()) {
    const std::vector<int> counts =
        ExpandCounts(src.counts, doc.graph.num_edges());
    if (doc.lengths) {
      std::vector<std::vector<Rational>> pieces;
      for (EdgeId e = 0; e < doc.graph.num_edges(); ++e) {
        if (counts[e] < 1) throw InvalidArgument("counts must be >= 1");
        pieces.emplace_back(counts[e], (*doc.lengths)[e] / Rational(counts[e]));
      }
      const MetricGraph m = subdivide_metric(doc.metric(), pieces);
      doc.graph = m.graph();
      doc.lengths = m.lengths();
    } else {
      doc.graph = subdivide(doc.graph, counts).graph;
    }
  }
  return doc;
}

void PrintJson(std::ostream& out, const Json& value) {
  out << value.dump(2) << "\n";
}

std::string Join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string Describe(const ExtremalClass& c) {
  std::string out(to_string(c.tag));
  if (!c.counts.empty()) out += " (" + Join(c.counts) + ")";
  return out;
}

void PrintGraph(std::ostream& out, const Multigraph& g,
                const std::vector<Rational>* lengths = nullptr) {
  out << "vertices " << g.num_vertices() << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "  e" << e << ": " << g.endpoints(e).u << "-" << g.endpoints(e).v;
    if (lengths) out << "  length " << (*lengths)[e];
    out << "\n";
  }
}

void PrintGroup(std::ostream& out, const AutomorphismGroup& group) {
  out << "order " << group.order << "\n";
  out << "generators " << group.generators.size() << "\n";
  for (const GraphMap& f : group.generators) {
    out << "  V[" << Join({f.vertex_perm.begin(), f.vertex_perm.end()})
        << "] E[" << Join({f.edge_perm.begin(), f.edge_perm.end()}) << "]\n";
  }
}

int CmdAut(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  const AutomorphismGroup group = automorphisms(doc.graph, o.cap);
  if (o.json) {
    PrintJson(out, to_json(group));
  } else {
    PrintGroup(out, group);
  }
  return kExitOk;
}

int CmdMetricAut(const Options& o, std::istream& in, std::ostream& out) {
  GraphDocument doc = Load(o.source, in);
  MetricGraph m = doc.metric();
  if (o.leaves > 0) {
    if (o.vertex < 0) throw UsageError("--leaves needs --vertex");
    m = leaf_burst(m, o.vertex, o.leaves);
  }
  const IsometryGroup iso = isometry_group(m, o.cap);
  if (o.json) {
    Json j;
    j["genus"] = genus(m);
    j["order"] = iso.group.order;
    j["generators"] = to_json(iso.group)["generators"];
    j["model"] = to_json(iso.model);
    PrintJson(out, j);
  } else {
    out << "genus " << genus(m) << "\n";
    PrintGroup(out, iso.group);
  }
  return kExitOk;
}

int CmdBridges(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  const std::vector<EdgeId> b = bridges(doc.graph);
  const std::vector<VertexId> c = cut_vertices(doc.graph);
  if (o.json) {
    PrintJson(out, Json{{"bridges", b}, {"cut_vertices", c}});
  } else {
    out << "bridges " << Join({b.begin(), b.end()}) << "\n";
    out << "cut_vertices " << Join({c.begin(), c.end()}) << "\n";
  }
  return kExitOk;
}

int CmdContract(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  const std::vector<EdgeId> s =
      o.edges.empty() ? bridges(doc.graph)
                      : std::vector<EdgeId>(o.edges.begin(), o.edges.end());
  const Contraction c = contract(doc.graph, s);
  if (o.json) {
    Json j = to_json(c.graph);
    j["projection"] = c.projection;
    j["edge_origin"] = c.edge_origin;
    PrintJson(out, j);
  } else {
    PrintGraph(out, c.graph);
    out << "projection " << Join({c.projection.begin(), c.projection.end()})
        << "\n";
  }
  return kExitOk;
}

int CmdCore(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  if (o.vertex >= 0) {
    const RestrictionWitness w = restriction_to_core(doc.graph, o.vertex);
    if (o.json) {
      Json j;
      j["core"] = to_json(w.core.graph);
      j["vertex_origin"] = w.core.vertex_origin;
      j["edge_origin"] = w.core.edge_origin;
      j["anchor"] = w.anchor;
      j["stabilizer_order"] = w.stabilizer_order;
      j["core_stabilizer_order"] = w.core_stabilizer_order;
      j["injective"] = w.injective;
      PrintJson(out, j);
    } else {
      PrintGraph(out, w.core.graph);
      out << "anchor " << w.anchor << "\n"
          << "stabilizer_order " << w.stabilizer_order << "\n"
          << "core_stabilizer_order " << w.core_stabilizer_order << "\n"
          << "injective " << (w.injective ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  const Subgraph core = leafless_core(doc.graph);
  if (o.json) {
    Json j = to_json(core.graph);
    j["vertex_origin"] = core.vertex_origin;
    j["edge_origin"] = core.edge_origin;
    PrintJson(out, j);
  } else {
    PrintGraph(out, core.graph);
  }
  return kExitOk;
}

int CmdCanonicalModel(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  const CanonicalModel model = canonical_model(doc.metric());
  if (o.json) {
    PrintJson(out, to_json(model));
  } else {
    PrintGraph(out, model.model.graph(), &model.model.lengths());
  }
  return kExitOk;
}

int CmdClassify(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  if (o.vertex >= 0) {
    const FixedPointClass c =
        classify_fixed_point_extremal(doc.graph, o.vertex);
    if (o.json) {
      PrintJson(out, Json{{"vertex", o.vertex},
                          {"class", std::string(to_string(c))}});
    } else {
      out << to_string(c) << "\n";
    }
    return kExitOk;
  }
  const ExtremalClass c = doc.is_metric()
                              ? classify_metric_extremal(doc.metric())
                              : classify_extremal(doc.graph);
  if (o.json) {
    PrintJson(out, to_json(c));
  } else {
    out << Describe(c) << "\n";
  }
  return kExitOk;
}

int CmdFamily(const Options& o, std::istream& in, std::ostream& out) {
  const GraphDocument doc = Load(o.source, in);
  if (o.json) {
    PrintJson(out, to_json(doc.graph, doc.name));
  } else {
    out << doc.name << "\n";
    PrintGraph(out, doc.graph);
  }
  return kExitOk;
}

EnumSpec SpecFrom(const Options& o, int default_max) {
  return {o.betti, o.max_vertices > 0 ? o.max_vertices : default_max,
          o.min_degree};
}

int CmdEnumerate(const Options& o, std::ostream& out) {
  const EnumSpec spec = SpecFrom(o, 4);
  const std::vector<EnumeratedGraph> graphs = enumerate_leafless(spec, o.jobs);
  if (o.json) {
    Json list = Json::array();
    for (const EnumeratedGraph& g : graphs) {
      list.push_back(Json{{"code", to_hex(g.code)}, {"graph", to_json(g.graph)}});
    }
    PrintJson(out, Json{{"spec", to_json(spec)},
                        {"count", graphs.size()},
                        {"graphs", std::move(list)}});
  } else {
    out << "count " << graphs.size() << "\n";
    for (const EnumeratedGraph& g : graphs) {
      out << to_hex(g.code) << "  " << to_string(g.graph) << "\n";
    }
  }
  return kExitOk;
}

void PrintFindings(std::ostream& out, const char* title,
                   const std::vector<GraphFinding>& findings) {
  out << title << " " << findings.size() << "\n";
  for (const GraphFinding& f : findings) {
    out << "  " << to_hex(f.code) << "  order " << f.order << "  "
        << Describe(f.extremal);
    if (!f.detail.empty()) out << "  " << f.detail;
    out << "\n";
  }
}

int CmdVerify(const Options& o, std::ostream& out) {
  const VerificationReport r = verify_bound(SpecFrom(o, 6), o.jobs);
  if (o.json) {
    PrintJson(out, to_json(r, o.timing));
  } else {
    out << "betti " << r.spec.betti << "  max_vertices " << r.spec.max_vertices
        << "  min_degree " << r.spec.min_degree << "\n"
        << "graphs " << r.graph_count << "\n"
        << "max_aut_order " << r.max_aut_order << "\n"
        << "bound " << r.bound << "\n";
    if (o.timing) out << "runtime_ms " << r.runtime_ms << "\n";
    PrintFindings(out, "violations", r.violations);
    PrintFindings(out, "extremal", r.extremal);
    PrintFindings(out, "mismatches", r.classification_mismatches);
    out << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

int CmdVerifyMetric(const Options& o, std::istream& in, std::ostream& out) {
  const bool single = !o.source.path.empty() || !o.source.family.empty();
  if (single) {
    const GraphDocument doc = Load(o.source, in);
    const MetricBoundReport r = verify_metric_bound(doc.metric());
    if (o.json) {
      PrintJson(out, to_json(r));
    } else {
      out << "genus " << r.genus << "\norder " << r.order << "\nbound "
          << r.bound << "\nextremal " << Describe(r.extremal) << "\n"
          << (r.ok ? "ok" : "FAILED") << "\n";
    }
    return r.ok ? kExitOk : kExitViolation;
  }
  RandomMetricOptions options;
  options.max_vertices = o.max_vertices;
  const RandomMetricReport r =
      random_metric_sweep(o.g, o.trials, o.seed, options);
  if (o.json) {
    PrintJson(out, to_json(r));
  } else {
    out << "genus " << r.genus << "  trials " << r.trials << "  seed "
        << r.seed << "\n"
        << "ok " << r.ok_count << "/" << r.trials << "\n"
        << "attained " << r.attained << "\n"
        << "max_order " << r.max_order << "\n"
        << "bound " << r.bound << "\n"
        << "mismatches " << r.classification_mismatches.size() << "\n"
        << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

void PrintFixedPoint(std::ostream& out, const FixedPointReport& r) {
  out << "vertex " << r.vertex << "  order " << r.order << "  bound "
      << r.bound;
  if (r.refined_bound) out << "  refined " << *r.refined_bound;
  out << "  class " << to_string(r.extremal) << "\n";
}

int CmdFixedPoint(const Options& o, std::istream& in, std::ostream& out) {
  const bool single =
      !o.source.path.empty() || !o.source.family.empty() || o.vertex >= 0;
  if (single) {
    const GraphDocument doc = Load(o.source, in);
    std::vector<FixedPointReport> reports;
    if (o.vertex >= 0) {
      reports.push_back(fixed_point_report(doc.graph, o.vertex));
    } else {
      for (VertexId x = 0; x < doc.graph.num_vertices(); ++x) {
        reports.push_back(fixed_point_report(doc.graph, x));
      }
    }
    bool ok = true;
    Json list = Json::array();
    for (const FixedPointReport& r : reports) {
      ok = ok && r.ok();
      if (o.json) {
        list.push_back(to_json(r));
      } else {
        PrintFixedPoint(out, r);
      }
    }
    if (o.json) PrintJson(out, list);
    return ok ? kExitOk : kExitViolation;
  }
  const FixedPointSweepReport r =
      verify_fixed_point_bound(SpecFrom(o, 6), o.jobs);
  if (o.json) {
    PrintJson(out, to_json(r, o.timing));
  } else {
    out << "betti " << r.spec.betti << "  max_vertices " << r.spec.max_vertices
        << "\n"
        << "graphs " << r.graph_count << "\n"
        << "pairs " << r.pair_count << "\n"
        << "refined_checked " << r.refined_checked << "\n"
        << "equality " << r.equality.size() << "\n"
        << "violations " << r.violations.size() << "\n"
        << "mismatches " << r.classification_mismatches.size() << "\n";
    if (o.timing) out << "runtime_ms " << r.runtime_ms << "\n";
    out << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups of multigraphs and metric graphs",
               "tropaut"};
  app.require_subcommand(1, 1);
  Options o;

  auto add = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    AddJson(cmd, o);
    return cmd;
  };
  auto add_graph = [&](const char* name, const char* help) {
    CLI::App* cmd = add(name, help);
    AddSource(cmd, o.source);
    return cmd;
  };

  CLI::App* aut = add_graph("aut", "Automorphism group of a multigraph");
  aut->add_option("--cap", o.cap, "Materialise elements up to this order");

  CLI::App* metric_aut =
      add_graph("metric-aut", "Isometry group of a metric graph");
  metric_aut->add_option("--cap", o.cap, "Materialise elements up to this order");
  metric_aut->add_option("--vertex", o.vertex, "Vertex for --leaves");
  metric_aut->add_option("--leaves", o.leaves,
                         "Attach this many unit pendant edges at --vertex");

  add_graph("bridges", "Bridges and cut vertices");

  CLI::App* contract_cmd =
      add_graph("contract", "Contract an edge set (default: all bridges)");
  contract_cmd->add_option("--edges", o.edges, "Edges to contract")
      ->delimiter(',');

  CLI::App* core = add_graph("core", "Leafless core");
  core->add_option("--vertex", o.vertex,
                   "Core of G minus the closed star of this vertex, with the "
                   "stabilizer restriction");

  add_graph("canonical-model", "Loopless canonical model of a metric graph");

  CLI::App* classify = add_graph("classify", "Extremal classification");
  classify->add_option("--vertex", o.vertex,
                       "Classify the pair (G, vertex) instead");

  CLI::App* family = add("family", "Print a named family graph");
  family->add_option("name", o.source.family, "Family name")
      ->check(CLI::IsMember(kFamilies))
      ->required();
  family->add_option("--g", o.source.g, "Genus parameter");
  family->add_option("--counts", o.source.counts, "Subdivision counts")
      ->delimiter(',');

  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--betti", o.betti, "Betti number");
    cmd->add_option("--max-vertices", o.max_vertices, "Vertex limit");
    cmd->add_option("--min-degree", o.min_degree, "Minimum degree (2 or 3)");
    cmd->add_option("--jobs", o.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
  };
  add_sweep(add("enumerate", "Connected leafless multigraphs up to isomorphism"));
  CLI::App* verify = add("verify", "Exhaustive bound check");
  add_sweep(verify);
  verify->add_flag("--timing", o.timing, "Report runtime");

  CLI::App* verify_metric =
      add_graph("verify-metric", "Bound check for one metric graph or a "
                                 "random sweep");
  verify_metric->add_option("--trials", o.trials, "Random trials");
  verify_metric->add_option("--seed", o.seed, "Random seed");
  verify_metric->add_option("--max-vertices", o.max_vertices,
                            "Vertex limit of the sampled graphs");

  CLI::App* fixed = add_graph("fixed-point", "Vertex stabilizer bound");
  fixed->add_option("--vertex", o.vertex, "Vertex (default: all)");
  fixed->add_option("--betti", o.betti, "Betti number of the sweep");
  fixed->add_option("--max-vertices", o.max_vertices, "Vertex limit");
  fixed->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  fixed->add_flag("--timing", o.timing, "Report runtime");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  o.g = o.source.g;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "aut") return CmdAut(o, in, out);
    if (name == "metric-aut") return CmdMetricAut(o, in, out);
    if (name == "bridges") return CmdBridges(o, in, out);
    if (name == "contract") return CmdContract(o, in, out);
    if (name == "core") return CmdCore(o, in, out);
    if (name == "canonical-model") return CmdCanonicalModel(o, in, out);
    if (name == "classify") return CmdClassify(o, in, out);
    if (name == "family") return CmdFamily(o, in, out);
    if (name == "enumerate") return CmdEnumerate(o, out);
    if (name == "verify") return CmdVerify(o, out);
    if (name == "verify-metric") return CmdVerifyMetric(o, in, out);
    if (name == "fixed-point") return CmdFixedPoint(o, in, out);
    throw UsageError("unknown command " + name);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace tropaut::cli
