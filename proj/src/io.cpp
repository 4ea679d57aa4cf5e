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


#include "tropaut/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

namespace tropaut {
namespace {

constexpr std::int64_t kMaxInputVertices = 1'000'000;

std::int64_t RequireInt(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw ParseError(what + " must be an integer");
  }
  return value.get<std::int64_t>();
}

Rational ParseLength(const Json& value, std::size_t index) {
  const std::string where = "length " + std::to_string(index);
  Rational r;
  if (value.is_number_integer()) {
    r = Rational(value.get<std::int64_t>());
  } else if (value.is_string()) {
    try {
      r = Rational::Parse(value.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  } else {
    throw ParseError(where + " must be a string or an integer");
  }
  if (!r.is_positive()) throw ParseError(where + " must be positive");
  return r;
}

Json CountsJson(const std::vector<int>& counts) {
  Json out = Json::array();
  for (int c : counts) out.push_back(c);
  return out;
}

Json FindingJson(const GraphFinding& f) {
  Json out;
  out["code"] = to_hex(f.code);
  out["order"] = f.order;
  out["class"] = to_json(f.extremal);
  out["graph"] = to_json(f.graph);
  if (!f.detail.empty()) out["detail"] = f.detail;
  return out;
}

Json FixedPointFindingJson(const FixedPointFinding& f) {
  Json out;
  out["code"] = to_hex(f.code);
  out["graph"] = to_json(f.graph);
  out["report"] = to_json(f.report);
  if (!f.detail.empty()) out["detail"] = f.detail;
  return out;
}

Json MetricTrialJson(const MetricTrial& t) {
  Json out;
  out["graph"] = to_json(t.metric);
  out["report"] = to_json(t.report);
  return out;
}

template <typename T, typename F>
Json ListJson(const std::vector<T>& items, F&& convert) {
  Json out = Json::array();
  for (const T& item : items) out.push_back(convert(item));
  return out;
}

}  // namespace

MetricGraph GraphDocument::metric() const {
  if (lengths) return MetricGraph(graph, *lengths);
  return MetricGraph::Unit(graph);
}

GraphDocument parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph must be a JSON object");

  GraphDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices")) throw ParseError("missing \"vertices\"");
  const std::int64_t n = RequireInt(doc["vertices"], "vertices");
  if (n < 0 || n > kMaxInputVertices) {
    throw ParseError("vertices out of range: " + std::to_string(n));
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing \"edges\" array");
  }
  const Json& edges = doc["edges"];
  std::vector<Endpoints> ends;
  ends.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    const Json& e = edges[i];
    if (!e.is_object() || !e.contains("u") || !e.contains("v")) {
      throw ParseError(where + " must be an object with \"u\" and \"v\"");
    }
    const std::int64_t u = RequireInt(e["u"], where + " endpoint u");
    const std::int64_t v = RequireInt(e["v"], where + " endpoint v");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(where + " has an endpoint out of range");
    }
    ends.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  out.graph = Multigraph(static_cast<int>(n), std::move(ends));

  if (doc.contains("lengths")) {
    const Json& lengths = doc["lengths"];
    if (!lengths.is_array()) throw ParseError("lengths must be an array");
    if (lengths.size() != edges.size()) {
      throw ParseError("lengths has " + std::to_string(lengths.size()) +
                       " entries for " + std::to_string(edges.size()) +
                       " edges");
    }
    std::vector<Rational> parsed;
    parsed.reserve(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      parsed.push_back(ParseLength(lengths[i], i));
    }
    out.lengths = std::move(parsed);
  }
  return out;
}

GraphDocument read_graph(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return parse_graph(text);
}

GraphDocument read_graph_file(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

Json to_json(const Multigraph& g, std::string_view name) {
  Json out;
  if (!name.empty()) out["name"] = std::string(name);
  out["vertices"] = g.num_vertices();
  Json edges = Json::array();
  for (const Endpoints& e : g.edges()) {
    edges.push_back(Json{{"u", e.u}, {"v", e.v}});
  }
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const MetricGraph& m, std::string_view name) {
  Json out = to_json(m.graph(), name);
  out["lengths"] =
      ListJson(m.lengths(), [](const Rational& r) { return r.to_string(); });
  return out;
}

Json to_json(const GraphMap& f) {
  return Json{{"vertex_perm", f.vertex_perm}, {"edge_perm", f.edge_perm}};
}

Json to_json(const AutomorphismGroup& group) {
  Json out;
  out["order"] = group.order;
  out["generators"] =
      ListJson(group.generators, [](const GraphMap& f) { return to_json(f); });
  return out;
}

Json to_json(const ExtremalClass& c) {
  return Json{{"tag", std::string(to_string(c.tag))},
              {"counts", CountsJson(c.counts)}};
}

Json to_json(const EnumSpec& spec) {
  return Json{{"betti", spec.betti},
              {"max_vertices", spec.max_vertices},
              {"min_degree", spec.min_degree}};
}

Json to_json(const MetricBoundReport& report) {
  Json out;
  out["genus"] = report.genus;
  out["order"] = report.order;
  out["bound"] = report.bound;
  out["ok"] = report.ok;
  out["extremal"] = to_json(report.extremal);
  return out;
}

Json to_json(const CanonicalModel& model) {
  Json out = to_json(model.model);
  Json origin = Json::array();
  for (const auto& v : model.vertex_origin) {
    origin.push_back(v ? Json(*v) : Json(nullptr));
  }
  out["vertex_origin"] = std::move(origin);
  Json edges = Json::array();
  for (const ModelEdgeOrigin& e : model.edge_origin) {
    edges.push_back(Json{{"path", e.path}, {"half", e.half}});
  }
  out["edge_origin"] = std::move(edges);
  return out;
}

Json to_json(const FixedPointReport& report) {
  Json out;
  out["vertex"] = report.vertex;
  out["betti"] = report.betti;
  out["order"] = report.order;
  out["bound"] = report.bound;
  out["components"] = report.components;
  out["incident_edges"] = report.incident_edges;
  out["bridgeless"] = report.bridgeless;
  out["refined_bound"] =
      report.refined_bound ? Json(*report.refined_bound) : Json(nullptr);
  out["class"] = std::string(to_string(report.extremal));
  out["ok"] = report.ok();
  return out;
}

Json to_json(const VerificationReport& report, bool include_timing) {
  Json out;
  out["spec"] = to_json(report.spec);
  out["graph_count"] = report.graph_count;
  out["max_aut_order"] = report.max_aut_order;
  out["bound"] = report.bound;
  out["ok"] = report.ok();
  out["violations"] = ListJson(report.violations, FindingJson);
  out["extremal"] = ListJson(report.extremal, FindingJson);
  out["classification_mismatches"] =
      ListJson(report.classification_mismatches, FindingJson);
  if (include_timing) out["runtime_ms"] = report.runtime_ms;
  return out;
}

Json to_json(const FixedPointSweepReport& report, bool include_timing) {
  Json out;
  out["spec"] = to_json(report.spec);
  out["graph_count"] = report.graph_count;
  out["pair_count"] = report.pair_count;
  out["refined_checked"] = report.refined_checked;
  out["ok"] = report.ok();
  out["violations"] = ListJson(report.violations, FixedPointFindingJson);
  out["equality"] = ListJson(report.equality, FixedPointFindingJson);
  out["classification_mismatches"] =
      ListJson(report.classification_mismatches, FixedPointFindingJson);
  if (include_timing) out["runtime_ms"] = report.runtime_ms;
  return out;
}

Json to_json(const RandomMetricReport& report) {
  Json out;
  out["genus"] = report.genus;
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["max_vertices"] = report.max_vertices;
  out["palette"] =
      ListJson(report.palette, [](const Rational& r) { return r.to_string(); });
  out["ok_count"] = report.ok_count;
  out["attained"] = report.attained;
  out["max_order"] = report.max_order;
  out["bound"] = report.bound;
  out["ok"] = report.ok();
  out["violations"] = ListJson(report.violations, MetricTrialJson);
  out["classification_mismatches"] =
      ListJson(report.classification_mismatches, MetricTrialJson);
  return out;
}

}  // namespace tropaut
