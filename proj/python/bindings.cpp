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


#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropaut/automorphism.hpp"
#include "tropaut/enumeration.hpp"
#include "tropaut/families.hpp"
#include "tropaut/io.hpp"
#include "tropaut/metric.hpp"
#include "tropaut/multigraph.hpp"

namespace py = pybind11;

namespace tropaut {
namespace {

Multigraph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Endpoints> ends;
  ends.reserve(edges.size());
  for (const auto& [u, v] : edges) ends.emplace_back(u, v);
  return Multigraph(n, std::move(ends));
}

std::vector<std::pair<int, int>> EdgeList(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Endpoints& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

MetricGraph MakeMetric(const Multigraph& g,
                       const std::vector<std::string>& lengths) {
  std::vector<Rational> parsed;
  parsed.reserve(lengths.size());
  for (const std::string& text : lengths) parsed.push_back(Rational::Parse(text));
  return MetricGraph(g, std::move(parsed));
}

}  // namespace
}  // namespace tropaut

PYBIND11_MODULE(_core, m) {
  using namespace tropaut;
  m.doc() = "Automorphism groups of multigraphs and metric graphs";

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init(&MakeGraph), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Multigraph::num_vertices)
      .def_property_readonly("num_edges", &Multigraph::num_edges)
      .def_property_readonly("edges", &EdgeList)
      .def("to_json",
           [](const Multigraph& g) { return to_json(g).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return parse_graph(text).graph;
                  })
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) {
        return a == b;
      })
      .def("__repr__", [](const Multigraph& g) { return to_string(g); });

  m.def("betti_number", &betti_number);
  m.def("is_connected", &is_connected);
  m.def("is_leafless", &is_leafless);
  m.def("bridges", &bridges);
  m.def("cut_vertices", &cut_vertices);
  m.def("subdivide",
        [](const Multigraph& g, const std::vector<int>& counts) {
          return subdivide(g, counts).graph;
        });
  m.def("contract", [](const Multigraph& g, const std::vector<EdgeId>& s) {
    return contract(g, s).graph;
  });
  m.def("leafless_core",
        [](const Multigraph& g) { return leafless_core(g).graph; });

  m.def("family", &make_family, py::arg("name"), py::arg("g") = 2);
  m.def("banana", &banana);
  m.def("bouquet", &bouquet);
  m.def("lollipop", &lollipop);

  m.def("automorphism_order",
        [](const Multigraph& g) { return automorphisms(g, 0).order; });
  m.def("automorphism_group_json",
        [](const Multigraph& g, std::uint64_t cap) {
          return to_json(automorphisms(g, cap)).dump();
        },
        py::arg("graph"), py::arg("cap") = kDefaultElementCap);
  m.def("stabilizer_order", [](const Multigraph& g, VertexId x) {
    return stabilizer(g, CellSet{{x}, {}}, 0).order;
  });
  m.def("automorphism_count_oracle", &automorphism_count_oracle);
  m.def("canonical_form",
        [](const Multigraph& g) { return to_hex(canonical_form(g)); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def("classify_extremal", [](const Multigraph& g) {
    const ExtremalClass c = classify_extremal(g);
    return std::make_pair(std::string(to_string(c.tag)), c.counts);
  });
  m.def("classify_fixed_point_extremal", [](const Multigraph& g, VertexId x) {
    return std::string(to_string(classify_fixed_point_extremal(g, x)));
  });
  m.def("hurwitz_bound", &hurwitz_bound);
  m.def("fixed_point_bound", &fixed_point_bound);

  m.def("isometry_order",
        [](const Multigraph& g, const std::vector<std::string>& lengths) {
          return isometry_group(MakeMetric(g, lengths), 0).group.order;
        });
  m.def("metric_genus",
        [](const Multigraph& g, const std::vector<std::string>& lengths) {
          return genus(MakeMetric(g, lengths));
        });

  m.def("enumerate_leafless",
        [](int betti, int max_vertices, int min_degree) {
          std::vector<Multigraph> out;
          for (EnumeratedGraph& e :
               enumerate_leafless({betti, max_vertices, min_degree})) {
            out.push_back(std::move(e.graph));
          }
          return out;
        },
        py::arg("betti"), py::arg("max_vertices"), py::arg("min_degree") = 2);
  m.def("verify_bound_json",
        [](int betti, int max_vertices, int min_degree, int jobs) {
          py::gil_scoped_release release;
          return to_json(verify_bound({betti, max_vertices, min_degree}, jobs))
              .dump();
        },
        py::arg("betti"), py::arg("max_vertices"), py::arg("min_degree") = 2,
        py::arg("jobs") = 1);
  m.def("verify_fixed_point_bound_json",
        [](int betti, int max_vertices, int jobs) {
          py::gil_scoped_release release;
          return to_json(verify_fixed_point_bound({betti, max_vertices, 2}, jobs))
              .dump();
        },
        py::arg("betti"), py::arg("max_vertices"), py::arg("jobs") = 1);
  m.def("random_metric_sweep_json",
        [](int g, int trials, std::uint64_t seed) {
          py::gil_scoped_release release;
          return to_json(random_metric_sweep(g, trials, seed)).dump();
        },
        py::arg("g"), py::arg("trials"), py::arg("seed"));
}
