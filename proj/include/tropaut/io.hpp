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


#ifndef TROPAUT_IO_HPP_
#define TROPAUT_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropaut/automorphism.hpp"
#include "tropaut/enumeration.hpp"
#include "tropaut/metric.hpp"
#include "tropaut/multigraph.hpp"
#include "tropaut/rational.hpp"

namespace tropaut {

using Json = nlohmann::ordered_json;

// Malformed graph input. The message names the offending index when there
// is one.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Graph file format:
//   {"name": "...", "vertices": n, "edges": [{"u": 0, "v": 1}, ...],
//    "lengths": ["1", "1/2", 3, ...]}
// "name" and "lengths" are optional. Edge order defines EdgeId.
struct GraphDocument {
  std::string name;
  Multigraph graph;
  std::optional<std::vector<Rational>> lengths;

  bool is_metric() const { return lengths.has_value(); }
  MetricGraph metric() const;  // unit lengths when none were given
};

GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph(std::istream& in);
// "-" reads standard input.
GraphDocument read_graph_file(const std::string& path);

Json to_json(const Multigraph& g, std::string_view name = {});
Json to_json(const MetricGraph& m, std::string_view name = {});
Json to_json(const GraphMap& f);
Json to_json(const AutomorphismGroup& group);
Json to_json(const ExtremalClass& c);
Json to_json(const EnumSpec& spec);
Json to_json(const MetricBoundReport& report);
Json to_json(const CanonicalModel& model);
Json to_json(const FixedPointReport& report);
Json to_json(const VerificationReport& report, bool include_timing = false);
Json to_json(const FixedPointSweepReport& report, bool include_timing = false);
Json to_json(const RandomMetricReport& report);

}  // namespace tropaut

#endif  // TROPAUT_IO_HPP_
