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

#include <sstream>

#include <gtest/gtest.h>

#include "tropaut/families.hpp"

namespace tropaut {
namespace {

constexpr char kBanana[] =
    R"({"vertices":2,"edges":[{"u":0,"v":1},{"u":0,"v":1},{"u":0,"v":1}]})";

std::string ErrorOf(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGraphTest, Banana) {
  const GraphDocument doc = parse_graph(kBanana);
  EXPECT_EQ(doc.graph, banana(2));
  EXPECT_FALSE(doc.is_metric());
  EXPECT_TRUE(doc.name.empty());
}

TEST(ParseGraphTest, MetricBanana) {
  const GraphDocument doc = parse_graph(
      R"({"name":"theta","vertices":2,"edges":[{"u":0,"v":1},{"u":1,"v":0},)"
      R"({"u":0,"v":1}],"lengths":["1","1/2",3]})");
  ASSERT_TRUE(doc.is_metric());
  EXPECT_EQ(doc.name, "theta");
  EXPECT_EQ(*doc.lengths, (std::vector<Rational>{1, Rational(1, 2), 3}));
  EXPECT_EQ(doc.metric().graph(), banana(2));
}

TEST(ParseGraphTest, LoopsAndEmptyGraph) {
  EXPECT_EQ(parse_graph(R"({"vertices":1,"edges":[{"u":0,"v":0}]})").graph,
            bouquet(1));
  EXPECT_TRUE(parse_graph(R"({"vertices":0,"edges":[]})").graph.empty());
}

TEST(ParseGraphTest, ErrorsNameTheIndex) {
  EXPECT_NE(ErrorOf(R"({"vertices":2,"edges":[{"u":0,"v":1}],"lengths":["0"]})")
                .find("length 0"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"vertices":2,"edges":[{"u":0,"v":1},{"u":0,"v":1}],)"
                    R"("lengths":["1","-2"]})")
                .find("length 1"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"vertices":2,"edges":[{"u":0,"v":1},{"u":0,"v":2}]})")
                .find("edge 1"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"vertices":2,"edges":[{"u":0,"v":1},{"u":0,"v":1},)"
                    R"({"u":0,"v":1}],"lengths":["1","1","x"]})")
                .find("length 2"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"vertices":2,"edges":[{"u":0}]})").find("edge 0"),
            std::string::npos);
}

TEST(ParseGraphTest, StructuralErrors) {
  for (const char* bad :
       {"", "{", "[]", R"({"edges":[]})", R"({"vertices":-1,"edges":[]})",
        R"({"vertices":"2","edges":[]})", R"({"vertices":2})",
        R"({"vertices":2,"edges":[{"u":0,"v":1}],"lengths":["1","1"]})",
        R"({"vertices":2,"edges":[{"u":0,"v":1}],"lengths":[1.5]})",
        R"({"vertices":2,"edges":[],"name":3})"}) {
    EXPECT_THROW(parse_graph(bad), ParseError) << bad;
  }
}

TEST(ParseGraphTest, ReadsStreams) {
  std::istringstream in(kBanana);
  EXPECT_EQ(read_graph(in).graph, banana(2));
  EXPECT_THROW(read_graph_file("/nonexistent/graph.json"), ParseError);
}

TEST(ToJsonTest, GraphRoundTrip) {
  for (const Multigraph& g : {banana(3), bouquet(2), lollipop(3), h(), Multigraph()}) {
    EXPECT_EQ(parse_graph(to_json(g).dump()).graph, g);
  }
  const MetricGraph m(banana(2), {1, Rational(2, 3), 5});
  const GraphDocument doc = parse_graph(to_json(m, "m").dump());
  EXPECT_EQ(doc.name, "m");
  EXPECT_EQ(doc.metric().lengths(), m.lengths());
}

TEST(ToJsonTest, GroupLayout) {
  const Json j = to_json(automorphisms(banana(2)));
  EXPECT_EQ(j["order"], 12);
  ASSERT_TRUE(j["generators"].is_array());
  for (const Json& f : j["generators"]) {
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f["vertex_perm"].size(), 2u);
    EXPECT_EQ(f["edge_perm"].size(), 3u);
  }
  EXPECT_EQ(j.size(), 2u);
}

TEST(ToJsonTest, VerificationReportFields) {
  const VerificationReport r = verify_bound({2, 3, 2});
  const Json j = to_json(r);
  for (const char* key : {"spec", "graph_count", "max_aut_order", "bound",
                          "violations", "extremal"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(j.contains("runtime_ms"));
  EXPECT_TRUE(to_json(r, true).contains("runtime_ms"));
  EXPECT_EQ(j["extremal"][0]["class"]["tag"], "A_banana");
}

}  // namespace
}  // namespace tropaut
