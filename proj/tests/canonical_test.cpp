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


#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tropaut/automorphism.hpp"
#include "tropaut/families.hpp"

namespace tropaut {
namespace {

using testing::BruteIsomorphic;

// Literal minimum over every vertex permutation of the code layout.
CanonicalCode BruteCanonicalForm(const Multigraph& g) {
  const int n = g.num_vertices();
  const std::vector<int> m = testing::Matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  CanonicalCode best;
  do {
    CanonicalCode code(1, static_cast<char>(n));
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i <= j; ++i) {
        code.push_back(static_cast<char>(m[p[i] * n + p[j]]));
      }
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Multigraph Shuffle(const Multigraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Endpoints> edges;
  for (const Endpoints& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multigraph(g.num_vertices(), std::move(edges));
}

TEST(CanonicalFormTest, Examples) {
  EXPECT_EQ(canonical_form(banana(2)),
            canonical_form(Multigraph(2, {{1, 0}, {0, 1}, {1, 0}})));
  EXPECT_NE(canonical_form(h1()), canonical_form(h2()));
  EXPECT_NE(canonical_form(bouquet(2)), canonical_form(banana(1)));
}

TEST(CanonicalFormTest, GuardIsEnforced) {
  EXPECT_NO_THROW(canonical_form(testing::Cycle(kCanonicalVertexLimit)));
  EXPECT_THROW(canonical_form(testing::Path(kCanonicalVertexLimit + 1)),
               InvalidArgument);
}

TEST(CanonicalFormTest, HexRendering) {
  EXPECT_EQ(to_hex(canonical_form(banana(2))), "02000300");
  EXPECT_EQ(to_hex(canonical_form(Multigraph())), "00");
}

TEST(IsomorphismTest, Examples) {
  const Multigraph a = subdivide_uniform(banana(2), 2).graph;
  const std::vector<VertexId> perm = {4, 2, 0, 3, 1};
  EXPECT_TRUE(are_isomorphic(a, relabel(a, perm)));
  EXPECT_FALSE(are_isomorphic(banana(3), bouquet(3)));
  EXPECT_FALSE(are_isomorphic(lollipop(3), bouquet(3)));
}

TEST(CanonicalFormTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(7);
  for (const Multigraph& g :
       {h1(), h2(), h(), lollipop(3), subdivide_uniform(banana(3), 2).graph,
        testing::Cycle(8), subdivide_uniform(bouquet(4), 2).graph}) {
    const CanonicalCode code = canonical_form(g);
    for (int trial = 0; trial < 20; ++trial) {
      EXPECT_EQ(canonical_form(Shuffle(g, rng)), code) << to_string(g);
    }
  }
}

TEST(CanonicalFormTest, MatchesLiteralMinimumUpToIsomorphism) {
  // Both codes are complete invariants, so equality of one implies equality
  // of the other on every pair.
  std::vector<Multigraph> graphs;
  for (int n = 1; n <= 4; ++n) {
    testing::ForEachEdgeMultiset(n, n + 1, [&](const Multigraph& g) {
      graphs.push_back(g);
    });
  }
  std::vector<CanonicalCode> fast, brute;
  for (const Multigraph& g : graphs) {
    fast.push_back(canonical_form(g));
    brute.push_back(BruteCanonicalForm(g));
  }
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      EXPECT_EQ(fast[i] == fast[j], brute[i] == brute[j])
          << to_string(graphs[i]) << " vs " << to_string(graphs[j]);
    }
  }
}

TEST(IsomorphismTest, AgreesWithBruteForceOnSmallGraphs) {
  std::vector<Multigraph> graphs;
  testing::ForEachEdgeMultiset(4, 5, [&](const Multigraph& g) {
    graphs.push_back(g);
  });
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Multigraph& a = graphs[rng() % graphs.size()];
    const Multigraph b = trial % 2 == 0 ? Shuffle(a, rng)
                                        : graphs[rng() % graphs.size()];
    EXPECT_EQ(are_isomorphic(a, b), BruteIsomorphic(a, b))
        << to_string(a) << " vs " << to_string(b);
  }
}

}  // namespace
}  // namespace tropaut
