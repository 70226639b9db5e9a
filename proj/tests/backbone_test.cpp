// Copyright 2026 The sblab Authors
//
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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "sblab/backbone.hpp"
#include "sblab/errors.hpp"
#include "sblab/experiment.hpp"
#include "sblab/graph.hpp"
#include "sblab/rng.hpp"

namespace sblab {
namespace {

TEST(Backbone, SmallCases) {
  const Graph b12 = BackboneGraph(1, 2);
  EXPECT_EQ(b12.n(), 2);
  EXPECT_EQ(b12.edge_count(), 1);
  EXPECT_EQ(BackboneGraph(2, 2).edge_count(), 4);
  const Graph k31 = KkrGraph(3, 1);
  EXPECT_EQ(k31.n(), 3);
  EXPECT_EQ(k31.edge_count(), 0);
  EXPECT_EQ(KkrGraph(2, 3).edge_count(), 6);
}

TEST(Backbone, ClosedFormsAndNesting) {
  for (int r = 1; r <= 8; ++r) {
    for (int k = 1; k <= 8; ++k) {
      const Graph b = BackboneGraph(r, k);
      const Graph kk = KkrGraph(r, k);
      EXPECT_EQ(b.n(), r * k);
      EXPECT_EQ(b.edge_count(), r * k * (k - 1) / 2 + (r - 1) * k * (k - 1));
      EXPECT_EQ(kk.edge_count(), r * k * (k - 1) / 2);
      EXPECT_TRUE(kk.is_subgraph_of(b));
      // The adjacency rule itself.
      for (int a = 0; a < r * k; ++a)
        for (int c = a + 1; c < r * k; ++c)
          EXPECT_EQ(b.has_edge(a, c), std::abs(a / k - c / k) <= 1 && a % k != c % k);
    }
  }
}

void ExpectEquitableTargets(const IntegerPartition& sizes, int v0) {
  const IntegerPartition m = KEquitableTargets(sizes, v0);
  EXPECT_EQ(m.total(), sizes.total() + v0);
  EXPECT_TRUE(m.is_k_equitable());
  const double share = static_cast<double>(v0) / (sizes.r * sizes.k);
  for (std::size_t c = 0; c < m.values.size(); ++c) EXPECT_LE(std::abs(m.values[c] - sizes.values[c] - share), 1.0);
}

TEST(KEquitableTargets, Examples) {
  IntegerPartition same(2, 3, 7);
  EXPECT_EQ(KEquitableTargets(same, 0).values, same.values);
  ExpectEquitableTargets(IntegerPartition(1, 3, 5), 2);
  ExpectEquitableTargets(IntegerPartition(2, 2, 10), 3);
  const IntegerPartition m = KEquitableTargets(IntegerPartition(2, 2, 10), 3);
  EXPECT_EQ(m.total(), 43);
}

TEST(KEquitableTargets, RandomEquitableInputs) {
  SplitMix64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const int r = 1 + static_cast<int>(rng.below(5)), k = 1 + static_cast<int>(rng.below(5));
    IntegerPartition sizes(r, k);
    for (int i = 0; i < r; ++i) {
      const int base = static_cast<int>(rng.below(50));
      for (int j = 0; j < k; ++j) sizes.at(i, j) = base + static_cast<int>(rng.below(2));
    }
    ExpectEquitableTargets(sizes, static_cast<int>(rng.below(40)));
  }
}

LabelledClique Clique(std::vector<int> members) { return {std::move(members)}; }

TEST(CliqueWalk, CompleteGraph) {
  // A single-clique walk cannot join two different cliques.
  EXPECT_THROW(CliqueWalk(CompleteGraph(3), Clique({0}), Clique({2}), 1), NoCommonNeighbour);
  EXPECT_EQ(CliqueWalk(CompleteGraph(3), Clique({1}), Clique({1}), 1).size(), 1U);
  for (int k = 2; k <= 4; ++k) {
    const Graph R = CompleteGraph(3 * k);
    std::vector<int> a(k), b(k);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 2 * k);
    const auto walk = CliqueWalk(R, Clique(a), Clique(b), k);
    EXPECT_EQ(walk.size(), static_cast<std::size_t>(k * (k + 1) / 2));
    EXPECT_TRUE(VerifyCliqueWalk(R, walk, Clique(a), Clique(b)));
  }
}

TEST(CliqueWalk, KTwoHasLengthThree) {
  const Graph R = CompleteGraph(6);
  EXPECT_EQ(CliqueWalk(R, Clique({0, 1}), Clique({4, 5}), 2).size(), 3U);
}

TEST(CliqueWalk, StartEqualsEnd) {
  const Graph R = ThinToMinDegree(CompleteGraph(20), 0.55, 1.0, 5);
  const Edge e = R.edges().front();
  const LabelledClique z = Clique({e.u, e.v});
  const auto walk = CliqueWalk(R, z, z, 2);
  EXPECT_TRUE(VerifyCliqueWalk(R, walk, z, z));
}

TEST(CliqueWalk, RandomDenseReducedGraphs) {
  for (int t = 0; t < 100; ++t) {
    const Graph R = ThinToMinDegree(CompleteGraph(30), 2.0 / 3 + 0.05, 1.0, DeriveSeed(71, t));
    ASSERT_TRUE(AllKSetsHaveCommonNeighbour(R, 3));
    // Start and end: greedy cliques from two random vertices.
    SplitMix64 rng(DeriveSeed(72, t));
    LabelledClique ends[2];
    for (auto& z : ends) {
      std::vector<int> members{static_cast<int>(rng.below(30))};
      for (int v = 0; v < 30 && members.size() < 3; ++v) {
        bool ok = true;
        for (int u : members) ok = ok && u != v && R.has_edge(u, v);
        if (ok) members.push_back(v);
      }
      ASSERT_EQ(members.size(), 3U);
      z = Clique(members);
    }
    const auto walk = CliqueWalk(R, ends[0], ends[1], 3);
    EXPECT_EQ(walk.size(), 6U);
    EXPECT_TRUE(VerifyCliqueWalk(R, walk, ends[0], ends[1]));
    const auto loop = CliqueWalk(R, ends[0], ends[0], 3);
    EXPECT_TRUE(VerifyCliqueWalk(R, loop, ends[0], ends[0]));
  }
}

TEST(VerifyCliqueWalk, DetectsRemovedAdjacency) {
  const Graph R = CompleteGraph(6);
  const LabelledClique a = Clique({0, 1}), b = Clique({4, 5});
  const auto walk = CliqueWalk(R, a, b, 2);
  ASSERT_TRUE(VerifyCliqueWalk(R, walk, a, b));
  // Remove one edge used between consecutive cliques.
  std::vector<Edge> edges;
  for (const Edge& e : R.edges())
    if (!(e.u == std::min(walk[1].by_label[0], walk[0].by_label[1]) &&
          e.v == std::max(walk[1].by_label[0], walk[0].by_label[1])))
      edges.push_back(e);
  EXPECT_FALSE(VerifyCliqueWalk(Graph::FromEdges(6, edges), walk, a, b));
}

TEST(VerifyCliqueWalk, HandBuiltWalk) {
  // k = 2 in K_6: (0,1) -> (2,3) -> (4,5).
  const Graph R = CompleteGraph(6);
  const std::vector<LabelledClique> walk{Clique({0, 1}), Clique({2, 3}), Clique({4, 5})};
  EXPECT_TRUE(VerifyCliqueWalk(R, walk, walk.front(), walk.back()));
  EXPECT_FALSE(VerifyCliqueWalk(R, {walk[0], walk[2]}, walk.front(), walk.back()));
}

TEST(CliqueWalk, ThrowsWithoutCommonNeighbours) {
  // Two disjoint edges: no clique can follow (0,1) towards (2,3).
  const Graph R = Graph::FromEdges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(CliqueWalk(R, Clique({0, 1}), Clique({2, 3}), 2), NoCommonNeighbour);
  EXPECT_THROW(CliqueWalk(R, Clique({0, 2}), Clique({2, 3}), 2), InvalidArgument);
}

}  // namespace
}  // namespace sblab
