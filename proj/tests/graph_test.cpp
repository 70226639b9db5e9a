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
#include <sstream>

#include "sblab/adversary.hpp"
#include "sblab/bitset.hpp"
#include "sblab/errors.hpp"
#include "sblab/graph.hpp"
#include "sblab/graph_io.hpp"
#include "sblab/rng.hpp"

namespace sblab {
namespace {

TEST(Bitset, SetAlgebra) {
  Bitset a(130, {0, 64, 129});
  Bitset b(130, {64, 100});
  EXPECT_EQ(a.count(), 3);
  EXPECT_EQ(a.and_count(b), 1);
  EXPECT_EQ((a & b).to_vector(), std::vector<int>({64}));
  EXPECT_EQ((a | b).count(), 4);
  a.subtract(b);
  EXPECT_EQ(a.to_vector(), std::vector<int>({0, 129}));
  EXPECT_EQ(a.next(1), 129);
  EXPECT_EQ(Bitset::Full(70).count(), 70);
}

TEST(Gnp, CompleteWhenPIsOne) {
  const Graph g = GenerateGnp({4, 1.0, 123});
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(MinDegree(g), 3);
}

TEST(Gnp, EmptyWhenPIsZero) { EXPECT_EQ(GenerateGnp({100, 0.0, 5}).edge_count(), 0); }

TEST(Gnp, EdgeCountNearMean) {
  const Graph g = GenerateGnp({1000, 0.1, 7});
  const double mean = 0.1 * 1000 * 999 / 2;
  EXPECT_NEAR(static_cast<double>(g.edge_count()), mean, 3 * std::sqrt(mean));
}

TEST(Gnp, PureFunctionOfParameters) {
  EXPECT_EQ(GenerateGnp({300, 0.2, 11}).edges(), GenerateGnp({300, 0.2, 11}).edges());
  EXPECT_NE(GenerateGnp({300, 0.2, 11}).edges(), GenerateGnp({300, 0.2, 12}).edges());
}

TEST(Gnp, PairFrequencyMatchesP) {
  // Each fixed pair should appear in about p of the samples.
  int hits = 0;
  const int samples = 4000;
  for (int s = 0; s < samples; ++s) hits += GenerateGnp({6, 0.3, DeriveSeed(99, s)}).has_edge(2, 5);
  EXPECT_NEAR(hits / static_cast<double>(samples), 0.3, 4 * std::sqrt(0.3 * 0.7 / samples));
}

TEST(Graph, DegreeSumIsTwiceEdges) {
  for (int s = 0; s < 5; ++s) {
    const Graph g = GenerateGnp({80, 0.3, static_cast<std::uint64_t>(s)});
    std::int64_t sum = 0;
    for (int v = 0; v < g.n(); ++v) {
      sum += g.degree(v);
      for (int u : g.neighbours(v)) EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_FALSE(g.has_edge(v, v));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Graph, RejectsSelfLoopsAndCollapsesRepeats) {
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), InvalidArgument);
  EXPECT_EQ(Graph::FromEdges(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count(), 1);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(MinDegree(CompleteGraph(4)), 3);
  EXPECT_EQ(MinDegree(Graph(5)), 0);
  EXPECT_EQ(MinDegree(Graph(0)), 0);
  const Graph f = BuildF();
  EXPECT_EQ(MinDegree(f), 6);
  EXPECT_EQ(f.degree(fvertex::kR), 6);
  EXPECT_EQ(f.degree(fvertex::kFour), 9);
}

// Independent clique count by subset enumeration over N(v).
std::int64_t NaiveNeighbourhoodCliques(const Graph& g, int v, int s) {
  const auto nb = g.neighbours(v);
  const int d = static_cast<int>(nb.size());
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    if (std::popcount(mask) != s) continue;
    bool clique = true;
    for (int i = 0; i < d && clique; ++i)
      for (int j = i + 1; j < d && clique; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !g.has_edge(nb[i], nb[j])) clique = false;
    count += clique;
  }
  return count;
}

TEST(CountCliques, Examples) {
  const Graph k5 = CompleteGraph(5);
  EXPECT_EQ(CountCliquesInNeighbourhood(k5, 0, 3), 4);
  EXPECT_EQ(CountCliquesInNeighbourhood(BuildF(), fvertex::kR, 2), 6);
  const Graph g = GenerateGnp({40, 0.4, 3});
  for (int v = 0; v < 5; ++v) EXPECT_EQ(CountCliquesInNeighbourhood(g, v, 1), g.degree(v));
  EXPECT_THROW(CountCliquesInNeighbourhood(g, 0, 0), InvalidArgument);
}

TEST(CountCliques, MatchesSubsetEnumeration) {
  for (int s = 0; s < 6; ++s) {
    const Graph g = GenerateGnp({30, 0.5, DeriveSeed(17, s)});
    for (int v = 0; v < 3; ++v) {
      if (g.degree(v) > 20) continue;
      for (int size = 2; size <= 4; ++size)
        EXPECT_EQ(CountCliquesInNeighbourhood(g, v, size), NaiveNeighbourhoodCliques(g, v, size));
      // s = 2 is the edge count of G[N(v)].
      EXPECT_EQ(CountCliquesInNeighbourhood(g, v, 2),
                CountEdgesInside(g, Bitset::FromVector(g.n(), {g.neighbours(v).begin(), g.neighbours(v).end()})));
    }
  }
}

TEST(CountCliques, EstimatorBracketsExactCount) {
  const Graph g = GenerateGnp({60, 0.7, 5});
  const auto exact = static_cast<double>(CountCliquesInNeighbourhood(g, 0, 4));
  const CliqueEstimate est = EstimateCliquesInNeighbourhood(g, 0, 4, 20000, 9);
  EXPECT_NEAR(est.estimate, exact, 5 * est.stderr_ + 1e-9);
}

TEST(CommonNeighbourhood, Examples) {
  const Graph k4 = CompleteGraph(4);
  const std::vector<int> w{0, 1};
  EXPECT_EQ(CommonNeighbourhood(k4, w).to_vector(), std::vector<int>({2, 3}));
  EXPECT_TRUE(CommonNeighbourhood(Graph(5), std::vector<int>{2}).none());
  EXPECT_EQ(CommonNeighbourhood(k4, std::vector<int>{}).count(), 4);
  const Graph g = GenerateGnp({50, 0.3, 8});
  const std::vector<int> one{7};
  EXPECT_EQ(CommonNeighbourhood(g, one), g.adjacency(7));
}

TEST(CommonNeighbourhood, ConcentratesInRandomGraph) {
  const int n = 200;
  const double p = 0.3;
  const Graph g = GenerateGnp({n, p, 21});
  const double mean = n * p * p;
  for (int a = 0; a < 10; ++a) {
    const std::vector<int> w{a, a + 100};
    EXPECT_NEAR(CommonNeighbourhood(g, w).count(), mean, 4 * std::sqrt(mean));
  }
}

TEST(Families, Shapes) {
  EXPECT_EQ(CycleGraph(7).edge_count(), 7);
  EXPECT_EQ(CyclePower(10, 2).edge_count(), 20);
  EXPECT_EQ(PetersenGraph().edge_count(), 15);
  EXPECT_TRUE(IsBipartite(CompleteBipartite(3, 4)));
  EXPECT_FALSE(IsBipartite(CycleGraph(5)));
  const Graph t = RandomTree(50, 4);
  EXPECT_EQ(t.edge_count(), 49);
  EXPECT_EQ(ConnectedComponents(t).size(), 1U);
  EXPECT_EQ(ConnectedComponents(DisjointCopies(CycleGraph(4), 3)).size(), 3U);
}

TEST(GraphIo, EdgeListRoundTrip) {
  const Graph g = GenerateGnp({25, 0.3, 2});
  std::stringstream ss;
  WriteEdgeList(ss, g);
  EXPECT_EQ(ReadGraph(ss).edges(), g.edges());
}

TEST(GraphIo, ReadsDimacs) {
  std::stringstream ss("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const Graph g = ReadGraph(ss);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(GraphIo, RejectsMalformedInput) {
  std::stringstream bad("3 2\n0 1\n");
  EXPECT_THROW(ReadGraph(bad), ParseError);
  std::stringstream out_of_range("2 1\n0 5\n");
  EXPECT_THROW(ReadGraph(out_of_range), Error);
}

TEST(Rng, MatchesReferenceStream) {
  // First outputs of the published SplitMix64 reference for seed 0.
  SplitMix64 r(0);
  EXPECT_EQ(r(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r(), 0x6E789E6AA1B965F4ULL);
}

TEST(Rng, DeterministicAndUnbiased) {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
  SplitMix64 r(1);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 50000; ++i) ++hist[r.below(5)];
  for (int c : hist) EXPECT_NEAR(c, 10000, 400);
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
}

}  // namespace
}  // namespace sblab
