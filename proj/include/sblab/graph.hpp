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

#ifndef SBLAB_GRAPH_HPP_
#define SBLAB_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "sblab/bitset.hpp"

namespace sblab {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; adjacency
// is held both as bit rows (for word-parallel set algebra) and as sorted
// neighbour lists. Memory is n^2/8 bytes for the rows, which caps practical
// sizes at a few tens of thousands of vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Self-loops and out-of-range ids throw InvalidArgument; repeated pairs are
  // collapsed.
  static Graph FromEdges(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(rows_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const { return rows_[u].test(v); }
  const Bitset& adjacency(int v) const { return rows_[v]; }
  std::span<const int> neighbours(int v) const { return lists_[v]; }
  int degree(int v) const { return static_cast<int>(lists_[v].size()); }

  // Every edge once, with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_subgraph_of(const Graph& other) const;

 private:
  friend class GraphBuilder;
  void FinishFromRows();

  std::vector<Bitset> rows_;
  std::vector<std::vector<int>> lists_;
  std::int64_t edge_count_ = 0;
};

// Mutable staging area used by generators and edge-deleting adversaries.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int n() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return degree_[v]; }
  const Bitset& adjacency(int v) const { return rows_[v]; }

  Graph Build() const;

 private:
  std::vector<Bitset> rows_;
  std::vector<int> degree_;
};

struct GnpParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Binomial random graph. Pairs are visited in the order (1,0),(2,0),(2,1),...
// and skipped geometrically (Batagelj-Brandes) from a SplitMix64 stream, so the
// output is a pure function of the parameters.
Graph GenerateGnp(const GnpParams& params);

int MinDegree(const Graph& g);
int MaxDegree(const Graph& g);

// Exact number of s-cliques in the subgraph induced by N(v); 1 <= s <= 8.
std::int64_t CountCliquesInNeighbourhood(const Graph& g, int v, int s);

struct CliqueEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  int samples = 0;
};

// Monte Carlo variant for larger s: samples uniform s-subsets of N(v).
CliqueEstimate EstimateCliquesInNeighbourhood(const Graph& g, int v, int s, int samples,
                                              std::uint64_t seed);

// Intersection of N(w) over w in W; all vertices when W is empty.
Bitset CommonNeighbourhood(const Graph& g, std::span<const int> W);

// Number of edges with both ends in `set`.
std::int64_t CountEdgesInside(const Graph& g, const Bitset& set);

// Edges between disjoint sets a and b.
std::int64_t CountEdgesBetween(const Graph& g, const Bitset& a, const Bitset& b);

// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
Graph InducedSubgraph(const Graph& g, std::span<const int> vertices);

// Hop distances from source; -1 where unreachable.
std::vector<int> BfsDistances(const Graph& g, int source);

// Multi-source distances (distance to the nearest source).
std::vector<int> BfsDistances(const Graph& g, std::span<const int> sources);

std::vector<std::vector<int>> ConnectedComponents(const Graph& g);

bool IsBipartite(const Graph& g);

// Standard families.
Graph CompleteGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
// k-th power of the n-cycle: i ~ j iff their cyclic distance is in [1, k].
Graph CyclePower(int n, int k);
Graph CompleteBipartite(int a, int b);
Graph StarGraph(int leaves);
Graph PetersenGraph();
Graph DisjointUnion(std::span<const Graph> parts);
Graph DisjointCopies(const Graph& g, int copies);
// Uniform random labelled tree via a Pruefer sequence.
Graph RandomTree(int n, std::uint64_t seed);

}  // namespace sblab

#endif  // SBLAB_GRAPH_HPP_
