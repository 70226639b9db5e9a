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

#include "sblab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "sblab/errors.hpp"
#include "sblab/rng.hpp"

namespace sblab {

Graph::Graph(int n) : rows_(n, Bitset(n)), lists_(n) {}

Graph Graph::FromEdges(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.Build();
}

void Graph::FinishFromRows() {
  lists_.assign(rows_.size(), {});
  std::int64_t degree_sum = 0;
  for (int v = 0; v < n(); ++v) {
    lists_[v] = rows_[v].to_vector();
    degree_sum += static_cast<std::int64_t>(lists_[v].size());
  }
  edge_count_ = degree_sum / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n(); ++u) {
    for (int v : lists_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (other.n() != n()) return false;
  for (int v = 0; v < n(); ++v) {
    if (!rows_[v].is_subset_of(other.rows_[v])) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(int n) : rows_(n, Bitset(n)), degree_(n, 0) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows_), degree_(g.n()) {
  for (int v = 0; v < g.n(); ++v) degree_[v] = g.degree(v);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) {
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for n=" + std::to_string(n()));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++degree_[u];
  ++degree_[v];
}

void GraphBuilder::remove_edge(int u, int v) {
  if (!rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --degree_[u];
  --degree_[v];
}

Graph GraphBuilder::Build() const {
  Graph g;
  g.rows_ = rows_;
  g.FinishFromRows();
  return g;
}

Graph GenerateGnp(const GnpParams& params) {
  if (params.n < 0) throw InvalidArgument("G(n,p): negative n");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw InvalidArgument("G(n,p): p outside [0,1]");
  const int n = params.n;
  GraphBuilder b(n);
  if (n <= 1 || params.p == 0.0) return b.Build();
  if (params.p == 1.0) {
    for (int v = 1; v < n; ++v)
      for (int w = 0; w < v; ++w) b.add_edge(v, w);
    return b.Build();
  }
  SplitMix64 rng(params.seed);
  const double log_q = std::log1p(-params.p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) b.add_edge(static_cast<int>(v), static_cast<int>(w));
  }
  return b.Build();
}

int MinDegree(const Graph& g) {
  if (g.n() == 0) return 0;
  int best = g.degree(0);
  for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int MaxDegree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

std::int64_t CountCliquesIn(const Graph& g, const Bitset& candidates, int remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return candidates.count();
  std::int64_t total = 0;
  candidates.for_each([&](int u) {
    Bitset next = candidates & g.adjacency(u);
    next.clear_below(u + 1);
    if (next.count() >= remaining - 1) total += CountCliquesIn(g, next, remaining - 1);
  });
  return total;
}

}  // namespace

std::int64_t CountCliquesInNeighbourhood(const Graph& g, int v, int s) {
  if (s < 1) throw InvalidArgument("clique size must be >= 1");
  if (s > 8) throw SizeError("exact clique counting supports s <= 8; use the sampling estimator");
  return CountCliquesIn(g, g.adjacency(v), s);
}

CliqueEstimate EstimateCliquesInNeighbourhood(const Graph& g, int v, int s, int samples,
                                              std::uint64_t seed) {
  if (s < 1) throw InvalidArgument("clique size must be >= 1");
  if (samples < 1) throw InvalidArgument("need at least one sample");
  std::vector<int> nb(g.neighbours(v).begin(), g.neighbours(v).end());
  CliqueEstimate out;
  out.samples = samples;
  const int d = static_cast<int>(nb.size());
  if (d < s) return out;
  // log C(d, s) to keep the scale finite for large neighbourhoods.
  const double subsets = std::exp(std::lgamma(d + 1.0) - std::lgamma(s + 1.0) - std::lgamma(d - s + 1.0));
  SplitMix64 rng(seed);
  int hits = 0;
  std::vector<int> pick(s);
  for (int t = 0; t < samples; ++t) {
    // Partial Fisher-Yates gives a uniform s-subset.
    for (int i = 0; i < s; ++i) {
      const int j = i + static_cast<int>(rng.below(d - i));
      std::swap(nb[i], nb[j]);
      pick[i] = nb[i];
    }
    bool clique = true;
    for (int i = 0; i < s && clique; ++i)
      for (int j = i + 1; j < s && clique; ++j) clique = g.has_edge(pick[i], pick[j]);
    hits += clique ? 1 : 0;
  }
  const double frac = static_cast<double>(hits) / samples;
  out.estimate = frac * subsets;
  out.stderr_ = std::sqrt(frac * (1.0 - frac) / samples) * subsets;
  return out;
}

Bitset CommonNeighbourhood(const Graph& g, std::span<const int> W) {
  Bitset out = Bitset::Full(g.n());
  for (int w : W) out &= g.adjacency(w);
  return out;
}

std::int64_t CountEdgesInside(const Graph& g, const Bitset& set) {
  std::int64_t twice = 0;
  set.for_each([&](int v) { twice += g.adjacency(v).and_count(set); });
  return twice / 2;
}

std::int64_t CountEdgesBetween(const Graph& g, const Bitset& a, const Bitset& b) {
  std::int64_t total = 0;
  a.for_each([&](int v) { total += g.adjacency(v).and_count(b); });
  return total;
}

Graph InducedSubgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.Build();
}

std::vector<int> BfsDistances(const Graph& g, int source) {
  const int src[] = {source};
  return BfsDistances(g, std::span<const int>(src));
}

std::vector<int> BfsDistances(const Graph& g, std::span<const int> sources) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] == -1) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> ConnectedComponents(const Graph& g) {
  std::vector<int> seen(g.n(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : g.neighbours(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool IsBipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbours(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph CompleteGraph(int n) { return GenerateGnp({n, 1.0, 0}); }

Graph PathGraph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.Build();
}

Graph CycleGraph(int n) { return CyclePower(n, 1); }

Graph CyclePower(int n, int k) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k; ++d) {
      const int j = (i + d) % n;
      if (j != i) b.add_edge(i, j);
    }
  return b.Build();
}

Graph CompleteBipartite(int a, int b) {
  GraphBuilder gb(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) gb.add_edge(i, a + j);
  return gb.Build();
}

Graph StarGraph(int leaves) { return CompleteBipartite(1, leaves); }

Graph PetersenGraph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.Build();
}

Graph DisjointUnion(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& g : parts) total += g.n();
  GraphBuilder b(total);
  int offset = 0;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) b.add_edge(offset + e.u, offset + e.v);
    offset += g.n();
  }
  return b.Build();
}

Graph DisjointCopies(const Graph& g, int copies) {
  std::vector<Graph> parts(copies, g);
  return DisjointUnion(parts);
}

Graph RandomTree(int n, std::uint64_t seed) {
  GraphBuilder b(n);
  if (n <= 1) return b.Build();
  if (n == 2) {
    b.add_edge(0, 1);
    return b.Build();
  }
  SplitMix64 rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        b.add_edge(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u == -1) {
        u = v;
      } else {
        b.add_edge(u, v);
        break;
      }
    }
  }
  return b.Build();
}

}  // namespace sblab
