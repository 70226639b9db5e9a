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

#include "sblab/backbone.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "sblab/errors.hpp"

namespace sblab {

Graph BackboneGraph(int r, int k) {
  if (r < 1 || k < 1) throw InvalidArgument("backbone graph needs r, k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j)
      for (int i2 = i; i2 <= std::min(i + 1, r - 1); ++i2)
        for (int j2 = 0; j2 < k; ++j2) {
          if (j2 == j) continue;
          const int u = ClusterIndex(i, j, k), v = ClusterIndex(i2, j2, k);
          if (u < v) edges.push_back({u, v});
        }
  return Graph::FromEdges(r * k, edges);
}

Graph KkrGraph(int r, int k) {
  if (r < 1 || k < 1) throw InvalidArgument("K^k_r needs r, k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j)
      for (int j2 = j + 1; j2 < k; ++j2) edges.push_back({ClusterIndex(i, j, k), ClusterIndex(i, j2, k)});
  return Graph::FromEdges(r * k, edges);
}

std::int64_t IntegerPartition::total() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

bool IntegerPartition::is_k_equitable() const {
  for (int i = 0; i < r; ++i) {
    int lo = at(i, 0), hi = at(i, 0);
    for (int j = 1; j < k; ++j) {
      lo = std::min(lo, at(i, j));
      hi = std::max(hi, at(i, j));
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

IntegerPartition KEquitableTargets(const IntegerPartition& sizes, int v0_size) {
  if (sizes.r < 1 || sizes.k < 1) throw InvalidArgument("empty cluster matrix");
  if (v0_size < 0) throw InvalidArgument("negative exceptional set size");
  for (int v : sizes.values)
    if (v < 0) throw InvalidArgument("negative cluster size");
  if (!sizes.is_k_equitable()) throw InvalidArgument("cluster sizes are not k-equitable");
  const int cells = sizes.r * sizes.k;
  const int base = v0_size / cells;
  int leftover = v0_size - base * cells;
  IntegerPartition m = sizes;
  for (int& v : m.values) v += base;
  // Each unit goes to a smallest cell of its column that has not had one yet,
  // columns taken in turn.
  std::vector<int> given(sizes.r, 0);
  std::vector<char> topped(cells, 0);
  while (leftover > 0) {
    int best_i = -1;
    for (int i = 0; i < sizes.r; ++i)
      if (given[i] < sizes.k && (best_i < 0 || given[i] < given[best_i])) best_i = i;
    int best_j = -1;
    for (int j = 0; j < sizes.k; ++j) {
      if (topped[ClusterIndex(best_i, j, sizes.k)]) continue;
      if (best_j < 0 || m.at(best_i, j) < m.at(best_i, best_j)) best_j = j;
    }
    ++m.at(best_i, best_j);
    topped[ClusterIndex(best_i, best_j, sizes.k)] = 1;
    ++given[best_i];
    --leftover;
  }
  return m;
}

bool IsLabelledClique(const Graph& R, const LabelledClique& z) {
  const int k = z.k();
  for (int a = 0; a < k; ++a) {
    if (z.by_label[a] < 0 || z.by_label[a] >= R.n()) return false;
    for (int b = a + 1; b < k; ++b)
      if (!R.has_edge(z.by_label[a], z.by_label[b])) return false;
  }
  return true;
}

bool IsCliqueStep(const Graph& R, const LabelledClique& prev, const LabelledClique& next) {
  if (prev.k() != next.k()) return false;
  for (int a = 0; a < next.k(); ++a)
    for (int b = 0; b < prev.k(); ++b)
      if (a != b && !R.has_edge(next.by_label[a], prev.by_label[b])) return false;
  return true;
}

bool AllKSetsHaveCommonNeighbour(const Graph& R, int k) {
  const int n = R.n();
  if (k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (CommonNeighbourhood(R, idx).none()) return false;
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) return true;
    ++idx[t];
    for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

namespace {

struct ReplacementResult {
  std::vector<LabelledClique> cliques;
  std::optional<NoCommonNeighbour> failure;
};

// The replacement construction: for each label j < k-1, swap in common
// neighbours for labels j+1..k-1, then install end's label-j cluster.
ReplacementResult ReplacementWalk(const Graph& R, const LabelledClique& start, const LabelledClique& end, int k) {
  ReplacementResult out;
  out.cliques.push_back(start);
  LabelledClique current = start;
  int step = 1;
  for (int j = 0; j + 1 < k; ++j) {
    for (int i = j + 1; i < k; ++i) {
      std::vector<int> need;
      for (int t = 0; t < k; ++t)
        if (t != i) need.push_back(current.by_label[t]);
      need.push_back(end.by_label[j]);
      std::sort(need.begin(), need.end());
      need.erase(std::unique(need.begin(), need.end()), need.end());
      const Bitset common = CommonNeighbourhood(R, need);
      const int w = common.first();
      if (w < 0) {
        out.failure.emplace("no common neighbour at walk step " + std::to_string(step), step, need);
        return out;
      }
      current.by_label[i] = w;
      out.cliques.push_back(current);
      ++step;
    }
    current.by_label[j] = end.by_label[j];
    out.cliques.push_back(current);
    ++step;
  }
  out.cliques.push_back(end);
  return out;
}

// Labelled cliques `next` with IsCliqueStep(R, z, next): label i ranges over
// the common neighbourhood of z's other clusters, adjacent to the choices made
// for lower labels.
void ForEachSuccessor(const Graph& R, const std::vector<int>& z,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = static_cast<int>(z.size());
  std::vector<Bitset> allowed;
  for (int i = 0; i < k; ++i) {
    std::vector<int> others;
    for (int t = 0; t < k; ++t)
      if (t != i) others.push_back(z[t]);
    allowed.push_back(CommonNeighbourhood(R, others));
  }
  std::vector<int> next(k, -1);
  std::function<bool(int, const Bitset&)> extend = [&](int i, const Bitset& fits) -> bool {
    if (i == k) return visit(next);
    Bitset options = allowed[i];
    options &= fits;
    bool go_on = true;
    options.for_each([&](int w) {
      if (!go_on) return;
      next[i] = w;
      Bitset narrowed = fits;
      narrowed &= R.adjacency(w);
      go_on = extend(i + 1, narrowed);
    });
    return go_on;
  };
  Bitset all(R.n());
  for (int v = 0; v < R.n(); ++v) all.set(v);
  extend(0, all);
}

// Shortest walk by BFS over labelled cliques, up to max_states states.
std::optional<std::vector<LabelledClique>> ShortestWalk(const Graph& R, const LabelledClique& start,
                                                        const LabelledClique& end, int max_states) {
  std::map<std::vector<int>, std::vector<int>> parent;
  std::deque<std::vector<int>> queue{start.by_label};
  parent.emplace(start.by_label, std::vector<int>{});
  while (!queue.empty()) {
    const std::vector<int> z = queue.front();
    queue.pop_front();
    if (z == end.by_label) {
      std::vector<LabelledClique> path;
      for (std::vector<int> cur = z; !cur.empty(); cur = parent.at(cur)) path.push_back({cur});
      std::reverse(path.begin(), path.end());
      return path;
    }
    ForEachSuccessor(R, z, [&](const std::vector<int>& next) {
      if (parent.size() >= static_cast<std::size_t>(max_states)) return false;
      if (parent.emplace(next, z).second) queue.push_back(next);
      return true;
    });
  }
  return std::nullopt;
}

}  // namespace

std::vector<LabelledClique> CliqueWalk(const Graph& R, const LabelledClique& start, const LabelledClique& end,
                                       int k) {
  if (k < 1 || start.k() != k || end.k() != k) throw InvalidArgument("cliques must have k labelled members");
  if (!IsLabelledClique(R, start) || !IsLabelledClique(R, end))
    throw InvalidArgument("start and end must be labelled cliques of R");
  const std::size_t length = CliqueWalkLength(k);

  ReplacementResult replaced = ReplacementWalk(R, start, end, k);
  if (!replaced.failure) {
    auto& walk = replaced.cliques;
    // The construction yields one clique more than required; drop an
    // intermediate clique whose neighbours still form a valid step.
    for (std::size_t m = walk.size() - 2; walk.size() > length && m >= 1; --m) {
      if (IsCliqueStep(R, walk[m - 1], walk[m + 1])) walk.erase(walk.begin() + m);
    }
    if (walk.size() == length && VerifyCliqueWalk(R, walk, start, end)) return walk;
  }

  // Repeating a clique is a valid step, so a shorter walk can be padded.
  if (auto shortest = ShortestWalk(R, start, end, 200000); shortest && shortest->size() <= length) {
    std::vector<LabelledClique> walk = *shortest;
    while (walk.size() < length) walk.insert(walk.begin(), start);
    return walk;
  }
  if (replaced.failure) throw *replaced.failure;
  throw NoCommonNeighbour("no clique walk of length " + std::to_string(length) + " exists", 0, {});
}

bool VerifyCliqueWalk(const Graph& R, const std::vector<LabelledClique>& walk, const LabelledClique& start,
                      const LabelledClique& end) {
  const int k = start.k();
  if (walk.size() != static_cast<std::size_t>(CliqueWalkLength(k))) return false;
  if (!(walk.front() == start) || !(walk.back() == end)) return false;
  for (std::size_t t = 0; t < walk.size(); ++t) {
    if (walk[t].k() != k || !IsLabelledClique(R, walk[t])) return false;
    if (t > 0 && !IsCliqueStep(R, walk[t - 1], walk[t])) return false;
  }
  return true;
}

}  // namespace sblab
