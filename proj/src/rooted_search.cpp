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

#include "sblab/rooted_search.hpp"

#include <algorithm>
#include <string>

#include "sblab/errors.hpp"

namespace sblab {

namespace {

void BronKerbosch(const Graph& g, std::vector<int>& current, Bitset candidates, Bitset excluded,
                  std::vector<std::vector<int>>& out) {
  if (candidates.none() && excluded.none()) {
    out.push_back(current);
    return;
  }
  // Pivot with most candidate neighbours.
  int pivot = -1, best = -1;
  auto consider = [&](int u) {
    const int c = g.adjacency(u).and_count(candidates);
    if (c > best) {
      best = c;
      pivot = u;
    }
  };
  candidates.for_each(consider);
  excluded.for_each(consider);
  Bitset branch = candidates;
  branch.subtract(g.adjacency(pivot));
  for (int v : branch.to_vector()) {
    current.push_back(v);
    BronKerbosch(g, current, candidates & g.adjacency(v), excluded & g.adjacency(v), out);
    current.pop_back();
    candidates.reset(v);
    excluded.set(v);
  }
}

// DSATUR colour count of g[set], stopping once `stop_at` colours are used. A
// count below c proves g[set] has no c-clique.
int GreedyColourCount(const Graph& g, const std::vector<int>& set, int stop_at) {
  const int m = static_cast<int>(set.size());
  if (m == 0) return 0;
  std::vector<int> colour(m, -1);
  std::vector<int> saturation(m, 0);
  std::vector<std::vector<char>> used(m);
  std::vector<std::vector<int>> nb(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.has_edge(set[a], set[b])) {
        nb[a].push_back(b);
        nb[b].push_back(a);
      }
  int colours = 0;
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int a = 0; a < m; ++a) {
      if (colour[a] >= 0) continue;
      if (pick < 0 || saturation[a] > saturation[pick] ||
          (saturation[a] == saturation[pick] && nb[a].size() > nb[pick].size()))
        pick = a;
    }
    std::vector<char> taken(colours + 1, 0);
    for (int b : nb[pick])
      if (colour[b] >= 0) taken[colour[b]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[pick] = c;
    colours = std::max(colours, c + 1);
    if (colours >= stop_at) return colours;
    for (int b : nb[pick]) {
      if (colour[b] >= 0) continue;
      if (used[b].size() <= static_cast<std::size_t>(c)) used[b].resize(c + 1, 0);
      if (!used[b][c]) {
        used[b][c] = 1;
        ++saturation[b];
      }
    }
  }
  return colours;
}

class RootedSearch {
 public:
  RootedSearch(const Graph& g, const Graph& pattern, const RootedSearchOptions& opts)
      : g_(g), pat_(pattern), opts_(opts), map_(pattern.n(), -1) {
    for (const auto& clique : MaximalCliques(pattern))
      if (clique.size() >= 3) cliques_.push_back(clique);
  }

  RootedSearchResult Run(int root, int anchor) {
    const int n = g_.n();
    const int k = pat_.n();
    std::vector<Bitset> dom(k, Bitset(n));
    for (int w = 0; w < k; ++w) {
      if (w == root) {
        dom[w].set(anchor);
        continue;
      }
      for (int x = 0; x < n; ++x)
        if (x != anchor && g_.degree(x) >= pat_.degree(w)) dom[w].set(x);
    }
    RootedSearchResult result;
    if (Search(dom, 0)) result.mapping = map_;
    result.complete = !out_of_budget_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Restores consistency; false on a wipeout.
  bool Propagate(std::vector<Bitset>& dom) {
    const int k = pat_.n();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int w = 0; w < k; ++w) {
        if (map_[w] >= 0) continue;
        const int size = dom[w].count();
        if (size == 0) return false;
        if (size == 1) {
          const int x = dom[w].first();
          map_[w] = x;
          for (int u = 0; u < k; ++u) {
            if (u == w || map_[u] >= 0) continue;
            dom[u].reset(x);
            if (pat_.has_edge(u, w)) dom[u] &= g_.adjacency(x);
          }
          changed = true;
          assigned_stack_.push_back(w);
          continue;
        }
        // Arc consistency towards unassigned pattern neighbours.
        for (int u : pat_.neighbours(w)) {
          if (map_[u] >= 0) continue;
          Bitset keep(dom[w].size());
          dom[w].for_each([&](int x) {
            if (g_.adjacency(x).intersects(dom[u])) keep.set(x);
          });
          if (!(keep == dom[w])) {
            dom[w] = std::move(keep);
            changed = true;
            if (dom[w].none()) return false;
          }
        }
      }
    }
    return CliqueBound(dom);
  }

  // The images of a pattern clique's unassigned members form a clique inside
  // the union of their domains; a colouring with fewer colours rules it out.
  bool CliqueBound(const std::vector<Bitset>& dom) {
    if (!opts_.clique_bound) return true;
    for (const auto& clique : cliques_) {
      int open = 0;
      Bitset pool(g_.n());
      for (int w : clique)
        if (map_[w] < 0) {
          ++open;
          pool |= dom[w];
        }
      if (open < 3) continue;
      const std::vector<int> members = pool.to_vector();
      if (static_cast<int>(members.size()) < open) return false;
      if (GreedyColourCount(g_, members, open) < open) return false;
    }
    return true;
  }

  bool Search(std::vector<Bitset> dom, int depth) {
    ++nodes_;
    if (opts_.node_budget >= 0 && nodes_ > opts_.node_budget) {
      out_of_budget_ = true;
      return false;
    }
    const std::size_t mark = assigned_stack_.size();
    auto undo = [&] {
      while (assigned_stack_.size() > mark) {
        map_[assigned_stack_.back()] = -1;
        assigned_stack_.pop_back();
      }
    };
    if (!Propagate(dom)) {
      undo();
      return false;
    }
    const int k = pat_.n();
    int pick = -1, pick_size = 0;
    for (int w = 0; w < k; ++w) {
      if (map_[w] >= 0) continue;
      const int size = dom[w].count();
      if (pick < 0 || size < pick_size || (size == pick_size && pat_.degree(w) > pat_.degree(pick))) {
        pick = w;
        pick_size = size;
      }
    }
    if (pick < 0) return true;
    for (int x : dom[pick].to_vector()) {
      std::vector<Bitset> next = dom;
      next[pick] = Bitset(g_.n());
      next[pick].set(x);
      if (Search(std::move(next), depth + 1)) return true;
      if (out_of_budget_) break;
    }
    undo();
    return false;
  }

  const Graph& g_;
  const Graph& pat_;
  RootedSearchOptions opts_;
  std::vector<int> map_;
  std::vector<int> assigned_stack_;
  std::vector<std::vector<int>> cliques_;
  std::int64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

std::vector<std::vector<int>> MaximalCliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  if (g.n() == 0) return out;
  std::vector<int> current;
  BronKerbosch(g, current, Bitset::Full(g.n()), Bitset(g.n()), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

RootedSearchResult FindRootedCopy(const Graph& g, const Graph& pattern, int root, int anchor,
                                  const RootedSearchOptions& opts) {
  if (pattern.n() > kRootedPatternMaxVertices)
    throw SizeError("rooted search supports patterns of at most 16 vertices");
  if (root < 0 || root >= pattern.n()) throw InvalidArgument("root is not a pattern vertex");
  if (anchor < 0 || anchor >= g.n()) throw InvalidArgument("anchor is not a vertex of g");
  if (pattern.n() > g.n()) return {};
  RootedSearch search(g, pattern, opts);
  return search.Run(root, anchor);
}

}  // namespace sblab
