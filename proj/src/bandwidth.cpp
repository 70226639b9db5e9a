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

#include "sblab/bandwidth.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "sblab/errors.hpp"

namespace sblab {

int LabellingBandwidth(const Graph& g, const std::vector<int>& position) {
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, std::abs(position[e.u] - position[e.v]));
  return best;
}

Labelling Labelling::FromOrder(const Graph& g, std::vector<int> order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("labelling size differs from vertex count");
  Labelling lab;
  lab.position.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= n || lab.position[v] != -1) throw InvalidArgument("labelling is not a bijection");
    lab.position[v] = i;
  }
  lab.vertex_at = std::move(order);
  lab.bandwidth = LabellingBandwidth(g, lab.position);
  return lab;
}

Labelling Labelling::Identity(const Graph& g) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  return FromOrder(g, std::move(order));
}

namespace {

// Depth-first layout search for a labelling of bandwidth <= limit.
class LayoutSearch {
 public:
  LayoutSearch(const Graph& g, int limit)
      : g_(g), limit_(limit), pos_(g.n(), -1), unplaced_nb_(g.n()) {
    for (int v = 0; v < g.n(); ++v) unplaced_nb_[v] = g.degree(v);
  }

  bool Run() { return Place(0); }
  std::vector<int> order() const { return order_; }

 private:
  bool Place(int t) {
    const int n = g_.n();
    if (t == n) return true;
    // Every placed vertex needs its remaining neighbours within its window.
    for (int u : order_) {
      if (unplaced_nb_[u] > 0 && pos_[u] + limit_ < t + unplaced_nb_[u] - 1) return false;
    }
    for (int v = 0; v < n; ++v) {
      if (pos_[v] != -1) continue;
      bool ok = true;
      for (int u : g_.neighbours(v)) {
        if (pos_[u] != -1 && t - pos_[u] > limit_) {
          ok = false;
          break;
        }
      }
      // Its unplaced neighbours must all land in the next `limit_` slots.
      if (ok && unplaced_nb_[v] > limit_) ok = false;
      if (!ok) continue;
      pos_[v] = t;
      order_.push_back(v);
      for (int u : g_.neighbours(v)) --unplaced_nb_[u];
      if (Place(t + 1)) return true;
      for (int u : g_.neighbours(v)) ++unplaced_nb_[u];
      order_.pop_back();
      pos_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int limit_;
  std::vector<int> pos_;
  std::vector<int> unplaced_nb_;
  std::vector<int> order_;
};

}  // namespace

BandwidthResult ExactBandwidth(const Graph& g) {
  const int n = g.n();
  if (n > kExactBandwidthMaxVertices) {
    throw SizeError("exact bandwidth is limited to " + std::to_string(kExactBandwidthMaxVertices) +
                    " vertices (got " + std::to_string(n) + "); use HeuristicLabelling");
  }
  if (g.edge_count() == 0) {
    Labelling lab = Labelling::Identity(g);
    return {0, lab};
  }
  const int lower = (MaxDegree(g) + 1) / 2;
  for (int b = std::max(1, lower); b < n; ++b) {
    LayoutSearch search(g, b);
    if (search.Run()) {
      Labelling lab = Labelling::FromOrder(g, search.order());
      return {lab.bandwidth, lab};
    }
  }
  Labelling lab = Labelling::Identity(g);
  return {lab.bandwidth, lab};
}

namespace {

std::vector<int> CuthillMcKeeFrom(const Graph& g, int start, const std::vector<int>& component_id,
                                  int component) {
  std::vector<int> order;
  std::vector<char> seen(g.n(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  std::vector<int> nb;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    order.push_back(u);
    nb.assign(g.neighbours(u).begin(), g.neighbours(u).end());
    std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int w : nb) {
      if (!seen[w] && component_id[w] == component) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

int LocalBandwidth(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  int best = 0;
  for (int u : order)
    for (int w : g.neighbours(u)) best = std::max(best, std::abs(pos[u] - pos[w]));
  return best;
}

}  // namespace

Labelling HeuristicLabelling(const Graph& g) {
  constexpr int kMaxStarts = 24;
  const auto components = ConnectedComponents(g);
  std::vector<int> component_id(g.n(), -1);
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int v : components[c]) component_id[v] = c;

  std::vector<int> full_order;
  full_order.reserve(g.n());
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    const auto& comp = components[c];
    // Candidate starts: lowest-degree vertices plus the far end of a BFS sweep
    // (a pseudo-peripheral vertex).
    std::vector<int> starts(comp);
    std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    if (static_cast<int>(starts.size()) > kMaxStarts) starts.resize(kMaxStarts);
    {
      int v = comp.front();
      for (int sweep = 0; sweep < 3; ++sweep) {
        const auto dist = BfsDistances(g, v);
        int far = v;
        for (int w : comp)
          if (dist[w] > dist[far] || (dist[w] == dist[far] && g.degree(w) < g.degree(far))) far = w;
        v = far;
      }
      starts.push_back(v);
    }
    std::vector<int> best;
    int best_bw = -1;
    for (int s : starts) {
      auto order = CuthillMcKeeFrom(g, s, component_id, c);
      const int bw = LocalBandwidth(g, order);
      if (best_bw < 0 || bw < best_bw) {
        best_bw = bw;
        best = std::move(order);
      }
    }
    full_order.insert(full_order.end(), best.begin(), best.end());
  }
  return Labelling::FromOrder(g, std::move(full_order));
}

}  // namespace sblab
