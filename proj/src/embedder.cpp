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

#include "sblab/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sblab/errors.hpp"
#include "sblab/rng.hpp"

namespace sblab {

std::vector<int> Embedding::domain() const {
  std::vector<int> out;
  for (int y = 0; y < h_order(); ++y)
    if (map_[y] >= 0) out.push_back(y);
  return out;
}

std::vector<int> Embedding::image() const {
  std::vector<int> out;
  for (int x : map_)
    if (x >= 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

int Embedding::size() const {
  return static_cast<int>(std::count_if(map_.begin(), map_.end(), [](int x) { return x >= 0; }));
}

bool VerifyEmbedding(const Graph& h, const Graph& g, const Embedding& e, bool require_total) {
  if (e.h_order() != h.n()) return false;
  std::vector<char> hit(g.n(), 0);
  for (int y = 0; y < h.n(); ++y) {
    const int x = e[y];
    if (x < 0) {
      if (require_total) return false;
      continue;
    }
    if (x >= g.n() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const Edge& edge : h.edges()) {
    if (e.mapped(edge.u) && e.mapped(edge.v) && !g.has_edge(e[edge.u], e[edge.v])) return false;
  }
  return true;
}

std::vector<int> SampleS(int n, double mu, std::uint64_t seed) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("mu must lie in [0,1]");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(all);
  all.resize(static_cast<std::size_t>(std::llround(mu * n)));
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

bool HasCliqueIn(const Graph& g, const Bitset& candidates, int s) {
  if (s <= 0) return true;
  if (candidates.count() < s) return false;
  bool found = false;
  for (int x : candidates.to_vector()) {
    Bitset next = candidates & g.adjacency(x);
    next.clear_below(x + 1);
    if (HasCliqueIn(g, next, s - 1)) {
      found = true;
      break;
    }
  }
  return found;
}

// Largest subgraph of g[allowed] with minimum degree >= min_degree.
Bitset PeelToCore(const Graph& g, Bitset allowed, int min_degree) {
  if (min_degree <= 0) return allowed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : allowed.to_vector()) {
      if (g.adjacency(v).and_count(allowed) < min_degree) {
        allowed.reset(v);
        changed = true;
      }
    }
  }
  return allowed;
}

// Depth-first embedding of `order` (order[0] pinned to `anchor`) inside
// `allowed`, avoiding `used`.
class BallEmbedder {
 public:
  BallEmbedder(const Graph& g, const Graph& h, const std::vector<int>& order, const Bitset& allowed,
               const Bitset& used, std::uint64_t seed, std::int64_t budget)
      : g_(g), h_(h), order_(order), allowed_(allowed), used_(used), rng_(seed), budget_(budget),
        map_(h.n(), -1) {}

  bool Run(int anchor) {
    map_[order_[0]] = anchor;
    used_.set(anchor);
    return Place(1);
  }
  const std::vector<int>& map() const { return map_; }
  int stuck() const { return stuck_; }

 private:
  bool Place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int y = order_[idx];
    Bitset cand = allowed_;
    cand.subtract(used_);
    for (int u : h_.neighbours(y))
      if (map_[u] >= 0) cand &= g_.adjacency(map_[u]);
    std::vector<int> values = cand.to_vector();
    if (values.empty() && stuck_ < 0) stuck_ = y;
    rng_.shuffle(values);
    for (int x : values) {
      map_[y] = x;
      used_.set(x);
      if (Place(idx + 1)) return true;
      used_.reset(x);
      map_[y] = -1;
      if (++steps_ > budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const std::vector<int>& order_;
  const Bitset& allowed_;
  Bitset used_;
  SplitMix64 rng_;
  std::int64_t budget_;
  std::int64_t steps_ = 0;
  std::vector<int> map_;
  int stuck_ = -1;
};

}  // namespace

PreEmbedResult PreEmbed(const Graph& g, const Graph& h, std::span<const int> v0, std::span<const int> S,
                        const Colouring& col, const PreEmbedConfig& cfg, const ClusterPartition* partition) {
  const int ng = g.n(), nh = h.n();
  if (cfg.s < 1) throw InvalidArgument("s must be at least 1");
  if (cfg.separation < 2 * cfg.s + 2) throw InvalidArgument("separation must be at least 2s+2");
  if (static_cast<int>(col.colour.size()) != nh) throw InvalidArgument("colouring does not match h");
  const Bitset sset = Bitset::FromVector(ng, std::vector<int>(S.begin(), S.end()));
  std::vector<int> bad(v0.begin(), v0.end());
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  for (int v : bad) {
    if (v < 0 || v >= ng) throw InvalidArgument("v0 vertex out of range");
    if (!HasCliqueIn(g, g.adjacency(v) & sset, cfg.s))
      throw InvalidArgument("vertex " + std::to_string(v) + " has no " + std::to_string(cfg.s) +
                            "-clique in N(v) ∩ S");
  }
  std::vector<int> roots = cfg.root_order;
  if (roots.empty()) {
    roots.resize(nh);
    std::iota(roots.begin(), roots.end(), 0);
  }
  std::vector<Bitset> cluster_sets;
  if (partition != nullptr) {
    if (partition->k != col.k) throw InvalidArgument("partition k differs from colouring k");
    for (const auto& cluster : partition->clusters) cluster_sets.push_back(Bitset::FromVector(ng, cluster));
  }

  PreEmbedResult result;
  result.embedding = Embedding(nh);
  Bitset image(ng);
  std::vector<int> dom_list;
  std::vector<char> remaining(ng, 0);
  int remaining_count = 0;
  for (int v : bad) {
    remaining[v] = 1;
    ++remaining_count;
  }
  int step_index = 0;

  while (remaining_count > 0) {
    PreEmbedStep step;
    for (int v : bad) {
      if (!remaining[v]) continue;
      const int score = (g.adjacency(v) & sset).and_count(image);
      if (step.v < 0 || score > step.score) {
        step.v = v;
        step.score = score;
      }
    }
    step.image_before = image.to_vector();
    const int v = step.v;
    const std::vector<int> dist_dom =
        dom_list.empty() ? std::vector<int>(nh, -1) : BfsDistances(h, std::span<const int>(dom_list));

    Bitset allowed = sset;
    allowed.set(v);
    allowed.subtract(image);
    allowed = PeelToCore(g, allowed, cfg.core_min_degree);

    int attempts = 0;
    std::optional<EmptyCandidates> last_error;
    bool committed = false;
    for (int x : roots) {
      if (attempts >= cfg.root_attempts) break;
      if (x < 0 || x >= nh || result.embedding.mapped(x)) continue;
      if (dist_dom[x] >= 0 && dist_dom[x] < cfg.separation) continue;
      if (NeighbourhoodColourCount(h, col, x) > cfg.s) continue;
      const std::vector<int> dist = BfsDistances(h, x);
      std::vector<int> ball, boundary;
      for (int d = 0; d <= cfg.s + 1; ++d)
        for (int y = 0; y < nh; ++y)
          if (dist[y] == d) (d <= cfg.s ? ball : boundary).push_back(y);
      if (partition != nullptr) {
        bool zero = false;
        for (int y : ball) zero = zero || col.colour[y] == 0;
        for (int y : boundary) zero = zero || col.colour[y] == 0;
        if (zero) continue;
      }
      ++attempts;
      if (!allowed.test(v)) {
        last_error.emplace("bad vertex " + std::to_string(v) + " left the minimum-degree core", x);
        break;
      }
      BallEmbedder embedder(g, h, ball, allowed, image, DeriveSeed(cfg.seed, step_index * 131 + attempts),
                            cfg.ball_budget);
      if (!embedder.Run(v)) {
        const int y = embedder.stuck() >= 0 ? embedder.stuck() : x;
        last_error.emplace("no candidates for ball vertex " + std::to_string(y), y);
        continue;
      }
      const auto& map = embedder.map();
      Bitset used_now = image;
      for (int y : ball) used_now.set(map[y]);
      Bitset free_core = allowed;
      free_core.subtract(used_now);

      struct Pending {
        int y;
        std::vector<int> J;
        Bitset common;
      };
      std::vector<Pending> pending;
      for (int y : boundary) {
        Pending p{y, {}, free_core};
        for (int u : h.neighbours(y))
          if (map[u] >= 0) {
            p.J.push_back(map[u]);
            p.common &= g.adjacency(map[u]);
          }
        std::sort(p.J.begin(), p.J.end());
        pending.push_back(std::move(p));
      }

      int best_column = -1;
      int best_min = -1;
      if (partition != nullptr) {
        for (int i = 0; i < partition->r; ++i) {
          int worst = pending.empty() ? ng : -1;
          for (const auto& p : pending) {
            const int size = p.common.and_count(cluster_sets[ClusterIndex(i, col.colour[p.y] - 1, partition->k)]);
            if (worst < 0 || size < worst) worst = size;
          }
          if (worst > best_min) {
            best_min = worst;
            best_column = i;
          }
        }
      } else {
        best_min = ng;
        for (const auto& p : pending) best_min = std::min(best_min, p.common.count());
      }
      if (best_min <= 0) {
        int empty_y = x;
        for (const auto& p : pending) {
          const int size = partition != nullptr
                               ? p.common.and_count(cluster_sets[ClusterIndex(best_column, col.colour[p.y] - 1,
                                                                              partition->k)])
                               : p.common.count();
          if (size == 0) {
            empty_y = p.y;
            break;
          }
        }
        last_error.emplace("empty restriction set for boundary vertex " + std::to_string(empty_y), empty_y);
        continue;
      }

      for (int y : ball) result.embedding.set(y, map[y]);
      for (int y : ball) dom_list.push_back(y);
      image = used_now;
      for (auto& p : pending) {
        RestrictionRecord rec;
        rec.vertex = p.y;
        rec.J = std::move(p.J);
        if (partition != nullptr) {
          rec.target_cluster = ClusterIndex(best_column, col.colour[p.y] - 1, partition->k);
          rec.I = (p.common & cluster_sets[rec.target_cluster]).to_vector();
        } else {
          rec.I = p.common.to_vector();
        }
        result.records.push_back(std::move(rec));
      }
      step.root = x;
      step.column = best_column;
      committed = true;
      break;
    }
    if (!committed) {
      if (last_error) throw *last_error;
      throw NoEligibleRoot("no root of h is eligible for bad vertex " + std::to_string(v));
    }
    result.trace.push_back(std::move(step));
    for (int u : bad)
      if (remaining[u] && image.test(u)) {
        remaining[u] = 0;
        --remaining_count;
      }
    ++step_index;
  }
  // Later balls may have used candidates of earlier records.
  for (auto& rec : result.records) {
    std::erase_if(rec.I, [&](int x) { return image.test(x); });
    if (rec.I.empty())
      throw EmptyCandidates("restriction set of vertex " + std::to_string(rec.vertex) + " used up", rec.vertex);
  }
  return result;
}

namespace {

class CandidateSearch {
 public:
  CandidateSearch(const Graph& h, const Graph& g, const std::vector<int>& position, std::vector<Bitset> dom,
                  Embedding start, Bitset used, const EmbedOptions& opts)
      : h_(h), g_(g), position_(position), dom_(std::move(dom)), map_(std::move(start)), used_(std::move(used)),
        opts_(opts), rng_(opts.seed) {
    for (int y = 0; y < h.n(); ++y)
      if (!map_.mapped(y)) ++open_;
  }

  bool Run() { return Step(map_.size()); }
  const Embedding& embedding() const { return map_; }
  std::int64_t backtracks() const { return backtracks_; }
  const std::optional<FailureCert>& first_wipeout() const { return first_wipeout_; }
  bool out_of_budget() const { return out_of_budget_; }

 private:
  int Free(int y) const { return dom_[y].count() - dom_[y].and_count(used_); }

  bool Step(int depth) {
    if (open_ == 0) return true;
    int pick = -1, pick_size = 0;
    for (int y = 0; y < h_.n(); ++y) {
      if (map_.mapped(y)) continue;
      const int size = Free(y);
      if (pick < 0 || size < pick_size || (size == pick_size && position_[y] < position_[pick])) {
        pick = y;
        pick_size = size;
      }
    }
    Bitset cand = dom_[pick];
    cand.subtract(used_);
    std::vector<int> values = cand.to_vector();
    rng_.shuffle(values);
    if (opts_.warnsdorff) {
      std::stable_sort(values.begin(), values.end(), [&](int a, int b) {
        return g_.degree(a) - g_.adjacency(a).and_count(used_) < g_.degree(b) - g_.adjacency(b).and_count(used_);
      });
    }
    for (int x : values) {
      map_.set(pick, x);
      used_.set(x);
      --open_;
      std::vector<std::pair<int, Bitset>> trail;
      for (int u : h_.neighbours(pick)) {
        if (map_.mapped(u)) continue;
        trail.emplace_back(u, dom_[u]);
        dom_[u] &= g_.adjacency(x);
      }
      bool ok = true;
      for (int u = 0; u < h_.n() && ok; ++u) {
        if (map_.mapped(u)) continue;
        if (Free(u) == 0) {
          ok = false;
          if (!first_wipeout_) first_wipeout_ = FailureCert{u, depth + 1, backtracks_, "candidate set emptied"};
        }
      }
      if (ok && Step(depth + 1)) return true;
      for (auto& [u, saved] : trail) dom_[u] = std::move(saved);
      ++open_;
      used_.reset(x);
      map_.unset(pick);
      if (out_of_budget_) return false;
      if (++backtracks_ > opts_.backtrack_budget) {
        out_of_budget_ = true;
        return false;
      }
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  const std::vector<int>& position_;
  std::vector<Bitset> dom_;
  Embedding map_;
  Bitset used_;
  EmbedOptions opts_;
  SplitMix64 rng_;
  int open_ = 0;
  std::int64_t backtracks_ = 0;
  bool out_of_budget_ = false;
  std::optional<FailureCert> first_wipeout_;
};

}  // namespace

EmbedResult GreedyEmbed(const Graph& h, const Graph& g, const Labelling& lab, const EmbedContext& ctx,
                        const EmbedOptions& opts) {
  const int nh = h.n(), ng = g.n();
  if (lab.n() != nh) throw InvalidArgument("labelling does not match h");
  EmbedResult result;
  if (nh > ng) {
    result.failure = FailureCert{-1, 0, 0, "h has more vertices than g"};
    return result;
  }
  Embedding start(nh);
  Bitset used(ng);
  if (ctx.initial != nullptr) {
    if (ctx.initial->h_order() != nh) throw InvalidArgument("initial embedding does not match h");
    if (!VerifyEmbedding(h, g, *ctx.initial)) throw InvalidArgument("initial embedding is invalid");
    start = *ctx.initial;
    for (int x : start.image()) used.set(x);
  }
  std::vector<Bitset> clusters;
  const bool clustered = ctx.assignment != nullptr && ctx.partition != nullptr;
  if (clustered) {
    if (static_cast<int>(ctx.assignment->f.size()) != nh) throw InvalidArgument("assignment does not match h");
    for (const auto& cluster : ctx.partition->clusters) clusters.push_back(Bitset::FromVector(ng, cluster));
  }
  std::vector<Bitset> dom(nh, Bitset(ng));
  for (int y = 0; y < nh; ++y) {
    if (start.mapped(y)) {
      dom[y].set(start[y]);
      continue;
    }
    for (int x = 0; x < ng; ++x)
      if (g.degree(x) >= h.degree(y)) dom[y].set(x);
    if (clustered) dom[y] &= clusters[ctx.assignment->f[y]];
    for (int u : h.neighbours(y))
      if (start.mapped(u)) dom[y] &= g.adjacency(start[u]);
  }
  for (const auto& rec : ctx.restrictions) {
    if (rec.vertex < 0 || rec.vertex >= nh) throw InvalidArgument("restriction names an unknown vertex");
    if (rec.I.empty()) throw InvalidArgument("restriction with empty candidate set");
    if (start.mapped(rec.vertex)) continue;
    dom[rec.vertex] &= Bitset::FromVector(ng, rec.I);
  }
  for (int y = 0; y < nh; ++y) {
    if (start.mapped(y)) continue;
    Bitset free = dom[y];
    free.subtract(used);
    if (free.none()) {
      result.failure = FailureCert{y, start.size(), 0, "candidate set empty before search"};
      return result;
    }
  }

  CandidateSearch search(h, g, lab.position, std::move(dom), start, used, opts);
  const bool ok = search.Run();
  result.backtracks = search.backtracks();
  if (ok) {
    result.embedding = search.embedding();
    return result;
  }
  FailureCert cert = search.first_wipeout().value_or(FailureCert{-1, 0, 0, "search exhausted"});
  cert.backtracks = search.backtracks();
  cert.reason = search.out_of_budget() ? "backtrack budget exhausted" : "search space exhausted";
  result.failure = cert;
  return result;
}

}  // namespace sblab
