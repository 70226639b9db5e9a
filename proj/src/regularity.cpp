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

#include "sblab/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "sblab/errors.hpp"
#include "sblab/rng.hpp"

namespace sblab {

void PairParams::Validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0,1)");
  if (!(d >= 0.0 && d <= 1.0)) throw InvalidArgument("d must lie in [0,1]");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in (0,1]");
}

const char* ToString(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kVerified:
      return "Verified";
    case VerdictKind::kWitness:
      return "Witness";
    case VerdictKind::kProbablyRegular:
      return "ProbablyRegular";
  }
  return "?";
}

namespace {

void CheckSides(int n, std::span<const int> X, std::span<const int> Y) {
  if (X.empty() || Y.empty()) throw InvalidArgument("pair sides must be nonempty");
  std::vector<char> mark(n, 0);
  for (int x : X) {
    if (x < 0 || x >= n) throw InvalidArgument("vertex out of range in X");
    if (mark[x]) throw InvalidArgument("X contains a repeated vertex");
    mark[x] = 1;
  }
  for (int y : Y) {
    if (y < 0 || y >= n) throw InvalidArgument("vertex out of range in Y");
    if (mark[y] == 1) throw InvalidArgument("pair sides overlap");
    if (mark[y] == 2) throw InvalidArgument("Y contains a repeated vertex");
    mark[y] = 2;
  }
}

double Density(std::int64_t edges, double p, int a, int b) {
  return static_cast<double>(edges) / (p * static_cast<double>(a) * static_cast<double>(b));
}

// Bipartite adjacency of the pair with rows indexed by local positions.
struct PairView {
  int nx = 0;
  int ny = 0;
  std::vector<Bitset> rx;  // over Y positions
  std::vector<Bitset> ry;  // over X positions

  PairView(const Graph& g, std::span<const int> X, std::span<const int> Y)
      : nx(static_cast<int>(X.size())), ny(static_cast<int>(Y.size())) {
    rx.assign(nx, Bitset(ny));
    ry.assign(ny, Bitset(nx));
    for (int i = 0; i < nx; ++i) {
      const Bitset& row = g.adjacency(X[i]);
      for (int j = 0; j < ny; ++j) {
        if (row.test(Y[j])) {
          rx[i].set(j);
          ry[j].set(i);
        }
      }
    }
  }
};

struct Extreme {
  std::int64_t edges = 0;
  std::vector<int> xs;  // local positions
  std::vector<int> ys;
  bool valid = false;
};

// Picks `count` rows with the smallest (or largest) degree into `side`;
// returns the chosen positions and the summed degree.
std::int64_t PickExtremeRows(const std::vector<Bitset>& rows, const Bitset& side, int count,
                             bool lowest, std::vector<int>& chosen,
                             std::vector<std::pair<int, int>>& scratch) {
  scratch.clear();
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    scratch.emplace_back(lowest ? rows[i].and_count(side) : -rows[i].and_count(side), i);
  std::nth_element(scratch.begin(), scratch.begin() + (count - 1), scratch.end());
  std::int64_t total = 0;
  chosen.clear();
  for (int i = 0; i < count; ++i) {
    chosen.push_back(scratch[i].second);
    total += lowest ? scratch[i].first : -scratch[i].first;
  }
  std::sort(chosen.begin(), chosen.end());
  return total;
}

// Exhaustive scan: for each a-subset of X (bit masks, sides <= 16) the best
// Y' is the b extreme-degree vertices, which yields the exact optimum.
void ExhaustiveScan(const PairView& view, int a, int b, Extreme& lo, Extreme& hi, bool want_hi) {
  std::vector<std::uint32_t> ymask(view.ny, 0);
  for (int j = 0; j < view.ny; ++j)
    for (int i = 0; i < view.nx; ++i)
      if (view.ry[j].test(i)) ymask[j] |= 1U << i;
  std::vector<int> deg(view.ny);
  std::vector<int> order(view.ny);
  const std::uint32_t limit = 1U << view.nx;
  for (std::uint32_t mask = (1U << a) - 1; mask < limit;) {
    for (int j = 0; j < view.ny; ++j) deg[j] = std::popcount(ymask[j] & mask);
    std::iota(order.begin(), order.end(), 0);
    std::nth_element(order.begin(), order.begin() + (b - 1), order.end(),
                     [&](int u, int v) { return deg[u] < deg[v] || (deg[u] == deg[v] && u < v); });
    std::int64_t low = 0;
    for (int t = 0; t < b; ++t) low += deg[order[t]];
    if (!lo.valid || low < lo.edges) {
      lo.valid = true;
      lo.edges = low;
      lo.xs.clear();
      for (int i = 0; i < view.nx; ++i)
        if (mask >> i & 1U) lo.xs.push_back(i);
      lo.ys.assign(order.begin(), order.begin() + b);
      std::sort(lo.ys.begin(), lo.ys.end());
    }
    if (want_hi) {
      std::nth_element(order.begin(), order.begin() + (b - 1), order.end(),
                       [&](int u, int v) { return deg[u] > deg[v] || (deg[u] == deg[v] && u < v); });
      std::int64_t high = 0;
      for (int t = 0; t < b; ++t) high += deg[order[t]];
      if (!hi.valid || high > hi.edges) {
        hi.valid = true;
        hi.edges = high;
        hi.xs.clear();
        for (int i = 0; i < view.nx; ++i)
          if (mask >> i & 1U) hi.xs.push_back(i);
        hi.ys.assign(order.begin(), order.begin() + b);
        std::sort(hi.ys.begin(), hi.ys.end());
      }
    }
    // Gosper's hack: next mask with the same popcount.
    const std::uint32_t c = mask & (0U - mask);
    const std::uint32_t r = mask + c;
    if (r >= limit || r == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

// Alternating best responses from seeded starting sets.
void RandomizedScan(const PairView& view, int a, int b, int trials, std::uint64_t seed, bool lowest,
                    Extreme& best, const std::function<bool(const Extreme&)>& good_enough) {
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> scratch;
  std::vector<int> xs, ys, prev;
  // Degree orders for outlier seeding.
  std::vector<int> x_by_deg(view.nx), y_by_deg(view.ny);
  std::iota(x_by_deg.begin(), x_by_deg.end(), 0);
  std::iota(y_by_deg.begin(), y_by_deg.end(), 0);
  auto key = [&](int deg) { return lowest ? deg : -deg; };
  std::stable_sort(x_by_deg.begin(), x_by_deg.end(),
                   [&](int u, int v) { return key(view.rx[u].count()) < key(view.rx[v].count()); });
  std::stable_sort(y_by_deg.begin(), y_by_deg.end(),
                   [&](int u, int v) { return key(view.ry[u].count()) < key(view.ry[v].count()); });

  auto sample = [&](const std::vector<int>& ranked, int pool, int count) {
    std::vector<int> candidates(ranked.begin(), ranked.begin() + pool);
    for (int i = 0; i < count; ++i) {
      const int j = i + static_cast<int>(rng.below(pool - i));
      std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(count);
    return candidates;
  };

  for (int t = 0; t < trials; ++t) {
    const int type = t % 3;
    Bitset xset(view.nx), yset(view.ny);
    if (type == 2) {
      const int pool = t == 2 ? b : std::min(view.ny, 2 * b);
      for (int j : sample(y_by_deg, pool, b)) yset.set(j);
      PickExtremeRows(view.rx, yset, a, lowest, xs, scratch);
      xset = Bitset::FromVector(view.nx, xs);
    } else {
      std::vector<int> start;
      if (type == 1) {
        std::vector<int> all(view.nx);
        std::iota(all.begin(), all.end(), 0);
        start = sample(all, view.nx, a);
      } else {
        start = sample(x_by_deg, t == 0 ? a : std::min(view.nx, 2 * a), a);
      }
      xset = Bitset::FromVector(view.nx, start);
    }
    std::int64_t current = lowest ? std::numeric_limits<std::int64_t>::max()
                                  : std::numeric_limits<std::int64_t>::min();
    for (int round = 0; round < 16; ++round) {
      PickExtremeRows(view.ry, xset, b, lowest, ys, scratch);
      yset = Bitset::FromVector(view.ny, ys);
      const std::int64_t edges = PickExtremeRows(view.rx, yset, a, lowest, xs, scratch);
      xset = Bitset::FromVector(view.nx, xs);
      const bool improved = lowest ? edges < current : edges > current;
      if (!improved) break;
      current = edges;
      if (!best.valid || (lowest ? edges < best.edges : edges > best.edges)) {
        best.valid = true;
        best.edges = edges;
        best.xs = xs;
        best.ys = ys;
      }
    }
    if (best.valid && good_enough(best)) return;
  }
}

RegularityVerdict MakeWitness(const Extreme& e, std::span<const int> X, std::span<const int> Y,
                              double p, int trials) {
  RegularityVerdict v;
  v.kind = VerdictKind::kWitness;
  for (int i : e.xs) v.witness_x.push_back(X[i]);
  for (int j : e.ys) v.witness_y.push_back(Y[j]);
  v.witness_density = Density(e.edges, p, static_cast<int>(e.xs.size()), static_cast<int>(e.ys.size()));
  v.trials = trials;
  return v;
}

bool UseExhaustive(const RegularityOptions& opts, int nx, int ny) {
  if (opts.mode == SearchMode::kExhaustive) {
    if (nx > kExhaustiveSideCap || ny > kExhaustiveSideCap)
      throw SizeError("exhaustive regularity test is limited to 16 vertices per side");
    return true;
  }
  if (opts.mode == SearchMode::kRandomized) return false;
  return nx <= kExhaustiveSideCap && ny <= kExhaustiveSideCap;
}

}  // namespace

double PDensity(const Graph& g, double p, std::span<const int> X, std::span<const int> Y) {
  if (!(p > 0.0)) throw InvalidArgument("p must be positive");
  CheckSides(g.n(), X, Y);
  const Bitset ys = Bitset::FromVector(g.n(), std::vector<int>(Y.begin(), Y.end()));
  std::int64_t edges = 0;
  for (int x : X) edges += g.adjacency(x).and_count(ys);
  return Density(edges, p, static_cast<int>(X.size()), static_cast<int>(Y.size()));
}

int MinSubsetSize(double eps, int size) {
  // The small slack absorbs representation error in products like 0.3 * 10.
  const int m = static_cast<int>(std::ceil(eps * size - 1e-9));
  return std::clamp(m, 1, std::max(1, size));
}

RegularityVerdict TestLowerRegular(const Graph& g, const PairParams& pp, std::span<const int> X,
                                   std::span<const int> Y, const RegularityOptions& opts) {
  pp.Validate();
  CheckSides(g.n(), X, Y);
  const PairView view(g, X, Y);
  const int a = MinSubsetSize(pp.eps, view.nx);
  const int b = MinSubsetSize(pp.eps, view.ny);
  const double lower = pp.d - pp.eps;
  auto below = [&](const Extreme& e) { return Density(e.edges, pp.p, a, b) < lower; };
  // Fully-regular: some d' >= d within eps of every density, i.e.
  // max - eps <= min + eps and min + eps >= d.
  auto fully_fails = [&](const Extreme& lo, const Extreme& hi) {
    return Density(hi.edges, pp.p, a, b) - pp.eps > Density(lo.edges, pp.p, a, b) + pp.eps;
  };

  Extreme lo, hi;
  if (UseExhaustive(opts, view.nx, view.ny)) {
    ExhaustiveScan(view, a, b, lo, hi, opts.fully);
    if (below(lo)) return MakeWitness(lo, X, Y, pp.p, 0);
    if (opts.fully && fully_fails(lo, hi)) return MakeWitness(hi, X, Y, pp.p, 0);
    RegularityVerdict v;
    v.kind = VerdictKind::kVerified;
    return v;
  }

  const int trials = std::max(1, opts.trials);
  RandomizedScan(view, a, b, trials, opts.seed, true, lo, below);
  if (lo.valid && below(lo)) return MakeWitness(lo, X, Y, pp.p, trials);
  if (opts.fully) {
    RandomizedScan(view, a, b, trials, DeriveSeed(opts.seed, 1), false, hi,
                   [&](const Extreme& h) { return lo.valid && fully_fails(lo, h); });
    if (lo.valid && hi.valid && fully_fails(lo, hi)) return MakeWitness(hi, X, Y, pp.p, 2 * trials);
  }
  RegularityVerdict v;
  v.kind = VerdictKind::kProbablyRegular;
  v.trials = opts.fully ? 2 * trials : trials;
  return v;
}

RegularityVerdict TestSuperRegular(const Graph& g, const Graph& gamma, const PairParams& pp,
                                   std::span<const int> X, std::span<const int> Y,
                                   const RegularityOptions& opts) {
  if (g.n() != gamma.n()) throw InvalidArgument("g and gamma must share a vertex set");
  RegularityVerdict verdict = TestLowerRegular(g, pp, X, Y, opts);
  if (verdict.has_witness()) return verdict;
  const int n = g.n();
  const Bitset xs = Bitset::FromVector(n, std::vector<int>(X.begin(), X.end()));
  const Bitset ys = Bitset::FromVector(n, std::vector<int>(Y.begin(), Y.end()));
  auto check_side = [&](std::span<const int> side, const Bitset& other, int other_size) -> bool {
    for (int v : side) {
      const double need = (pp.d - pp.eps) * std::max(pp.p * other_size,
                                                     gamma.adjacency(v).and_count(other) / 2.0);
      if (g.adjacency(v).and_count(other) < need) {
        verdict.kind = VerdictKind::kWitness;
        verdict.witness_vertex = v;
        return false;
      }
    }
    return true;
  };
  if (!check_side(X, ys, static_cast<int>(Y.size()))) return verdict;
  check_side(Y, xs, static_cast<int>(X.size()));
  return verdict;
}

namespace {

struct PairScan {
  std::vector<std::pair<int, int>> dense_regular;
  std::vector<std::pair<int, int>> irregular;
  std::vector<RegularityVerdict> witnesses;  // aligned with irregular
};

PairScan ScanPairs(const Graph& g, const std::vector<std::vector<int>>& parts, double p, double eps,
                   double d, const PartitionOptions& opts, int round) {
  PairScan scan;
  const PairParams pp{eps, d, p};
  const int r = static_cast<int>(parts.size());
  int index = 0;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b, ++index) {
      if (parts[a].empty() || parts[b].empty()) continue;
      if (PDensity(g, p, parts[a], parts[b]) < d) continue;
      RegularityOptions ro;
      ro.trials = opts.pair_trials;
      ro.fully = opts.fully;
      ro.seed = DeriveSeed(opts.seed, static_cast<std::uint64_t>(round) * 1000003ULL + index);
      RegularityVerdict v = TestLowerRegular(g, pp, parts[a], parts[b], ro);
      if (v.has_witness()) {
        scan.irregular.emplace_back(a, b);
        scan.witnesses.push_back(std::move(v));
      } else {
        scan.dense_regular.emplace_back(a, b);
      }
    }
  }
  return scan;
}

// Splits `part` by degree into `w`: below the midpoint degree versus at or
// above it, falling back to a median split when one side would be empty.
std::pair<std::vector<int>, std::vector<int>> SplitByDegree(const Graph& g, const std::vector<int>& part,
                                                            const Bitset& w) {
  std::vector<std::pair<int, int>> keyed;
  for (int v : part) keyed.emplace_back(g.adjacency(v).and_count(w), v);
  std::sort(keyed.begin(), keyed.end());
  const double mid = (keyed.front().first + keyed.back().first) / 2.0;
  std::size_t cut = 0;
  while (cut < keyed.size() && keyed[cut].first < mid) ++cut;
  if (cut == 0 || cut == keyed.size()) cut = keyed.size() / 2;
  std::pair<std::vector<int>, std::vector<int>> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) (i < cut ? out.first : out.second).push_back(keyed[i].second);
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

// Restores equal part sizes. Surplus beyond an exact multiple goes to the
// exceptional set; other moves send a vertex from an oversized part to the
// undersized part where it has most neighbours.
void RepairEquipartition(const Graph& g, std::vector<std::vector<int>>& parts, std::vector<int>& exceptional) {
  const int n = g.n();
  const int r = static_cast<int>(parts.size());
  int total = 0;
  for (const auto& part : parts) total += static_cast<int>(part.size());
  const int target = total / r;
  int surplus = total - target * r;
  std::vector<Bitset> sets;
  for (const auto& part : parts) sets.push_back(Bitset::FromVector(n, part));

  auto remove_vertex = [&](int pi, int v) {
    auto& part = parts[pi];
    part.erase(std::find(part.begin(), part.end(), v));
    sets[pi].reset(v);
  };

  while (surplus > 0) {
    int largest = 0;
    for (int i = 1; i < r; ++i)
      if (parts[i].size() > parts[largest].size()) largest = i;
    int worst = parts[largest].front();
    int worst_deg = std::numeric_limits<int>::max();
    for (int v : parts[largest]) {
      const int deg = g.adjacency(v).and_count(sets[largest]);
      if (deg < worst_deg) {
        worst_deg = deg;
        worst = v;
      }
    }
    remove_vertex(largest, worst);
    exceptional.push_back(worst);
    --surplus;
  }

  for (;;) {
    int over = -1;
    for (int i = 0; i < r; ++i)
      if (static_cast<int>(parts[i].size()) > target && (over < 0 || parts[i].size() > parts[over].size())) over = i;
    if (over < 0) break;
    int best_v = -1, best_q = -1, best_deg = -1;
    for (int q = 0; q < r; ++q) {
      if (static_cast<int>(parts[q].size()) >= target) continue;
      for (int v : parts[over]) {
        const int deg = g.adjacency(v).and_count(sets[q]);
        if (deg > best_deg) {
          best_deg = deg;
          best_v = v;
          best_q = q;
        }
      }
    }
    remove_vertex(over, best_v);
    parts[best_q].push_back(best_v);
    sets[best_q].set(best_v);
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(exceptional.begin(), exceptional.end());
}

}  // namespace

RawPartition BuildRegularPartition(const Graph& g, double p, double eps, double d, int r0,
                                   const PartitionOptions& opts) {
  PairParams{eps, d, p}.Validate();
  const int n = g.n();
  if (r0 < 1) throw InvalidArgument("r0 must be at least 1");
  if (r0 > n) throw InvalidArgument("r0 exceeds the vertex count");
  if (r0 > opts.max_parts) throw PartitionBudgetExceeded("r0 exceeds the part cap");

  RawPartition out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(opts.seed);
  rng.shuffle(perm);
  const int size = n / r0;
  out.parts.assign(r0, {});
  for (int i = 0; i < r0 * size; ++i) out.parts[i / size].push_back(perm[i]);
  for (int i = r0 * size; i < n; ++i) out.exceptional.push_back(perm[i]);
  for (auto& part : out.parts) std::sort(part.begin(), part.end());
  std::sort(out.exceptional.begin(), out.exceptional.end());

  PairScan scan;
  for (int round = 0;; ++round) {
    out.rounds = round + 1;
    scan = ScanPairs(g, out.parts, p, eps, d, opts, round);
    const int r = out.r();
    const double pairs = r * (r - 1) / 2.0;
    out.witness_fraction = pairs > 0 ? scan.irregular.size() / pairs : 0.0;
    if (out.witness_fraction <= eps || round + 1 >= opts.max_rounds) break;
    if (2 * r > opts.max_parts) {
      throw PartitionBudgetExceeded("refinement needs " + std::to_string(2 * r) + " parts, cap is " +
                                    std::to_string(opts.max_parts));
    }
    // Each part is split against the witness subset of the other side of its
    // first irregular pair; parts in no irregular pair split in halves.
    std::vector<std::vector<int>> next;
    for (int a = 0; a < r; ++a) {
      std::optional<Bitset> w;
      for (std::size_t t = 0; t < scan.irregular.size() && !w; ++t) {
        const auto [x, y] = scan.irregular[t];
        if (x == a) w = Bitset::FromVector(n, scan.witnesses[t].witness_y);
        if (y == a) w = Bitset::FromVector(n, scan.witnesses[t].witness_x);
      }
      std::pair<std::vector<int>, std::vector<int>> halves;
      if (w) {
        halves = SplitByDegree(g, out.parts[a], *w);
      } else {
        std::vector<int> shuffled = out.parts[a];
        rng.shuffle(shuffled);
        const std::size_t half = shuffled.size() / 2;
        halves.first.assign(shuffled.begin(), shuffled.begin() + half);
        halves.second.assign(shuffled.begin() + half, shuffled.end());
      }
      next.push_back(std::move(halves.first));
      next.push_back(std::move(halves.second));
    }
    out.parts = std::move(next);
    RepairEquipartition(g, out.parts, out.exceptional);
  }

  out.regular_dense_pairs = scan.dense_regular;
  out.witness_pairs = scan.irregular;
  std::vector<Edge> edges;
  for (const auto& [a, b] : scan.dense_regular) edges.push_back({a, b});
  out.reduced = Graph::FromEdges(out.r(), edges);
  out.reduced_min_degree = MinDegree(out.reduced);
  out.alpha = n > 0 ? MinDegree(g) / (p * n) : 0.0;
  out.degree_bound = (out.alpha - d - eps) * out.r();
  return out;
}

InheritanceStats InheritanceExperiment(const Graph& g, const Graph& gamma, std::span<const int> X,
                                       std::span<const int> Y, const PairParams& pp,
                                       InheritanceMode mode, double C,
                                       const RegularityOptions& opts) {
  pp.Validate();
  CheckSides(g.n(), X, Y);
  if (g.n() != gamma.n()) throw InvalidArgument("g and gamma must share a vertex set");
  InheritanceStats stats;
  const int n = gamma.n();
  const double logterm = std::log(std::exp(1.0) * n / static_cast<double>(X.size()));
  stats.bound = mode == InheritanceMode::kOneSided ? C / pp.p * logterm
                                                  : C * std::max(1.0 / (pp.p * pp.p), logterm / pp.p);
  std::vector<int> xz, yz;
  for (int z = 0; z < n; ++z) {
    const Bitset& nz = gamma.adjacency(z);
    xz.clear();
    for (int x : X)
      if (nz.test(x)) xz.push_back(x);
    if (mode == InheritanceMode::kTwoSided) {
      yz.clear();
      for (int y : Y)
        if (nz.test(y)) yz.push_back(y);
    } else {
      yz.assign(Y.begin(), Y.end());
    }
    if (xz.empty() || yz.empty()) continue;
    ++stats.tested;
    RegularityOptions ro = opts;
    ro.seed = DeriveSeed(opts.seed, z);
    if (TestLowerRegular(g, pp, xz, yz, ro).has_witness()) {
      ++stats.failing;
      stats.failing_vertices.push_back(z);
    }
  }
  return stats;
}

}  // namespace sblab
