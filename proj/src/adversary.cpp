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

#include "sblab/adversary.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "sblab/colouring.hpp"
#include "sblab/errors.hpp"
#include "sblab/rng.hpp"

namespace sblab {

using namespace fvertex;

Graph BuildF() {
  std::vector<Edge> edges;
  for (int u = kOne; u <= kFour; ++u)
    for (int v = u + 1; v <= kFour; ++v) edges.push_back({u, v});
  const int hexagon[6] = {kA, kB, kC, kD, kE, kF};
  for (int t = 0; t < 6; ++t) edges.push_back({hexagon[t], hexagon[(t + 1) % 6]});
  for (int h : hexagon) {
    edges.push_back({kFour, h});
    edges.push_back({h, kR});
  }
  for (int h : {kB, kC, kE, kF}) edges.push_back({kOne, h});
  for (int h : {kA, kC, kD, kF}) edges.push_back({kTwo, h});
  for (int h : {kA, kB, kD, kE}) edges.push_back({kThree, h});
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph::FromEdges(11, edges);
}

std::string FVertexName(int id) {
  static const char* kNames[] = {"1", "2", "3", "4", "a", "b", "c", "d", "e", "f", "r"};
  if (id >= 0 && id < 11) return kNames[id];
  return std::to_string(id - 11 + 5);
}

namespace {

bool InSomeK4(const Graph& g, int v) {
  const auto nb = g.neighbours(v);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      for (std::size_t c = b + 1; c < nb.size(); ++c)
        if (g.has_edge(nb[a], nb[b]) && g.has_edge(nb[a], nb[c]) && g.has_edge(nb[b], nb[c])) return true;
  return false;
}

}  // namespace

FAnalysis AnalyzeF() {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph f = BuildF();
  FAnalysis out;

  out.chromatic_number = ChromaticNumber(f);
  if (out.chromatic_number != 4)
    throw AssertionFailed("chromatic number", "expected 4, got " + std::to_string(out.chromatic_number));

  out.forced_classes = true;
  out.four_colourings = EnumerateProperColourings(f, 4, [&](const std::vector<int>& c) {
    if (!(c[kA] == c[kOne] && c[kD] == c[kOne] && c[kB] == c[kTwo] && c[kE] == c[kTwo] && c[kC] == c[kThree] &&
          c[kF] == c[kThree]))
      out.forced_classes = false;
    return true;
  });
  if (out.four_colourings == 0) throw AssertionFailed("colourability", "no proper 4-colouring");
  if (!out.forced_classes)
    throw AssertionFailed("forced classes", "a 4-colouring separates {1,a,d}, {2,b,e} or {3,c,f}");

  out.k4_cover = true;
  for (int v = 0; v < f.n(); ++v)
    if (InSomeK4(f, v) != (v != kR)) out.k4_cover = false;
  if (!out.k4_cover) throw AssertionFailed("K4 cover", "K4 membership differs from 'all but r'");

  const std::vector<int> nr(f.neighbours(kR).begin(), f.neighbours(kR).end());
  const Graph ring = InducedSubgraph(f, nr);
  bool cycle = ring.n() == 6 && ring.edge_count() == 6 && ConnectedComponents(ring).size() == 1;
  for (int v = 0; v < ring.n() && cycle; ++v) cycle = ring.degree(v) == 2;
  out.r_neighbourhood_c6 = cycle && IsBipartite(ring);
  if (!out.r_neighbourhood_c6) throw AssertionFailed("N(r)", "neighbourhood of r is not a 6-cycle");

  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

Graph BuildFk(int k) {
  if (k < 4) throw InvalidArgument("F_k needs k >= 4");
  const Graph f = BuildF();
  const int n = 11 + (k - 4);
  std::vector<Edge> edges = f.edges();
  for (int v = 11; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (u != kR) edges.push_back({u, v});
  return Graph::FromEdges(n, edges);
}

bool AdversaryInstance::Permitted(int a, int b, int k) {
  if (a > b) std::swap(a, b);
  const int z1 = kPartZ0, z2 = kPartZ0 + 1, zmax = kPartZ0 + k;
  if (a == kPartX) return b == kPartY1 || b == kPartY2;
  if (a == kPartY1 && b == kPartY2) return true;
  if (a == kPartY1) return b >= kPartZ0 && b <= zmax && b != z1;
  if (a == kPartY2) return b >= kPartZ0 && b <= zmax && b != z2;
  return a >= kPartZ0 && b <= zmax && a != b;
}

AdversaryInstance BuildAdversarialInstance(const AdversaryParams& params) {
  const int n = params.n;
  if (n < 2) throw InvalidArgument("adversary needs n >= 2");
  if (!(params.p > 0.0 && params.p <= 1.0)) throw InvalidArgument("p must lie in (0,1]");
  if (!(params.eps > 0.0)) throw InvalidArgument("eps must be positive");
  if (params.k < 4) throw InvalidArgument("k must be at least 4");
  const int x_size = static_cast<int>(std::ceil(params.eps / params.p - 1e-9));
  if (x_size < 1 || x_size >= n) throw InvalidArgument("|X| = ceil(eps/p) must lie in [1, n)");

  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    const std::uint64_t seed = DeriveSeed(params.seed, attempt);
    SplitMix64 rng(DeriveSeed(seed, 1));
    AdversaryInstance inst;
    inst.params = params;
    inst.attempts = attempt + 1;
    inst.gamma = GenerateGnp({n, params.p, DeriveSeed(seed, 0)});

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    inst.X.assign(perm.begin(), perm.begin() + x_size);
    std::sort(inst.X.begin(), inst.X.end());
    Bitset xs = Bitset::FromVector(n, inst.X);
    Bitset ys(n);
    int max_inside = 0;
    for (int x : inst.X) {
      ys |= inst.gamma.adjacency(x);
      max_inside = std::max(max_inside, inst.gamma.adjacency(x).and_count(xs));
    }
    ys.subtract(xs);
    const int y_size = ys.count();
    if (y_size > 2.0 * params.eps * n || max_inside > std::log(static_cast<double>(n))) continue;

    std::vector<int> y = ys.to_vector();
    rng.shuffle(y);
    inst.Y1.assign(y.begin(), y.begin() + y_size / 2);
    inst.Y2.assign(y.begin() + y_size / 2, y.end());
    std::vector<int> z;
    for (int v = 0; v < n; ++v)
      if (!xs.test(v) && !ys.test(v)) z.push_back(v);
    rng.shuffle(z);
    const int parts = params.k + 1;
    inst.Z.assign(parts, {});
    for (std::size_t t = 0; t < z.size(); ++t) inst.Z[t % parts].push_back(z[t]);

    inst.part.assign(n, -1);
    for (int v : inst.X) inst.part[v] = kPartX;
    for (int v : inst.Y1) inst.part[v] = kPartY1;
    for (int v : inst.Y2) inst.part[v] = kPartY2;
    for (int i = 0; i < parts; ++i)
      for (int v : inst.Z[i]) inst.part[v] = kPartZ0 + i;
    std::sort(inst.Y1.begin(), inst.Y1.end());
    std::sort(inst.Y2.begin(), inst.Y2.end());
    for (auto& zi : inst.Z) std::sort(zi.begin(), zi.end());

    std::vector<Edge> kept;
    for (const Edge& e : inst.gamma.edges())
      if (AdversaryInstance::Permitted(inst.part[e.u], inst.part[e.v], params.k)) kept.push_back(e);
    inst.g = Graph::FromEdges(n, kept);
    return inst;
  }
  throw RetriesExhausted("gamma typicality checks failed " + std::to_string(params.max_retries) + " times");
}

NonContainmentReport VerifyNoPatternAt(const Graph& graph, const Graph& pattern, const std::vector<int>& X,
                                       int workers, const RootedSearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<int, int>> tasks;
  for (int x : X)
    for (int w = 0; w < pattern.n(); ++w) tasks.emplace_back(x, w);
  NonContainmentReport report;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const auto [x, w] = tasks[t];
      const RootedSearchResult r = FindRootedCopy(graph, pattern, w, x, opts);
      std::lock_guard<std::mutex> lock(mu);
      ++report.searches;
      report.nodes += r.nodes;
      if (r.found()) {
        ++report.copies_found;
        report.found_at.emplace_back(x, w);
      } else if (!r.complete) {
        ++report.incomplete;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(report.found_at.begin(), report.found_at.end());
  report.certified = report.copies_found == 0 && report.incomplete == 0;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

NonContainmentReport VerifyNoFOnX(const AdversaryInstance& inst, int workers, const RootedSearchOptions& opts) {
  return VerifyNoPatternAt(inst.g, BuildFk(inst.params.k), inst.X, workers, opts);
}

EdgeRuleReport CheckEdgeRules(const AdversaryInstance& inst) {
  EdgeRuleReport rep;
  rep.counts.assign(5, 0);
  rep.sound = inst.g.is_subgraph_of(inst.gamma);
  const int k = inst.params.k;
  auto rule = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == kPartX) return 0;
    if (a == kPartY1 && b == kPartY2) return 1;
    if (a == kPartY1) return 2;
    if (a == kPartY2) return 3;
    return 4;
  };
  for (const Edge& e : inst.g.edges()) {
    const int a = inst.part[e.u], b = inst.part[e.v];
    if (!AdversaryInstance::Permitted(a, b, k)) {
      rep.sound = false;
      continue;
    }
    ++rep.counts[rule(a, b)];
  }
  rep.complete = true;
  for (const Edge& e : inst.gamma.edges()) {
    if (AdversaryInstance::Permitted(inst.part[e.u], inst.part[e.v], k) && !inst.g.has_edge(e.u, e.v)) {
      rep.complete = false;
      break;
    }
  }
  return rep;
}

ClearingResult NeighbourhoodClearing(const Graph& gamma, const Graph& g0, const std::vector<int>& targets) {
  if (gamma.n() != g0.n() || !g0.is_subgraph_of(gamma)) throw InvalidArgument("g0 must be a subgraph of gamma");
  GraphBuilder builder(g0);
  ClearingResult out;
  for (int v : targets) {
    if (v < 0 || v >= g0.n()) throw InvalidArgument("target out of range");
    ClearingStat stat;
    stat.vertex = v;
    const auto nb = g0.neighbours(v);
    stat.degree = static_cast<int>(nb.size());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (builder.has_edge(nb[a], nb[b])) {
          builder.remove_edge(nb[a], nb[b]);
          ++stat.deleted;
        }
    const double pairs = stat.degree * (stat.degree - 1) / 2.0;
    stat.fraction = pairs > 0 ? stat.deleted / pairs : 0.0;
    out.deleted += stat.deleted;
    out.per_target.push_back(stat);
  }
  out.g = builder.Build();
  out.overall_fraction = g0.edge_count() > 0 ? static_cast<double>(out.deleted) / g0.edge_count() : 0.0;
  return out;
}

}  // namespace sblab
