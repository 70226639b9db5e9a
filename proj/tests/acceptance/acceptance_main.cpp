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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Run a subset with e.g. `acceptance 3 9`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sblab/adversary.hpp"
#include "sblab/backbone.hpp"
#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/concentration.hpp"
#include "sblab/embedder.hpp"
#include "sblab/errors.hpp"
#include "sblab/experiment.hpp"
#include "sblab/graph.hpp"
#include "sblab/partitioner.hpp"
#include "sblab/regularity.hpp"
#include "sblab/rng.hpp"

namespace {

using namespace sblab;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = false;
  std::string summary;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// 1. F self-test.
Verdict FConstruction() {
  const auto t0 = Clock::now();
  FAnalysis a;
  try {
    a = AnalyzeF();
  } catch (const AssertionFailed& e) {
    return {false, e.what()};
  }
  const double secs = Seconds(t0);
  const bool ok = a.chromatic_number == 4 && a.forced_classes && a.k4_cover && a.r_neighbourhood_c6 && secs < 5.0;
  return {ok, Format("chi=%d colourings=%lld forced=%d k4=%d c6=%d time=%.2fs", a.chromatic_number,
                     static_cast<long long>(a.four_colourings), a.forced_classes, a.k4_cover,
                     a.r_neighbourhood_c6, secs)};
}

// 2. Counterexample certification at n=2000, p=0.3, eps=0.3 over 20 seeds.
Verdict Certification() {
  const auto t0 = Clock::now();
  const int n = 2000;
  const double p = 0.3;
  const double need = 0.75 * p * n;
  int certified = 0, degree_ok = 0, worst_degree = n;
  for (int s = 0; s < 20; ++s) {
    const AdversaryInstance inst = BuildAdversarialInstance({n, p, 0.3, DeriveSeed(2026, s), 4, 32});
    const NonContainmentReport rep = VerifyNoFOnX(inst, 1);
    const int delta = MinDegree(inst.g);
    certified += rep.certified;
    degree_ok += delta >= need;
    worst_degree = std::min(worst_degree, delta);
  }
  const double secs = Seconds(t0);
  const bool ok = certified == 20 && degree_ok == 20 && secs < 600.0;
  return {ok, Format("certified=%d/20 min_degree_ok=%d/20 (worst delta=%d, need %.0f = 0.75pn, "
                     "worst/pn=%.3f) time=%.1fs",
                     certified, degree_ok, worst_degree, need, worst_degree / (p * n), secs)};
}

// Random labelled k-clique of R by randomised greedy extension.
LabelledClique RandomClique(const Graph& R, int k, SplitMix64& rng) {
  for (;;) {
    std::vector<int> order(R.n());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<int> clique;
    for (int v : order) {
      bool ok = true;
      for (int u : clique) ok = ok && R.has_edge(u, v);
      if (ok) clique.push_back(v);
      if (static_cast<int>(clique.size()) == k) break;
    }
    if (static_cast<int>(clique.size()) == k) {
      rng.shuffle(clique);
      return {clique};
    }
  }
}

// Independent walk checker.
bool WalkValid(const Graph& R, const std::vector<LabelledClique>& walk, const LabelledClique& start,
               const LabelledClique& end, int k) {
  if (walk.empty() || !(walk.front() == start) || !(walk.back() == end)) return false;
  for (const auto& z : walk) {
    if (z.k() != k) return false;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (!R.has_edge(z.by_label[a], z.by_label[b])) return false;
  }
  for (std::size_t t = 1; t < walk.size(); ++t)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b && !R.has_edge(walk[t].by_label[a], walk[t - 1].by_label[b])) return false;
  return true;
}

// 3. Clique walks on random dense reduced graphs.
Verdict CliqueWalks() {
  std::string summary;
  bool ok = true;
  for (int k : {2, 3}) {
    const int v = 10 * k;
    const double alpha = (k - 1.0) / k + 0.05;
    int success = 0, exact_length = 0, min_delta = v;
    for (int t = 0; t < 100; ++t) {
      const std::uint64_t seed = DeriveSeed(300 + k, t);
      const Graph R = ThinToMinDegree(CompleteGraph(v), alpha, 1.0, seed);
      min_delta = std::min(min_delta, MinDegree(R));
      SplitMix64 rng(DeriveSeed(seed, 1));
      const LabelledClique start = RandomClique(R, k, rng);
      const LabelledClique end = RandomClique(R, k, rng);
      try {
        const auto walk = CliqueWalk(R, start, end, k);
        if (VerifyCliqueWalk(R, walk, start, end) && WalkValid(R, walk, start, end, k)) ++success;
        if (static_cast<int>(walk.size()) == k * (k + 1) / 2) ++exact_length;
      } catch (const NoCommonNeighbour&) {
      }
    }
    ok = ok && success == 100 && exact_length == 100;
    summary += Format("k=%d: verified=%d/100 length=%d ok=%d/100 (delta>=%d of %d); ", k, success, k * (k + 1) / 2,
                      exact_length, min_delta, v);
  }
  return {ok, summary};
}

// Exact p-density of (A, B) by pair enumeration.
double NaiveDensity(const Graph& g, double p, const std::vector<int>& A, const std::vector<int>& B) {
  long long e = 0;
  for (int a : A)
    for (int b : B) e += g.has_edge(a, b);
  return e / (p * A.size() * B.size());
}

// 4. Exhaustive versus randomized lower-regularity on 12x12 pairs.
Verdict RegularityOracle() {
  int instances = 0, agree = 0, witnesses = 0, bad_witness = 0;
  for (double eps : {0.2, 0.3}) {
    for (double d : {0.3, 0.5}) {
      for (int t = 0; t < 50; ++t, ++instances) {
        const std::uint64_t seed = DeriveSeed(400 + static_cast<int>(eps * 10) * 10 + static_cast<int>(d * 10), t);
        SplitMix64 rng(seed);
        // Mixed densities around the threshold; a planted sparse corner on
        // half of the instances.
        const double q = 0.25 + 0.5 * rng.uniform01();
        const double corner = rng.uniform01() < 0.5 ? 0.05 + 0.3 * rng.uniform01() : q;
        const int cx = 2 + static_cast<int>(rng.below(4)), cy = 2 + static_cast<int>(rng.below(4));
        std::vector<Edge> edges;
        for (int x = 0; x < 12; ++x)
          for (int y = 0; y < 12; ++y) {
            const double prob = (x < cx && y < cy) ? corner : q;
            if (rng.uniform01() < prob) edges.push_back({x, 12 + y});
          }
        const Graph g = Graph::FromEdges(24, edges);
        std::vector<int> X(12), Y(12);
        std::iota(X.begin(), X.end(), 0);
        std::iota(Y.begin(), Y.end(), 12);
        const PairParams pp{eps, d, 1.0};
        RegularityOptions ex, rnd;
        ex.mode = SearchMode::kExhaustive;
        rnd.mode = SearchMode::kRandomized;
        rnd.seed = DeriveSeed(seed, 7);
        const RegularityVerdict ve = TestLowerRegular(g, pp, X, Y, ex);
        const RegularityVerdict vr = TestLowerRegular(g, pp, X, Y, rnd);
        agree += ve.has_witness() == vr.has_witness();
        for (const RegularityVerdict* v : {&ve, &vr}) {
          if (!v->has_witness()) continue;
          ++witnesses;
          const double dens = NaiveDensity(g, 1.0, v->witness_x, v->witness_y);
          const bool sizes = v->witness_x.size() >= std::ceil(eps * 12 - 1e-9) &&
                             v->witness_y.size() >= std::ceil(eps * 12 - 1e-9);
          if (!(dens < d - eps) || !sizes) ++bad_witness;
        }
      }
    }
  }
  const bool ok = agree == instances && bad_witness == 0;
  return {ok, Format("agree=%d/%d witnesses=%d rechecked_bad=%d", agree, instances, witnesses, bad_witness)};
}

// Sparse graph of bandwidth <= bw in a hidden order with a planted proper
// colouring by colours 1..k and one colour-0 vertex.
struct BandedInstance {
  Graph h;
  Labelling lab;
  Colouring col;
};

BandedInstance BandedGraph(int n, int bw, int k, double q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> vertex_at(n);
  std::iota(vertex_at.begin(), vertex_at.end(), 0);
  rng.shuffle(vertex_at);
  std::vector<int> colour_at(n);
  for (int t = 0; t < n; ++t) colour_at[t] = 1 + static_cast<int>(rng.below(k));
  const int zero_pos = n / 2 + static_cast<int>(rng.below(n / 4));
  colour_at[zero_pos] = 0;
  std::vector<Edge> edges;
  for (int t = 0; t < n; ++t)
    for (int u = t + 1; u <= std::min(n - 1, t + bw); ++u)
      if (colour_at[t] != colour_at[u] && rng.uniform01() < q) edges.push_back({vertex_at[t], vertex_at[u]});
  BandedInstance out;
  out.h = Graph::FromEdges(n, edges);
  out.lab = Labelling::FromOrder(out.h, vertex_at);
  out.col.k = k;
  out.col.colour.assign(n, 0);
  for (int t = 0; t < n; ++t) out.col.colour[vertex_at[t]] = colour_at[t];
  return out;
}

// 5. AssignH round trip.
Verdict AssignmentRoundTrip() {
  const int n = 2000, bw = 20, r = 2;
  const double xi = 0.05, beta = 0.01;
  int success = 0, explicit_fail = 0, silent = 0, max_x = 0;
  std::string first_failure;
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + t % 3;
    const std::uint64_t seed = DeriveSeed(500, t);
    const BandedInstance inst = BandedGraph(n, bw, k, 0.08, seed);
    // Reduced graph: the backbone plus random extra cluster pairs, resampled
    // until every column has a cluster adjacent to all of it (a precondition).
    SplitMix64 rng(DeriveSeed(seed, 1));
    Graph reduced;
    for (bool has_z = false; !has_z;) {
      std::vector<Edge> edges = BackboneGraph(r, k).edges();
      for (int a = 0; a < r * k; ++a)
        for (int b = a + 1; b < r * k; ++b)
          if (rng.uniform01() < 0.7) edges.push_back({a, b});
      reduced = Graph::FromEdges(r * k, edges);
      has_z = true;
      for (int i = 0; i < r; ++i) {
        bool found = false;
        for (int c = 0; c < r * k; ++c) {
          bool all = c / k != i;
          for (int j = 0; j < k && all; ++j) all = reduced.has_edge(c, ClusterIndex(i, j, k));
          found = found || all;
        }
        has_z = has_z && found;
      }
    }
    IntegerPartition m(r, k, n / (r * k));
    for (int i = 0; i < n % (r * k); ++i) m.values[i] += 1;
    try {
      const Assignment a = AssignH(inst.h, inst.lab, inst.col, reduced, m, xi, beta);
      const AssignmentReport rep = VerifyAssignment(inst.h, a, reduced, r, k, m, xi, inst.lab, inst.col, beta);
      max_x = std::max(max_x, static_cast<int>(a.special.size()));
      if (rep.all()) ++success;
      else ++silent;
    } catch (const AssignmentFailed& e) {
      ++explicit_fail;
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  const bool ok = success >= 45 && silent == 0;
  return {ok, Format("success=%d/50 explicit_failures=%d silent_violations=%d max|X|=%d (xi n=%.0f)%s%s", success,
                     explicit_fail, silent, max_x, xi * n, first_failure.empty() ? "" : " first: ",
                     first_failure.c_str())};
}

// 6. Dirac-regime embedding of C_n and C_n^2.
Verdict DiracEmbedding() {
  const int n = 60;
  auto run = [&](const Graph& h, double alpha, int seeds, int& verified, std::int64_t& max_bt) {
    int ok = 0;
    const Labelling lab = HeuristicLabelling(h);
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = DeriveSeed(600 + static_cast<int>(alpha * 100), s);
      const Graph g = ThinToMinDegree(CompleteGraph(n), alpha, 1.0, seed);
      EmbedOptions eo;
      eo.backtrack_budget = 100000;
      eo.seed = DeriveSeed(seed, 1);
      const EmbedResult res = GreedyEmbed(h, g, lab, {}, eo);
      max_bt = std::max(max_bt, res.backtracks);
      if (res.ok()) {
        ++ok;
        verified += VerifyEmbedding(h, g, *res.embedding, true);
      }
    }
    return ok;
  };
  int v1 = 0, v2 = 0;
  std::int64_t bt1 = 0, bt2 = 0;
  const int c1 = run(CycleGraph(n), 0.55, 20, v1, bt1);
  const int c2 = run(CyclePower(n, 2), 0.8, 50, v2, bt2);
  const bool ok = c1 >= 19 && c2 >= 45 && v1 == c1 && v2 == c2;
  return {ok, Format("C_n: %d/20 (verified %d, max backtracks %lld); C_n^2: %d/50 (verified %d, max backtracks %lld)",
                     c1, v1, static_cast<long long>(bt1), c2, v2, static_cast<long long>(bt2))};
}

// F with a pendant path 1 - p1 - p2, repeated `copies` times.
Graph FWithTails(int copies) {
  Graph f = BuildF();
  std::vector<Edge> edges = f.edges();
  edges.push_back({fvertex::kOne, 11});
  edges.push_back({11, 12});
  return DisjointCopies(Graph::FromEdges(13, edges), copies);
}

// 7. Pre-embedding contract with an independent argmax recomputation.
Verdict PreEmbedding() {
  const int n = 500, k = 4, r = 2;
  int instances_ok = 0, steps = 0, records = 0, positive_scores = 0;
  const int instances = 5;
  std::string failure;
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t seed = DeriveSeed(700, t);
    const Graph g = ThinToMinDegree(CompleteGraph(n), 0.8, 1.0, seed);
    SplitMix64 rng(DeriveSeed(seed, 1));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<int> v0(perm.begin(), perm.begin() + 5);
    std::sort(v0.begin(), v0.end());
    // Equitable clusters over V \ V0 and a complete reduced graph.
    ClusterPartition part;
    part.r = r;
    part.k = k;
    part.v0 = v0;
    part.clusters.assign(r * k, {});
    for (int i = 5; i < n; ++i) part.clusters[(i - 5) % (r * k)].push_back(perm[i]);
    for (auto& c : part.clusters) std::sort(c.begin(), c.end());
    part.reduced = CompleteGraph(r * k);
    part.params = {0.1, 0.3, 1.0};

    const Graph h = FWithTails(12);
    const Colouring col = ProperColouring(h, k, Labelling::Identity(h));
    PreEmbedConfig cfg;
    cfg.s = 3;
    cfg.separation = 8;
    cfg.seed = DeriveSeed(seed, 2);
    for (int c = 0; c < 12; ++c) cfg.root_order.push_back(13 * c + fvertex::kR);
    const std::vector<int> S = SampleS(n, 0.5, DeriveSeed(seed, 3));
    PreEmbedResult res;
    try {
      res = PreEmbed(g, h, v0, S, col, cfg, &part);
    } catch (const Error& e) {
      if (failure.empty()) failure = e.what();
      continue;
    }
    std::string why;
    // Coverage and partial-embedding validity.
    std::set<int> image;
    for (int y = 0; y < h.n(); ++y)
      if (res.embedding.mapped(y)) image.insert(res.embedding[y]);
    for (int v : v0)
      if (!image.count(v)) why = "bad vertex not covered";
    if (!VerifyEmbedding(h, g, res.embedding, false)) why = "partial embedding invalid";
    // Restriction records.
    const auto member = part.Membership(n);
    int max_deg = 0;
    for (int y = 0; y < h.n(); ++y) max_deg = std::max(max_deg, h.degree(y));
    for (const auto& rec : res.records) {
      std::vector<int> J;
      int open = 0;
      for (int u : h.neighbours(rec.vertex)) {
        if (res.embedding.mapped(u)) J.push_back(res.embedding[u]);
        else ++open;
      }
      std::sort(J.begin(), J.end());
      if (J != rec.J) why = "record J differs from embedded neighbour images";
      if (static_cast<int>(J.size()) + open > max_deg) why = "|J| + open degree exceeds max degree";
      if (rec.I.empty()) why = "empty restriction set";
      for (int x : rec.I) {
        for (int j : rec.J)
          if (!g.has_edge(x, j)) why = "I outside N(J)";
        if (member[x] != rec.target_cluster) why = "I outside target cluster";
        if (image.count(x)) why = "I meets the image";
      }
    }
    // Argmax recomputation.
    std::vector<char> in_s(n, 0);
    for (int v : S) in_s[v] = 1;
    for (const auto& step : res.trace) {
      std::vector<char> used(n, 0);
      for (int x : step.image_before) used[x] = 1;
      int best = -1, best_score = -1;
      for (int v : v0) {
        if (used[v]) continue;
        int score = 0;
        for (int u : g.neighbours(v)) score += in_s[u] && used[u];
        if (score > best_score) {
          best = v;
          best_score = score;
        }
      }
      if (best != step.v || best_score != step.score) why = "argmax mismatch";
    }
    if (res.trace.empty()) why = "empty trace";
    if (res.records.empty()) why = "no restriction records";
    steps += static_cast<int>(res.trace.size());
    records += static_cast<int>(res.records.size());
    for (const auto& step : res.trace) positive_scores += step.score > 0;
    if (why.empty()) ++instances_ok;
    else if (failure.empty()) failure = why;
  }
  const bool ok = instances_ok == instances;
  return {ok, Format("instances=%d/%d steps=%d (score>0: %d) records=%d%s%s", instances_ok, instances, steps,
                     positive_scores, records, failure.empty() ? "" : " first failure: ", failure.c_str())};
}

// 8. Edge-count concentration.
Verdict Concentration() {
  const ConcentrationReport rep = ConcentrationCheck(1000, 0.05, 200, 0);
  return {rep.pass && rep.exceedances == 0,
          Format("E=%.1f mean=%.1f sd=%.1f exceedances=%d empirical=%.4f bound=%.3g", rep.expected, rep.mean,
                 rep.stddev, rep.exceedances, rep.empirical, rep.bound)};
}

// 9. Heuristic versus exact bandwidth.
Verdict Bandwidth() {
  int ge = 0, total = 0, eq_ok = 0, eq_total = 0;
  for (int t = 0; t < 100; ++t, ++total) {
    SplitMix64 rng(DeriveSeed(900, t));
    const int n = 4 + static_cast<int>(rng.below(9));
    const double q = 0.15 + 0.5 * rng.uniform01();
    const Graph g = GenerateGnp({n, q, DeriveSeed(900, 1000 + t)});
    const int exact = ExactBandwidth(g).bandwidth;
    const Labelling lab = HeuristicLabelling(g);
    ge += LabellingBandwidth(g, lab.position) >= exact && lab.bandwidth >= exact;
  }
  for (int n = 2; n <= 12; ++n) {
    for (const Graph& g : {PathGraph(n), CompleteGraph(n)}) {
      ++eq_total;
      eq_ok += HeuristicLabelling(g).bandwidth == ExactBandwidth(g).bandwidth;
    }
  }
  return {ge == total && eq_ok == eq_total,
          Format("heuristic>=exact %d/%d; equality on paths and cliques %d/%d", ge, total, eq_ok, eq_total)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"F construction self-test", FConstruction},
      {"counterexample certification", Certification},
      {"clique walk", CliqueWalks},
      {"regularity oracle equivalence", RegularityOracle},
      {"assignment round trip", AssignmentRoundTrip},
      {"Dirac-regime embedding", DiracEmbedding},
      {"pre-embedding contract", PreEmbedding},
      {"concentration", Concentration},
      {"bandwidth", Bandwidth},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                o.summary.c_str(), Seconds(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
