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

#include "sblab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "sblab/adversary.hpp"
#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/errors.hpp"
#include "sblab/partitioner.hpp"
#include "sblab/rng.hpp"

namespace sblab {

Graph ThinToMinDegree(const Graph& gamma, double alpha, double p, std::uint64_t seed) {
  const int n = gamma.n();
  const int target = std::max(0, static_cast<int>(std::ceil(alpha * p * n - 1e-9)));
  const int delta = MinDegree(gamma);
  if (target > delta) {
    throw InfeasibleTarget("target minimum degree " + std::to_string(target) + " exceeds delta(gamma) = " +
                           std::to_string(delta));
  }
  std::vector<Edge> edges = gamma.edges();
  SplitMix64 rng(seed);
  rng.shuffle(edges);
  GraphBuilder builder(gamma);
  for (const Edge& e : edges)
    if (builder.degree(e.u) > target && builder.degree(e.v) > target) builder.remove_edge(e.u, e.v);
  return builder.Build();
}

Graph BuildPattern(const std::string& name, int n) {
  if (name == "cycle") return CycleGraph(n);
  if (name == "cycle_square") return CyclePower(n, 2);
  if (name == "path") return PathGraph(n);
  if (name == "f_copies") {
    const Graph copies = DisjointCopies(BuildF(), n / 11);
    std::vector<Graph> parts{copies, Graph(n - copies.n())};
    return DisjointUnion(parts);
  }
  throw InvalidArgument("unknown pattern '" + name + "'");
}

void ExperimentSpec::Validate() const {
  for (int v : n)
    if (v < 1) throw InvalidArgument("grid n must be positive");
  for (double v : p)
    if (!(v > 0.0 && v <= 1.0)) throw InvalidArgument("grid p must lie in (0,1]");
  for (int v : k)
    if (v < 1) throw InvalidArgument("grid k must be positive");
  for (int v : s)
    if (v < 1) throw InvalidArgument("grid s must be positive");
  for (double v : alpha)
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("grid alpha must lie in [0,1]");
  for (const auto& a : adversary)
    if (a != "random" && a != "none" && a != "clearing" && a != "sec52")
      throw InvalidArgument("unknown adversary '" + a + "'");
  for (const auto& name : pattern)
    if (name != "cycle" && name != "cycle_square" && name != "path" && name != "f_copies")
      throw InvalidArgument("unknown pattern '" + name + "'");
  if (seeds < 0) throw InvalidArgument("seeds must be non-negative");
  if (pipeline != "direct" && pipeline != "full") throw InvalidArgument("pipeline must be direct or full");
  if (workers < 1) throw InvalidArgument("workers must be positive");
}

std::size_t ExperimentSpec::grid_size() const {
  return n.size() * p.size() * k.size() * s.size() * adversary.size() * pattern.size() * alpha.size() *
         static_cast<std::size_t>(seeds);
}

const char* ToString(Outcome o) {
  switch (o) {
    case Outcome::kEmbedded:
      return "embedded";
    case Outcome::kFailed:
      return "failed";
    case Outcome::kCertifiedAbsent:
      return "adversary-certified-absent";
    case Outcome::kNotCertified:
      return "adversary-not-certified";
    case Outcome::kError:
      return "error";
  }
  return "?";
}

RunRecord RunOne(const ExperimentSpec& spec, RunRecord rec) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (rec.adversary == "sec52") {
      AdversaryParams ap{rec.n, rec.p, spec.eps, rec.seed, std::max(4, rec.k), 32};
      const AdversaryInstance inst = BuildAdversarialInstance(ap);
      rec.min_degree = MinDegree(inst.g);
      const NonContainmentReport cert = VerifyNoFOnX(inst, 1);
      rec.outcome = cert.certified ? Outcome::kCertifiedAbsent : Outcome::kNotCertified;
      std::ostringstream detail;
      detail << "searches=" << cert.searches << " found=" << cert.copies_found << " incomplete=" << cert.incomplete;
      rec.detail = detail.str();
    } else {
      const Graph gamma = GenerateGnp({rec.n, rec.p, DeriveSeed(rec.seed, 0)});
      Graph g;
      if (rec.adversary == "random") {
        g = ThinToMinDegree(gamma, rec.alpha, rec.p, DeriveSeed(rec.seed, 1));
      } else if (rec.adversary == "clearing") {
        const int count = std::min(rec.n, static_cast<int>(std::ceil(1.0 / (rec.p * rec.p))));
        std::vector<int> targets(rec.n);
        for (int v = 0; v < rec.n; ++v) targets[v] = v;
        SplitMix64 rng(DeriveSeed(rec.seed, 1));
        rng.shuffle(targets);
        targets.resize(count);
        g = NeighbourhoodClearing(gamma, gamma, targets).g;
      } else {
        g = gamma;
      }
      rec.min_degree = MinDegree(g);
      const Graph h = BuildPattern(rec.pattern, rec.n);
      const Labelling lab = HeuristicLabelling(h);
      EmbedOptions eo;
      eo.backtrack_budget = spec.budget;
      eo.seed = DeriveSeed(rec.seed, 2);
      EmbedContext ctx;
      Embedding initial;
      if (spec.pipeline == "full") {
        ClusterPartitionOptions po;
        po.regular.seed = DeriveSeed(rec.seed, 3);
        const ClusterPartitionReport part =
            BuildClusterPartition(g, gamma, rec.k, 1, spec.reg_eps, spec.reg_d, rec.p, po);
        rec.v0_size = static_cast<int>(part.partition.v0.size());
        if (!part.partition.v0.empty()) {
          const Colouring col = ProperColouring(h, rec.k, lab);
          PreEmbedConfig cfg;
          cfg.s = rec.s;
          cfg.separation = 2 * rec.s + 3;
          cfg.seed = DeriveSeed(rec.seed, 4);
          cfg.root_order = lab.vertex_at;
          const std::vector<int> S = SampleS(rec.n, cfg.mu, DeriveSeed(rec.seed, 5));
          PreEmbedResult pre = PreEmbed(g, h, part.partition.v0, S, col, cfg);
          initial = pre.embedding;
          ctx.initial = &initial;
          ctx.restrictions = pre.records;
          rec.restriction_count = static_cast<int>(pre.records.size());
          rec.restriction_min = pre.records.empty() ? 0 : static_cast<int>(pre.records.front().I.size());
          for (const auto& r : pre.records)
            rec.restriction_min = std::min(rec.restriction_min, static_cast<int>(r.I.size()));
        }
      }
      EmbedResult res = GreedyEmbed(h, g, lab, ctx, eo);
      rec.backtracks = res.backtracks;
      if (res.ok() && VerifyEmbedding(h, g, *res.embedding, true)) {
        rec.outcome = Outcome::kEmbedded;
        rec.embedding = std::move(res.embedding);
      } else {
        rec.outcome = Outcome::kFailed;
        rec.cert = res.failure;
        if (res.failure) rec.detail = res.failure->reason;
      }
    }
  } catch (const std::exception& e) {
    rec.outcome = Outcome::kError;
    rec.detail = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<RunRecord> RunResilienceSweep(const ExperimentSpec& spec) {
  spec.Validate();
  std::vector<RunRecord> records;
  records.reserve(spec.grid_size());
  for (int n : spec.n)
    for (double p : spec.p)
      for (int k : spec.k)
        for (int s : spec.s)
          for (const auto& adversary : spec.adversary)
            for (const auto& pattern : spec.pattern)
              for (double alpha : spec.alpha)
                for (int rep = 0; rep < spec.seeds; ++rep) {
                  RunRecord r;
                  r.index = records.size();
                  r.n = n;
                  r.p = p;
                  r.k = k;
                  r.s = s;
                  r.adversary = adversary;
                  r.pattern = pattern;
                  r.alpha = alpha;
                  r.replicate = rep;
                  r.seed = DeriveSeed(spec.seed, r.index);
                  records.push_back(std::move(r));
                }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= records.size()) return;
      records[i] = RunOne(spec, records[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < spec.workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

std::string SweepCsvHeader() {
  return "index,n,p,k,s,adversary,pattern,alpha,replicate,seed,outcome,min_degree,backtracks,v0_size,"
         "restriction_count,restriction_min,cert_vertex,cert_depth,detail,wall_ms";
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void WriteSweepCsv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << SweepCsvHeader() << '\n';
  for (const auto& r : records) {
    os << r.index << ',' << r.n << ',' << r.p << ',' << r.k << ',' << r.s << ',' << r.adversary << ','
       << r.pattern << ',' << r.alpha << ',' << r.replicate << ',' << r.seed << ',' << ToString(r.outcome) << ','
       << r.min_degree << ',' << r.backtracks << ',' << r.v0_size << ',' << r.restriction_count << ','
       << r.restriction_min << ',' << (r.cert ? r.cert->vertex : -1) << ',' << (r.cert ? r.cert->depth : -1)
       << ',' << CsvField(r.detail) << ',' << std::fixed << std::setprecision(3) << r.wall_ms
       << std::defaultfloat << '\n';
  }
}

}  // namespace sblab
