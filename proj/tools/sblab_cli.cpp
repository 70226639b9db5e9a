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

// Command-line front end. Graph files use the edge-list format of ReadGraph;
// results go to --out (stdout when omitted), summaries to stderr.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "sblab/adversary.hpp"
#include "sblab/backbone.hpp"
#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/concentration.hpp"
#include "sblab/embedder.hpp"
#include "sblab/errors.hpp"
#include "sblab/experiment.hpp"
#include "sblab/graph.hpp"
#include "sblab/graph_io.hpp"
#include "sblab/partitioner.hpp"
#include "sblab/regularity.hpp"
#include "sblab/rng.hpp"
#include "sblab/serialize.hpp"

namespace {

using namespace sblab;

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  int workers = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidArgument("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Labelling LoadOrComputeLabelling(const Graph& g, const std::string& path) {
  if (path.empty()) return HeuristicLabelling(g);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return ReadLabelling(in, g);
}

Graph NamedGraph(const std::string& kind, int n, double p, std::uint64_t seed) {
  if (kind == "gnp") return GenerateGnp({n, p, seed});
  if (kind == "complete") return CompleteGraph(n);
  if (kind == "tree") return RandomTree(n, seed);
  if (kind == "petersen") return PetersenGraph();
  if (kind == "F") return BuildF();
  return BuildPattern(kind, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse-blowup lab: resilience experiments on random graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--seed", glob.seed, "base seed")->capture_default_str();
  app.add_option("--out", glob.out, "output file (default stdout)");
  app.add_option("--workers", glob.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string gen_kind = "gnp";
  int gen_n = 100;
  double gen_p = 0.5;
  double gen_alpha = -1.0;
  gen->add_option("--kind", gen_kind, "gnp|complete|tree|petersen|F|cycle|cycle_square|path|f_copies")
      ->capture_default_str();
  gen->add_option("--n", gen_n)->capture_default_str();
  gen->add_option("--p", gen_p)->capture_default_str();
  gen->add_option("--alpha", gen_alpha, "thin to minimum degree alpha*p*n");

  // bandwidth
  auto* bw = app.add_subcommand("bandwidth", "bandwidth labelling as vertex,value CSV");
  std::string bw_graph;
  bool bw_exact = false;
  bw->add_option("graph", bw_graph)->required()->check(CLI::ExistingFile);
  bw->add_flag("--exact", bw_exact, "exact search (n <= 12)");

  // colour
  auto* colour = app.add_subcommand("colour", "proper colouring with colours 0..k");
  std::string col_graph, col_lab;
  int col_k = 3;
  colour->add_option("graph", col_graph)->required()->check(CLI::ExistingFile);
  colour->add_option("--k", col_k)->capture_default_str();
  colour->add_option("--labelling", col_lab, "labelling CSV (default heuristic)");

  // partition
  auto* part = app.add_subcommand("partition", "cluster partition for the embedding pipeline");
  std::string part_graph, part_gamma;
  int part_k = 2, part_r0 = 1;
  double part_eps = 0.25, part_d = 0.3, part_p = 1.0;
  part->add_option("graph", part_graph)->required()->check(CLI::ExistingFile);
  part->add_option("--gamma", part_gamma, "host random graph (default: graph itself)");
  part->add_option("--k", part_k)->capture_default_str();
  part->add_option("--r0", part_r0)->capture_default_str();
  part->add_option("--eps", part_eps)->capture_default_str();
  part->add_option("--d", part_d)->capture_default_str();
  part->add_option("--p", part_p)->capture_default_str();

  // assign
  auto* assign = app.add_subcommand("assign", "assign H to clusters; backbone reduced graph unless --partition");
  std::string as_h, as_lab, as_part;
  int as_k = 2, as_r = 4;
  double as_xi = 0.05, as_beta = 0.0;
  assign->add_option("pattern", as_h, "graph H")->required()->check(CLI::ExistingFile);
  assign->add_option("--k", as_k)->capture_default_str();
  assign->add_option("--r", as_r)->capture_default_str();
  assign->add_option("--xi", as_xi)->capture_default_str();
  assign->add_option("--beta", as_beta, "block parameter (default bandwidth/n)");
  assign->add_option("--labelling", as_lab);
  assign->add_option("--partition", as_part, "partition CSV; targets are its cluster sizes");

  // embed
  auto* embed = app.add_subcommand("embed", "embed H into G with the greedy embedder");
  std::string em_h, em_g, em_lab;
  std::int64_t em_budget = 100000;
  bool em_warnsdorff = false;
  embed->add_option("pattern", em_h, "graph H")->required()->check(CLI::ExistingFile);
  embed->add_option("host", em_g, "graph G")->required()->check(CLI::ExistingFile);
  embed->add_option("--labelling", em_lab);
  embed->add_option("--budget", em_budget, "backtrack budget")->capture_default_str();
  embed->add_flag("--warnsdorff", em_warnsdorff);

  // adversary
  auto* adv = app.add_subcommand("adversary", "build and certify the F-free construction");
  int adv_n = 2000, adv_k = 4;
  double adv_p = 0.3, adv_eps = 0.3;
  std::string adv_graph_out;
  adv->add_option("--n", adv_n)->capture_default_str();
  adv->add_option("--p", adv_p)->capture_default_str();
  adv->add_option("--eps", adv_eps)->capture_default_str();
  adv->add_option("--k", adv_k)->capture_default_str();
  adv->add_option("--graph-out", adv_graph_out, "also write the adversarial graph");

  // regcheck
  auto* reg = app.add_subcommand("regcheck", "test a pair for lower- or super-regularity");
  std::string reg_graph, reg_x, reg_y, reg_gamma, reg_mode = "auto";
  double reg_eps = 0.2, reg_d = 0.3, reg_p = 1.0;
  int reg_trials = 2000;
  bool reg_fully = false;
  reg->add_option("graph", reg_graph)->required()->check(CLI::ExistingFile);
  reg->add_option("x", reg_x)->required()->check(CLI::ExistingFile);
  reg->add_option("y", reg_y)->required()->check(CLI::ExistingFile);
  reg->add_option("--eps", reg_eps)->capture_default_str();
  reg->add_option("--d", reg_d)->capture_default_str();
  reg->add_option("--p", reg_p)->capture_default_str();
  reg->add_option("--mode", reg_mode, "auto|exhaustive|randomized")->capture_default_str();
  reg->add_option("--trials", reg_trials)->capture_default_str();
  reg->add_flag("--fully", reg_fully, "two-sided regularity");
  reg->add_option("--super", reg_gamma, "host graph; switches to the super-regular test");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a resilience sweep from a JSON spec");
  std::string exp_spec, exp_sidecar;
  exp->add_option("spec", exp_spec)->required()->check(CLI::ExistingFile);
  exp->add_option("--sidecar", exp_sidecar, "JSON sidecar path (default <out>.json when --out is set)");

  // concentration
  auto* conc = app.add_subcommand("concentration", "edge-count tail check for G(n,p)");
  int conc_n = 1000, conc_seeds = 200;
  double conc_p = 0.05;
  conc->add_option("--n", conc_n)->capture_default_str();
  conc->add_option("--p", conc_p)->capture_default_str();
  conc->add_option("--seeds", conc_seeds)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(glob.out);
    std::ostream& os = out.stream();

    if (*gen) {
      Graph g = NamedGraph(gen_kind, gen_n, gen_p, glob.seed);
      if (gen_alpha >= 0.0) g = ThinToMinDegree(g, gen_alpha, gen_p, DeriveSeed(glob.seed, 1));
      WriteEdgeList(os, g);
      std::cerr << "n=" << g.n() << " m=" << g.edge_count() << " min_degree=" << MinDegree(g) << '\n';
    } else if (*bw) {
      const Graph g = ReadGraphFile(bw_graph);
      const Labelling lab = bw_exact ? ExactBandwidth(g).labelling : HeuristicLabelling(g);
      WriteLabelling(os, lab);
      std::cerr << "bandwidth=" << lab.bandwidth << '\n';
    } else if (*colour) {
      const Graph g = ReadGraphFile(col_graph);
      const Colouring col = ProperColouring(g, col_k, LoadOrComputeLabelling(g, col_lab));
      WriteColouring(os, col);
    } else if (*part) {
      const Graph g = ReadGraphFile(part_graph);
      const Graph gamma = part_gamma.empty() ? g : ReadGraphFile(part_gamma);
      ClusterPartitionOptions po;
      po.regular.seed = glob.seed;
      const ClusterPartitionReport rep =
          BuildClusterPartition(g, gamma, part_k, part_r0, part_eps, part_d, part_p, po);
      WritePartition(os, rep.partition);
      json summary = {{"r", rep.partition.r},
                      {"v0", rep.partition.v0.size()},
                      {"G1", rep.g1_sizes},
                      {"G2_regular", rep.g2_regular},
                      {"G2_super", rep.g2_super},
                      {"G4_strict", rep.g4_gamma},
                      {"G4_fraction", rep.g4_fraction},
                      {"reduced_min_degree", rep.reduced_min_degree},
                      {"notes", rep.notes}};
      std::cerr << summary.dump() << '\n';
    } else if (*assign) {
      const Graph h = ReadGraphFile(as_h);
      const Labelling lab = LoadOrComputeLabelling(h, as_lab);
      const Colouring col = ProperColouring(h, as_k, lab);
      Graph reduced;
      IntegerPartition m;
      int r = as_r;
      if (!as_part.empty()) {
        std::ifstream in(as_part);
        if (!in) throw InvalidArgument("cannot open " + as_part);
        const ClusterPartition cp = ReadPartition(in);
        reduced = cp.reduced;
        r = cp.r;
        m = cp.sizes();
      } else {
        reduced = BackboneGraph(as_r, as_k);
        m.r = as_r;
        m.k = as_k;
        m.values.assign(static_cast<std::size_t>(as_r) * as_k, h.n() / (as_r * as_k));
        for (int i = 0; i < h.n() % (as_r * as_k); ++i) m.values[(i % as_r) * as_k + i / as_r] += 1;
      }
      const double beta = as_beta > 0.0 ? as_beta : std::max(1, lab.bandwidth) / static_cast<double>(h.n());
      const Assignment a = AssignH(h, lab, col, reduced, m, as_xi, beta);
      WriteAssignment(os, a, as_k);
      std::cerr << ToJson(VerifyAssignment(h, a, reduced, r, as_k, m, as_xi, lab, col, beta)).dump() << '\n';
    } else if (*embed) {
      const Graph h = ReadGraphFile(em_h);
      const Graph g = ReadGraphFile(em_g);
      EmbedOptions eo;
      eo.backtrack_budget = em_budget;
      eo.seed = glob.seed;
      eo.warnsdorff = em_warnsdorff;
      const EmbedResult res = GreedyEmbed(h, g, LoadOrComputeLabelling(h, em_lab), {}, eo);
      if (!res.ok()) {
        std::cerr << ToJson(*res.failure).dump() << '\n';
        return 1;
      }
      WriteEmbedding(os, *res.embedding);
      std::cerr << "embedded backtracks=" << res.backtracks << '\n';
    } else if (*adv) {
      const AdversaryInstance inst = BuildAdversarialInstance({adv_n, adv_p, adv_eps, glob.seed, adv_k, 32});
      const NonContainmentReport cert = VerifyNoFOnX(inst, glob.workers);
      os << AdversaryReportJson(inst, CheckEdgeRules(inst), cert).dump(2) << '\n';
      if (!adv_graph_out.empty()) WriteEdgeListFile(adv_graph_out, inst.g);
    } else if (*reg) {
      const Graph g = ReadGraphFile(reg_graph);
      const std::vector<int> X = ReadVertexSetFile(reg_x);
      const std::vector<int> Y = ReadVertexSetFile(reg_y);
      RegularityOptions ro;
      ro.seed = glob.seed;
      ro.trials = reg_trials;
      ro.fully = reg_fully;
      if (reg_mode == "exhaustive") ro.mode = SearchMode::kExhaustive;
      else if (reg_mode == "randomized") ro.mode = SearchMode::kRandomized;
      else if (reg_mode != "auto") throw InvalidArgument("unknown mode '" + reg_mode + "'");
      const PairParams pp{reg_eps, reg_d, reg_p};
      const RegularityVerdict v = reg_gamma.empty()
                                      ? TestLowerRegular(g, pp, X, Y, ro)
                                      : TestSuperRegular(g, ReadGraphFile(reg_gamma), pp, X, Y, ro);
      os << ToJson(v).dump(2) << '\n';
    } else if (*exp) {
      std::ifstream in(exp_spec);
      ExperimentSpec spec = ExperimentSpecFromJson(json::parse(in));
      if (app.get_option("--workers")->count() > 0) spec.workers = glob.workers;
      if (app.get_option("--seed")->count() > 0) spec.seed = glob.seed;
      const std::vector<RunRecord> records = RunResilienceSweep(spec);
      WriteSweepCsv(os, records);
      std::string sidecar = exp_sidecar;
      if (sidecar.empty() && !glob.out.empty() && glob.out != "-") sidecar = glob.out + ".json";
      if (!sidecar.empty()) {
        std::ofstream js(sidecar);
        js << SweepSidecar(records).dump(2) << '\n';
      }
      int embedded = 0;
      for (const auto& r : records) embedded += r.outcome == Outcome::kEmbedded;
      std::cerr << records.size() << " runs, " << embedded << " embedded\n";
    } else if (*conc) {
      const ConcentrationReport rep = ConcentrationCheck(conc_n, conc_p, conc_seeds, glob.seed);
      os << ToJson(rep).dump(2) << '\n';
      return rep.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
