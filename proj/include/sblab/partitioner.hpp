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

#ifndef SBLAB_PARTITIONER_HPP_
#define SBLAB_PARTITIONER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sblab/backbone.hpp"
#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/graph.hpp"
#include "sblab/regularity.hpp"

namespace sblab {

// Exceptional set plus clusters V_{i,j} indexed by ClusterIndex(i, j, k).
struct ClusterPartition {
  int r = 0;
  int k = 0;
  std::vector<int> v0;
  std::vector<std::vector<int>> clusters;
  Graph reduced;  // on r * k cluster indices
  PairParams params;

  std::vector<int>& at(int i, int j) { return clusters[ClusterIndex(i, j, k)]; }
  const std::vector<int>& at(int i, int j) const { return clusters[ClusterIndex(i, j, k)]; }
  IntegerPartition sizes() const;
  // Cluster index per vertex, -1 for v0.
  std::vector<int> Membership(int n) const;
  // Throws InvalidArgument unless clusters and v0 partition [0, n), sizes are
  // k-equitable and K^k_r, B^k_r are subgraphs of the reduced graph.
  void Validate(int n) const;
};

struct ClusterPartitionOptions {
  PartitionOptions regular;
  // Gamma-degree deviations beyond max(eps, sigmas * sd) exile a vertex; sd is
  // the binomial standard deviation of the expected degree.
  double gamma_sigmas = 4.0;
  // Minimum-degree slack gamma in delta(g) >= ((k-1)/k + gamma) p n, used only
  // for the warning.
  double gamma_slack = 0.0;
  int grouping_node_budget = 1'000'000;
  int check_trials = 200;
};

struct ClusterPartitionReport {
  ClusterPartition partition;
  bool g1_sizes = false;
  bool g2_regular = false;  // no witness on any reduced-graph pair
  bool g2_super = false;    // super-regular on every K^k_r pair
  bool g4_gamma = false;    // strict (1 +- eps) p |V_{i,j}| for all v, clusters
  double g4_fraction = 0.0; // fraction of (vertex, cluster) pairs within tolerance
  int exiled = 0;           // vertices moved to v0 after grouping
  double witness_fraction = 0.0;
  int reduced_min_degree = 0;
  bool min_degree_warning = false;
  std::vector<std::string> notes;
};

// Regular partition into r0 * k parts (refined by doubling), grouped into
// backbone columns by backtracking so that K^k_r and B^k_r lie in the reduced
// graph; vertices failing their column's super-regular degree bound or the
// Gamma-degree balance move to v0. Throws ColumnGroupingFailed.
ClusterPartitionReport BuildClusterPartition(const Graph& g, const Graph& gamma, int k, int r0, double eps,
                                             double d, double p, const ClusterPartitionOptions& opts = {});

struct Assignment {
  std::vector<int> f;        // H vertex -> cluster index
  std::vector<int> special;  // X, ascending
};

struct AssignmentReport {
  bool h1 = false, h2 = false, h3 = false, h4 = false, h5 = false;
  std::vector<std::string> violations;

  bool all() const { return h1 && h2 && h3 && h4 && h5; }
  // First failing item name ("H1".."H5"), empty when all hold.
  std::string first_failure() const;
};

AssignmentReport VerifyAssignment(const Graph& h, const Assignment& a, const Graph& reduced, int r, int k,
                                  const IntegerPartition& m, double xi, const Labelling& lab,
                                  const Colouring& col, double beta);
AssignmentReport VerifyAssignment(const Graph& h, const Assignment& a, const ClusterPartition& part,
                                  const IntegerPartition& m, double xi, const Labelling& lab,
                                  const Colouring& col, double beta);

// Block scan over the labelling: colour c in {1..k} goes to (i, c-1) for the
// current column i; the column advances at a block boundary once the running
// total reaches the cumulative column target less half a block, never next to
// a block containing colour 0 and never inside the first sqrt(beta) n
// positions. Colour-0 vertices go to the cluster z_i adjacent to all of column
// i. X is exactly the set of vertices violating the two-step locality rule.
// Throws AssignmentFailed naming the first unmet item.
Assignment AssignH(const Graph& h, const Labelling& lab, const Colouring& col, const Graph& reduced,
                   const IntegerPartition& m, double xi, double beta);

struct RebalanceResult {
  ClusterPartition partition;
  int moves = 0;
  std::vector<int> symmetric_difference;  // per cluster index
  std::vector<int> touched;               // cluster indices
  int retested_pairs = 0;
  int retest_witnesses = 0;
};

// Moves vertices from clusters above target to clusters below, each time the
// vertex with most g-neighbours in the destination. v0 is never touched.
// Throws BudgetExceeded when a cluster's symmetric difference would pass
// budget * n, InvalidArgument when totals differ.
RebalanceResult Rebalance(const Graph& g, const ClusterPartition& part, const IntegerPartition& targets,
                          double budget, const RegularityOptions& retest = {});

}  // namespace sblab

#endif  // SBLAB_PARTITIONER_HPP_
