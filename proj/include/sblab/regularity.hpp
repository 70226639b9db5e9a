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

#ifndef SBLAB_REGULARITY_HPP_
#define SBLAB_REGULARITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sblab/graph.hpp"

namespace sblab {

struct PairParams {
  double eps = 0.1;
  double d = 0.0;
  double p = 1.0;

  // Throws InvalidArgument outside 0 < eps < 1, 0 <= d <= 1, 0 < p <= 1.
  void Validate() const;
};

enum class VerdictKind { kVerified, kWitness, kProbablyRegular };

const char* ToString(VerdictKind kind);

struct RegularityVerdict {
  VerdictKind kind = VerdictKind::kVerified;
  // Subset witness (X', Y'), empty when the witness is a single vertex.
  std::vector<int> witness_x;
  std::vector<int> witness_y;
  double witness_density = 0.0;
  // Super-regularity degree witness.
  std::optional<int> witness_vertex;
  int trials = 0;

  bool has_witness() const { return kind == VerdictKind::kWitness; }
};

enum class SearchMode { kAuto, kExhaustive, kRandomized };

struct RegularityOptions {
  SearchMode mode = SearchMode::kAuto;
  int trials = 2000;
  std::uint64_t seed = 0x5eed;
  // Tests the two-sided notion: some d' >= d has |d(X',Y') - d'| <= eps for
  // every qualifying pair.
  bool fully = false;
};

inline constexpr int kExhaustiveSideCap = 16;

// e(X,Y) / (p |X| |Y|). Throws InvalidArgument on empty or overlapping sides
// or p <= 0.
double PDensity(const Graph& g, double p, std::span<const int> X, std::span<const int> Y);

// Smallest admissible subset size ceil(eps * size), at least 1.
int MinSubsetSize(double eps, int size);

RegularityVerdict TestLowerRegular(const Graph& g, const PairParams& pp, std::span<const int> X,
                                   std::span<const int> Y, const RegularityOptions& opts = {});

// Lower-regularity plus, for every x in X,
// deg_g(x,Y) >= (d - eps) * max(p|Y|, deg_gamma(x,Y) / 2), and symmetrically
// for Y. The first failing vertex is reported.
RegularityVerdict TestSuperRegular(const Graph& g, const Graph& gamma, const PairParams& pp,
                                   std::span<const int> X, std::span<const int> Y,
                                   const RegularityOptions& opts = {});

struct PartitionOptions {
  int max_parts = 64;
  int max_rounds = 8;
  int pair_trials = 400;
  bool fully = false;
  std::uint64_t seed = 1;
};

struct RawPartition {
  std::vector<std::vector<int>> parts;
  std::vector<int> exceptional;
  // Pairs (a, b), a < b, whose p-density is at least d and no witness was found.
  std::vector<std::pair<int, int>> regular_dense_pairs;
  std::vector<std::pair<int, int>> witness_pairs;
  double witness_fraction = 0.0;
  Graph reduced;
  int reduced_min_degree = 0;
  double alpha = 0.0;         // delta(G) / (p n)
  double degree_bound = 0.0;  // (alpha - d - eps) |V(R)|
  int rounds = 0;

  int r() const { return static_cast<int>(parts.size()); }
};

// Heuristic regular equipartition. Starts from a seeded random equipartition
// into r0 parts and refines every part by its degrees into witness sets until
// the fraction of dense pairs carrying a witness is at most eps. A pair counts
// as irregular when its p-density is at least d and a witness is found.
// Throws PartitionBudgetExceeded when refinement would pass max_parts.
RawPartition BuildRegularPartition(const Graph& g, double p, double eps, double d, int r0,
                                   const PartitionOptions& opts = {});

enum class InheritanceMode { kOneSided, kTwoSided };

struct InheritanceStats {
  int tested = 0;
  int failing = 0;
  std::vector<int> failing_vertices;
  double bound = 0.0;
};

// For each z in V(gamma) tests (X ∩ N_gamma(z), Y), or both sides restricted,
// and counts the z for which a witness is found. `bound` is
// C/p * log(e n / |X|) one-sided and C * max(p^-2, log(e n / |X|) / p)
// two-sided.
InheritanceStats InheritanceExperiment(const Graph& g, const Graph& gamma, std::span<const int> X,
                                       std::span<const int> Y, const PairParams& pp,
                                       InheritanceMode mode, double C,
                                       const RegularityOptions& opts = {});

}  // namespace sblab

#endif  // SBLAB_REGULARITY_HPP_
