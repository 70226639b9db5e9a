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

#ifndef SBLAB_EMBEDDER_HPP_
#define SBLAB_EMBEDDER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/graph.hpp"
#include "sblab/partitioner.hpp"

namespace sblab {

// Partial injective map V(H) -> V(G); -1 marks unmapped vertices.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(int h_order) : map_(h_order, -1) {}

  int h_order() const { return static_cast<int>(map_.size()); }
  int operator[](int y) const { return map_[y]; }
  bool mapped(int y) const { return map_[y] >= 0; }
  void set(int y, int x) { map_[y] = x; }
  void unset(int y) { map_[y] = -1; }
  const std::vector<int>& raw() const { return map_; }

  std::vector<int> domain() const;
  std::vector<int> image() const;
  int size() const;
  bool is_total() const { return size() == h_order(); }

 private:
  std::vector<int> map_;
};

// True iff injective on its domain and every H-edge with both ends mapped
// goes to a G-edge; with require_total the domain must be all of V(H).
bool VerifyEmbedding(const Graph& h, const Graph& g, const Embedding& e, bool require_total = false);

struct RestrictionRecord {
  int vertex = -1;          // y in V(H)
  std::vector<int> J;       // images of embedded H-neighbours of y
  std::vector<int> I;       // allowed images
  int target_cluster = -1;  // cluster index, -1 when unclustered
};

struct PreEmbedConfig {
  int s = 2;
  int separation = 6;  // minimum H-distance from a new root to Dom(phi)
  double mu = 0.5;     // S fraction when S is sampled
  std::uint64_t seed = 1;
  // Minimum degree of the core G' inside G[(S + v) \ Im(phi)]; 0 keeps all.
  int core_min_degree = 0;
  // Candidate roots in preference order; empty means 0..n-1.
  std::vector<int> root_order;
  std::int64_t ball_budget = 100000;
  // Distinct roots tried per bad vertex before giving up.
  int root_attempts = 16;
};

struct PreEmbedStep {
  int v = -1;                     // bad vertex covered at this step
  int score = 0;                  // |N_G(v) ∩ S ∩ Im(phi)| at selection
  std::vector<int> image_before;  // Im(phi) before the step
  int root = -1;
  int column = -1;  // backbone column supplying q_1..q_k, -1 without clusters
};

struct PreEmbedResult {
  Embedding embedding;
  std::vector<RestrictionRecord> records;
  std::vector<PreEmbedStep> trace;
};

// Uniform seeded sample of round(mu n) vertices, ascending.
std::vector<int> SampleS(int n, double mu, std::uint64_t seed);

// Covers every vertex of v0 by embedding radius-s balls around roots of h with
// at most s neighbourhood colours, choosing at each step the bad vertex with
// most neighbours in S ∩ Im(phi) (lowest id on ties). Vertices at distance
// s + 1 get restriction records, disjoint from the final image; with a
// partition, the records target the column of K^k_r that maximises the
// smallest candidate set. Throws
// InvalidArgument if some v in v0 lacks an s-clique in N(v) ∩ S,
// NoEligibleRoot, or EmptyCandidates.
PreEmbedResult PreEmbed(const Graph& g, const Graph& h, std::span<const int> v0, std::span<const int> S,
                        const Colouring& col, const PreEmbedConfig& cfg,
                        const ClusterPartition* partition = nullptr);

struct FailureCert {
  int vertex = -1;  // first vertex whose candidate set emptied
  int depth = 0;    // embedded vertices at that moment
  std::int64_t backtracks = 0;
  std::string reason;
};

struct EmbedOptions {
  std::int64_t backtrack_budget = 100000;
  std::uint64_t seed = 1;
  bool warnsdorff = false;  // prefer candidates with fewest free neighbours
};

struct EmbedContext {
  // With both set, y may only go to cluster f(y).
  const Assignment* assignment = nullptr;
  const ClusterPartition* partition = nullptr;
  std::vector<RestrictionRecord> restrictions;
  const Embedding* initial = nullptr;  // kept fixed
};

struct EmbedResult {
  std::optional<Embedding> embedding;
  std::optional<FailureCert> failure;
  std::int64_t backtracks = 0;

  bool ok() const { return embedding.has_value(); }
};

// Constraint search over bitset candidate sets: the unembedded vertex with
// fewest candidates goes next (labelling order on ties), values are tried in
// seeded random order, and forward checking prunes neighbours. Chronological
// backtracking up to the budget.
EmbedResult GreedyEmbed(const Graph& h, const Graph& g, const Labelling& lab, const EmbedContext& ctx = {},
                        const EmbedOptions& opts = {});

}  // namespace sblab

#endif  // SBLAB_EMBEDDER_HPP_
