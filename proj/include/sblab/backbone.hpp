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

#ifndef SBLAB_BACKBONE_HPP_
#define SBLAB_BACKBONE_HPP_

#include <cstdint>
#include <vector>

#include "sblab/graph.hpp"

namespace sblab {

// Cluster (i, j) of [r] x [k] is vertex i * k + j; both indices are 0-based.
// Column i is the set {(i, 0), ..., (i, k-1)}.
inline int ClusterIndex(int i, int j, int k) { return i * k + j; }

// Edge (i,j)-(i',j') iff |i - i'| <= 1 and j != j'.
Graph BackboneGraph(int r, int k);
// r disjoint copies of K_k, one per column.
Graph KkrGraph(int r, int k);

// Row-major r x k matrix of non-negative integers.
struct IntegerPartition {
  int r = 0;
  int k = 0;
  std::vector<int> values;

  IntegerPartition() = default;
  IntegerPartition(int r, int k, int fill = 0) : r(r), k(k), values(static_cast<std::size_t>(r) * k, fill) {}

  int& at(int i, int j) { return values[static_cast<std::size_t>(i) * k + j]; }
  int at(int i, int j) const { return values[static_cast<std::size_t>(i) * k + j]; }
  std::int64_t total() const;
  // |n_{i,j} - n_{i,j'}| <= 1 within every column i.
  bool is_k_equitable() const;
};

// Integer targets m_{i,j} within 1 of |V_{i,j}| + v0 / (k r), k-equitable and
// summing to the full total. Requires k-equitable input sizes.
IntegerPartition KEquitableTargets(const IntegerPartition& cluster_sizes, int v0_size);

// A k-clique of R with a bijective labelling; by_label[j] holds the vertex
// labelled j (0-based labels).
struct LabelledClique {
  std::vector<int> by_label;

  int k() const { return static_cast<int>(by_label.size()); }
  friend bool operator==(const LabelledClique&, const LabelledClique&) = default;
};

bool IsLabelledClique(const Graph& R, const LabelledClique& z);

// Every cluster of `next` adjacent to every differently-labelled cluster of `prev`.
bool IsCliqueStep(const Graph& R, const LabelledClique& prev, const LabelledClique& next);

// Direct check that every k-subset of V(R) has a common neighbour.
bool AllKSetsHaveCommonNeighbour(const Graph& R, int k);

inline int CliqueWalkLength(int k) { return k * (k + 1) / 2; }

// Sequence of exactly k(k+1)/2 labelled cliques from start to end in which
// consecutive cliques satisfy IsCliqueStep. Common neighbours are taken with
// the lowest id. Throws NoCommonNeighbour when no such walk is found.
std::vector<LabelledClique> CliqueWalk(const Graph& R, const LabelledClique& start,
                                       const LabelledClique& end, int k);

bool VerifyCliqueWalk(const Graph& R, const std::vector<LabelledClique>& walk,
                      const LabelledClique& start, const LabelledClique& end);

}  // namespace sblab

#endif  // SBLAB_BACKBONE_HPP_
