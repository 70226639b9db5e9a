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

#ifndef SBLAB_ADVERSARY_HPP_
#define SBLAB_ADVERSARY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sblab/graph.hpp"
#include "sblab/rooted_search.hpp"

namespace sblab {

// Vertex ids of the gadget F: the clique 1..4, the hexagon a..f and r.
namespace fvertex {
inline constexpr int kOne = 0, kTwo = 1, kThree = 2, kFour = 3;
inline constexpr int kA = 4, kB = 5, kC = 6, kD = 7, kE = 8, kF = 9;
inline constexpr int kR = 10;
}  // namespace fvertex

// Eleven vertices, 36 edges: K4 on 1..4, hexagon a-b-c-d-e-f, 4 joined to the
// hexagon, 1 to b,c,e,f, 2 to a,c,d,f, 3 to a,b,d,e, and r to the hexagon.
Graph BuildF();

// Display names "1".."4", "a".."f", "r", then "5".."k" for F_k.
std::string FVertexName(int id);

struct FAnalysis {
  int chromatic_number = 0;
  std::int64_t four_colourings = 0;
  bool forced_classes = false;    // {1,a,d}, {2,b,e}, {3,c,f} in every 4-colouring
  bool k4_cover = false;          // every vertex but r lies in a K4; r in none
  bool r_neighbourhood_c6 = false;
  double seconds = 0.0;
};

// Exhaustive self-test of F; throws AssertionFailed naming the first failed
// property.
FAnalysis AnalyzeF();

// F plus vertices 5..k (ids 11..), each adjacent to every vertex except r.
Graph BuildFk(int k);

struct AdversaryParams {
  int n = 0;
  double p = 0.0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int k = 4;
  int max_retries = 32;
};

// Part labels used in AdversaryInstance::part.
inline constexpr int kPartX = 0, kPartY1 = 1, kPartY2 = 2, kPartZ0 = 3;  // Z_i is kPartZ0 + i

struct AdversaryInstance {
  AdversaryParams params;
  Graph gamma;
  Graph g;
  std::vector<int> X, Y1, Y2;
  std::vector<std::vector<int>> Z;  // k + 1 parts
  std::vector<int> part;            // per vertex
  int attempts = 0;

  // Whether an edge between parts a and b is allowed in g.
  static bool Permitted(int a, int b, int k);
};

// |X| = ceil(eps / p), gamma = G(n, p), Y = N_gamma(X) \ X split into equal
// random halves, the rest into k + 1 random parts Z_i; g keeps X-Y, Y1-Y2,
// Y1-(Z\Z1), Y2-(Z\Z2) and Z_i-Z_j edges of gamma. Resamples while |Y| > 2 eps n
// or some vertex of X has more than log n neighbours in X; throws
// RetriesExhausted after max_retries attempts.
AdversaryInstance BuildAdversarialInstance(const AdversaryParams& params);

struct NonContainmentReport {
  bool certified = false;  // every rooted search completed without a copy
  int searches = 0;
  int copies_found = 0;
  int incomplete = 0;
  std::int64_t nodes = 0;
  std::vector<std::pair<int, int>> found_at;  // (x, pattern vertex)
  double seconds = 0.0;
};

// Runs FindRootedCopy(graph, pattern, w, x) for every x in X and every pattern
// vertex w, over `workers` threads.
NonContainmentReport VerifyNoPatternAt(const Graph& graph, const Graph& pattern, const std::vector<int>& X,
                                       int workers = 1, const RootedSearchOptions& opts = {});
NonContainmentReport VerifyNoFOnX(const AdversaryInstance& inst, int workers = 1,
                                  const RootedSearchOptions& opts = {});

struct EdgeRuleReport {
  bool sound = false;     // every g-edge permitted and present in gamma
  bool complete = false;  // every permitted gamma-edge present in g
  std::vector<std::int64_t> counts;  // per rule: X-Y, Y1-Y2, Y1-Z, Y2-Z, Z-Z
};

EdgeRuleReport CheckEdgeRules(const AdversaryInstance& inst);

struct ClearingStat {
  int vertex = -1;
  int degree = 0;
  std::int64_t deleted = 0;
  double fraction = 0.0;  // deleted / C(degree, 2)
};

struct ClearingResult {
  Graph g;
  std::int64_t deleted = 0;
  double overall_fraction = 0.0;  // deleted / |E(g0)|
  std::vector<ClearingStat> per_target;
};

// Deletes every edge of g0 inside N_{g0}(v) for each target v, so each
// target's neighbourhood becomes independent.
ClearingResult NeighbourhoodClearing(const Graph& gamma, const Graph& g0, const std::vector<int>& targets);

}  // namespace sblab

#endif  // SBLAB_ADVERSARY_HPP_
