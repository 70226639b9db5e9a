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

#ifndef SBLAB_BANDWIDTH_HPP_
#define SBLAB_BANDWIDTH_HPP_

#include <vector>

#include "sblab/graph.hpp"

namespace sblab {

// A bijection V -> [0, n) together with its realised bandwidth,
// max |position(u) - position(v)| over edges uv.
struct Labelling {
  std::vector<int> position;   // vertex -> position
  std::vector<int> vertex_at;  // position -> vertex
  int bandwidth = 0;

  int n() const { return static_cast<int>(position.size()); }

  // `order` lists vertices by increasing position. Throws InvalidArgument if it
  // is not a permutation of V(g).
  static Labelling FromOrder(const Graph& g, std::vector<int> order);
  static Labelling Identity(const Graph& g);
};

// Recomputes max stretch of `order` (position -> vertex) over the edges of g.
int LabellingBandwidth(const Graph& g, const std::vector<int>& position);

struct BandwidthResult {
  int bandwidth = 0;
  Labelling labelling;
};

inline constexpr int kExactBandwidthMaxVertices = 12;

// Branch and bound over orderings. Throws SizeError above 12 vertices.
BandwidthResult ExactBandwidth(const Graph& g);

// Reverse Cuthill-McKee per connected component, trying several start
// vertices and keeping the best; components are laid out consecutively.
Labelling HeuristicLabelling(const Graph& g);

}  // namespace sblab

#endif  // SBLAB_BANDWIDTH_HPP_
