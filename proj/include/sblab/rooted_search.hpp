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

#ifndef SBLAB_ROOTED_SEARCH_HPP_
#define SBLAB_ROOTED_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "sblab/graph.hpp"

namespace sblab {

inline constexpr int kRootedPatternMaxVertices = 16;

struct RootedSearchOptions {
  std::int64_t node_budget = -1;  // negative means unbounded
  bool clique_bound = true;
};

struct RootedSearchResult {
  std::optional<std::vector<int>> mapping;  // pattern vertex -> g vertex
  bool complete = true;  // false when the node budget stopped the search
  std::int64_t nodes = 0;

  bool found() const { return mapping.has_value(); }
  // Absence is proved only by a complete search.
  bool proved_absent() const { return !mapping && complete; }
};

// Injective edge-preserving map of `pattern` into g with root -> anchor.
// Backtracking over bitset domains with forward checking, arc consistency and
// a colouring bound on the images of pattern cliques. Throws SizeError for
// patterns above 16 vertices.
RootedSearchResult FindRootedCopy(const Graph& g, const Graph& pattern, int root, int anchor,
                                  const RootedSearchOptions& opts = {});

// Maximal cliques of a small graph (Bron-Kerbosch with pivoting).
std::vector<std::vector<int>> MaximalCliques(const Graph& g);

}  // namespace sblab

#endif  // SBLAB_ROOTED_SEARCH_HPP_
