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

#ifndef SBLAB_COLOURING_HPP_
#define SBLAB_COLOURING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sblab/bandwidth.hpp"
#include "sblab/graph.hpp"

namespace sblab {

// Colours live in {0, ..., k}; colour 0 is the "zero" colour of zero-free
// colourings and is used last by the constructive routines.
struct Colouring {
  std::vector<int> colour;
  int k = 0;
};

// First monochromatic edge, if any.
std::optional<Edge> FindMonochromaticEdge(const Graph& h, const Colouring& col);
bool IsProperColouring(const Graph& h, const Colouring& col);

// Greedy in labelling order, then DSATUR, then exact search. The exact stage is
// unbounded for n <= 20 and limited to `node_budget` search nodes above that.
// Throws ColouringNotFound if no colouring with colours {0..k} is produced.
Colouring ProperColouring(const Graph& h, int k, const Labelling& lab,
                          std::int64_t node_budget = 2'000'000);

// Exact chromatic number by iterated k-colourability search (small graphs).
int ChromaticNumber(const Graph& h);

// Visits every proper colouring with colours {0..q-1}; the visitor returns
// false to stop early. Returns the number visited.
std::int64_t EnumerateProperColourings(const Graph& h, int q,
                                       const std::function<bool(const std::vector<int>&)>& visit);

int NeighbourhoodColourCount(const Graph& h, const Colouring& col, int v);

struct BlockDecomposition {
  int block_size = 0;
  int block_count = 0;
  std::vector<int> zero_blocks;  // ascending

  // Block index of a labelling position.
  int block_of(int position) const { return position / block_size; }
};

// Blocks of floor(4*k*beta*n) consecutive positions; the last may be short.
// Throws InvalidArgument when 4*k*beta*n < 1.
BlockDecomposition DecomposeBlocks(const Colouring& col, const Labelling& lab, double beta, int k);

// True iff every window of z consecutive blocks has at most one block meeting
// colour 0. A trailing short block counts as an ordinary block.
bool CheckZeroFree(const Colouring& col, const Labelling& lab, int z, double beta, int k);
bool CheckZeroFree(const BlockDecomposition& blocks, int z);

}  // namespace sblab

#endif  // SBLAB_COLOURING_HPP_
