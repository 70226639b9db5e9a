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

#ifndef SBLAB_GRAPH_IO_HPP_
#define SBLAB_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "sblab/graph.hpp"

namespace sblab {

// Reads either the plain edge-list format
//   n m
//   u v        (m lines, 0-based)
// or DIMACS .col ("c" comments, "p edge n m", "e u v" with 1-based ids).
// The format is chosen from the first non-comment token.
Graph ReadGraph(std::istream& in);
Graph ReadGraphFile(const std::string& path);

void WriteEdgeList(std::ostream& out, const Graph& g);
void WriteEdgeListFile(const std::string& path, const Graph& g);

// Whitespace/comma separated vertex ids; '#' starts a comment.
std::vector<int> ReadVertexSet(std::istream& in);
std::vector<int> ReadVertexSetFile(const std::string& path);

}  // namespace sblab

#endif  // SBLAB_GRAPH_IO_HPP_
