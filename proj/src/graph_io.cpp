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

#include "sblab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sblab/errors.hpp"

namespace sblab {
namespace {

bool NextContentLine(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#' || line[pos] == 'c') continue;
    return true;
  }
  return false;
}

[[noreturn]] void Fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

Graph ReadDimacs(std::istream& in, std::istringstream& header, int line_no) {
  std::string p, kind;
  long long n = -1, m = -1;
  header >> p >> kind >> n >> m;
  if (!header || n < 0 || m < 0) Fail(line_no, "malformed DIMACS problem line");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::string line;
  while (NextContentLine(in, line, line_no)) {
    std::istringstream ls(line);
    std::string tag;
    long long u = 0, v = 0;
    ls >> tag >> u >> v;
    if (tag != "e" || !ls) Fail(line_no, "expected 'e u v'");
    if (u < 1 || v < 1 || u > n || v > n) Fail(line_no, "vertex id out of range");
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  try {
    return Graph::FromEdges(static_cast<int>(n), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Graph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!NextContentLine(in, line, line_no)) throw ParseError("empty graph file");
  std::istringstream header(line);
  if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == 'p') {
    return ReadDimacs(in, header, line_no);
  }
  long long n = -1, m = -1;
  header >> n >> m;
  if (!header || n < 0 || m < 0) Fail(line_no, "expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!NextContentLine(in, line, line_no)) Fail(line_no, "fewer edge lines than declared");
    std::istringstream ls(line);
    long long u = -1, v = -1;
    ls >> u >> v;
    if (!ls || u < 0 || v < 0 || u >= n || v >= n) Fail(line_no, "bad edge line");
    if (u == v) Fail(line_no, "self-loop");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (NextContentLine(in, line, line_no)) Fail(line_no, "more edge lines than declared");
  return Graph::FromEdges(static_cast<int>(n), edges);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadGraph(in);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void WriteEdgeListFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  WriteEdgeList(out, g);
}

std::vector<int> ReadVertexSet(std::istream& in) {
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) throw ParseError("negative vertex id in set file");
      out.push_back(static_cast<int>(v));
    }
    if (!ls.eof()) throw ParseError("non-numeric token in set file");
  }
  return out;
}

std::vector<int> ReadVertexSetFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadVertexSet(in);
}

}  // namespace sblab
