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

#include "sblab/serialize.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sblab/errors.hpp"

namespace sblab {
namespace {

// Splits non-empty, non-comment CSV lines into integer fields. A first row
// that does not start with a digit or '-' is treated as the column header.
std::vector<std::vector<long long>> ReadIntRows(std::istream& is, std::size_t width, std::string* comment) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  bool first = true;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comment && comment->empty()) *comment = line.substr(1);
      continue;
    }
    if (first && !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-')) {
      first = false;
      continue;
    }
    first = false;
    std::vector<long long> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + cell + "'");
      }
    }
    if (row.size() != width)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) + " fields");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void WriteVertexValues(std::ostream& os, const std::vector<int>& values) {
  os << "vertex,value\n";
  for (std::size_t v = 0; v < values.size(); ++v) os << v << ',' << values[v] << '\n';
}

std::vector<int> ReadVertexValues(std::istream& is) {
  const auto rows = ReadIntRows(is, 2, nullptr);
  std::vector<int> values(rows.size(), 0);
  std::vector<char> seen(rows.size(), 0);
  for (const auto& row : rows) {
    if (row[0] < 0 || row[0] >= static_cast<long long>(rows.size()) || seen[row[0]])
      throw ParseError("vertex ids must cover 0..n-1 exactly once");
    seen[row[0]] = 1;
    values[row[0]] = static_cast<int>(row[1]);
  }
  return values;
}

void WriteLabelling(std::ostream& os, const Labelling& lab) { WriteVertexValues(os, lab.position); }

Labelling ReadLabelling(std::istream& is, const Graph& g) {
  const std::vector<int> position = ReadVertexValues(is);
  if (static_cast<int>(position.size()) != g.n()) throw ParseError("labelling size differs from graph order");
  std::vector<int> order(position.size(), -1);
  for (std::size_t v = 0; v < position.size(); ++v) {
    if (position[v] < 0 || position[v] >= g.n() || order[position[v]] != -1)
      throw ParseError("labelling is not a permutation");
    order[position[v]] = static_cast<int>(v);
  }
  return Labelling::FromOrder(g, std::move(order));
}

void WriteColouring(std::ostream& os, const Colouring& col) { WriteVertexValues(os, col.colour); }

Colouring ReadColouring(std::istream& is, int k) {
  Colouring col{ReadVertexValues(is), k};
  for (int c : col.colour)
    if (c < 0 || c > k) throw ParseError("colour outside 0..k");
  return col;
}

void WritePartition(std::ostream& os, const ClusterPartition& part) {
  json header = {{"r", part.r},
                 {"k", part.k},
                 {"eps", part.params.eps},
                 {"d", part.params.d},
                 {"p", part.params.p}};
  json edges = json::array();
  for (const Edge& e : part.reduced.edges()) edges.push_back({e.u, e.v});
  header["reduced_edges"] = std::move(edges);
  os << "# " << header.dump() << '\n' << "vertex,i,j\n";
  int n = static_cast<int>(part.v0.size());
  for (const auto& c : part.clusters) n += static_cast<int>(c.size());
  std::vector<int> member = part.Membership(n);
  for (int v = 0; v < n; ++v) {
    if (member[v] < 0)
      os << v << ",-1,-1\n";
    else
      os << v << ',' << member[v] / part.k << ',' << member[v] % part.k << '\n';
  }
}

ClusterPartition ReadPartition(std::istream& is) {
  std::string comment;
  const auto rows = ReadIntRows(is, 3, &comment);
  json header;
  try {
    header = json::parse(comment);
  } catch (const json::exception& e) {
    throw ParseError(std::string("partition header: ") + e.what());
  }
  ClusterPartition part;
  try {
    part.r = header.at("r").get<int>();
    part.k = header.at("k").get<int>();
    part.params = {header.at("eps").get<double>(), header.at("d").get<double>(), header.at("p").get<double>()};
    std::vector<Edge> edges;
    for (const auto& e : header.at("reduced_edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    part.reduced = Graph::FromEdges(part.r * part.k, edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("partition header: ") + e.what());
  }
  if (part.r < 1 || part.k < 1) throw ParseError("partition header needs r, k >= 1");
  part.clusters.assign(static_cast<std::size_t>(part.r) * part.k, {});
  for (const auto& row : rows) {
    const int v = static_cast<int>(row[0]);
    if (row[1] == -1 && row[2] == -1) {
      part.v0.push_back(v);
    } else {
      if (row[1] < 0 || row[1] >= part.r || row[2] < 0 || row[2] >= part.k)
        throw ParseError("cluster coordinates out of range for vertex " + std::to_string(v));
      part.at(static_cast<int>(row[1]), static_cast<int>(row[2])).push_back(v);
    }
  }
  part.Validate(static_cast<int>(rows.size()));
  return part;
}

void WriteAssignment(std::ostream& os, const Assignment& a, int k) {
  std::vector<char> special(a.f.size(), 0);
  for (int x : a.special) special[x] = 1;
  os << "vertex,i,j,special\n";
  for (std::size_t y = 0; y < a.f.size(); ++y)
    os << y << ',' << a.f[y] / k << ',' << a.f[y] % k << ',' << int(special[y]) << '\n';
}

void WriteEmbedding(std::ostream& os, const Embedding& e) {
  os << "h_vertex,g_vertex\n";
  for (int y = 0; y < e.h_order(); ++y)
    if (e.mapped(y)) os << y << ',' << e[y] << '\n';
}

Embedding ReadEmbedding(std::istream& is, int h_order) {
  Embedding e(h_order);
  for (const auto& row : ReadIntRows(is, 2, nullptr)) {
    if (row[0] < 0 || row[0] >= h_order || row[1] < 0) throw ParseError("embedding row out of range");
    if (e.mapped(static_cast<int>(row[0]))) throw ParseError("vertex mapped twice");
    e.set(static_cast<int>(row[0]), static_cast<int>(row[1]));
  }
  return e;
}

json ToJson(const FailureCert& cert) {
  return {{"vertex", cert.vertex}, {"depth", cert.depth}, {"backtracks", cert.backtracks}, {"reason", cert.reason}};
}

json ToJson(const RegularityVerdict& v) {
  json j = {{"kind", ToString(v.kind)},
            {"witness_x_size", v.witness_x.size()},
            {"witness_y_size", v.witness_y.size()},
            {"trials", v.trials}};
  if (v.has_witness()) {
    j["witness_density"] = v.witness_density;
    j["witness_x"] = v.witness_x;
    j["witness_y"] = v.witness_y;
  }
  if (v.witness_vertex) j["witness_vertex"] = *v.witness_vertex;
  return j;
}

json ToJson(const AssignmentReport& r) {
  return {{"H1", r.h1}, {"H2", r.h2}, {"H3", r.h3}, {"H4", r.h4}, {"H5", r.h5}, {"violations", r.violations}};
}

json ToJson(const ConcentrationReport& r) {
  return {{"n", r.n},           {"p", r.p},         {"seeds", r.seeds},
          {"expected", r.expected}, {"mean", r.mean}, {"stddev", r.stddev},
          {"exceedances", r.exceedances}, {"empirical", r.empirical}, {"bound", r.bound},
          {"sigma", r.sigma},   {"pass", r.pass}};
}

json ToJson(const RunRecord& r) {
  json j = {{"index", r.index},
            {"n", r.n},
            {"p", r.p},
            {"k", r.k},
            {"s", r.s},
            {"adversary", r.adversary},
            {"pattern", r.pattern},
            {"alpha", r.alpha},
            {"replicate", r.replicate},
            {"seed", r.seed},
            {"outcome", ToString(r.outcome)},
            {"detail", r.detail},
            {"min_degree", r.min_degree},
            {"backtracks", r.backtracks},
            {"v0_size", r.v0_size},
            {"restriction_count", r.restriction_count},
            {"restriction_min", r.restriction_min}};
  if (r.cert) j["cert"] = ToJson(*r.cert);
  return j;
}

json AdversaryReportJson(const AdversaryInstance& inst, const EdgeRuleReport& rules,
                         const NonContainmentReport& cert) {
  json z = json::array();
  for (const auto& part : inst.Z) z.push_back(part.size());
  json found = json::array();
  for (const auto& [x, w] : cert.found_at) found.push_back({{"x", x}, {"pattern_vertex", w}});
  return {{"n", inst.params.n},
          {"p", inst.params.p},
          {"eps", inst.params.eps},
          {"k", inst.params.k},
          {"seed", inst.params.seed},
          {"attempts", inst.attempts},
          {"sizes", {{"X", inst.X.size()}, {"Y1", inst.Y1.size()}, {"Y2", inst.Y2.size()}, {"Z", z}}},
          {"edges", inst.g.edge_count()},
          {"min_degree", MinDegree(inst.g)},
          {"edge_rules",
           {{"sound", rules.sound},
            {"complete", rules.complete},
            {"X-Y", rules.counts.at(0)},
            {"Y1-Y2", rules.counts.at(1)},
            {"Y1-Z", rules.counts.at(2)},
            {"Y2-Z", rules.counts.at(3)},
            {"Z-Z", rules.counts.at(4)}}},
          {"certification",
           {{"certified", cert.certified},
            {"searches", cert.searches},
            {"copies_found", cert.copies_found},
            {"incomplete", cert.incomplete},
            {"nodes", cert.nodes},
            {"found_at", found},
            {"seconds", cert.seconds}}}};
}

ExperimentSpec ExperimentSpecFromJson(const json& j) {
  ExperimentSpec spec;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") value.get_to(spec.n);
      else if (key == "p") value.get_to(spec.p);
      else if (key == "k") value.get_to(spec.k);
      else if (key == "s") value.get_to(spec.s);
      else if (key == "adversary") value.get_to(spec.adversary);
      else if (key == "pattern") value.get_to(spec.pattern);
      else if (key == "alpha") value.get_to(spec.alpha);
      else if (key == "seeds") value.get_to(spec.seeds);
      else if (key == "seed") value.get_to(spec.seed);
      else if (key == "budget") value.get_to(spec.budget);
      else if (key == "pipeline") value.get_to(spec.pipeline);
      else if (key == "eps") value.get_to(spec.eps);
      else if (key == "reg_eps") value.get_to(spec.reg_eps);
      else if (key == "reg_d") value.get_to(spec.reg_d);
      else if (key == "workers") value.get_to(spec.workers);
      else throw InvalidArgument("unknown experiment key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  spec.Validate();
  return spec;
}

json SweepSidecar(const std::vector<RunRecord>& records) {
  json runs = json::array();
  for (const auto& r : records) runs.push_back(ToJson(r));
  return {{"runs", std::move(runs)}};
}

}  // namespace sblab
