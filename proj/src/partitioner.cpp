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

#include "sblab/partitioner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sblab/errors.hpp"
#include "sblab/rng.hpp"

namespace sblab {

IntegerPartition ClusterPartition::sizes() const {
  IntegerPartition s(r, k);
  for (int c = 0; c < r * k; ++c) s.values[c] = static_cast<int>(clusters[c].size());
  return s;
}

std::vector<int> ClusterPartition::Membership(int n) const {
  std::vector<int> member(n, -1);
  for (int c = 0; c < static_cast<int>(clusters.size()); ++c)
    for (int v : clusters[c]) member[v] = c;
  return member;
}

void ClusterPartition::Validate(int n) const {
  if (static_cast<int>(clusters.size()) != r * k) throw InvalidArgument("cluster matrix has wrong shape");
  std::vector<char> seen(n, 0);
  auto mark = [&](int v) {
    if (v < 0 || v >= n) throw InvalidArgument("partition vertex out of range");
    if (seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " appears twice in the partition");
    seen[v] = 1;
  };
  for (int v : v0) mark(v);
  for (const auto& cluster : clusters)
    for (int v : cluster) mark(v);
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " is not covered by the partition");
  if (!sizes().is_k_equitable()) throw InvalidArgument("clusters are not k-equitable");
  if (reduced.n() != r * k) throw InvalidArgument("reduced graph has wrong order");
  if (!BackboneGraph(r, k).is_subgraph_of(reduced)) throw InvalidArgument("reduced graph misses a backbone edge");
}

namespace {

// Orders parts of the raw reduced graph into r labelled k-cliques such that
// consecutive columns carry every cross edge with distinct labels.
class ColumnGrouper {
 public:
  ColumnGrouper(const Graph& raw, int r, int k, int budget)
      : raw_(raw), r_(r), k_(k), budget_(budget), used_(raw.n(), 0) {}

  bool Run() { return Column(0); }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

 private:
  bool Column(int i) {
    if (i == r_) return true;
    columns_.emplace_back();
    if (Label(i, 0)) return true;
    columns_.pop_back();
    return false;
  }

  bool Label(int i, int j) {
    if (++nodes_ > budget_) return false;
    if (j == k_) return Column(i + 1);
    auto& col = columns_[i];
    for (int u = 0; u < raw_.n(); ++u) {
      if (used_[u]) continue;
      bool ok = true;
      for (int w : col)
        if (!raw_.has_edge(u, w)) ok = false;
      if (ok && i > 0) {
        const auto& prev = columns_[i - 1];
        for (int b = 0; b < k_ && ok; ++b)
          if (b != j && !raw_.has_edge(u, prev[b])) ok = false;
      }
      if (!ok) continue;
      used_[u] = 1;
      col.push_back(u);
      if (Label(i, j + 1)) return true;
      col.pop_back();
      used_[u] = 0;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const Graph& raw_;
  int r_, k_;
  int budget_;
  int nodes_ = 0;
  std::vector<char> used_;
  std::vector<std::vector<int>> columns_;
};

int DegreeInto(const Graph& g, int v, const Bitset& set) { return g.adjacency(v).and_count(set); }

}  // namespace

ClusterPartitionReport BuildClusterPartition(const Graph& g, const Graph& gamma, int k, int r0, double eps,
                                             double d, double p, const ClusterPartitionOptions& opts) {
  const int n = g.n();
  if (k < 1 || r0 < 1) throw InvalidArgument("k and r0 must be positive");
  if (gamma.n() != n || !g.is_subgraph_of(gamma)) throw InvalidArgument("g must be a spanning subgraph of gamma");
  ClusterPartitionReport report;
  if (MinDegree(g) < ((k - 1.0) / k + opts.gamma_slack) * p * n) {
    report.min_degree_warning = true;
    report.notes.push_back("minimum degree below ((k-1)/k + gamma) p n");
  }

  const RawPartition raw = BuildRegularPartition(g, p, eps, d, r0 * k, opts.regular);
  const int parts = raw.r();
  const int r = parts / k;
  ColumnGrouper grouper(raw.reduced, r, k, opts.grouping_node_budget);
  if (!grouper.Run()) {
    throw ColumnGroupingFailed("no backbone grouping of the reduced graph (min degree " +
                                   std::to_string(raw.reduced_min_degree) + " on " + std::to_string(parts) +
                                   " clusters)",
                               raw.reduced_min_degree);
  }

  ClusterPartition& part = report.partition;
  part.r = r;
  part.k = k;
  part.params = PairParams{eps, d, p};
  part.v0 = raw.exceptional;
  part.clusters.assign(r * k, {});
  std::vector<int> cluster_of_part(parts, -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) {
      const int src = grouper.columns()[i][j];
      cluster_of_part[src] = ClusterIndex(i, j, k);
      part.clusters[ClusterIndex(i, j, k)] = raw.parts[src];
    }
  std::vector<Edge> reduced_edges;
  for (const Edge& e : raw.reduced.edges()) {
    const int a = cluster_of_part[e.u], b = cluster_of_part[e.v];
    reduced_edges.push_back({std::min(a, b), std::max(a, b)});
  }
  part.reduced = Graph::FromEdges(r * k, reduced_edges);

  // Exile vertices failing their column's degree bound or Gamma balance.
  const int cells = r * k;
  std::vector<Bitset> sets;
  for (const auto& cluster : part.clusters) sets.push_back(Bitset::FromVector(n, cluster));
  std::int64_t balanced_pairs = 0, total_pairs = 0;
  std::vector<char> exile(n, 0);
  for (int c = 0; c < cells; ++c) {
    const int i = c / k, j = c % k;
    for (int v : part.clusters[c]) {
      bool bad = false;
      for (int j2 = 0; j2 < k; ++j2) {
        if (j2 == j) continue;
        const int other = ClusterIndex(i, j2, k);
        const double need = (d - eps) * std::max(p * part.clusters[other].size(),
                                                 DegreeInto(gamma, v, sets[other]) / 2.0);
        if (DegreeInto(g, v, sets[other]) < need) bad = true;
      }
      for (int c2 = 0; c2 < cells; ++c2) {
        const int base = static_cast<int>(part.clusters[c2].size()) - (c2 == c ? 1 : 0);
        const double expected = p * base;
        const double dev = std::abs(DegreeInto(gamma, v, sets[c2]) - expected);
        const double tol = std::max(eps * expected, opts.gamma_sigmas * std::sqrt(base * p * (1.0 - p)));
        ++total_pairs;
        if (dev <= tol) ++balanced_pairs;
        else bad = true;
      }
      if (bad) exile[v] = 1;
    }
  }
  report.g4_fraction = total_pairs > 0 ? static_cast<double>(balanced_pairs) / total_pairs : 1.0;
  for (auto& cluster : part.clusters) {
    auto it = std::stable_partition(cluster.begin(), cluster.end(), [&](int v) { return !exile[v]; });
    for (auto jt = it; jt != cluster.end(); ++jt) part.v0.push_back(*jt);
    report.exiled += static_cast<int>(cluster.end() - it);
    cluster.erase(it, cluster.end());
  }
  // Restore k-equitability by trimming the weakest members of large clusters.
  for (int i = 0; i < r; ++i) {
    std::size_t smallest = part.at(i, 0).size();
    for (int j = 1; j < k; ++j) smallest = std::min(smallest, part.at(i, j).size());
    Bitset column(n);
    for (int j = 0; j < k; ++j)
      for (int v : part.at(i, j)) column.set(v);
    for (int j = 0; j < k; ++j) {
      auto& cluster = part.at(i, j);
      while (cluster.size() > smallest + 1) {
        auto weakest = std::min_element(cluster.begin(), cluster.end(), [&](int a, int b) {
          return DegreeInto(g, a, column) < DegreeInto(g, b, column);
        });
        part.v0.push_back(*weakest);
        column.reset(*weakest);
        cluster.erase(weakest);
        ++report.exiled;
      }
    }
  }
  for (auto& cluster : part.clusters) std::sort(cluster.begin(), cluster.end());
  std::sort(part.v0.begin(), part.v0.end());
  part.Validate(n);

  report.g1_sizes = true;
  for (const auto& cluster : part.clusters) {
    const double size = static_cast<double>(cluster.size());
    if (size < n / (4.0 * cells) || size > 4.0 * n / cells) report.g1_sizes = false;
  }
  RegularityOptions ro;
  ro.trials = opts.check_trials;
  ro.seed = DeriveSeed(opts.regular.seed, 99);
  int witnesses = 0;
  for (const Edge& e : part.reduced.edges()) {
    if (part.clusters[e.u].empty() || part.clusters[e.v].empty()) {
      ++witnesses;
      continue;
    }
    if (TestLowerRegular(g, part.params, part.clusters[e.u], part.clusters[e.v], ro).has_witness()) ++witnesses;
  }
  report.g2_regular = witnesses == 0;
  report.witness_fraction = part.reduced.edge_count() > 0
                                ? static_cast<double>(witnesses) / part.reduced.edge_count()
                                : 0.0;
  report.g2_super = true;
  for (const Edge& e : KkrGraph(r, k).edges()) {
    if (part.clusters[e.u].empty() || part.clusters[e.v].empty() ||
        TestSuperRegular(g, gamma, part.params, part.clusters[e.u], part.clusters[e.v], ro).has_witness())
      report.g2_super = false;
  }
  // Strict balance after exile, for the clusters as finally built.
  report.g4_gamma = true;
  const auto member = part.Membership(n);
  std::vector<Bitset> final_sets;
  for (const auto& cluster : part.clusters) final_sets.push_back(Bitset::FromVector(n, cluster));
  for (int v = 0; v < n && report.g4_gamma; ++v) {
    if (member[v] < 0) continue;
    for (int c2 = 0; c2 < cells; ++c2) {
      const int base = static_cast<int>(part.clusters[c2].size()) - (c2 == member[v] ? 1 : 0);
      if (std::abs(DegreeInto(gamma, v, final_sets[c2]) - p * base) > eps * p * base) {
        report.g4_gamma = false;
        break;
      }
    }
  }
  report.reduced_min_degree = MinDegree(part.reduced);
  return report;
}

std::string AssignmentReport::first_failure() const {
  if (!h1) return "H1";
  if (!h2) return "H2";
  if (!h3) return "H3";
  if (!h4) return "H4";
  if (!h5) return "H5";
  return "";
}

AssignmentReport VerifyAssignment(const Graph& h, const Assignment& a, const Graph& reduced, int r, int k,
                                  const IntegerPartition& m, double xi, const Labelling& lab,
                                  const Colouring& col, double beta) {
  AssignmentReport rep;
  const int n = h.n();
  const int cells = r * k;
  auto note = [&](const std::string& item, const std::string& text) {
    if (rep.violations.size() < 32) rep.violations.push_back(item + ": " + text);
  };
  if (static_cast<int>(a.f.size()) != n) {
    note("H1", "mapping size differs from |V(H)|");
    return rep;
  }
  for (int v = 0; v < n; ++v) {
    if (a.f[v] < 0 || a.f[v] >= cells) {
      note("H1", "vertex " + std::to_string(v) + " mapped outside [r]x[k]");
      return rep;
    }
  }
  std::vector<char> special(n, 0);
  for (int x : a.special)
    if (x >= 0 && x < n) special[x] = 1;

  std::vector<int> count(cells, 0);
  for (int v = 0; v < n; ++v) ++count[a.f[v]];
  rep.h1 = m.r == r && m.k == k;
  for (int c = 0; c < cells && rep.h1; ++c) {
    if (std::abs(count[c] - m.values[c]) > xi * n) {
      rep.h1 = false;
      note("H1", "cluster (" + std::to_string(c / k) + "," + std::to_string(c % k) + ") has " +
                     std::to_string(count[c]) + " vertices, target " + std::to_string(m.values[c]));
    }
  }

  rep.h2 = a.special.size() <= xi * n;
  if (!rep.h2) note("H2", "|X| = " + std::to_string(a.special.size()));

  rep.h3 = true;
  for (const Edge& e : h.edges()) {
    if (!reduced.has_edge(a.f[e.u], a.f[e.v])) {
      rep.h3 = false;
      note("H3", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " maps to a non-edge");
      break;
    }
  }

  rep.h4 = true;
  for (int x = 0; x < n && rep.h4; ++x) {
    if (special[x]) continue;
    const int column = a.f[x] / k;
    for (int y : h.neighbours(x)) {
      bool ok = a.f[y] / k == column;
      for (int z : h.neighbours(y))
        if (a.f[z] / k != column) ok = false;
      if (!ok) {
        rep.h4 = false;
        note("H4", "non-special vertex " + std::to_string(x) + " reaches another column within two steps");
        break;
      }
    }
  }

  rep.h5 = true;
  const int head = static_cast<int>(std::floor(std::sqrt(beta) * n));
  for (int t = 0; t < std::min(head, n); ++t) {
    const int x = lab.vertex_at[t];
    const int c = col.colour[x];
    if (c < 1 || a.f[x] != ClusterIndex(0, c - 1, k)) {
      rep.h5 = false;
      note("H5", "vertex " + std::to_string(x) + " at position " + std::to_string(t) + " not mapped by colour");
      break;
    }
  }
  return rep;
}

AssignmentReport VerifyAssignment(const Graph& h, const Assignment& a, const ClusterPartition& part,
                                  const IntegerPartition& m, double xi, const Labelling& lab,
                                  const Colouring& col, double beta) {
  return VerifyAssignment(h, a, part.reduced, part.r, part.k, m, xi, lab, col, beta);
}

Assignment AssignH(const Graph& h, const Labelling& lab, const Colouring& col, const Graph& reduced,
                   const IntegerPartition& m, double xi, double beta) {
  const int n = h.n();
  const int r = m.r, k = m.k;
  if (reduced.n() != r * k) throw InvalidArgument("reduced graph order differs from r*k");
  if (lab.n() != n || static_cast<int>(col.colour.size()) != n) throw InvalidArgument("labelling/colouring size");
  if (col.k != k) throw InvalidArgument("colouring bound differs from k");
  if (lab.bandwidth > beta * n) throw AssignmentFailed("bandwidth", "labelling bandwidth exceeds beta n");
  if (!IsProperColouring(h, col)) throw AssignmentFailed("colouring", "colouring is not proper");
  if (!BackboneGraph(r, k).is_subgraph_of(reduced))
    throw AssignmentFailed("backbone", "reduced graph does not contain B^k_r");

  std::vector<int> z(r, -1);
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < r * k && z[i] < 0; ++c) {
      if (c / k == i) continue;
      bool all = true;
      for (int j = 0; j < k; ++j)
        if (!reduced.has_edge(c, ClusterIndex(i, j, k))) all = false;
      if (all) z[i] = c;
    }
  }
  // z_i is only needed to house colour-0 vertices.
  if (std::find(col.colour.begin(), col.colour.end(), 0) != col.colour.end())
    for (int i = 0; i < r; ++i)
      if (z[i] < 0) throw AssignmentFailed("z_i", "no cluster adjacent to all of column " + std::to_string(i));

  try {
    if (!CheckZeroFree(col, lab, static_cast<int>(std::ceil(10.0 / xi)), beta, k))
      throw AssignmentFailed("zero-free", "colour 0 meets two blocks within a window of 10/xi blocks");
  } catch (const InvalidArgument& e) {
    throw AssignmentFailed("blocks", e.what());
  }
  const int head = static_cast<int>(std::floor(std::sqrt(beta) * n));
  for (int t = 0; t < std::min(head, n); ++t)
    if (col.colour[lab.vertex_at[t]] == 0)
      throw AssignmentFailed("H5", "colour 0 inside the first sqrt(beta) n vertices");

  std::vector<std::int64_t> cumulative(r, 0);
  for (int i = 0; i < r; ++i) {
    std::int64_t column_total = 0;
    for (int j = 0; j < k; ++j) column_total += m.at(i, j);
    cumulative[i] = column_total + (i > 0 ? cumulative[i - 1] : 0);
  }

  // A column may start at position t unless t lies in the head or the switch
  // would separate a colour-0 vertex from one of its neighbours.
  const int bw = std::max(1, lab.bandwidth);
  std::vector<char> forbidden(n + 1, 0);
  for (int t = 0; t <= std::min(head, n); ++t) forbidden[t] = 1;
  for (int q = 0; q < n; ++q) {
    if (col.colour[lab.vertex_at[q]] != 0) continue;
    for (int t = std::max(0, q - bw + 1); t <= std::min(n, q + bw); ++t) forbidden[t] = 1;
  }
  // Column i ends at the allowed position closest to its cumulative target.
  std::vector<int> first(r, n);
  first[0] = 0;
  for (int i = 0; i + 1 < r; ++i) {
    int best = -1;
    for (int t = first[i] + 1; t < n; ++t) {
      if (forbidden[t]) continue;
      if (best < 0 || std::llabs(t - cumulative[i]) < std::llabs(best - cumulative[i])) best = t;
    }
    if (best < 0) break;
    first[i + 1] = best;
  }

  Assignment a;
  a.f.assign(n, -1);
  int column = 0;
  for (int t = 0; t < n; ++t) {
    while (column + 1 < r && first[column + 1] <= t) ++column;
    const int x = lab.vertex_at[t];
    const int c = col.colour[x];
    a.f[x] = c == 0 ? z[column] : ClusterIndex(column, c - 1, k);
  }

  // X: every vertex whose two-step neighbourhood leaves its column.
  for (int x = 0; x < n; ++x) {
    const int home = a.f[x] / k;
    bool violates = false;
    for (int y : h.neighbours(x)) {
      if (a.f[y] / k != home) violates = true;
      for (int w : h.neighbours(y))
        if (a.f[w] / k != home) violates = true;
      if (violates) break;
    }
    if (violates) a.special.push_back(x);
  }

  const AssignmentReport rep = VerifyAssignment(h, a, reduced, r, k, m, xi, lab, col, beta);
  if (!rep.all()) {
    const std::string item = rep.first_failure();
    std::string detail;
    for (const auto& v : rep.violations)
      if (v.rfind(item, 0) == 0) {
        detail = v;
        break;
      }
    throw AssignmentFailed(item, detail);
  }
  return a;
}

RebalanceResult Rebalance(const Graph& g, const ClusterPartition& part, const IntegerPartition& targets,
                          double budget, const RegularityOptions& retest) {
  const int n = g.n();
  const int cells = part.r * part.k;
  if (targets.r != part.r || targets.k != part.k) throw InvalidArgument("target matrix shape differs");
  if (targets.total() != part.sizes().total()) throw InvalidArgument("target total differs from cluster total");
  RebalanceResult out;
  out.partition = part;
  auto& clusters = out.partition.clusters;
  out.symmetric_difference.assign(cells, 0);
  std::vector<Bitset> sets;
  for (const auto& cluster : clusters) sets.push_back(Bitset::FromVector(n, cluster));
  std::vector<char> moved(n, 0);
  const double allowed = budget * n;

  auto deficit = [&](int c) { return targets.values[c] - static_cast<int>(clusters[c].size()); };
  for (;;) {
    int dst = -1;
    for (int c = 0; c < cells; ++c)
      if (deficit(c) > 0 && (dst < 0 || deficit(c) > deficit(dst))) dst = c;
    if (dst < 0) break;
    int best_v = -1, best_src = -1, best_deg = -1;
    for (int c = 0; c < cells; ++c) {
      if (deficit(c) >= 0) continue;
      for (int v : clusters[c]) {
        if (moved[v]) continue;
        const int deg = g.adjacency(v).and_count(sets[dst]);
        if (deg > best_deg) {
          best_deg = deg;
          best_v = v;
          best_src = c;
        }
      }
    }
    if (best_v < 0) throw Error("rebalance: no movable vertex left");
    for (int c : {best_src, dst}) {
      if (out.symmetric_difference[c] + 1 > allowed)
        throw BudgetExceeded(c / part.k, c % part.k, out.symmetric_difference[c] + 1, allowed);
    }
    auto& src_cluster = clusters[best_src];
    src_cluster.erase(std::find(src_cluster.begin(), src_cluster.end(), best_v));
    sets[best_src].reset(best_v);
    clusters[dst].push_back(best_v);
    sets[dst].set(best_v);
    moved[best_v] = 1;
    ++out.symmetric_difference[best_src];
    ++out.symmetric_difference[dst];
    ++out.moves;
  }
  for (auto& cluster : clusters) std::sort(cluster.begin(), cluster.end());
  for (int c = 0; c < cells; ++c)
    if (out.symmetric_difference[c] > 0) out.touched.push_back(c);

  std::vector<char> touched(cells, 0);
  for (int c : out.touched) touched[c] = 1;
  for (const Edge& e : out.partition.reduced.edges()) {
    if (!touched[e.u] && !touched[e.v]) continue;
    if (clusters[e.u].empty() || clusters[e.v].empty()) continue;
    ++out.retested_pairs;
    if (TestLowerRegular(g, out.partition.params, clusters[e.u], clusters[e.v], retest).has_witness())
      ++out.retest_witnesses;
  }
  return out;
}

}  // namespace sblab
