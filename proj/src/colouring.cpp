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

#include "sblab/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sblab/errors.hpp"

namespace sblab {

std::optional<Edge> FindMonochromaticEdge(const Graph& h, const Colouring& col) {
  for (const Edge& e : h.edges())
    if (col.colour[e.u] == col.colour[e.v]) return e;
  return std::nullopt;
}

bool IsProperColouring(const Graph& h, const Colouring& col) {
  if (static_cast<int>(col.colour.size()) != h.n()) return false;
  for (int c : col.colour)
    if (c < 0 || c > col.k) return false;
  return !FindMonochromaticEdge(h, col).has_value();
}

namespace {

// Colour preference order: 1, 2, ..., k, then 0.
int PreferredFree(const std::vector<char>& used, int k) {
  for (int c = 1; c <= k; ++c)
    if (!used[c]) return c;
  return used[0] ? -1 : 0;
}

bool GreedyInOrder(const Graph& h, int k, const std::vector<int>& order, std::vector<int>& colour) {
  colour.assign(h.n(), -1);
  std::vector<char> used(k + 1);
  for (int v : order) {
    std::fill(used.begin(), used.end(), 0);
    for (int u : h.neighbours(v))
      if (colour[u] >= 0) used[colour[u]] = 1;
    const int c = PreferredFree(used, k);
    if (c < 0) return false;
    colour[v] = c;
  }
  return true;
}

bool Dsatur(const Graph& h, int k, std::vector<int>& colour) {
  const int n = h.n();
  colour.assign(n, -1);
  std::vector<std::vector<char>> seen(n, std::vector<char>(k + 1, 0));
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (best < 0 || saturation[v] > saturation[best] ||
          (saturation[v] == saturation[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    const int c = PreferredFree(seen[best], k);
    if (c < 0) return false;
    colour[best] = c;
    for (int u : h.neighbours(best)) {
      if (!seen[u][c]) {
        seen[u][c] = 1;
        ++saturation[u];
      }
    }
  }
  return true;
}

// Backtracking q-colouring with DSATUR branching and symmetry breaking on
// fresh colours.
class ExactColourer {
 public:
  ExactColourer(const Graph& h, int q, std::int64_t budget)
      : h_(h), q_(q), budget_(budget), colour_(h.n(), -1) {}

  // 1 = found, 0 = proved impossible, -1 = budget exhausted.
  int Run() {
    const int r = Search(0, 0);
    return r;
  }
  const std::vector<int>& colour() const { return colour_; }

  // Full enumeration without symmetry breaking.
  std::int64_t Enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    enumerate_ = true;
    count_ = 0;
    stop_ = false;
    Search(0, 0);
    return count_;
  }

 private:
  int Search(int placed, int colours_used) {
    if (!enumerate_ && budget_ >= 0 && nodes_++ > budget_) return -1;
    const int n = h_.n();
    if (placed == n) {
      if (enumerate_) {
        ++count_;
        if (!(*visit_)(colour_)) stop_ = true;
      }
      return 1;
    }
    int best = -1, best_sat = -1, best_deg = -1;
    std::vector<char> used(q_);
    for (int v = 0; v < n; ++v) {
      if (colour_[v] >= 0) continue;
      std::fill(used.begin(), used.end(), 0);
      int sat = 0;
      for (int u : h_.neighbours(v))
        if (colour_[u] >= 0 && !used[colour_[u]]) {
          used[colour_[u]] = 1;
          ++sat;
        }
      if (sat > best_sat || (sat == best_sat && h_.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = h_.degree(v);
      }
    }
    std::fill(used.begin(), used.end(), 0);
    for (int u : h_.neighbours(best))
      if (colour_[u] >= 0) used[colour_[u]] = 1;
    const int limit = enumerate_ ? q_ : std::min(q_, colours_used + 1);
    bool exhausted = false;
    for (int c = 0; c < limit; ++c) {
      if (used[c]) continue;
      colour_[best] = c;
      const int r = Search(placed + 1, std::max(colours_used, c + 1));
      if (enumerate_) {
        if (stop_) return 1;
        continue;
      }
      if (r == 1) return 1;
      if (r < 0) exhausted = true;
    }
    colour_[best] = -1;
    return exhausted ? -1 : 0;
  }

  const Graph& h_;
  int q_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> colour_;
  bool enumerate_ = false;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  std::int64_t count_ = 0;
  bool stop_ = false;
};

// Maps raw colours {0..q-1} from the exact search onto the preference order
// 1..k, 0 so that colour 0 is the least used class.
std::vector<int> Canonicalise(const std::vector<int>& raw, int k) {
  std::vector<int> freq(k + 1, 0);
  for (int c : raw) ++freq[c];
  std::vector<int> classes(k + 1);
  for (int c = 0; c <= k; ++c) classes[c] = c;
  std::stable_sort(classes.begin(), classes.end(), [&](int a, int b) { return freq[a] > freq[b]; });
  std::vector<int> relabel(k + 1);
  for (int i = 0; i <= k; ++i) relabel[classes[i]] = (i < k) ? i + 1 : 0;
  std::vector<int> out(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) out[v] = relabel[raw[v]];
  return out;
}

}  // namespace

Colouring ProperColouring(const Graph& h, int k, const Labelling& lab, std::int64_t node_budget) {
  if (k < 1) throw InvalidArgument("colour bound k must be at least 1");
  if (lab.n() != h.n()) throw InvalidArgument("labelling does not match graph");
  Colouring col;
  col.k = k;
  if (GreedyInOrder(h, k, lab.vertex_at, col.colour) || Dsatur(h, k, col.colour)) {
    if (!IsProperColouring(h, col)) throw Error("internal: improper colouring produced");
    return col;
  }
  const bool small = h.n() <= 20;
  ExactColourer exact(h, k + 1, small ? -1 : node_budget);
  const int r = exact.Run();
  if (r == 0) {
    throw ColouringNotFound("graph is not " + std::to_string(k + 1) + "-colourable (exact search)");
  }
  if (r < 0) throw ColouringNotFound("colouring search budget exhausted");
  col.colour = Canonicalise(exact.colour(), k);
  if (!IsProperColouring(h, col)) throw Error("internal: improper colouring produced");
  return col;
}

int ChromaticNumber(const Graph& h) {
  if (h.n() == 0) return 0;
  for (int q = 1;; ++q) {
    ExactColourer exact(h, q, -1);
    if (exact.Run() == 1) return q;
  }
}

std::int64_t EnumerateProperColourings(const Graph& h, int q,
                                       const std::function<bool(const std::vector<int>&)>& visit) {
  if (q < 1) return h.n() == 0 ? 1 : 0;
  ExactColourer exact(h, q, -1);
  return exact.Enumerate(visit);
}

int NeighbourhoodColourCount(const Graph& h, const Colouring& col, int v) {
  std::vector<char> seen(col.k + 1, 0);
  int count = 0;
  for (int u : h.neighbours(v)) {
    const int c = col.colour[u];
    if (!seen[c]) {
      seen[c] = 1;
      ++count;
    }
  }
  return count;
}

BlockDecomposition DecomposeBlocks(const Colouring& col, const Labelling& lab, double beta, int k) {
  const int n = lab.n();
  const double raw = 4.0 * k * beta * n;
  if (!(raw >= 1.0)) throw InvalidArgument("block size 4*k*beta*n must be at least 1");
  BlockDecomposition out;
  out.block_size = static_cast<int>(std::floor(raw));
  out.block_count = (n + out.block_size - 1) / out.block_size;
  std::vector<char> has_zero(out.block_count, 0);
  for (int v = 0; v < n; ++v)
    if (col.colour[v] == 0) has_zero[out.block_of(lab.position[v])] = 1;
  for (int b = 0; b < out.block_count; ++b)
    if (has_zero[b]) out.zero_blocks.push_back(b);
  return out;
}

bool CheckZeroFree(const BlockDecomposition& blocks, int z) {
  if (z < 1) throw InvalidArgument("window length z must be positive");
  // Two zero blocks share a window iff their indices differ by less than z.
  for (std::size_t i = 1; i < blocks.zero_blocks.size(); ++i)
    if (blocks.zero_blocks[i] - blocks.zero_blocks[i - 1] < z) return false;
  return true;
}

bool CheckZeroFree(const Colouring& col, const Labelling& lab, int z, double beta, int k) {
  return CheckZeroFree(DecomposeBlocks(col, lab, beta, k), z);
}

}  // namespace sblab
