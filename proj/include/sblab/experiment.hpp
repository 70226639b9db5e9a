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

#ifndef SBLAB_EXPERIMENT_HPP_
#define SBLAB_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sblab/embedder.hpp"
#include "sblab/graph.hpp"

namespace sblab {

// Deletes edges of gamma in seeded random order whenever both endpoints stay
// above ceil(alpha p n). Throws InfeasibleTarget if that exceeds delta(gamma).
Graph ThinToMinDegree(const Graph& gamma, double alpha, double p, std::uint64_t seed);

// "cycle" (C_n), "cycle_square", "path", "f_copies" (floor(n/11) disjoint
// copies of F padded with isolated vertices).
Graph BuildPattern(const std::string& name, int n);

struct ExperimentSpec {
  std::vector<int> n;
  std::vector<double> p;
  std::vector<int> k{2};
  std::vector<int> s{1};
  std::vector<std::string> adversary{"random"};  // random | none | clearing | sec52
  std::vector<std::string> pattern{"cycle"};
  std::vector<double> alpha{0.55};
  int seeds = 1;
  std::uint64_t seed = 1;
  std::int64_t budget = 100000;
  std::string pipeline = "direct";  // direct | full
  double eps = 0.3;                 // sec52 instance size parameter
  double reg_eps = 0.25;            // partition parameters for the full pipeline
  double reg_d = 0.3;
  int workers = 1;

  // Throws InvalidArgument on out-of-range values.
  void Validate() const;
  std::size_t grid_size() const;
};

enum class Outcome { kEmbedded, kFailed, kCertifiedAbsent, kNotCertified, kError };
const char* ToString(Outcome o);

struct RunRecord {
  std::size_t index = 0;
  int n = 0;
  double p = 0.0;
  int k = 0;
  int s = 0;
  std::string adversary;
  std::string pattern;
  double alpha = 0.0;
  int replicate = 0;
  std::uint64_t seed = 0;

  Outcome outcome = Outcome::kError;
  std::string detail;
  int min_degree = 0;
  std::int64_t backtracks = 0;
  int v0_size = 0;
  int restriction_count = 0;
  int restriction_min = 0;
  std::optional<FailureCert> cert;
  std::optional<Embedding> embedding;
  double wall_ms = 0.0;
};

// One record per grid point and replicate, in grid order; run seeds are
// DeriveSeed(spec.seed, grid index). Per-run errors become kError records.
std::vector<RunRecord> RunResilienceSweep(const ExperimentSpec& spec);

// Executes a single grid point.
RunRecord RunOne(const ExperimentSpec& spec, RunRecord coords);

// Fixed columns, wall time last.
void WriteSweepCsv(std::ostream& os, const std::vector<RunRecord>& records);
std::string SweepCsvHeader();

}  // namespace sblab

#endif  // SBLAB_EXPERIMENT_HPP_
