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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sblab/concentration.hpp"
#include "sblab/errors.hpp"
#include "sblab/experiment.hpp"
#include "sblab/graph.hpp"

namespace sblab {
namespace {

TEST(ThinToMinDegree, CompleteGraph) {
  const Graph g = ThinToMinDegree(CompleteGraph(10), 0.5, 1.0, 1);
  EXPECT_GE(MinDegree(g), 5);
  EXPECT_TRUE(g.is_subgraph_of(CompleteGraph(10)));
  EXPECT_LT(g.edges().size(), 45U);
}

TEST(ThinToMinDegree, RandomGraph) {
  const Graph gamma = GenerateGnp({500, 0.3, 2});
  const Graph g = ThinToMinDegree(gamma, 0.8, 0.3, 3);
  EXPECT_GE(MinDegree(g), 120);
  EXPECT_TRUE(g.is_subgraph_of(gamma));
  // Maximal: every remaining edge has an endpoint at the target.
  for (const Edge& e : g.edges()) EXPECT_TRUE(g.degree(e.u) == 120 || g.degree(e.v) == 120);
}

TEST(ThinToMinDegree, TightAndInfeasible) {
  const Graph c = CycleGraph(8);
  EXPECT_EQ(ThinToMinDegree(c, 2.0 / 8.0, 1.0, 1).edges(), c.edges());
  EXPECT_THROW(ThinToMinDegree(c, 0.5, 1.0, 1), InfeasibleTarget);
}

TEST(BuildPattern, Names) {
  EXPECT_EQ(BuildPattern("cycle", 10).edges().size(), 10U);
  EXPECT_EQ(BuildPattern("cycle_square", 10).edges().size(), 20U);
  EXPECT_EQ(BuildPattern("path", 10).edges().size(), 9U);
  const Graph f = BuildPattern("f_copies", 25);
  EXPECT_EQ(f.n(), 25);
  EXPECT_EQ(f.edges().size(), 72U);
  EXPECT_THROW(BuildPattern("star", 10), InvalidArgument);
}

TEST(Sweep, EmptyGridGivesHeaderOnly) {
  ExperimentSpec spec;
  const auto records = RunResilienceSweep(spec);
  EXPECT_TRUE(records.empty());
  std::ostringstream os;
  WriteSweepCsv(os, records);
  EXPECT_EQ(os.str(), SweepCsvHeader() + "\n");
}

std::string WithoutWallTime(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  WriteSweepCsv(os, records);
  std::istringstream is(os.str());
  std::string line, out;
  while (std::getline(is, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(Sweep, DeterministicApartFromWallTime) {
  ExperimentSpec spec;
  spec.n = {40};
  spec.p = {1.0};
  spec.alpha = {0.55, 0.6};
  spec.seeds = 2;
  spec.seed = 12;
  const auto a = RunResilienceSweep(spec);
  spec.workers = 2;
  const auto b = RunResilienceSweep(spec);
  ASSERT_EQ(a.size(), 4U);
  EXPECT_EQ(spec.grid_size(), 4U);
  EXPECT_EQ(WithoutWallTime(a), WithoutWallTime(b));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].index, i);
}

TEST(Sweep, DiracRegimeEmbedsCycles) {
  ExperimentSpec spec;
  spec.n = {60};
  spec.p = {1.0};
  spec.alpha = {0.55};
  spec.seeds = 20;
  const auto records = RunResilienceSweep(spec);
  int ok = 0;
  for (const auto& r : records) {
    ok += r.outcome == Outcome::kEmbedded;
    EXPECT_GE(r.min_degree, 33);
  }
  EXPECT_GE(ok, 19);
}

TEST(Sweep, ConstructedInstancesAreCertified) {
  ExperimentSpec spec;
  spec.n = {200};
  spec.p = {0.3};
  spec.adversary = {"sec52"};
  spec.pattern = {"f_copies"};
  spec.seeds = 3;
  for (const auto& r : RunResilienceSweep(spec)) {
    EXPECT_EQ(r.outcome, Outcome::kCertifiedAbsent) << r.detail;
  }
}

TEST(Sweep, ErrorsBecomeRecords) {
  ExperimentSpec spec;
  spec.n = {10};
  spec.p = {0.05};
  spec.alpha = {0.9};
  const auto records = RunResilienceSweep(spec);
  ASSERT_EQ(records.size(), 1U);
  EXPECT_EQ(records[0].outcome, Outcome::kError);
  EXPECT_FALSE(records[0].detail.empty());
}

TEST(Spec, Validation) {
  ExperimentSpec spec;
  spec.n = {10};
  spec.p = {1.5};
  EXPECT_THROW(spec.Validate(), InvalidArgument);
  spec.p = {0.5};
  spec.pipeline = "other";
  EXPECT_THROW(spec.Validate(), InvalidArgument);
}

TEST(Concentration, ZeroProbability) {
  const ConcentrationReport r = ConcentrationCheck(50, 0.0, 10);
  EXPECT_EQ(r.expected, 0.0);
  EXPECT_EQ(r.mean, 0.0);
  EXPECT_EQ(r.exceedances, 0);
  EXPECT_TRUE(r.pass);
}

TEST(Concentration, HalfDensity) {
  const ConcentrationReport r = ConcentrationCheck(50, 0.5, 500);
  EXPECT_DOUBLE_EQ(r.expected, 0.5 * 1225);
  EXPECT_NEAR(r.mean, r.expected, 5.0);
  // Binomial standard deviation sqrt(E (1 - p)) is about 17.5.
  EXPECT_NEAR(r.stddev, std::sqrt(1225 * 0.25), 3.0);
  EXPECT_NEAR(r.bound, 2 * std::exp(-0.01 * r.expected / 3), 1e-12);
  EXPECT_TRUE(r.pass);
}

}  // namespace
}  // namespace sblab
