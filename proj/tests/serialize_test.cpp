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

#include <sstream>

#include "sblab/errors.hpp"
#include "sblab/graph.hpp"
#include "sblab/serialize.hpp"

namespace sblab {
namespace {

TEST(Serialize, VertexValuesRoundTripAndValidation) {
  const std::vector<int> values = {3, 0, 2, 1};
  std::stringstream ss;
  WriteVertexValues(ss, values);
  EXPECT_EQ(ReadVertexValues(ss), values);
  std::istringstream shuffled("vertex,value\n2,5\n0,7\n1,6\n");
  EXPECT_EQ(ReadVertexValues(shuffled), std::vector<int>({7, 6, 5}));
  std::istringstream missing("vertex,value\n0,1\n2,1\n");
  EXPECT_THROW(ReadVertexValues(missing), ParseError);
  std::istringstream garbage("vertex,value\n0,x\n");
  EXPECT_THROW(ReadVertexValues(garbage), ParseError);
}

TEST(Serialize, LabellingRoundTrip) {
  const Graph g = PathGraph(5);
  const Labelling lab = Labelling::FromOrder(g, {4, 3, 2, 1, 0});
  std::stringstream ss;
  WriteLabelling(ss, lab);
  const Labelling back = ReadLabelling(ss, g);
  EXPECT_EQ(back.position, lab.position);
  EXPECT_EQ(back.vertex_at, lab.vertex_at);
  EXPECT_EQ(back.bandwidth, 1);
}

TEST(Serialize, ColouringRoundTrip) {
  const Colouring col{{0, 1, 2, 1}, 2};
  std::stringstream ss;
  WriteColouring(ss, col);
  const Colouring back = ReadColouring(ss, 2);
  EXPECT_EQ(back.colour, col.colour);
  EXPECT_EQ(back.k, 2);
}

TEST(Serialize, PartitionRoundTrip) {
  ClusterPartition part;
  part.r = 1;
  part.k = 2;
  part.v0 = {4};
  part.clusters = {{0, 2}, {1, 3}};
  part.reduced = CompleteGraph(2);
  part.params = {0.2, 0.3, 0.5};
  std::stringstream ss;
  WritePartition(ss, part);
  const ClusterPartition back = ReadPartition(ss);
  EXPECT_EQ(back.r, 1);
  EXPECT_EQ(back.k, 2);
  EXPECT_EQ(back.v0, part.v0);
  EXPECT_EQ(back.clusters, part.clusters);
  EXPECT_EQ(back.reduced.edges(), part.reduced.edges());
  EXPECT_DOUBLE_EQ(back.params.p, 0.5);
}

TEST(Serialize, EmbeddingRoundTrip) {
  Embedding e(4);
  e.set(0, 9);
  e.set(3, 2);
  std::stringstream ss;
  WriteEmbedding(ss, e);
  EXPECT_EQ(ReadEmbedding(ss, 4).raw(), e.raw());
}

TEST(Serialize, AssignmentRows) {
  const Assignment a{{0, 3, 1}, {1}};
  std::ostringstream os;
  WriteAssignment(os, a, 2);
  EXPECT_EQ(os.str(), "vertex,i,j,special\n0,0,0,0\n1,1,1,1\n2,0,1,0\n");
}

TEST(Serialize, SpecFromJson) {
  const json j = json::parse(R"({"n":[100,200],"p":[0.5],"k":[3],"seeds":4,"pipeline":"full"})");
  const ExperimentSpec spec = ExperimentSpecFromJson(j);
  EXPECT_EQ(spec.n, std::vector<int>({100, 200}));
  EXPECT_EQ(spec.k, std::vector<int>({3}));
  EXPECT_EQ(spec.seeds, 4);
  EXPECT_EQ(spec.pipeline, "full");
  EXPECT_EQ(spec.alpha, std::vector<double>({0.55}));
  EXPECT_THROW(ExperimentSpecFromJson(json::parse(R"({"colour":1})")), InvalidArgument);
  EXPECT_THROW(ExperimentSpecFromJson(json::parse(R"({"n":"many"})")), ParseError);
}

TEST(Serialize, RecordJson) {
  RunRecord r;
  r.n = 10;
  r.outcome = Outcome::kFailed;
  r.cert = FailureCert{3, 5, 7, "empty candidates"};
  const json j = ToJson(r);
  EXPECT_EQ(j.at("outcome"), "failed");
  EXPECT_EQ(j.at("cert").at("vertex"), 3);
  EXPECT_EQ(SweepSidecar({r}).at("runs").size(), 1U);
}

}  // namespace
}  // namespace sblab
