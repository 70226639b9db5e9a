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

#ifndef SBLAB_SERIALIZE_HPP_
#define SBLAB_SERIALIZE_HPP_

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "sblab/adversary.hpp"
#include "sblab/bandwidth.hpp"
#include "sblab/colouring.hpp"
#include "sblab/concentration.hpp"
#include "sblab/embedder.hpp"
#include "sblab/experiment.hpp"
#include "sblab/partitioner.hpp"
#include "sblab/regularity.hpp"

namespace sblab {

using nlohmann::json;

// "vertex,value" rows in vertex order. Reading accepts rows in any order but
// requires every vertex 0..n-1 exactly once.
void WriteVertexValues(std::ostream& os, const std::vector<int>& values);
std::vector<int> ReadVertexValues(std::istream& is);

void WriteLabelling(std::ostream& os, const Labelling& lab);  // value = position
Labelling ReadLabelling(std::istream& is, const Graph& g);
void WriteColouring(std::ostream& os, const Colouring& col);
Colouring ReadColouring(std::istream& is, int k);

// "# {json}" header (r, k, eps, d, p, reduced edges), then "vertex,i,j";
// vertices of v0 carry i = j = -1.
void WritePartition(std::ostream& os, const ClusterPartition& part);
ClusterPartition ReadPartition(std::istream& is);

// "vertex,i,j,special" rows.
void WriteAssignment(std::ostream& os, const Assignment& a, int k);

// "h_vertex,g_vertex" rows for mapped vertices.
void WriteEmbedding(std::ostream& os, const Embedding& e);
Embedding ReadEmbedding(std::istream& is, int h_order);

json ToJson(const FailureCert& cert);
json ToJson(const RegularityVerdict& v);
json ToJson(const AssignmentReport& r);
json ToJson(const ConcentrationReport& r);
json ToJson(const RunRecord& r);
// Sizes, min degree, per-rule edge counts and the certification verdict.
json AdversaryReportJson(const AdversaryInstance& inst, const EdgeRuleReport& rules,
                         const NonContainmentReport& cert);

// Missing keys keep their defaults; unknown keys throw InvalidArgument.
ExperimentSpec ExperimentSpecFromJson(const json& j);
// Certificates and counters of every run, for the sweep sidecar.
json SweepSidecar(const std::vector<RunRecord>& records);

}  // namespace sblab

#endif  // SBLAB_SERIALIZE_HPP_
