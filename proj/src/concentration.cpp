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

#include "sblab/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "sblab/errors.hpp"
#include "sblab/graph.hpp"
#include "sblab/rng.hpp"

namespace sblab {

ConcentrationReport ConcentrationCheck(int n, double p, int seeds, std::uint64_t base_seed) {
  if (n < 0 || seeds < 1) throw InvalidArgument("need n >= 0 and at least one seed");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0,1]");
  ConcentrationReport rep;
  rep.n = n;
  rep.p = p;
  rep.seeds = seeds;
  rep.expected = p * (static_cast<double>(n) * (n - 1) / 2.0);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < seeds; ++i) {
    const double e = static_cast<double>(GenerateGnp({n, p, DeriveSeed(base_seed, i)}).edge_count());
    sum += e;
    sum_sq += e * e;
    if (std::abs(e - rep.expected) > 0.1 * rep.expected) ++rep.exceedances;
  }
  rep.mean = sum / seeds;
  rep.stddev = std::sqrt(std::max(0.0, sum_sq / seeds - rep.mean * rep.mean));
  rep.empirical = static_cast<double>(rep.exceedances) / seeds;
  rep.bound = 2.0 * std::exp(-0.01 * rep.expected / 3.0);
  const double b = std::min(rep.bound, 1.0);
  rep.sigma = std::sqrt(b * (1.0 - b) / seeds);
  rep.pass = rep.empirical <= rep.bound + 3.0 * rep.sigma;
  return rep;
}

}  // namespace sblab
