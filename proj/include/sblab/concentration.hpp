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

#ifndef SBLAB_CONCENTRATION_HPP_
#define SBLAB_CONCENTRATION_HPP_

#include <cstdint>

namespace sblab {

struct ConcentrationReport {
  int n = 0;
  double p = 0.0;
  int seeds = 0;
  double expected = 0.0;   // p * C(n, 2)
  double mean = 0.0;       // empirical mean edge count
  double stddev = 0.0;     // empirical standard deviation
  int exceedances = 0;     // runs with |edges - E| > 0.1 E
  double empirical = 0.0;  // exceedances / seeds
  double bound = 0.0;      // 2 exp(-0.01 E / 3)
  double sigma = 0.0;      // sqrt(b (1 - b) / seeds) for b = min(bound, 1)
  bool pass = false;       // empirical <= bound + 3 sigma
};

// Edge counts of G(n, p) over `seeds` derived seeds against the Chernoff tail
// 2 exp(-delta^2 E / 3) at delta = 0.1.
ConcentrationReport ConcentrationCheck(int n, double p, int seeds, std::uint64_t base_seed = 0);

}  // namespace sblab

#endif  // SBLAB_CONCENTRATION_HPP_
