// Copyright 2026 The drs Authors.
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

#ifndef DRS_SOLVE_RESULT_HPP_
#define DRS_SOLVE_RESULT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "drs/graph.hpp"

namespace drs {

// Output of every solver. `set` is ascending; `weight` is the sum of the
// original vertex weights over `set`.
struct SolveResult {
  std::vector<VertexId> set;
  double weight = 0;
  std::string algorithm;
  bool optimal = false;

  // Greedy only: ln(max IC(T, {})) + 1, and ln n + ln log2 n + 1.
  std::optional<double> instance_ratio_bound;
  std::optional<double> uniform_ratio_bound;
  double seconds = 0;
};

// Builds a result with `set` sorted and weight recomputed from `g`.
SolveResult make_result(const WeightedGraph& g, std::vector<VertexId> set,
                        std::string algorithm, bool optimal);

}  // namespace drs

#endif  // DRS_SOLVE_RESULT_HPP_
