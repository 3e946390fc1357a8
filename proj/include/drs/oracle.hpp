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

#ifndef DRS_ORACLE_HPP_
#define DRS_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "drs/core.hpp"
#include "drs/graph.hpp"
#include "drs/solve_result.hpp"

namespace drs {

// Subset-count cap shared by the brute-force solvers.
inline constexpr std::uint64_t kDefaultOracleLimit = std::uint64_t{1} << 20;

// Minimum-weight DRS by exhaustive enumeration. Subsets are visited in
// (weight, cardinality, lexicographic) order and the first DRS wins.
// Throws TooLarge when 2^n > limit.
SolveResult brute_min_drs(const WeightedGraph& g, const DistanceMatrix& d,
                          std::uint64_t limit = kDefaultOracleLimit);
SolveResult brute_min_drs(const WeightedGraph& g,
                          std::uint64_t limit = kDefaultOracleLimit);

// Minimum-weight resolving set, same enumeration order.
SolveResult brute_min_resolving_set(const WeightedGraph& g,
                                    const DistanceMatrix& d,
                                    std::uint64_t limit = kDefaultOracleLimit);

struct MwstsSolution {
  VertexId root = 0;
  // Probes v of the chosen tests {root, v}, ascending.
  std::vector<VertexId> probes;
  double weight = 0;
};

// Minimum-weight super-test set over U_root by enumeration of probe subsets.
MwstsSolution brute_mwsts(const WeightedGraph& g, const DistanceMatrix& d,
                          VertexId root,
                          std::uint64_t limit = kDefaultOracleLimit);

// Minimum-cardinality dominating set; lexicographically least among minima.
std::vector<VertexId> brute_min_dominating_set(
    const WeightedGraph& g, std::uint64_t limit = kDefaultOracleLimit);

}  // namespace drs

#endif  // DRS_ORACLE_HPP_
