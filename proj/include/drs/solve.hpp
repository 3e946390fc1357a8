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

#ifndef DRS_SOLVE_HPP_
#define DRS_SOLVE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "drs/exact_trees.hpp"
#include "drs/graph.hpp"
#include "drs/solve_result.hpp"

namespace drs {

enum class Algorithm { kAuto, kGreedy, kTree, kCycle, kKTree, kWheel,
                       kCompleteWheel, kOracle };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  std::uint64_t budget = kDefaultKAugBudget;
  int threads = 1;
};

// kAuto routes by classify(): exact solvers for trees, cycles, wheels and
// k-augmented trees, greedy otherwise. Other values force one solver, which
// throws WrongGraphClass when the input does not fit it.
SolveResult solve(const WeightedGraph& g, const SolveOptions& options = {});

}  // namespace drs

#endif  // DRS_SOLVE_HPP_
