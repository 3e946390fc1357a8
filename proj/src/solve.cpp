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

#include "drs/solve.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "drs/greedy.hpp"
#include "drs/oracle.hpp"
#include "drs/wheel.hpp"

namespace drs {

SolveResult make_result(const WeightedGraph& g, std::vector<VertexId> set,
                        std::string algorithm, bool optimal) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  SolveResult r;
  r.weight = g.weight_of(set);
  r.set = std::move(set);
  r.algorithm = std::move(algorithm);
  r.optimal = optimal;
  return r;
}

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 8> kNames{{
    {Algorithm::kAuto, "auto"},
    {Algorithm::kGreedy, "greedy"},
    {Algorithm::kTree, "tree"},
    {Algorithm::kCycle, "cycle"},
    {Algorithm::kKTree, "ktree"},
    {Algorithm::kWheel, "wheel"},
    {Algorithm::kCompleteWheel, "complete-wheel"},
    {Algorithm::kOracle, "oracle"},
}};

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto [a, s] : kNames) {
    if (s == name) return a;
  }
  return std::nullopt;
}

std::string_view to_string(Algorithm a) {
  for (auto [x, s] : kNames) {
    if (x == a) return s;
  }
  return "?";
}

SolveResult solve(const WeightedGraph& g, const SolveOptions& options) {
  Algorithm algo = options.algorithm;
  if (algo == Algorithm::kAuto) {
    switch (classify(g).kind) {
      case GraphKind::kTree: algo = Algorithm::kTree; break;
      case GraphKind::kCycle: algo = Algorithm::kCycle; break;
      case GraphKind::kCompleteWheel: algo = Algorithm::kCompleteWheel; break;
      case GraphKind::kGeneralWheel: algo = Algorithm::kWheel; break;
      case GraphKind::kKAugTree: algo = Algorithm::kKTree; break;
      case GraphKind::kGeneral: algo = Algorithm::kGreedy; break;
    }
  }
  switch (algo) {
    case Algorithm::kTree: return solve_tree(g);
    case Algorithm::kCycle: return solve_cycle(g);
    case Algorithm::kKTree: return solve_kaug(g, options.budget);
    case Algorithm::kWheel: return solve_general_wheel(g, options.budget);
    case Algorithm::kCompleteWheel: return solve_complete_wheel(g);
    case Algorithm::kOracle: return brute_min_drs(g);
    case Algorithm::kAuto:
    case Algorithm::kGreedy: break;
  }
  return greedy_mwdrs(g, GreedyOptions{options.threads});
}

}  // namespace drs
