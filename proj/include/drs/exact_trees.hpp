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

#ifndef DRS_EXACT_TREES_HPP_
#define DRS_EXACT_TREES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "drs/graph.hpp"
#include "drs/solve_result.hpp"

namespace drs {

// Leaf set of a tree; the unique minimal DRS. n = 2 returns both vertices.
SolveResult solve_tree(const WeightedGraph& g);

// Exact linear-time solver for a cycle C_n, n >= 3.
SolveResult solve_cycle(const WeightedGraph& g);

// Arc test on a cycle with vertices at positions 0..n-1 in ring order. `set`
// holds positions. True iff every arc between consecutive members has length
// <= ceil(n/2) and some arc is shorter than n/2. Sets of size < 2 are false.
bool is_drs_cycle(int n, std::span<const VertexId> set);

struct BaseGraphReduction {
  // Graph left after repeatedly deleting leaves; roots carry weight 0.
  WeightedGraph base;
  // Base ids of vertices adjacent in g to a deleted vertex, ascending.
  std::vector<VertexId> roots;
  // Leaves of the original graph, ascending.
  std::vector<VertexId> leaves;
  // base id -> original id.
  std::vector<VertexId> embed;
  // Original ids in deletion order.
  std::vector<VertexId> removed;
};

// Throws WrongGraphClass for trees (k = 0).
BaseGraphReduction base_graph(const WeightedGraph& g);

struct PathDecomposition {
  // Each path starts and ends at a branching vertex; interior vertices have
  // degree 2. A closed chain starts and ends at the same vertex.
  std::vector<std::vector<VertexId>> paths;
};

// Throws WrongGraphClass if `gb` has no branching vertex or a vertex of
// degree < 2.
PathDecomposition path_decomposition(const WeightedGraph& gb);

inline constexpr std::uint64_t kDefaultKAugBudget = 50'000'000;

// Exact for k-edge-augmented trees while the candidate count stays within
// `budget`; otherwise the greedy result with optimal = false.
SolveResult solve_kaug(const WeightedGraph& g,
                       std::uint64_t budget = kDefaultKAugBudget);

}  // namespace drs

#endif  // DRS_EXACT_TREES_HPP_
