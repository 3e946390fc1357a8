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

#ifndef DRS_INSTANCES_HPP_
#define DRS_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drs/graph.hpp"

namespace drs {

struct WeightSpec {
  enum class Kind { kUnit, kUniform };
  Kind kind = Kind::kUnit;
  // Inclusive integer range for kUniform.
  int lo = 1;
  int hi = 10;
};

// Family names: tree, comb, cycle, kaug, wheel, complete-wheel, prism,
// random, reduction.
struct GenSpec {
  std::string family;
  // Vertex count for tree / cycle / kaug / random / reduction (size of the
  // base graph); teeth h for comb; rim size for wheels; m for prism Y_m.
  int n = 0;
  // Extra edges for kaug.
  int k = 0;
  // Hub degree for wheel.
  int connectors = 0;
  // Connector placement for wheel: "even" or "random".
  std::string pattern = "even";
  // Extra-edge probability for random and reduction bases.
  double p = 0.3;
  std::uint64_t seed = 1;
  WeightSpec weights;
};

struct GeneratedInstance {
  WeightedGraph graph;
  // Set only for the reduction family.
  std::optional<std::vector<VertexId>> witness;
};

// Deterministic in `spec`. Throws std::invalid_argument on bad parameters.
GeneratedInstance generate_instance(const GenSpec& spec);
WeightedGraph generate(const GenSpec& spec);

struct Reduction {
  WeightedGraph gprime;
  // {u_1^1..u_{d+1}^1, u_a^1, u_b^1} plus v^1 copies of a minimum
  // dominating set of g; size ds(g) + ceil(log2 n) + 3.
  std::vector<VertexId> witness;
  int d = 0;
};

// Dominating-set reduction gadget with unit weights. Vertex layout:
// v_1^0..v_n^0, v_1^1..v_n^1, then (u_k^0, u_k^1) for k = 1..d+1, a, b,
// then c. Throws TooLarge if the dominating-set oracle cannot run on g.
Reduction generate_reduction(const WeightedGraph& g);

// ceil(log2 n) for n >= 1.
int ceil_log2(int n);

}  // namespace drs

#endif  // DRS_INSTANCES_HPP_
