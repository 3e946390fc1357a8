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

#include <random>

#include "doctest.h"
#include "drs/instances.hpp"
#include "drs/oracle.hpp"
#include "test_support.hpp"

using namespace drs;
using drs::testing::cycle_graph;
using drs::testing::make_graph;
using drs::testing::path_graph;

TEST_CASE("oracle cardinalities on cycles") {
  CHECK(brute_min_drs(cycle_graph(5)).set.size() == 2);
  CHECK(brute_min_drs(cycle_graph(6)).set.size() == 3);
}

TEST_CASE("oracle on the triangular prism") {
  const SolveResult r = brute_min_drs(generate({.family = "prism", .n = 3}));
  CHECK(r.set.size() >= 3);
  CHECK(r.set.size() <= 4);
  CHECK(r.optimal);
  CHECK(r.algorithm == "oracle");
}

TEST_CASE("oracle matches the naive minimum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 6;
    const WeightedGraph g = drs::testing::random_connected(n, 0.3, rng, trial % 2);
    const SolveResult r = brute_min_drs(g);
    CHECK(r.weight == drs::testing::naive_min_drs_weight(g));
    CHECK(drs::testing::naive_is_drs(g, r.set));
  }
}

TEST_CASE("oracle refuses large inputs") {
  CHECK_THROWS_AS(brute_min_drs(cycle_graph(21)), TooLarge);
  CHECK_NOTHROW(brute_min_drs(cycle_graph(12), 1 << 12));
  CHECK_THROWS_AS(brute_min_drs(cycle_graph(12), 1 << 11), TooLarge);
}

TEST_CASE("mwsts oracle") {
  const WeightedGraph p4 = path_graph(4);
  const MwstsSolution a = brute_mwsts(p4, DistanceMatrix(p4), 0);
  CHECK(a.weight == 1.0);
  CHECK(a.probes == std::vector<VertexId>{3});

  const WeightedGraph star = drs::testing::star_graph(3);
  const MwstsSolution c = brute_mwsts(star, DistanceMatrix(star), 0);
  CHECK(c.probes.size() == 3);
}

TEST_CASE("dominating sets") {
  CHECK(brute_min_dominating_set(path_graph(2)).size() == 1);
  CHECK(brute_min_dominating_set(cycle_graph(5)).size() == 2);
  CHECK(brute_min_dominating_set(path_graph(4)).size() == 2);
}

TEST_CASE("resolving set oracle") {
  const WeightedGraph p = path_graph(5);
  const SolveResult r = brute_min_resolving_set(p, DistanceMatrix(p));
  CHECK(r.set.size() == 1);
  CHECK(r.algorithm == "oracle-md");
  const WeightedGraph comb = generate({.family = "comb", .n = 4});
  CHECK(brute_min_resolving_set(comb, DistanceMatrix(comb)).set.size() == 2);
}
