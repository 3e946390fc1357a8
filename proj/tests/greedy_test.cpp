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

#include <cmath>
#include <random>

#include "doctest.h"
#include "drs/greedy.hpp"
#include "drs/instances.hpp"
#include "drs/oracle.hpp"
#include "test_support.hpp"

using namespace drs;
using drs::testing::path_graph;

TEST_CASE("information content on the 4-path") {
  const DistanceMatrix d(path_graph(4));
  const Partition whole = Partition::whole(4);
  CHECK(information_content(d, whole, {0, 3, 1}) ==
        doctest::Approx(std::log2(24.0)));
  const Partition done = refine_partition(d, whole, {0, 3, 1});
  CHECK(information_content(d, done, {1, 2, 1}) == 0.0);
}

TEST_CASE("information content is the entropy drop") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = drs::testing::random_connected(8, 0.2, rng);
    const DistanceMatrix d(g);
    const Partition p = refine_partition_single(d, Partition::whole(8), rng() % 8);
    const VertexId x = rng() % 8;
    const Partition q = refine_partition_single(d, p, x);
    CHECK(information_content_single(d, p, x) ==
          doctest::Approx(p.entropy - q.entropy));
  }
}

TEST_CASE("mwsts from an endpoint of the 4-path") {
  const WeightedGraph g = path_graph(4);
  const DistanceMatrix d(g);
  const GreedyTrace t = solve_mwsts(g, d, 0);
  REQUIRE_FALSE(t.chosen.empty());
  CHECK(t.chosen.front().probe == 3);
  CHECK(is_drs(d, t.observer_set()));
  CHECK(t.test_weight() == 1.0);
}

TEST_CASE("mwsts from the star center takes every leaf") {
  const WeightedGraph g = drs::testing::star_graph(3);
  const DistanceMatrix d(g);
  const auto set = solve_mwsts(g, d, 0).observer_set();
  for (VertexId leaf : {1, 2, 3}) {
    CHECK(std::find(set.begin(), set.end(), leaf) != set.end());
  }
}

TEST_CASE("greedy output is a DRS containing the tree leaves") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec spec{.family = "tree", .n = 15, .seed = seed};
    spec.weights.kind = WeightSpec::Kind::kUniform;
    const WeightedGraph g = generate(spec);
    const SolveResult r = greedy_mwdrs(g);
    CHECK(drs::testing::naive_is_drs(g, r.set));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) == 1) {
        CHECK(std::find(r.set.begin(), r.set.end(), v) != r.set.end());
      }
    }
  }
}

TEST_CASE("greedy on C5 within the ratio bound") {
  const SolveResult r = greedy_mwdrs(drs::testing::cycle_graph(5));
  CHECK(r.weight <= uniform_ratio_bound(5) * 2 + 1e-9);
  REQUIRE(r.uniform_ratio_bound);
  CHECK(*r.uniform_ratio_bound ==
        doctest::Approx(std::log(5.0) + std::log(std::log2(5.0)) + 1));
  CHECK(r.algorithm == "greedy");
  CHECK_FALSE(r.optimal);
}

TEST_CASE("greedy within the bound against the oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const WeightedGraph g = drs::testing::random_connected(n, 0.3, rng, trial % 2);
    const double opt = drs::testing::naive_min_drs_weight(g);
    const SolveResult r = greedy_mwdrs(g);
    CHECK(r.weight <= uniform_ratio_bound(n) * opt + 1e-9);
  }
}

TEST_CASE("threaded greedy matches the serial run") {
  std::mt19937_64 rng(4);
  const WeightedGraph g = drs::testing::random_connected(30, 0.1, rng, false);
  const SolveResult a = greedy_mwdrs(g, {.threads = 1});
  const SolveResult b = greedy_mwdrs(g, {.threads = 4});
  CHECK(a.set == b.set);
}

TEST_CASE("weighted metric dimension greedy") {
  GenSpec spec{.family = "comb", .n = 5};
  const WeightedGraph g = generate(spec);
  const DistanceMatrix d(g);
  const SolveResult r = greedy_weighted_md(g, d);
  CHECK(is_resolving(d, r.set));
  // The two spine ends resolve the comb.
  CHECK(r.weight <= uniform_ratio_bound(g.num_vertices()) * 2);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph h = drs::testing::random_connected(7, 0.3, rng, false);
    const DistanceMatrix dh(h);
    const SolveResult md = greedy_weighted_md(h, dh);
    CHECK(is_resolving(dh, md.set));
    const double opt = brute_min_resolving_set(h, dh).weight;
    CHECK(md.weight <= uniform_ratio_bound(7) * opt + 1e-9);
  }
}
