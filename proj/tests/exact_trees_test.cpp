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
#include <set>

#include "doctest.h"
#include "drs/exact_trees.hpp"
#include "drs/instances.hpp"
#include "drs/oracle.hpp"
#include "test_support.hpp"

using namespace drs;
using drs::testing::cycle_graph;
using drs::testing::make_graph;

TEST_CASE("trees give their leaves") {
  const SolveResult star = solve_tree(drs::testing::star_graph(4));
  CHECK(star.set == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(solve_tree(drs::testing::path_graph(5)).set == std::vector<VertexId>{0, 4});
  const SolveResult comb = solve_tree(generate({.family = "comb", .n = 4}));
  CHECK(comb.set == std::vector<VertexId>{4, 5, 6, 7});
  CHECK(comb.algorithm == "tree");
  CHECK(comb.optimal);
  CHECK_THROWS_AS(solve_tree(cycle_graph(4)), WrongGraphClass);
}

TEST_CASE("cycle solver on unit cycles") {
  CHECK(solve_cycle(cycle_graph(5)).weight == 2);
  CHECK(solve_cycle(cycle_graph(6)).weight == 3);
  CHECK(solve_cycle(cycle_graph(3)).weight == 2);
  CHECK_THROWS_AS(solve_cycle(drs::testing::path_graph(4)), WrongGraphClass);
}

TEST_CASE("cycle solver on a skewed C7") {
  const WeightedGraph g = cycle_graph(7, {1, 9, 9, 1, 9, 1, 9});
  const SolveResult r = solve_cycle(g);
  CHECK(r.weight == drs::testing::naive_min_drs_weight(g));
  CHECK(drs::testing::naive_is_drs(g, r.set));
}

TEST_CASE("cycle solver exhaustive over small weights") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<double> w(n, 1);
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;
    for (int c = 0; c < combos; ++c) {
      int x = c;
      for (int i = 0; i < n; ++i, x /= 3) w[i] = 1 + x % 3;
      const WeightedGraph g = cycle_graph(n, w);
      REQUIRE(solve_cycle(g).weight == drs::testing::naive_min_drs_weight(g));
    }
  }
}

TEST_CASE("cycle arc characterization") {
  const std::vector<VertexId> s14{0, 3};
  CHECK_FALSE(is_drs_cycle(6, s14));
  CHECK(is_drs_cycle(7, s14));
  const std::vector<VertexId> s135{0, 2, 4};
  CHECK(is_drs_cycle(6, s135));
  for (int n = 3; n <= 10; ++n) {
    const auto ref = drs::testing::bfs_all(cycle_graph(n));
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const auto s = drs::testing::mask_set(m, n);
      REQUIRE(is_drs_cycle(n, s) == drs::testing::naive_is_drs(ref, s));
    }
  }
}

TEST_CASE("base graph peeling") {
  // C4 with a pendant at 0.
  const BaseGraphReduction a =
      base_graph(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}));
  CHECK(a.base.num_vertices() == 4);
  REQUIRE(a.roots.size() == 1);
  CHECK(a.embed[a.roots[0]] == 0);
  CHECK(a.base.weight(a.roots[0]) == 0);
  CHECK(a.leaves == std::vector<VertexId>{4});

  const BaseGraphReduction b = base_graph(cycle_graph(5));
  CHECK(b.roots.empty());
  CHECK(b.base.num_vertices() == 5);

  // Tadpole: triangle 0-1-2 with tail 2-3-4-5.
  const BaseGraphReduction t = base_graph(
      make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(std::set<VertexId>(t.removed.begin(), t.removed.end()) ==
        std::set<VertexId>{3, 4, 5});
  CHECK(t.base.num_vertices() == 3);
  CHECK(t.leaves == std::vector<VertexId>{5});

  CHECK_THROWS_AS(base_graph(drs::testing::path_graph(3)), WrongGraphClass);
}

TEST_CASE("chain decomposition counts") {
  // Theta: 0 and 1 joined by paths 0-2-1, 0-3-1, 0-4-5-1.
  const WeightedGraph theta =
      make_graph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
  CHECK(path_decomposition(theta).paths.size() == 3);

  std::vector<Edge> k4;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
  }
  CHECK(path_decomposition(make_graph(4, k4)).paths.size() == 6);

  const WeightedGraph bowtie =
      make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const PathDecomposition p = path_decomposition(bowtie);
  REQUIRE(p.paths.size() == 2);
  for (const auto& path : p.paths) {
    CHECK(path.front() == 2);
    CHECK(path.back() == 2);
  }
}

TEST_CASE("k-aug solver against the oracle") {
  // Tree plus one chord closing a C5, with two pendants.
  const WeightedGraph c5p = make_graph(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}});
  CHECK(solve_kaug(c5p).weight == drs::testing::naive_min_drs_weight(c5p));

  const WeightedGraph theta =
      make_graph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
  CHECK(solve_kaug(theta).weight == drs::testing::naive_min_drs_weight(theta));

  const WeightedGraph tree = generate({.family = "tree", .n = 9, .seed = 3});
  CHECK(solve_kaug(tree).set == solve_tree(tree).set);

  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      GenSpec spec{.family = "kaug", .n = 10, .k = k, .seed = seed};
      spec.weights.kind = WeightSpec::Kind::kUniform;
      const WeightedGraph g = generate(spec);
      const SolveResult r = solve_kaug(g);
      CHECK(r.weight == brute_min_drs(g).weight);
      CHECK(drs::testing::naive_is_drs(g, r.set));
      CHECK(r.optimal);
      std::size_t leaves = 0;
      for (VertexId v = 0; v < g.num_vertices(); ++v) leaves += g.degree(v) == 1;
      CHECK(r.set.size() >= leaves);
      // With k = 1 the base is a bare cycle, which alone needs 2 or 3.
      CHECK(r.set.size() <= leaves + (k == 1 ? 3 : 12 * (k - 1)));
    }
  }
}

TEST_CASE("k-aug solver falls back when the budget is tiny") {
  const WeightedGraph g = generate({.family = "kaug", .n = 12, .k = 3, .seed = 2});
  const SolveResult r = solve_kaug(g, 1);
  CHECK_FALSE(r.optimal);
  CHECK(drs::testing::naive_is_drs(g, r.set));
}
