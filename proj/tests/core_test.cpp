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
#include "drs/core.hpp"
#include "test_support.hpp"

using namespace drs;
using drs::testing::cycle_graph;
using drs::testing::path_graph;

TEST_CASE("doubly_resolves on small examples") {
  const DistanceMatrix p4(path_graph(4));
  CHECK(doubly_resolves(p4, 0, 3, 1, 2));
  const DistanceMatrix c6(cycle_graph(6));
  CHECK(c6(0, 3) == 3);
  CHECK_FALSE(doubly_resolves(c6, 0, 3, 1, 5));
  CHECK(doubly_resolves(c6, 2, 4, 2, 4));
}

TEST_CASE("entropy values") {
  CHECK(log2_factorial(4) == doctest::Approx(std::log2(24.0)));
  CHECK(entropy(Partition::whole(4)) == doctest::Approx(4.58496).epsilon(1e-5));
  const std::vector<int> labels{0, 0, 1, 1};
  CHECK(entropy(Partition::from_labels(labels)) == doctest::Approx(2.0));
  const std::vector<int> singles{0, 1, 2};
  CHECK(entropy(Partition::from_labels(singles)) == 0.0);
}

TEST_CASE("refine on the 4-path") {
  const DistanceMatrix d(path_graph(4));
  const Partition whole = Partition::whole(4);
  const Partition p = refine_partition(d, whole, {0, 3, 1});
  CHECK(p.all_singletons());
  CHECK(p.entropy == 0.0);
  CHECK(refine_partition(d, p, {1, 2, 1}) == p);
  const Partition q = refine_partition_single(d, whole, 0);
  CHECK(q.all_singletons());
}

TEST_CASE("is_drs agrees with the naive checker") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    const WeightedGraph g = drs::testing::random_connected(n, 0.25, rng);
    const DistanceMatrix d(g);
    const auto ref = drs::testing::bfs_all(g);
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const auto s = drs::testing::mask_set(m, n);
      const bool want = drs::testing::naive_is_drs(ref, s);
      REQUIRE(is_drs(d, s) == want);
      REQUIRE(ambiguous_witness(d, s).has_value() == !want);
    }
  }
}

TEST_CASE("known DRS facts") {
  const DistanceMatrix c6(cycle_graph(6));
  const std::vector<VertexId> s14{0, 3};
  CHECK_FALSE(is_drs(c6, s14));
  const auto w = ambiguous_witness(c6, s14);
  REQUIRE(w);
  CHECK(*w == std::pair<VertexId, VertexId>{1, 5});

  const WeightedGraph star = drs::testing::star_graph(4);
  const std::vector<VertexId> leaves{1, 2, 3, 4};
  CHECK(is_drs(DistanceMatrix(star), leaves));
  CHECK_FALSE(ambiguous_witness(DistanceMatrix(star), leaves));

  const std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  CHECK(is_drs(c6, all));

  const std::vector<VertexId> one{2};
  const auto w1 = ambiguous_witness(c6, one);
  REQUIRE(w1);
  CHECK(*w1 == std::pair<VertexId, VertexId>{0, 1});
}

TEST_CASE("resolving sets") {
  const DistanceMatrix p4(path_graph(4));
  const std::vector<VertexId> end{0};
  CHECK(is_resolving(p4, end));
  const std::vector<VertexId> mid{1};
  CHECK_FALSE(is_resolving(p4, mid));
}

TEST_CASE("locate on the 4-path") {
  const DistanceMatrix d(path_graph(4));
  const std::vector<Observation> obs{{0, 2}, {3, 3}};
  const LocalizationResult r = locate_source(d, obs);
  CHECK(r.outcome == LocalizationResult::Outcome::kUnique);
  CHECK(r.source == 1);
  CHECK(r.start_time == 1);

  const std::vector<Observation> bad{{0, 0}, {3, 9}};
  CHECK(locate_source(d, bad).outcome == LocalizationResult::Outcome::kInconsistent);

  const std::vector<Observation> dup{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(locate_source(d, dup), InvalidGraph);
  CHECK_THROWS_AS(locate_source(d, {}), InvalidGraph);
  const std::vector<Observation> oob{{7, 0}};
  CHECK_THROWS_AS(locate_source(d, oob), InvalidGraph);
}

TEST_CASE("locate is ambiguous on C6 with antipodal observers") {
  const DistanceMatrix d(cycle_graph(6));
  const std::vector<VertexId> s{0, 3};
  const auto obs = simulate_arrivals(d, s, 1, 0);
  const LocalizationResult r = locate_source(d, obs);
  CHECK(r.outcome == LocalizationResult::Outcome::kAmbiguous);
  CHECK(r.candidates == std::vector<VertexId>{1, 5});
  CHECK(r.start_times.size() == 2);
}

TEST_CASE("locate matches the naive source enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 7;
    const WeightedGraph g = drs::testing::random_connected(n, 0.3, rng);
    const DistanceMatrix d(g);
    const auto ref = drs::testing::bfs_all(g);
    std::vector<VertexId> s;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    std::vector<std::int64_t> t;
    std::vector<Observation> obs;
    for (VertexId x : s) {
      t.push_back(static_cast<std::int64_t>(rng() % 4));
      obs.push_back({x, t.back()});
    }
    const auto want = drs::testing::naive_sources(ref, s, t);
    const LocalizationResult r = locate_source(d, obs);
    if (want.empty()) {
      CHECK(r.outcome == LocalizationResult::Outcome::kInconsistent);
    } else if (want.size() == 1) {
      CHECK(r.outcome == LocalizationResult::Outcome::kUnique);
      CHECK(r.source == want[0]);
    } else {
      CHECK(r.outcome == LocalizationResult::Outcome::kAmbiguous);
      CHECK(r.candidates == want);
    }
  }
}
