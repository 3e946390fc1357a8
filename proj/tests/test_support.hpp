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

#ifndef DRS_TESTS_TEST_SUPPORT_HPP_
#define DRS_TESTS_TEST_SUPPORT_HPP_

// Test-side oracles. They share nothing with the library beyond
// WeightedGraph's adjacency accessors.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "drs/graph.hpp"

namespace drs::testing {

inline std::vector<std::vector<int>> bfs_all(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (VertexId v : g.neighbors(u)) {
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
      }
    }
  }
  return d;
}

// Every pair u < v checked against every pair x, y of S.
inline bool naive_is_drs(const std::vector<std::vector<int>>& d,
                         const std::vector<VertexId>& S) {
  const int n = static_cast<int>(d.size());
  if (S.size() < 2) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool resolved = false;
      for (std::size_t i = 0; i < S.size() && !resolved; ++i) {
        for (std::size_t j = 0; j < S.size() && !resolved; ++j) {
          const int x = S[i], y = S[j];
          resolved = d[u][x] - d[u][y] != d[v][x] - d[v][y];
        }
      }
      if (!resolved) return false;
    }
  }
  return true;
}

inline bool naive_is_drs(const WeightedGraph& g, const std::vector<VertexId>& S) {
  return naive_is_drs(bfs_all(g), S);
}

inline std::vector<VertexId> mask_set(std::uint64_t mask, int n) {
  std::vector<VertexId> s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.push_back(i);
  }
  return s;
}

// Minimum weight over all DRS subsets by the naive checker.
inline double naive_min_drs_weight(const WeightedGraph& g) {
  const auto d = bfs_all(g);
  const int n = g.num_vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto s = mask_set(m, n);
    const double w = g.weight_of(s);
    if (w < best && naive_is_drs(d, s)) best = w;
  }
  return best;
}

// Sources u consistent with the times: t_x - d(u, x) constant over S.
inline std::vector<VertexId> naive_sources(const std::vector<std::vector<int>>& d,
                                           const std::vector<VertexId>& S,
                                           const std::vector<std::int64_t>& t) {
  std::vector<VertexId> out;
  for (int u = 0; u < static_cast<int>(d.size()); ++u) {
    std::set<std::int64_t> offsets;
    for (std::size_t i = 0; i < S.size(); ++i) offsets.insert(t[i] - d[u][S[i]]);
    if (offsets.size() == 1) out.push_back(u);
  }
  return out;
}

// Random connected graph: random tree plus each other pair with probability p.
inline WeightedGraph random_connected(int n, double p, std::mt19937_64& rng,
                                      bool unit = true, int max_w = 9) {
  std::vector<Edge> edges;
  std::set<Edge> have;
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.emplace_back(j, i);
    have.insert({j, i});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!have.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<double> w(n, 1.0);
  if (!unit) {
    std::uniform_int_distribution<int> dw(1, max_w);
    for (auto& x : w) x = dw(rng);
  }
  return WeightedGraph(w, edges);
}

inline WeightedGraph make_graph(int n, std::vector<Edge> edges,
                                std::vector<double> w = {}) {
  if (w.empty()) w.assign(n, 1.0);
  return WeightedGraph(std::move(w), edges);
}

inline WeightedGraph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline WeightedGraph cycle_graph(int n, std::vector<double> w = {}) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e, std::move(w));
}

inline WeightedGraph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

}  // namespace drs::testing

#endif  // DRS_TESTS_TEST_SUPPORT_HPP_
