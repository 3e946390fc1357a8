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

#include "drs/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "drs/oracle.hpp"

namespace drs {

namespace {

using Rng = std::mt19937_64;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<double> make_weights(int n, const WeightSpec& ws, Rng& rng) {
  if (ws.kind == WeightSpec::Kind::kUnit) return std::vector<double>(n, 1.0);
  require(ws.lo >= 0 && ws.lo <= ws.hi, "weight range must satisfy 0 <= lo <= hi");
  std::uniform_int_distribution<int> dist(ws.lo, ws.hi);
  std::vector<double> w(n);
  for (auto& x : w) x = dist(rng);
  return w;
}

// Random recursive tree on n vertices with shuffled labels.
std::vector<Edge> random_tree(int n, Rng& rng) {
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(label[pick(rng)], label[i]);
  }
  return edges;
}

std::vector<Edge> cycle_edges(int n, int offset = 0) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(offset + i, offset + (i + 1) % n);
  return edges;
}

std::vector<Edge> add_random_edges(int n, std::vector<Edge> edges, int extra,
                                   Rng& rng) {
  std::set<Edge> have;
  for (auto [u, v] : edges) have.insert(std::minmax(u, v));
  std::vector<Edge> missing;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!have.count({u, v})) missing.emplace_back(u, v);
    }
  }
  require(extra <= static_cast<int>(missing.size()),
          "not enough vertex pairs for the requested extra edges");
  std::shuffle(missing.begin(), missing.end(), rng);
  edges.insert(edges.end(), missing.begin(), missing.begin() + extra);
  return edges;
}

std::vector<Edge> wheel_edges(int rim, const std::vector<int>& connectors) {
  std::vector<Edge> edges = cycle_edges(rim);
  for (int c : connectors) edges.emplace_back(c, rim);
  return edges;
}

}  // namespace

int ceil_log2(int n) {
  int d = 0;
  while ((1 << d) < n) ++d;
  return d;
}

GeneratedInstance generate_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const std::string& f = spec.family;
  int n = 0;
  std::vector<Edge> edges;

  if (f == "tree") {
    require(spec.n >= 2, "tree needs n >= 2");
    n = spec.n;
    edges = random_tree(n, rng);
  } else if (f == "comb") {
    require(spec.n >= 2, "comb needs h >= 2");
    const int h = spec.n;
    n = 2 * h;
    // Spine 0..h-1, tooth h + i hangs off spine vertex i.
    for (int i = 0; i + 1 < h; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < h; ++i) edges.emplace_back(i, h + i);
  } else if (f == "cycle") {
    require(spec.n >= 3, "cycle needs n >= 3");
    n = spec.n;
    edges = cycle_edges(n);
  } else if (f == "kaug") {
    require(spec.n >= 2 && spec.k >= 0, "kaug needs n >= 2 and k >= 0");
    n = spec.n;
    edges = add_random_edges(n, random_tree(n, rng), spec.k, rng);
  } else if (f == "wheel") {
    const int rim = spec.n, c = spec.connectors;
    require(rim >= 4 && c >= 3 && c <= rim,
            "wheel needs rim >= 4 and 3 <= connectors <= rim");
    n = rim + 1;
    std::vector<int> conn;
    if (spec.pattern == "even") {
      for (int i = 0; i < c; ++i) {
        conn.push_back(static_cast<int>(static_cast<long long>(i) * rim / c));
      }
    } else if (spec.pattern == "random") {
      std::vector<int> all(rim);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      conn.assign(all.begin(), all.begin() + c);
      std::sort(conn.begin(), conn.end());
    } else {
      throw std::invalid_argument("wheel pattern must be even or random");
    }
    edges = wheel_edges(rim, conn);
  } else if (f == "complete-wheel") {
    require(spec.n >= 3, "complete-wheel needs rim >= 3");
    n = spec.n + 1;
    std::vector<int> conn(spec.n);
    std::iota(conn.begin(), conn.end(), 0);
    edges = wheel_edges(spec.n, conn);
  } else if (f == "prism") {
    require(spec.n >= 3, "prism needs m >= 3");
    const int m = spec.n;
    n = 2 * m;
    edges = cycle_edges(m);
    const auto outer = cycle_edges(m, m);
    edges.insert(edges.end(), outer.begin(), outer.end());
    for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  } else if (f == "random" || f == "reduction") {
    require(spec.n >= 2, f + " needs n >= 2");
    require(spec.p >= 0 && spec.p <= 1, "p must lie in [0, 1]");
    n = spec.n;
    edges = random_tree(n, rng);
    std::set<Edge> have;
    for (auto [u, v] : edges) have.insert(std::minmax(u, v));
    std::bernoulli_distribution coin(spec.p);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!have.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
      }
    }
  } else {
    throw std::invalid_argument("unknown family: " + f);
  }

  if (f == "reduction") {
    Reduction red = generate_reduction(WeightedGraph(std::vector<double>(n, 1.0), edges));
    return {std::move(red.gprime), std::move(red.witness)};
  }
  return {WeightedGraph(make_weights(n, spec.weights, rng), edges), std::nullopt};
}

WeightedGraph generate(const GenSpec& spec) {
  return generate_instance(spec).graph;
}

Reduction generate_reduction(const WeightedGraph& g) {
  const int n = g.num_vertices();
  const int d = ceil_log2(n);
  // Gadget pairs k = 1..d+1, then a, then b.
  const int pairs = d + 3;
  const int ka = d + 1, kb = d + 2;
  auto v0 = [&](int i) { return i; };
  auto v1 = [&](int i) { return n + i; };
  auto u0 = [&](int k) { return 2 * n + 2 * k; };
  auto u1 = [&](int k) { return 2 * n + 2 * k + 1; };
  const int c = 2 * n + 2 * pairs;
  const int total = c + 1;

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(v1(a), v1(b));
  for (int k = 0; k <= d; ++k) edges.emplace_back(u0(k), u1(k));
  edges.emplace_back(u0(kb), u1(kb));
  for (int i = 0; i < n; ++i) {
    for (VertexId x : {v0(i), v1(i)}) {
      edges.emplace_back(x, u0(ka));
      edges.emplace_back(x, u1(ka));
      // Vertex index j = i + 1; bit k (1-based from the least significant).
      for (int k = 0; k <= d; ++k) {
        if ((i + 1) >> k & 1) {
          edges.emplace_back(x, u0(k));
          edges.emplace_back(x, u1(k));
        }
      }
    }
  }
  for (int x = 0; x < c; ++x) edges.emplace_back(x, c);

  Reduction r{WeightedGraph(std::vector<double>(total, 1.0), edges), {}, d};
  for (int k = 0; k < pairs; ++k) r.witness.push_back(u1(k));
  for (VertexId v : brute_min_dominating_set(g)) r.witness.push_back(v1(v));
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

}  // namespace drs
