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

#include "drs/exact_trees.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <numeric>

#include "drs/core.hpp"
#include "drs/greedy.hpp"

namespace drs {

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<VertexId> leaves_of(const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

SolveResult solve_tree(const WeightedGraph& g) {
  const auto start = std::chrono::steady_clock::now();
  if (g.num_edges() != g.num_vertices() - 1) {
    throw WrongGraphClass("solve_tree: graph is not a tree");
  }
  SolveResult r = make_result(g, leaves_of(g), "tree", true);
  r.seconds = elapsed_since(start);
  return r;
}

SolveResult solve_cycle(const WeightedGraph& g) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<VertexId> ring = cycle_order(g);
  const int n = static_cast<int>(ring.size());
  const bool exact = g.integral_weights();
  const int p = (n + 1) / 2;

  // Rotate so the lightest vertex (smallest id on ties) sits at index p.
  int m = 0;
  for (int i = 1; i < n; ++i) {
    const double wi = g.weight(ring[i]), wm = g.weight(ring[m]);
    if (wi < wm || (wi == wm && ring[i] < ring[m])) m = i;
  }
  std::vector<VertexId> best(ring.begin(), ring.end());
  double best_w = g.total_weight();
  auto offer = [&](std::vector<VertexId> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const double ws = g.weight_of(s);
    if (weight_less(ws, best_w, exact)) {
      best = std::move(s);
      best_w = ws;
    }
  };

  // One orientation misses the triples {v_p, v_n, v_h}, p < h < n; the
  // mirrored labeling around v_p reaches them.
  for (int dir : {1, -1}) {
    // v(i) for 1-based i, any integer.
    auto v = [&](int i) { return ring[(((m + dir * (i - p)) % n) + n) % n]; };
    auto w = [&](int i) { return g.weight(v(i)); };

    // Prefix minima over v_1..v_p.
    std::vector<int> idx{1};
    double omega = w(1);
    for (int h = 1; h <= p; ++h) {
      if (weight_less(w(h), omega, exact)) {
        idx.push_back(h);
        omega = w(h);
      }
    }
    // A tie between v_p and an earlier prefix minimum leaves v_p out of the
    // list; the triples below need it as the last index.
    if (idx.back() != p) idx.push_back(p);

    if (n % 2 == 1 && dir == 1) {
      for (int i = 1; i <= n; ++i) offer({v(i), v(i + p - 1)});
    }
    for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
      int u = idx[j] + p;
      for (int h = idx[j] + p; h <= idx[j + 1] + p; ++h) {
        if (weight_less(w(h), w(u), exact)) u = h;
      }
      offer({v(p), v(idx[j]), v(u)});
    }
  }

  SolveResult r = make_result(g, std::move(best), "cycle", true);
  r.seconds = elapsed_since(start);
  return r;
}

bool is_drs_cycle(int n, std::span<const VertexId> set) {
  std::vector<VertexId> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 2) return false;
  const int half_up = (n + 1) / 2;
  bool short_arc = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int arc = i + 1 < s.size() ? s[i + 1] - s[i] : n - s[i] + s[0];
    if (arc > half_up) return false;
    if (2 * arc < n) short_arc = true;
  }
  return short_arc;
}

BaseGraphReduction base_graph(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (g.num_edges() == n - 1) {
    throw WrongGraphClass("base_graph: graph is a tree");
  }
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) queue.push_back(v);
  }
  BaseGraphReduction r{g, {}, leaves_of(g), {}, {}};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    gone[v] = 1;
    r.removed.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      if (!gone[u] && --deg[u] == 1) queue.push_back(u);
    }
  }

  std::vector<VertexId> to_base(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (gone[v]) continue;
    to_base[v] = static_cast<VertexId>(r.embed.size());
    r.embed.push_back(v);
  }
  std::vector<double> weights;
  std::vector<Edge> edges;
  for (VertexId b = 0; b < static_cast<VertexId>(r.embed.size()); ++b) {
    const VertexId v = r.embed[b];
    bool root = false;
    for (VertexId u : g.neighbors(v)) {
      if (gone[u]) {
        root = true;
      } else if (v < u) {
        edges.emplace_back(b, to_base[u]);
      }
    }
    if (root) r.roots.push_back(b);
    weights.push_back(root ? 0.0 : g.weight(v));
  }
  r.base = WeightedGraph(std::move(weights), edges);
  return r;
}

PathDecomposition path_decomposition(const WeightedGraph& gb) {
  const int n = gb.num_vertices();
  bool any_branch = false;
  for (VertexId v = 0; v < n; ++v) {
    if (gb.degree(v) < 2) {
      throw WrongGraphClass("path_decomposition: vertex of degree < 2");
    }
    any_branch |= gb.degree(v) >= 3;
  }
  if (!any_branch) {
    throw WrongGraphClass("path_decomposition: no branching vertex");
  }

  // Edge (u, v) is used once its slot in u's adjacency list is marked.
  std::vector<std::vector<char>> used(n);
  for (VertexId v = 0; v < n; ++v) used[v].assign(gb.degree(v), 0);
  auto mark = [&](VertexId u, VertexId v) {
    const auto nb = gb.neighbors(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    used[u][it - nb.begin()] = 1;
  };

  PathDecomposition out;
  for (VertexId b = 0; b < n; ++b) {
    if (gb.degree(b) < 3) continue;
    const auto nb = gb.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (used[b][i]) continue;
      std::vector<VertexId> path{b};
      VertexId prev = b, cur = nb[i];
      mark(b, cur);
      mark(cur, b);
      while (true) {
        path.push_back(cur);
        if (gb.degree(cur) >= 3) break;
        const auto cn = gb.neighbors(cur);
        const VertexId next = cn[0] == prev ? cn[1] : cn[0];
        mark(cur, next);
        mark(next, cur);
        prev = cur;
        cur = next;
      }
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

namespace {

// Subsets of size <= 4 of `items`, each with its weight, lightest first.
struct Choice {
  std::vector<VertexId> members;
  double weight = 0;
};

std::vector<Choice> small_subsets(const WeightedGraph& g,
                                  const std::vector<VertexId>& items,
                                  std::size_t max_size) {
  std::vector<Choice> out{{}};
  // Extend by items in order so each subset appears once.
  std::vector<std::pair<Choice, std::size_t>> frontier{{{}, 0}};
  while (!frontier.empty()) {
    auto [c, from] = std::move(frontier.back());
    frontier.pop_back();
    if (c.members.size() == max_size) continue;
    for (std::size_t i = from; i < items.size(); ++i) {
      Choice next = c;
      next.members.push_back(items[i]);
      next.weight += g.weight(items[i]);
      out.push_back(next);
      frontier.emplace_back(std::move(next), i + 1);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Choice& a, const Choice& b) {
    return a.weight < b.weight;
  });
  return out;
}

std::uint64_t binomial_prefix_sum(std::uint64_t len, std::uint64_t max_k) {
  std::uint64_t total = 0, c = 1;
  for (std::uint64_t k = 0; k <= max_k && k <= len; ++k) {
    total += c;
    c = c * (len - k) / (k + 1);
  }
  return total;
}

SolveResult recombine(const WeightedGraph& g, const BaseGraphReduction& red,
                      const std::vector<VertexId>& base_set,
                      const char* algorithm) {
  std::vector<char> is_root(red.base.num_vertices(), 0);
  for (VertexId r : red.roots) is_root[r] = 1;
  std::vector<VertexId> set = red.leaves;
  for (VertexId b : base_set) {
    if (!is_root[b]) set.push_back(red.embed[b]);
  }
  return make_result(g, std::move(set), algorithm, true);
}

}  // namespace

SolveResult solve_kaug(const WeightedGraph& g, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  const int k = g.num_edges() - n + 1;
  if (k == 0) return solve_tree(g);

  const BaseGraphReduction red = base_graph(g);
  const WeightedGraph& gb = red.base;
  if (k == 1) {
    const SolveResult cyc = solve_cycle(gb);
    SolveResult r = recombine(g, red, cyc.set, "ktree");
    r.seconds = elapsed_since(start);
    return r;
  }

  const PathDecomposition dec = path_decomposition(gb);
  // Groups: all branching vertices (any subset), then the interior of each
  // chain (at most 4). Closed chains are cut in the middle into two groups.
  std::vector<VertexId> branching;
  for (VertexId v = 0; v < gb.num_vertices(); ++v) {
    if (gb.degree(v) >= 3) branching.push_back(v);
  }
  std::vector<std::vector<VertexId>> interiors;
  for (const auto& path : dec.paths) {
    std::vector<VertexId> inner(path.begin() + 1, path.end() - 1);
    if (path.front() == path.back() && inner.size() > 1) {
      const auto mid = inner.begin() + inner.size() / 2;
      interiors.emplace_back(inner.begin(), mid);
      interiors.emplace_back(mid, inner.end());
    } else if (!inner.empty()) {
      interiors.push_back(std::move(inner));
    }
  }
  std::stable_sort(interiors.begin(), interiors.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  // Candidate count, saturating at budget + 1.
  std::uint64_t count = branching.size() >= 63 ? budget + 1
                                               : std::uint64_t{1} << branching.size();
  for (const auto& inner : interiors) {
    const std::uint64_t f = binomial_prefix_sum(inner.size(), 4);
    count = count > (budget + 1) / f ? budget + 1 : count * f;
  }
  if (count > budget) {
    SolveResult r = greedy_mwdrs(g);
    r.seconds = elapsed_since(start);
    return r;
  }

  std::vector<std::vector<Choice>> groups;
  groups.push_back(small_subsets(gb, branching, branching.size()));
  for (const auto& inner : interiors) groups.push_back(small_subsets(gb, inner, 4));

  const DistanceMatrix d(gb);
  const int diam = d.diameter();
  detail::LabelRefiner refiner(gb.num_vertices(), 2 * diam + 1);
  auto drs_check = [&](const std::vector<VertexId>& s) {
    if (s.size() < 2) return false;
    refiner.reset();
    for (std::size_t i = 1; i < s.size(); ++i) {
      refiner.split([&](int v) { return d(v, s[0]) - d(v, s[i]) + diam; });
      if (refiner.all_singletons()) return true;
    }
    return false;
  };

  std::vector<VertexId> best(gb.num_vertices());
  std::iota(best.begin(), best.end(), 0);
  double best_w = gb.total_weight();
  const bool exact = gb.integral_weights();
  std::vector<VertexId> current;

  auto dfs = [&](auto&& self, std::size_t gi, double partial) -> void {
    if (gi == groups.size()) {
      if (weight_less(partial, best_w, exact) && drs_check(current)) {
        best = current;
        best_w = partial;
      }
      return;
    }
    for (const Choice& c : groups[gi]) {
      // Choices are sorted by weight, so later ones cannot do better either.
      if (!weight_less(partial + c.weight, best_w, exact)) break;
      current.insert(current.end(), c.members.begin(), c.members.end());
      self(self, gi + 1, partial + c.weight);
      current.resize(current.size() - c.members.size());
    }
  };
  dfs(dfs, 0, 0.0);

  SolveResult r = recombine(g, red, best, "ktree");
  r.seconds = elapsed_since(start);
  return r;
}

}  // namespace drs
