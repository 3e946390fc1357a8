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

#include "drs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace drs {

namespace {

using Mask = std::uint32_t;

void check_limit(int n, std::uint64_t limit, const char* what) {
  if (n >= 32 || (std::uint64_t{1} << n) > limit) {
    throw TooLarge(std::string(what) + ": 2^" + std::to_string(n) +
                   " subsets exceed the enumeration limit of " +
                   std::to_string(limit));
  }
}

// Visits subsets of `item_weights.size()` items in (weight, cardinality,
// lexicographic) order; returns the first mask accepted by `feasible`.
template <typename Pred>
std::optional<Mask> first_feasible(const std::vector<double>& item_weights,
                                   Pred feasible) {
  const int n = static_cast<int>(item_weights.size());
  const Mask count = Mask{1} << n;
  std::vector<double> w(count, 0.0);
  for (Mask m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    w[m] = w[m & (m - 1)] + item_weights[low];
  }
  std::vector<Mask> order(count);
  std::iota(order.begin(), order.end(), Mask{0});
  std::sort(order.begin(), order.end(), [&](Mask a, Mask b) {
    if (w[a] != w[b]) return w[a] < w[b];
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // Equal size: the sorted id list of `a` is smaller iff the lowest
    // differing item belongs to `a`.
    const Mask diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  });
  for (Mask m : order) {
    if (feasible(m)) return m;
  }
  return std::nullopt;
}

std::vector<VertexId> mask_to_set(Mask m, std::span<const VertexId> items) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (m >> i & 1u) out.push_back(items[i]);
  }
  return out;
}

}  // namespace

SolveResult brute_min_drs(const WeightedGraph& g, const DistanceMatrix& d,
                          std::uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  check_limit(n, limit, "brute_min_drs");
  const int diam = d.diameter();
  detail::LabelRefiner refiner(n, 2 * diam + 1);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);

  auto is_drs_mask = [&](Mask m) {
    if (std::popcount(m) < 2) return false;
    refiner.reset();
    const VertexId s0 = std::countr_zero(m);
    for (Mask rest = m & (m - 1); rest; rest &= rest - 1) {
      const VertexId s = std::countr_zero(rest);
      refiner.split([&](int v) { return d(v, s0) - d(v, s) + diam; });
      if (refiner.all_singletons()) return true;
    }
    return false;
  };
  const auto best = first_feasible(g.weights(), is_drs_mask);
  // V itself is always a DRS, so `best` is set.
  SolveResult r = make_result(g, mask_to_set(*best, all), "oracle", true);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SolveResult brute_min_drs(const WeightedGraph& g, std::uint64_t limit) {
  check_limit(g.num_vertices(), limit, "brute_min_drs");
  return brute_min_drs(g, DistanceMatrix(g), limit);
}

SolveResult brute_min_resolving_set(const WeightedGraph& g,
                                    const DistanceMatrix& d,
                                    std::uint64_t limit) {
  const int n = g.num_vertices();
  check_limit(n, limit, "brute_min_resolving_set");
  detail::LabelRefiner refiner(n, d.diameter() + 1);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  auto resolves = [&](Mask m) {
    refiner.reset();
    for (Mask rest = m; rest; rest &= rest - 1) {
      const VertexId s = std::countr_zero(rest);
      refiner.split([&](int v) { return d(v, s); });
      if (refiner.all_singletons()) return true;
    }
    return false;
  };
  const auto best = first_feasible(g.weights(), resolves);
  return make_result(g, mask_to_set(*best, all), "oracle-md", true);
}

MwstsSolution brute_mwsts(const WeightedGraph& g, const DistanceMatrix& d,
                          VertexId root, std::uint64_t limit) {
  const int n = g.num_vertices();
  check_limit(n - 1, limit, "brute_mwsts");
  std::vector<VertexId> probes;
  std::vector<double> probe_weights;
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    probes.push_back(v);
    probe_weights.push_back(g.weight(v));
  }
  const int diam = d.diameter();
  detail::LabelRefiner refiner(n, 2 * diam + 1);
  auto separates_all = [&](Mask m) {
    refiner.reset();
    for (Mask rest = m; rest; rest &= rest - 1) {
      const VertexId s = probes[std::countr_zero(rest)];
      refiner.split([&](int v) { return d(v, root) - d(v, s) + diam; });
      if (refiner.all_singletons()) return true;
    }
    return false;
  };
  const auto best = first_feasible(probe_weights, separates_all);
  MwstsSolution sol;
  sol.root = root;
  sol.probes = mask_to_set(*best, probes);
  sol.weight = g.weight_of(sol.probes);
  return sol;
}

std::vector<VertexId> brute_min_dominating_set(const WeightedGraph& g,
                                               std::uint64_t limit) {
  const int n = g.num_vertices();
  check_limit(n, limit, "brute_min_dominating_set");
  std::vector<Mask> closed(n);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = Mask{1} << v;
    for (VertexId u : g.neighbors(v)) closed[v] |= Mask{1} << u;
  }
  const Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
  for (int k = 1; k <= n; ++k) {
    // Selector with k leading ones; prev_permutation walks index
    // combinations in lexicographic order.
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
      Mask covered = 0;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) covered |= closed[i];
      }
      if (covered == full) {
        std::vector<VertexId> out;
        for (int i = 0; i < n; ++i) {
          if (pick[i]) out.push_back(i);
        }
        return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {};
}

}  // namespace drs
