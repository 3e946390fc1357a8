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

#include "drs/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace drs {

namespace {

// Counts group sizes of a key over a class and returns sum of log2(size!).
// Keys are offset into [0, span).
class GroupCounter {
 public:
  explicit GroupCounter(int span) : counts_(span, 0) {}

  template <typename KeyFn>
  double split_entropy(std::span<const VertexId> cls, KeyFn key) {
    touched_.clear();
    for (VertexId v : cls) {
      const int k = key(v);
      if (counts_[k]++ == 0) touched_.push_back(k);
    }
    double h = 0;
    for (int k : touched_) {
      h += log2_factorial(counts_[k]);
      counts_[k] = 0;
    }
    return h;
  }

 private:
  std::vector<int> counts_;
  std::vector<int> touched_;
};

template <typename KeyFn>
double ic_by(const Partition& p, GroupCounter& counter, KeyFn key) {
  double drop = 0;
  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    drop += log2_factorial(static_cast<int>(cls.size())) -
            counter.split_entropy(cls, key);
  }
  return std::max(0.0, drop);
}

bool approx_equal(double a, double b) { return weights_equal(a, b, false); }

struct Candidate {
  VertexId probe = -1;
  double ic = 0;
  double weight = 0;
};

// True when `a` should be selected over `b`.
bool better(const Candidate& a, const Candidate& b) {
  if (b.probe < 0) return true;
  const bool a_free = a.weight == 0, b_free = b.weight == 0;
  if (a_free != b_free) return a_free;
  if (!a_free) {
    const double ra = a.ic / a.weight, rb = b.ic / b.weight;
    if (!approx_equal(ra, rb)) return ra > rb;
  }
  if (!approx_equal(a.ic, b.ic)) return a.ic > b.ic;
  return a.probe < b.probe;
}

// Shared skeleton: `ic_of(p, v)` scores candidate v, `refine(p, v)` applies it.
template <typename IcFn, typename RefineFn>
void run_greedy(const WeightedGraph& g, Partition& p, std::vector<char>& used,
                IcFn ic_of, RefineFn refine, std::vector<Candidate>& picks) {
  const int n = g.num_vertices();
  while (!p.all_singletons()) {
    Candidate best;
    for (VertexId v = 0; v < n; ++v) {
      if (used[v]) continue;
      const double ic = ic_of(p, v);
      if (ic <= 0) continue;
      Candidate c{v, ic, g.weight(v)};
      if (better(c, best)) best = c;
    }
    if (best.probe < 0) {
      throw std::logic_error("greedy stalled with a non-trivial partition");
    }
    used[best.probe] = 1;
    p = refine(p, best.probe);
    picks.push_back(best);
  }
}

}  // namespace

double information_content(const DistanceMatrix& d, const Partition& p,
                           const SuperTest& t) {
  const int diam = d.diameter();
  GroupCounter counter(2 * diam + 1);
  return ic_by(p, counter, [&](VertexId v) {
    return d(v, t.anchor) - d(v, t.probe) + diam;
  });
}

double information_content_single(const DistanceMatrix& d, const Partition& p,
                                  VertexId x) {
  GroupCounter counter(d.diameter() + 1);
  return ic_by(p, counter, [&](VertexId v) { return d(v, x); });
}

std::vector<VertexId> GreedyTrace::observer_set() const {
  std::vector<VertexId> out{root};
  for (const auto& t : chosen) out.push_back(t.probe);
  std::sort(out.begin(), out.end());
  return out;
}

double GreedyTrace::test_weight() const {
  double w = 0;
  for (const auto& t : chosen) w += t.weight;
  return w;
}

GreedyTrace solve_mwsts(const WeightedGraph& g, const DistanceMatrix& d,
                        VertexId root) {
  const int n = g.num_vertices();
  const int diam = d.diameter();
  GroupCounter counter(2 * diam + 1);
  Partition p = Partition::whole(n);
  std::vector<char> used(n, 0);
  used[root] = 1;

  std::vector<Candidate> picks;
  run_greedy(
      g, p, used,
      [&](const Partition& part, VertexId v) {
        return ic_by(part, counter, [&](VertexId u) {
          return d(u, root) - d(u, v) + diam;
        });
      },
      [&](const Partition& part, VertexId v) {
        return refine_partition(d, part, SuperTest{root, v, g.weight(v)});
      },
      picks);

  GreedyTrace trace;
  trace.root = root;
  // Replay to record the entropy after each step.
  Partition replay = Partition::whole(n);
  for (const auto& c : picks) {
    SuperTest t{root, c.probe, c.weight};
    replay = refine_partition(d, replay, t);
    trace.chosen.push_back(t);
    trace.entropy_after.push_back(replay.entropy);
    trace.ic_at_selection.push_back(c.ic);
  }
  return trace;
}

double uniform_ratio_bound(int n) {
  return std::log(n) + std::log(std::log2(n)) + 1.0;
}

double instance_ratio_bound(const DistanceMatrix& d) {
  const int n = d.size();
  const int diam = d.diameter();
  GroupCounter counter(2 * diam + 1);
  std::vector<VertexId> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  const double h0 = log2_factorial(n);
  double best = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double ic = h0 - counter.split_entropy(all, [&](VertexId x) {
        return d(x, u) - d(x, v) + diam;
      });
      best = std::max(best, ic);
    }
  }
  return std::log(best) + 1.0;
}

SolveResult greedy_mwdrs(const WeightedGraph& g, const DistanceMatrix& d,
                         const GreedyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  std::vector<std::vector<VertexId>> sets(n);
  std::vector<double> weights(n);
  auto run_root = [&](VertexId x) {
    const GreedyTrace trace = solve_mwsts(g, d, x);
    sets[x] = trace.observer_set();
    weights[x] = g.weight(x) + trace.test_weight();
  };

  const int threads = std::clamp(options.threads, 1, n);
  if (threads == 1) {
    for (VertexId x = 0; x < n; ++x) run_root(x);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (VertexId x = t; x < n; x += threads) run_root(x);
      });
    }
  }

  const bool exact = g.integral_weights();
  VertexId best = 0;
  for (VertexId x = 1; x < n; ++x) {
    if (weight_less(weights[x], weights[best], exact)) best = x;
  }
  SolveResult r = make_result(g, sets[best], "greedy", false);
  r.uniform_ratio_bound = uniform_ratio_bound(n);
  r.instance_ratio_bound = instance_ratio_bound(d);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SolveResult greedy_mwdrs(const WeightedGraph& g, const GreedyOptions& options) {
  return greedy_mwdrs(g, DistanceMatrix(g), options);
}

SolveResult greedy_weighted_md(const WeightedGraph& g, const DistanceMatrix& d) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  GroupCounter counter(d.diameter() + 1);
  Partition p = Partition::whole(n);
  std::vector<char> used(n, 0);
  std::vector<Candidate> picks;
  run_greedy(
      g, p, used,
      [&](const Partition& part, VertexId v) {
        return ic_by(part, counter, [&](VertexId u) { return d(u, v); });
      },
      [&](const Partition& part, VertexId v) {
        return refine_partition_single(d, part, v);
      },
      picks);
  std::vector<VertexId> set;
  for (const auto& c : picks) set.push_back(c.probe);

  double best_ic = 0;
  const Partition whole = Partition::whole(n);
  for (VertexId x = 0; x < n; ++x) {
    best_ic = std::max(best_ic, information_content_single(d, whole, x));
  }
  SolveResult r = make_result(g, std::move(set), "greedy-md", false);
  r.uniform_ratio_bound = uniform_ratio_bound(n);
  r.instance_ratio_bound = std::log(best_ic) + 1.0;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SolveResult greedy_weighted_md(const WeightedGraph& g) {
  return greedy_weighted_md(g, DistanceMatrix(g));
}

}  // namespace drs
