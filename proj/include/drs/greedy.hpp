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

#ifndef DRS_GREEDY_HPP_
#define DRS_GREEDY_HPP_

#include <vector>

#include "drs/core.hpp"
#include "drs/graph.hpp"
#include "drs/solve_result.hpp"

namespace drs {

// Entropy drop H(p) - H(p refined by t). Always >= 0, and >= 1 when > 0.
double information_content(const DistanceMatrix& d, const Partition& p,
                           const SuperTest& t);

// Same for a single-vertex resolving test with signature d(v, x).
double information_content_single(const DistanceMatrix& d, const Partition& p,
                                  VertexId x);

// Run of the weighted super-test greedy from one root.
struct GreedyTrace {
  VertexId root = 0;
  std::vector<SuperTest> chosen;
  // Entropy after each selection; strictly decreasing, last entry 0.
  std::vector<double> entropy_after;
  // IC of each selection at the moment it was made.
  std::vector<double> ic_at_selection;

  // {root} plus every probe, ascending.
  std::vector<VertexId> observer_set() const;
  double test_weight() const;
};

// Greedy for the minimum-weight super-test set over U_root: repeatedly adds
// the test maximising IC / w until every class is a singleton.
//
// Ordering of candidates (only IC > 0 is eligible): zero-weight probes
// first, then IC / w descending, then IC descending, then probe id
// ascending. Ratio and IC ties use a relative tolerance of 1e-9.
GreedyTrace solve_mwsts(const WeightedGraph& g, const DistanceMatrix& d,
                        VertexId root);

struct GreedyOptions {
  // Root runs are independent; > 1 runs them on worker threads. Output is
  // identical to the sequential run.
  int threads = 1;
};

// Best of solve_mwsts over every root, by (weight, root id).
SolveResult greedy_mwdrs(const WeightedGraph& g, const DistanceMatrix& d,
                         const GreedyOptions& options = {});
SolveResult greedy_mwdrs(const WeightedGraph& g,
                         const GreedyOptions& options = {});

// Same greedy with single-vertex tests; returns a resolving set.
SolveResult greedy_weighted_md(const WeightedGraph& g, const DistanceMatrix& d);
SolveResult greedy_weighted_md(const WeightedGraph& g);

// ln n + ln log2 n + 1.
double uniform_ratio_bound(int n);
// ln(max over pairs {u,v} of IC({u,v}, {})) + 1.
double instance_ratio_bound(const DistanceMatrix& d);

}  // namespace drs

#endif  // DRS_GREEDY_HPP_
