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

#ifndef DRS_WHEEL_HPP_
#define DRS_WHEEL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "drs/exact_trees.hpp"
#include "drs/graph.hpp"
#include "drs/solve_result.hpp"

namespace drs {

// Sentinel for an undefined offset.
inline constexpr int kInf = 1 << 29;

// Wheels need this many connectors before the closeness characterization
// applies.
inline constexpr int kMinWheelConnectors = 13;

// Rim geometry of a wheel. Rim vertices are addressed by position
// 0..N-1 along `rim`; position arithmetic is mod N.
struct WheelGeometry {
  VertexId hub = 0;
  int N = 0;
  std::vector<VertexId> rim;
  // vertex id -> rim position, -1 for the hub.
  std::vector<int> pos_of;
  std::vector<char> connector;
  int num_connectors = 0;

  // Rim-to-rim and rim-to-hub distances in the whole wheel.
  std::vector<int> dist;
  std::vector<int> hub_dist;
  // close[a * N + b]: d(a, b) < d(a, hub) + d(hub, b).
  std::vector<char> close;

  // P_s = positions s - left_reach[s] .. s + right_reach[s].
  std::vector<int> left_reach, right_reach;
  // Minimal continuity offsets and bad-pair offset, kInf if none.
  std::vector<int> delta_l, delta_r, delta;

  int at(int p) const { return ((p % N) + N) % N; }
  int cw(int a, int b) const { return at(b - a); }
  int d(int a, int b) const { return dist[at(a) * N + at(b)]; }
  int dh(int a) const { return hub_dist[at(a)]; }
  bool is_close(int a, int b) const { return close[at(a) * N + at(b)]; }
  // x is close to s and the clockwise walk x..s is a shortest path.
  bool close_from_left(int x, int s) const {
    return is_close(x, s) && d(x, s) == cw(x, s);
  }
  bool close_from_right(int x, int s) const {
    return is_close(x, s) && d(s, x) == cw(s, x);
  }
  int range_size(int s) const { return left_reach[s] + right_reach[s] + 1; }
};

// Throws WrongGraphClass if removing `hub` does not leave a rim cycle.
WheelGeometry wheel_geometry(const WeightedGraph& g, VertexId hub);

// Direct check of the three closeness conditions (every rim vertex close to
// S; each observer's minimal bad pair covered by a neighboring observer;
// left and right continuity). `set` holds vertex ids. Throws InvalidGraph if
// `set` contains the hub, WrongGraphClass for fewer than 13 connectors.
bool check_wheel_drs(const WheelGeometry& geom, std::span<const VertexId> set);

// Every 3 consecutive rim positions hold >= 1 member and every 5 hold >= 2.
// `positions` are rim positions.
bool satisfies_wheel_windows(int rim_size, std::span<const int> positions);

// Exact O(n) solver for complete wheels; n < 7 goes to the oracle.
SolveResult solve_complete_wheel(const WeightedGraph& g);

// Exact O(n^3) solver for wheels with >= 13 connectors. Smaller wheels go to
// the oracle when 2^n <= 2^20, else to solve_kaug with `budget`.
SolveResult solve_general_wheel(const WeightedGraph& g,
                                std::uint64_t budget = kDefaultKAugBudget);

}  // namespace drs

#endif  // DRS_WHEEL_HPP_
