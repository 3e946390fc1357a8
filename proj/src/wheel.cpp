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

#include "drs/wheel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <limits>

#include "drs/core.hpp"
#include "drs/oracle.hpp"

namespace drs {

namespace {

constexpr double kInfWeight = std::numeric_limits<double>::infinity();

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

VertexId find_hub(const WeightedGraph& g, const char* who) {
  const GraphClass c = classify(g);
  if (!c.hub) throw WrongGraphClass(std::string(who) + ": graph is not a wheel");
  return *c.hub;
}

}  // namespace

WheelGeometry wheel_geometry(const WeightedGraph& g, VertexId hub) {
  auto rim = wheel_rim(g, hub);
  if (!rim) throw WrongGraphClass("wheel_geometry: no rim cycle around hub");
  WheelGeometry w;
  w.hub = hub;
  w.rim = std::move(*rim);
  const int N = w.N = static_cast<int>(w.rim.size());
  w.pos_of.assign(g.num_vertices(), -1);
  for (int i = 0; i < N; ++i) w.pos_of[w.rim[i]] = i;

  const DistanceMatrix dm(g);
  w.connector.assign(N, 0);
  w.hub_dist.resize(N);
  w.dist.resize(static_cast<std::size_t>(N) * N);
  w.close.resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    w.connector[a] = g.has_edge(hub, w.rim[a]);
    w.num_connectors += w.connector[a];
    w.hub_dist[a] = dm(w.rim[a], hub);
  }
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      const int dab = dm(w.rim[a], w.rim[b]);
      w.dist[a * N + b] = dab;
      w.close[a * N + b] = dab < w.hub_dist[a] + w.hub_dist[b];
    }
  }

  w.left_reach.assign(N, 0);
  w.right_reach.assign(N, 0);
  w.delta_l.assign(N, kInf);
  w.delta_r.assign(N, kInf);
  w.delta.assign(N, kInf);
  for (int s = 0; s < N; ++s) {
    int& L = w.left_reach[s];
    while (L < N - 1 && w.is_close(s - L - 1, s)) ++L;
    int& R = w.right_reach[s];
    while (R < N - 1 - L && w.is_close(s + R + 1, s)) ++R;

    for (int j = 1; j <= L; ++j) {
      const int x = s - j;
      if (w.close_from_left(x, s) && w.d(x, s) - w.d(x + 1, s) == 1 &&
          w.dh(x) - w.dh(x + 1) == 1) {
        w.delta_l[s] = j;
        break;
      }
    }
    for (int j = 1; j <= R; ++j) {
      const int x = s + j;
      if (w.close_from_right(x, s) && w.d(x, s) - w.d(x - 1, s) == 1 &&
          w.dh(x) - w.dh(x - 1) == 1) {
        w.delta_r[s] = j;
        break;
      }
    }
    for (int j = 1; j <= std::min(L, R) && 2 * j < N; ++j) {
      const int x = s - j, y = s + j;
      if (w.close_from_left(x, s) && w.close_from_right(y, s) &&
          w.d(x, s) == w.d(y, s) && w.dh(x) == w.dh(y)) {
        w.delta[s] = j;
        break;
      }
    }
  }
  return w;
}

namespace {

std::vector<int> to_positions(const WheelGeometry& w,
                              std::span<const VertexId> set) {
  std::vector<int> pos;
  for (VertexId v : set) {
    if (v < 0 || v >= static_cast<VertexId>(w.pos_of.size())) {
      throw InvalidGraph("vertex " + std::to_string(v + 1) + " out of range");
    }
    if (v == w.hub) throw InvalidGraph("observer set contains the hub");
    pos.push_back(w.pos_of[v]);
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  return pos;
}

}  // namespace

bool check_wheel_drs(const WheelGeometry& w, std::span<const VertexId> set) {
  if (w.num_connectors < kMinWheelConnectors) {
    throw WrongGraphClass("check_wheel_drs: fewer than 13 connectors");
  }
  const std::vector<int> S = to_positions(w, set);
  const int m = static_cast<int>(S.size());
  if (m < 2) return false;

  for (int x = 0; x < w.N; ++x) {
    if (std::none_of(S.begin(), S.end(), [&](int s) { return w.is_close(x, s); })) {
      return false;
    }
  }
  for (int i = 0; i < m; ++i) {
    const int s = S[i], sm = S[(i + m - 1) % m], sp = S[(i + 1) % m];
    // Minimal bad pair.
    for (int j = 1; 2 * j < w.N; ++j) {
      const int x = s - j, y = s + j;
      if (w.close_from_left(x, s) && w.close_from_right(y, s) &&
          w.d(x, s) == w.d(y, s) && w.dh(x) == w.dh(y)) {
        if (!(w.is_close(sm, x) || w.is_close(sm, y) || w.is_close(sp, x) ||
              w.is_close(sp, y))) {
          return false;
        }
        break;
      }
    }
    // Left continuity over C[sm, s).
    for (int t = 0; t < w.cw(sm, s); ++t) {
      const int x = sm + t;
      if (w.close_from_left(x, s) && w.d(x, s) - w.d(x + 1, s) == 1 &&
          w.dh(x) - w.dh(x + 1) == 1 && !w.close_from_right(x, sm)) {
        return false;
      }
    }
    // Right continuity over C(s, sp].
    for (int t = 1; t <= w.cw(s, sp); ++t) {
      const int x = s + t;
      if (w.close_from_right(x, s) && w.d(x, s) - w.d(x - 1, s) == 1 &&
          w.dh(x) - w.dh(x - 1) == 1 && !w.close_from_left(x, sp)) {
        return false;
      }
    }
  }
  return true;
}

bool satisfies_wheel_windows(int rim_size, std::span<const int> positions) {
  std::vector<char> in(rim_size, 0);
  for (int p : positions) in[((p % rim_size) + rim_size) % rim_size] = 1;
  for (int i = 0; i < rim_size; ++i) {
    int three = 0, five = 0;
    for (int t = 0; t < 5; ++t) {
      const int hit = in[(i + t) % rim_size];
      five += hit;
      if (t < 3) three += hit;
    }
    if (three < 1 || five < 2) return false;
  }
  return true;
}

namespace {

bool window_ok(unsigned five_bits) {
  return std::popcount(five_bits & 0x1fu) >= 2 && (five_bits & 0x1cu) != 0;
}

std::vector<int> windows_dp(const std::vector<double>& c) {
  const int N = static_cast<int>(c.size());
  double best = kInfWeight;
  std::vector<int> best_set;
  // Fix positions 0..3, then extend one position at a time with the last
  // four bits as state. Bit t of a state is position i - 3 + t.
  std::vector<std::array<double, 16>> cost(N);
  std::vector<std::array<signed char, 16>> parent(N);
  for (unsigned first = 0; first < 16; ++first) {
    if ((first & 0x7u) == 0 || (first & 0xeu) == 0) continue;
    for (auto& row : cost) row.fill(kInfWeight);
    double base = 0;
    for (int t = 0; t < 4; ++t) {
      if (first >> t & 1u) base += c[t];
    }
    cost[3][first] = base;
    for (int i = 4; i < N; ++i) {
      for (unsigned s = 0; s < 16; ++s) {
        if (cost[i - 1][s] == kInfWeight) continue;
        for (unsigned x = 0; x < 2; ++x) {
          const unsigned five = s | x << 4;
          if (!window_ok(five)) continue;
          const unsigned ns = five >> 1;
          const double v = cost[i - 1][s] + (x ? c[i] : 0.0);
          if (v < cost[i][ns]) {
            cost[i][ns] = v;
            parent[i][ns] = static_cast<signed char>(s);
          }
        }
      }
    }
    for (unsigned s = 0; s < 16; ++s) {
      if (cost[N - 1][s] >= best) continue;
      // Positions N-4..N-1 then 0..3.
      const unsigned eight = s | first << 4;
      bool ok = true;
      for (int off = 0; off < 4 && ok; ++off) ok = window_ok(eight >> off);
      if (!ok) continue;
      best = cost[N - 1][s];
      best_set.clear();
      unsigned cur = s;
      for (int i = N - 1; i >= 4; --i) {
        if (cur >> 3 & 1u) best_set.push_back(i);
        cur = static_cast<unsigned>(parent[i][cur]);
      }
      for (int t = 0; t < 4; ++t) {
        if (first >> t & 1u) best_set.push_back(t);
      }
    }
  }
  return best_set;
}

}  // namespace

SolveResult solve_complete_wheel(const WeightedGraph& g) {
  const auto start = std::chrono::steady_clock::now();
  const GraphClass cls = classify(g);
  if (cls.kind != GraphKind::kCompleteWheel) {
    throw WrongGraphClass("solve_complete_wheel: graph is not a complete wheel");
  }
  const int n = g.num_vertices();
  // At n = 6 the window rule admits {0, 2}, which leaves rim vertex 1 and
  // the hub unresolved.
  if (n < 7) {
    SolveResult r = brute_min_drs(g);
    r.seconds = elapsed_since(start);
    return r;
  }
  const auto rim = *wheel_rim(g, *cls.hub);
  const int N = static_cast<int>(rim.size());
  std::vector<double> c(N);
  for (int i = 0; i < N; ++i) c[i] = g.weight(rim[i]);

  std::vector<VertexId> set;
  if (N < 8) {
    // Too short for disjoint head and tail windows; scan every rim subset.
    const bool exact = g.integral_weights();
    double best = kInfWeight;
    std::vector<int> pos;
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
      pos.clear();
      double wsum = 0;
      for (int i = 0; i < N; ++i) {
        if (mask >> i & 1u) {
          pos.push_back(i);
          wsum += c[i];
        }
      }
      if (best != kInfWeight && !weight_less(wsum, best, exact)) continue;
      if (!satisfies_wheel_windows(N, pos)) continue;
      best = wsum;
      set.clear();
      for (int p : pos) set.push_back(rim[p]);
    }
  } else {
    for (int p : windows_dp(c)) set.push_back(rim[p]);
  }
  SolveResult r = make_result(g, std::move(set), "complete-wheel", true);
  r.seconds = elapsed_since(start);
  return r;
}

namespace {

// One DP run with rim position `anchor` relabeled as vertex 1. Linear label
// t in 1..N maps to position anchor + t - 1; label N + 1 is vertex 1 again.
class WheelDp {
 public:
  WheelDp(const WheelGeometry& w, const std::vector<double>& c, int anchor)
      : w_(w), c_(c), anchor_(anchor) {}

  // Returns the best weight and fills `set` with rim positions.
  double run(std::vector<int>& set) {
    const int N = w_.N;
    // Index [t][side][primed]; side 0 = left, 1 = right.
    table_.assign(N + 1, {});
    for (auto& e : table_) {
      for (auto& side : e) side.fill(Entry{});
    }
    table_[1][0][0].value = kInfWeight;
    table_[1][1][0].value = c(1);
    table_[1][0][1].value = c(1);
    table_[1][1][1].value = c(1);

    for (int s = 2; s <= N; ++s) {
      for (int sp = 1; sp < s; ++sp) {
        if (!alpha(sp, s)) continue;
        const bool beta = cov_left(sp, s);
        const bool gamma = cov_right(sp, s);
        for (int primed = 0; primed < 2; ++primed) {
          const Entry& from_left = table_[sp][0][primed];
          const Entry& from_right = table_[sp][1][primed];
          // F(s, left): s' in beta from left, s' in beta and gamma from right.
          if (beta) relax(s, 0, primed, sp, 0, from_left.value);
          if (beta && gamma) relax(s, 0, primed, sp, 1, from_right.value);
          // F(s, right): s' in alpha from left, s' in gamma from right.
          relax(s, 1, primed, sp, 0, from_left.value);
          if (gamma) relax(s, 1, primed, sp, 1, from_right.value);
        }
      }
    }

    // Closing step: s is the left neighbor of vertex 1.
    double best = kInfWeight;
    int bs = -1, bside = 0, bprimed = 0;
    for (int s = 2; s <= N; ++s) {
      if (!alpha(s, N + 1)) continue;
      const bool beta1 = cov_left(s, N + 1);
      const bool gamma1 = cov_right(s, N + 1);
      const std::array<std::array<bool, 2>, 2> allowed{
          {{true, beta1}, {gamma1, beta1 && gamma1}}};
      for (int side = 0; side < 2; ++side) {
        for (int primed = 0; primed < 2; ++primed) {
          if (!allowed[side][primed]) continue;
          const double v = table_[s][side][primed].value;
          if (v < best) {
            best = v;
            bs = s;
            bside = side;
            bprimed = primed;
          }
        }
      }
    }
    set.clear();
    if (bs < 0) return kInfWeight;
    int s = bs, side = bside;
    while (s != 1) {
      set.push_back(pos(s));
      const Entry& e = table_[s][side][bprimed];
      side = e.parent_side;
      s = e.parent;
    }
    set.push_back(pos(1));
    return best;
  }

 private:
  struct Entry {
    double value = kInfWeight;
    int parent = -1;
    int parent_side = 0;
  };

  int pos(int t) const { return w_.at(anchor_ + t - 1); }
  double c(int t) const { return c_[pos(t)]; }

  void relax(int s, int side, int primed, int sp, int sp_side, double v) {
    if (v == kInfWeight) return;
    Entry& e = table_[s][side][primed];
    const double total = v + c(s);
    if (total < e.value) {
      e.value = total;
      e.parent = sp;
      e.parent_side = sp_side;
    }
  }

  // s' then s are consecutive observers, s' < s in linear labels.
  bool alpha(int sp, int s) const {
    const int a = pos(sp), b = pos(s), gap = s - sp;
    // Every vertex of C[s', s] is close to s' or s.
    if (w_.right_reach[a] + w_.left_reach[b] + 1 < gap) return false;
    // Left-continuous at s.
    const int dl = w_.delta_l[b];
    if (dl != kInf && dl <= gap && gap - dl > w_.right_reach[a]) return false;
    // Right-continuous at s'.
    const int dr = w_.delta_r[a];
    if (dr != kInf && dr <= gap && gap - dr > w_.left_reach[b]) return false;
    return true;
  }

  // s' covers the minimal bad pair of s.
  bool cov_left(int sp, int s) const {
    const int a = pos(sp), b = pos(s), dlt = w_.delta[b];
    return dlt == kInf || w_.is_close(a, b - dlt) || w_.is_close(a, b + dlt);
  }

  // s covers the minimal bad pair of s'.
  bool cov_right(int sp, int s) const {
    const int a = pos(sp), b = pos(s), dlt = w_.delta[a];
    return dlt == kInf || w_.is_close(b, a - dlt) || w_.is_close(b, a + dlt);
  }

  const WheelGeometry& w_;
  const std::vector<double>& c_;
  int anchor_;
  std::vector<std::array<std::array<Entry, 2>, 2>> table_;
};

}  // namespace

SolveResult solve_general_wheel(const WeightedGraph& g, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const VertexId hub = find_hub(g, "solve_general_wheel");
  const WheelGeometry w = wheel_geometry(g, hub);
  if (w.num_connectors < kMinWheelConnectors) {
    SolveResult r = g.num_vertices() <= 20 ? brute_min_drs(g)
                                           : solve_kaug(g, budget);
    r.seconds = elapsed_since(start);
    return r;
  }

  std::vector<double> c(w.N);
  for (int i = 0; i < w.N; ++i) c[i] = g.weight(w.rim[i]);

  int a = 0;
  for (int s = 1; s < w.N; ++s) {
    if (w.range_size(s) < w.range_size(a)) a = s;
  }
  const bool exact = g.integral_weights();
  double best = kInfWeight;
  std::vector<int> best_set, set;
  for (int t = -w.left_reach[a]; t <= w.right_reach[a]; ++t) {
    WheelDp dp(w, c, w.at(a + t));
    const double v = dp.run(set);
    if (v == kInfWeight) continue;
    if (best == kInfWeight || weight_less(v, best, exact)) {
      best = v;
      best_set = set;
    }
  }
  if (best == kInfWeight) {
    throw std::logic_error("solve_general_wheel: no feasible observer set");
  }
  std::vector<VertexId> ids;
  for (int p : best_set) ids.push_back(w.rim[p]);
  SolveResult r = make_result(g, std::move(ids), "wheel", true);
  r.seconds = elapsed_since(start);
  return r;
}

}  // namespace drs
