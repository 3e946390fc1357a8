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

#include "drs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace drs {

WeightedGraph::WeightedGraph(std::vector<double> weights,
                             std::span<const Edge> edges)
    : weights_(std::move(weights)) {
  const int n = num_vertices();
  if (n < 2) throw InvalidGraph("graph needs at least 2 vertices");
  for (VertexId v = 0; v < n; ++v) {
    const double w = weights_[v];
    if (!std::isfinite(w) || w < 0) {
      throw InvalidGraph("vertex " + std::to_string(v + 1) +
                         " has a negative or non-finite weight");
    }
    if (w != std::floor(w)) integral_ = false;
  }
  adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidGraph("edge endpoint out of range");
    }
    if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u + 1));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw InvalidGraph("parallel edge at vertex " + std::to_string(v + 1));
    }
  }
  num_edges_ = static_cast<int>(edges.size());

  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) throw InvalidGraph("graph is disconnected");
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double WeightedGraph::weight_of(std::span<const VertexId> set) const {
  double total = 0;
  for (VertexId v : set) total += weights_[v];
  return total;
}

double WeightedGraph::total_weight() const {
  double total = 0;
  for (double w : weights_) total += w;
  return total;
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> weights) const {
  if (weights.size() != weights_.size()) {
    throw InvalidGraph("weight vector size does not match vertex count");
  }
  const auto e = edges();
  return WeightedGraph(std::move(weights), e);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "expected a weight, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  // Returns tokens of the next non-comment, non-blank line.
  auto next_line = [&](std::vector<std::string_view>& toks) {
    while (std::getline(in, raw)) {
      ++line_no;
      toks = split_tokens(raw);
      if (toks.empty() || toks.front().front() == '#') continue;
      return true;
    }
    return false;
  };

  std::vector<std::string_view> toks;
  if (!next_line(toks)) throw ParseError(0, "empty input");
  if (toks.size() != 2) throw ParseError(line_no, "header must be `n m`");
  const long long n = parse_int(toks[0], line_no);
  const long long m = parse_int(toks[1], line_no);
  if (n < 2) throw InvalidGraph("graph needs at least 2 vertices");
  if (m < 0) throw ParseError(line_no, "negative edge count");
  if (n > 1'000'000 || m > 100'000'000) {
    throw ParseError(line_no, "graph too large");
  }

  std::vector<double> weights(n, 0.0);
  std::vector<char> seen(n, 0);
  for (long long i = 0; i < n; ++i) {
    if (!next_line(toks)) throw ParseError(line_no, "missing vertex lines");
    if (toks.size() != 2) throw ParseError(line_no, "vertex line must be `id weight`");
    const long long id = parse_int(toks[0], line_no);
    if (id < 1 || id > n) throw ParseError(line_no, "vertex id out of range");
    if (seen[id - 1]) throw ParseError(line_no, "duplicate vertex id");
    seen[id - 1] = 1;
    const double w = parse_weight(toks[1], line_no);
    if (w < 0) throw InvalidGraph("vertex " + std::to_string(id) + " has a negative weight");
    weights[id - 1] = w;
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line(toks)) throw ParseError(line_no, "missing edge lines");
    if (toks.size() != 2) throw ParseError(line_no, "edge line must be `u v`");
    const long long u = parse_int(toks[0], line_no);
    const long long v = parse_int(toks[1], line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "edge endpoint out of range");
    }
    if (u == v) throw InvalidGraph("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  if (next_line(toks)) throw ParseError(line_no, "unexpected trailing content");
  return WeightedGraph(std::move(weights), edges);
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void serialize_graph(const WeightedGraph& g, std::ostream& out) {
  const auto edges = g.edges();
  out << g.num_vertices() << ' ' << edges.size() << '\n';
  char buf[64];
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g.weight(v));
    out << (v + 1) << ' ' << std::string_view(buf, ptr - buf) << '\n';
  }
  for (const auto& [u, v] : edges) out << (u + 1) << ' ' << (v + 1) << '\n';
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix::DistanceMatrix(const WeightedGraph& g)
    : n_(g.num_vertices()), dist_(static_cast<std::size_t>(n_) * n_, -1) {
  std::vector<VertexId> queue(n_);
  for (VertexId s = 0; s < n_; ++s) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n_;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    row[s] = 0;
    while (head < tail) {
      VertexId u = queue[head++];
      for (VertexId v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    diameter_ = std::max(diameter_, row[queue[tail - 1]]);
  }
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kTree: return "tree";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kKAugTree: return "kaug-tree";
    case GraphKind::kCompleteWheel: return "complete-wheel";
    case GraphKind::kGeneralWheel: return "general-wheel";
    case GraphKind::kGeneral: return "general";
  }
  return "general";
}

namespace {

// Walks a 2-regular vertex set starting at `start`. `next_of` yields the two
// ring neighbors of a vertex. Returns the ring if it visits `expected`
// vertices before closing.
template <typename NextOf>
std::optional<std::vector<VertexId>> walk_ring(VertexId start, int expected,
                                               NextOf next_of) {
  std::vector<VertexId> ring{start};
  auto [a, b] = next_of(start);
  VertexId prev = start;
  VertexId cur = std::min(a, b);
  while (cur != start) {
    ring.push_back(cur);
    if (static_cast<int>(ring.size()) > expected) return std::nullopt;
    auto [x, y] = next_of(cur);
    VertexId nxt = (x == prev) ? y : x;
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(ring.size()) != expected) return std::nullopt;
  return ring;
}

}  // namespace

std::optional<std::vector<VertexId>> wheel_rim(const WeightedGraph& g,
                                               VertexId hub) {
  const int n = g.num_vertices();
  if (n - 1 < 3) return std::nullopt;
  for (VertexId v = 0; v < n; ++v) {
    if (v == hub) continue;
    if (g.degree(v) - (g.has_edge(v, hub) ? 1 : 0) != 2) return std::nullopt;
  }
  auto ring_neighbors = [&](VertexId v) {
    std::pair<VertexId, VertexId> out{-1, -1};
    for (VertexId u : g.neighbors(v)) {
      if (u == hub) continue;
      if (out.first < 0) out.first = u; else out.second = u;
    }
    return out;
  };
  const VertexId start = hub == 0 ? 1 : 0;
  return walk_ring(start, n - 1, ring_neighbors);
}

std::vector<VertexId> cycle_order(const WeightedGraph& g) {
  const int n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2) throw WrongGraphClass("graph is not a cycle");
  }
  auto ring = walk_ring(0, n, [&](VertexId v) {
    auto nb = g.neighbors(v);
    return std::pair<VertexId, VertexId>{nb[0], nb[1]};
  });
  if (!ring) throw WrongGraphClass("graph is not a cycle");
  return *ring;
}

GraphClass classify(const WeightedGraph& g, int kaug_cap) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  GraphClass out;
  out.k = m - n + 1;

  bool two_regular = n >= 3;
  for (VertexId v = 0; v < n && two_regular; ++v) two_regular = g.degree(v) == 2;
  if (two_regular) {  // connected and 2-regular
    out.kind = GraphKind::kCycle;
    return out;
  }
  if (m == n - 1) {
    out.kind = GraphKind::kTree;
    return out;
  }
  std::optional<VertexId> general_hub;
  for (VertexId h = 0; h < n; ++h) {
    if (g.degree(h) < 3) continue;
    if (!wheel_rim(g, h)) continue;
    if (g.degree(h) == n - 1) {
      out.kind = GraphKind::kCompleteWheel;
      out.hub = h;
      return out;
    }
    if (!general_hub) general_hub = h;
  }
  if (general_hub) {
    out.kind = GraphKind::kGeneralWheel;
    out.hub = general_hub;
    return out;
  }
  out.kind = out.k <= kaug_cap ? GraphKind::kKAugTree : GraphKind::kGeneral;
  return out;
}

bool weights_equal(double a, double b, bool exact) {
  if (exact) return a == b;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

}  // namespace drs
