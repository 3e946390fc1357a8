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

#ifndef DRS_GRAPH_HPP_
#define DRS_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drs {

// Dense 0-based vertex index. Graph files use 1-based ids; conversion
// happens only in parse_graph / serialize_graph and the CLI.
using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid graph: loop, parallel edge, disconnected, n < 2,
// negative weight, or an id out of range.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Input has the wrong shape for the requested solver (e.g. not a cycle).
class WrongGraphClass : public Error {
 public:
  using Error::Error;
};

// Instance exceeds an enumeration limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Simple connected undirected graph with nonnegative vertex weights.
// Immutable after construction.
class WeightedGraph {
 public:
  // Validates everything listed on InvalidGraph. Edge endpoints are 0-based.
  WeightedGraph(std::vector<double> weights, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return num_edges_; }
  double weight(VertexId v) const { return weights_[v]; }
  const std::vector<double>& weights() const { return weights_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(VertexId u, VertexId v) const;

  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // Sum of w(v) over `set`.
  double weight_of(std::span<const VertexId> set) const;
  double total_weight() const;

  // True when every weight is a whole number (exact tie detection applies).
  bool integral_weights() const { return integral_; }

  // Same topology with new weights.
  WeightedGraph with_weights(std::vector<double> weights) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<VertexId>> adj_;
  int num_edges_ = 0;
  bool integral_ = true;
};

// Reads the text graph format: `n m`, then n lines `id weight`, then m lines
// `u v`, ids 1-based, `#` comment lines and blank lines ignored.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);

// Inverse of parse_graph. Weights are written in shortest round-trip form.
void serialize_graph(const WeightedGraph& g, std::ostream& out);
std::string serialize_graph(const WeightedGraph& g);

// All-pairs hop distances, filled by one BFS per vertex.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const WeightedGraph& g);

  int size() const { return n_; }
  int operator()(VertexId u, VertexId v) const { return dist_[u * n_ + v]; }
  std::span<const int> row(VertexId u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  int diameter() const { return diameter_; }

 private:
  int n_;
  int diameter_ = 0;
  std::vector<int> dist_;
};

inline DistanceMatrix all_pairs_distances(const WeightedGraph& g) {
  return DistanceMatrix(g);
}

enum class GraphKind { kTree, kCycle, kKAugTree, kCompleteWheel,
                       kGeneralWheel, kGeneral };

struct GraphClass {
  GraphKind kind = GraphKind::kGeneral;
  // |E| - |V| + 1; meaningful for every kind.
  int k = 0;
  // Hub vertex for wheels.
  std::optional<VertexId> hub;
};

std::string_view to_string(GraphKind kind);

// k-augmented trees with k above this are classified General.
inline constexpr int kDefaultKAugCap = 4;

// Detection order: Cycle, Tree, CompleteWheel, GeneralWheel,
// KAugTree(k <= kaug_cap), General.
GraphClass classify(const WeightedGraph& g, int kaug_cap = kDefaultKAugCap);

// If removing `hub` leaves a spanning cycle over the other n-1 vertices,
// returns that cycle in traversal order starting at its smallest vertex and
// stepping to the smaller of its two neighbors.
std::optional<std::vector<VertexId>> wheel_rim(const WeightedGraph& g,
                                               VertexId hub);

// Vertices of a cycle graph in traversal order, same orientation rule.
std::vector<VertexId> cycle_order(const WeightedGraph& g);

// Weight comparison used for tie detection: exact for integral inputs,
// otherwise relative tolerance 1e-9.
bool weights_equal(double a, double b, bool exact);
inline bool weight_less(double a, double b, bool exact) {
  return a < b && !weights_equal(a, b, exact);
}

}  // namespace drs

#endif  // DRS_GRAPH_HPP_
