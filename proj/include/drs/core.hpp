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

#ifndef DRS_CORE_HPP_
#define DRS_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "drs/graph.hpp"

namespace drs {

// {u, v} is doubly resolved by {x, y} when
// d(u,x) - d(u,y) != d(v,x) - d(v,y).
inline bool doubly_resolves(const DistanceMatrix& d, VertexId x, VertexId y,
                            VertexId u, VertexId v) {
  return d(u, x) - d(u, y) != d(v, x) - d(v, y);
}

// A pair {anchor, probe}. Its cost is the probe's weight only, since the
// anchor is paid for once per root.
struct SuperTest {
  VertexId anchor = 0;
  VertexId probe = 0;
  double weight = 0;
};

// Equivalence classes of vertices no chosen test separates.
//
// Class ids are canonical: numbered by first appearance in vertex order, and
// each class lists its members ascending. Two partitions of the same vertex
// set are equal iff their class_of vectors are equal.
struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<VertexId>> classes;
  double entropy = 0;

  static Partition whole(int n);
  static Partition from_labels(std::span<const int> labels);

  int size() const { return static_cast<int>(class_of.size()); }
  bool all_singletons() const { return classes.size() == class_of.size(); }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of == b.class_of;
  }
};

// log2(k!), table-backed for small k.
double log2_factorial(int k);

// Sum over classes of log2(|class|!).
double entropy(const Partition& p);

// Splits every class by the signature d(v, anchor) - d(v, probe).
Partition refine_partition(const DistanceMatrix& d, const Partition& p,
                           const SuperTest& t);

// Splits every class by d(v, x) (single-vertex resolving test).
Partition refine_partition_single(const DistanceMatrix& d, const Partition& p,
                                  VertexId x);

// Partition of V under all tests {s0, s}, s in S, where s0 = S.front().
// The empty set and singletons give the whole vertex set as one class.
Partition drs_partition(const DistanceMatrix& d, std::span<const VertexId> set);

// True iff |S| >= 2 and every pair of vertices is doubly resolved by a pair
// of S.
bool is_drs(const DistanceMatrix& d, std::span<const VertexId> set);

// Resolving-set check: every pair differs in distance to some s in S.
bool is_resolving(const DistanceMatrix& d, std::span<const VertexId> set);

// Lexicographically least pair u < v that S cannot tell apart, or nullopt
// when S is a DRS.
std::optional<std::pair<VertexId, VertexId>> ambiguous_witness(
    const DistanceMatrix& d, std::span<const VertexId> set);

struct Observation {
  VertexId observer = 0;
  std::int64_t time = 0;
};

struct LocalizationResult {
  enum class Outcome { kUnique, kAmbiguous, kInconsistent };
  Outcome outcome = Outcome::kInconsistent;
  // Set for kUnique.
  VertexId source = -1;
  std::int64_t start_time = 0;
  // Every vertex consistent with the observations, ascending (size >= 2 for
  // kAmbiguous, 1 for kUnique).
  std::vector<VertexId> candidates;
  std::vector<std::int64_t> start_times;
};

// Finds every u for which t_x - d(u, x) is the same constant over all
// observers. Throws InvalidGraph for an empty observation list, an observer
// outside the graph, or a repeated observer.
LocalizationResult locate_source(const DistanceMatrix& d,
                                 std::span<const Observation> observations);

// Arrival times at `observers` for a diffusion from `source` started at
// `start_time` with unit edge delays.
std::vector<Observation> simulate_arrivals(const DistanceMatrix& d,
                                           std::span<const VertexId> observers,
                                           VertexId source,
                                           std::int64_t start_time);

namespace detail {

// Repeated splitting of vertex labels by integer keys, O(n) per round.
// Labels stay dense in [0, num_classes).
class LabelRefiner {
 public:
  explicit LabelRefiner(int n, int key_span);

  void reset();
  // Splits each class by key[v]; keys must lie in [0, key_span).
  template <typename KeyFn>
  void split(KeyFn key) {
    std::size_t next = 0;
    ++stamp_;
    for (int v = 0; v < n_; ++v) {
      const std::size_t slot =
          static_cast<std::size_t>(labels_[v]) * key_span_ + key(v);
      if (seen_[slot] != stamp_) {
        seen_[slot] = stamp_;
        remap_[slot] = static_cast<int>(next++);
      }
      scratch_[v] = remap_[slot];
    }
    labels_.swap(scratch_);
    num_classes_ = static_cast<int>(next);
  }

  int num_classes() const { return num_classes_; }
  bool all_singletons() const { return num_classes_ == n_; }
  std::span<const int> labels() const { return labels_; }

 private:
  int n_;
  int key_span_;
  int num_classes_ = 1;
  std::uint32_t stamp_ = 0;
  std::vector<int> labels_, scratch_, remap_;
  std::vector<std::uint32_t> seen_;
};

}  // namespace detail

}  // namespace drs

#endif  // DRS_CORE_HPP_
