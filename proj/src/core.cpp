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

#include "drs/core.hpp"

#include <algorithm>
#include <cmath>

namespace drs {

namespace {

constexpr int kLogFactTable = 4096;

const std::vector<double>& log_fact_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactTable + 1, 0.0);
    for (int k = 2; k <= kLogFactTable; ++k) t[k] = t[k - 1] + std::log2(k);
    return t;
  }();
  return table;
}

}  // namespace

double log2_factorial(int k) {
  if (k <= kLogFactTable) return log_fact_table()[k];
  return std::lgamma(static_cast<double>(k) + 1.0) / std::log(2.0);
}

Partition Partition::whole(int n) {
  Partition p;
  p.class_of.assign(n, 0);
  p.classes.resize(1);
  p.classes[0].resize(n);
  for (int v = 0; v < n; ++v) p.classes[0][v] = v;
  p.entropy = log2_factorial(n);
  return p;
}

Partition Partition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  Partition p;
  p.class_of.assign(n, -1);
  std::vector<int> canon(n, -1);
  for (int v = 0; v < n; ++v) {
    int& c = canon[labels[v]];
    if (c < 0) {
      c = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[v] = c;
    p.classes[c].push_back(v);
  }
  p.entropy = drs::entropy(p);
  return p;
}

double entropy(const Partition& p) {
  double h = 0;
  for (const auto& c : p.classes) h += log2_factorial(static_cast<int>(c.size()));
  return h;
}

namespace {

template <typename KeyFn>
Partition refine_by(const Partition& p, KeyFn key) {
  const int n = p.size();
  Partition out;
  out.class_of.assign(n, -1);
  for (const auto& cls : p.classes) {
    if (cls.size() == 1) continue;
    // Group members of this class by key, preserving vertex order.
    std::vector<std::pair<int, VertexId>> keyed;
    keyed.reserve(cls.size());
    for (VertexId v : cls) keyed.emplace_back(key(v), v);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    int group = -1;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) group = keyed[i].second;
      out.class_of[keyed[i].second] = group;
    }
  }
  // Labels are now "smallest member of my new class" (or -1 for singletons);
  // canonicalise.
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = out.class_of[v] < 0 ? v : out.class_of[v];
  return Partition::from_labels(labels);
}

}  // namespace

Partition refine_partition(const DistanceMatrix& d, const Partition& p,
                           const SuperTest& t) {
  return refine_by(p, [&](VertexId v) { return d(v, t.anchor) - d(v, t.probe); });
}

Partition refine_partition_single(const DistanceMatrix& d, const Partition& p,
                                  VertexId x) {
  return refine_by(p, [&](VertexId v) { return d(v, x); });
}

namespace detail {

LabelRefiner::LabelRefiner(int n, int key_span)
    : n_(n),
      key_span_(key_span),
      labels_(n, 0),
      scratch_(n, 0),
      remap_(static_cast<std::size_t>(n) * key_span, 0),
      seen_(static_cast<std::size_t>(n) * key_span, 0) {}

void LabelRefiner::reset() {
  std::fill(labels_.begin(), labels_.end(), 0);
  num_classes_ = 1;
}

}  // namespace detail

Partition drs_partition(const DistanceMatrix& d, std::span<const VertexId> set) {
  const int n = d.size();
  if (set.size() < 2) return Partition::whole(n);
  const int diam = d.diameter();
  detail::LabelRefiner refiner(n, 2 * diam + 1);
  const VertexId s0 = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) {
    const VertexId s = set[i];
    refiner.split([&](int v) { return d(v, s0) - d(v, s) + diam; });
    if (refiner.all_singletons()) break;
  }
  return Partition::from_labels(refiner.labels());
}

bool is_drs(const DistanceMatrix& d, std::span<const VertexId> set) {
  if (set.size() < 2) return false;
  return drs_partition(d, set).all_singletons();
}

bool is_resolving(const DistanceMatrix& d, std::span<const VertexId> set) {
  const int n = d.size();
  detail::LabelRefiner refiner(n, d.diameter() + 1);
  for (VertexId s : set) {
    refiner.split([&](int v) { return d(v, s); });
    if (refiner.all_singletons()) return true;
  }
  return refiner.all_singletons();
}

std::optional<std::pair<VertexId, VertexId>> ambiguous_witness(
    const DistanceMatrix& d, std::span<const VertexId> set) {
  const Partition p = drs_partition(d, set);
  if (set.size() >= 2 && p.all_singletons()) return std::nullopt;
  // Classes are canonical, so the first non-singleton class (in order of
  // smallest member) holds the least u; its second member is the least v.
  std::optional<std::pair<VertexId, VertexId>> best;
  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    if (!best || cls[0] < best->first) best = std::pair{cls[0], cls[1]};
  }
  return best;
}

LocalizationResult locate_source(const DistanceMatrix& d,
                                 std::span<const Observation> observations) {
  if (observations.empty()) throw InvalidGraph("no observers given");
  const int n = d.size();
  std::vector<char> used(n, 0);
  for (const auto& o : observations) {
    if (o.observer < 0 || o.observer >= n) {
      throw InvalidGraph("observer " + std::to_string(o.observer + 1) +
                         " is not a vertex of the graph");
    }
    if (used[o.observer]) {
      throw InvalidGraph("observer " + std::to_string(o.observer + 1) +
                         " listed twice");
    }
    used[o.observer] = 1;
  }
  LocalizationResult r;
  for (VertexId u = 0; u < n; ++u) {
    const std::int64_t c = observations[0].time - d(u, observations[0].observer);
    bool consistent = true;
    for (const auto& o : observations) {
      if (o.time - d(u, o.observer) != c) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      r.candidates.push_back(u);
      r.start_times.push_back(c);
    }
  }
  if (r.candidates.empty()) {
    r.outcome = LocalizationResult::Outcome::kInconsistent;
  } else if (r.candidates.size() == 1) {
    r.outcome = LocalizationResult::Outcome::kUnique;
    r.source = r.candidates[0];
    r.start_time = r.start_times[0];
  } else {
    r.outcome = LocalizationResult::Outcome::kAmbiguous;
  }
  return r;
}

std::vector<Observation> simulate_arrivals(const DistanceMatrix& d,
                                           std::span<const VertexId> observers,
                                           VertexId source,
                                           std::int64_t start_time) {
  std::vector<Observation> out;
  out.reserve(observers.size());
  for (VertexId x : observers) out.push_back({x, start_time + d(source, x)});
  return out;
}

}  // namespace drs
