// Copyright 2026 The PEA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plutchik Emotion Agreement (PEA) at the pair, item, worker and corpus
// level, worker filtering, label aggregation, and two comparison metrics
// (Jaccard similarity and Krippendorff's alpha).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pea/emotion_set.hpp"
#include "pea/error.hpp"
#include "pea/wheel.hpp"

namespace pea {

struct AnnotationRecord {
  std::string item_id;
  std::string worker_id;
  EmotionSet emotions;
};

// All annotations of a corpus, indexed by item then worker. Insertion order
// of records is preserved for re-emission.
class AnnotationTable {
 public:
  using WorkerSets = std::map<std::string, EmotionSet>;

  AnnotationTable() = default;
  explicit AnnotationTable(std::vector<AnnotationRecord> records) {
    for (auto& r : records) add(std::move(r));
  }

  // Throws DataError on an empty emotion set or a repeated (item, worker).
  void add(AnnotationRecord record) {
    if (record.emotions.empty())
      throw DataError("empty emotion set for item '" + record.item_id +
                      "', worker '" + record.worker_id + "'");
    auto& workers = items_[record.item_id];
    if (!workers.emplace(record.worker_id, record.emotions).second)
      throw DataError("duplicate annotation for item '" + record.item_id +
                      "', worker '" + record.worker_id + "'");
    records_.push_back(std::move(record));
  }

  const std::vector<AnnotationRecord>& records() const { return records_; }
  const std::map<std::string, WorkerSets>& items() const { return items_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const EmotionSet* find(const std::string& item, const std::string& worker) const {
    auto it = items_.find(item);
    if (it == items_.end()) return nullptr;
    auto jt = it->second.find(worker);
    return jt == it->second.end() ? nullptr : &jt->second;
  }

  std::set<std::string> workers() const {
    std::set<std::string> out;
    for (const auto& r : records_) out.insert(r.worker_id);
    return out;
  }

  AnnotationTable without_workers(const std::set<std::string>& dropped) const {
    AnnotationTable out;
    for (const auto& r : records_)
      if (!dropped.contains(r.worker_id)) out.add(r);
    return out;
  }

 private:
  std::vector<AnnotationRecord> records_;
  std::map<std::string, WorkerSets> items_;
};

// d(X, Y): mean over X of the best pair score against any member of Y.
// Not symmetric in general.
inline double directed_agreement(EmotionSet x, EmotionSet y,
                                 const AngleMap& angles = kCanonicalAngles) {
  if (x.empty()) throw EmptySetError("X");
  if (y.empty()) throw EmptySetError("Y");
  const auto ys = y.members();
  double total = 0.0;
  std::size_t n = 0;
  for (auto ex : x.members()) {
    double best = 0.0;
    for (auto ey : ys) best = std::max(best, pair_score(ex, ey, angles));
    total += best;
    ++n;
  }
  return total / static_cast<double>(n);
}

inline double symmetric_agreement(EmotionSet x, EmotionSet y,
                                  const AngleMap& angles = kCanonicalAngles) {
  return 0.5 * (directed_agreement(x, y, angles) + directed_agreement(y, x, angles));
}

enum class AgreementVariant { Directed, Symmetric };

inline double agreement(EmotionSet x, EmotionSet y, AgreementVariant variant) {
  return variant == AgreementVariant::Directed ? directed_agreement(x, y)
                                               : symmetric_agreement(x, y);
}

// Per-worker PEA on one item: each worker's mean agreement with every other
// worker on the item. Returns nullopt for items with fewer than two workers.
inline std::optional<std::map<std::string, double>> per_item_pea(
    const AnnotationTable::WorkerSets& workers,
    AgreementVariant variant = AgreementVariant::Directed) {
  if (workers.size() < 2) return std::nullopt;
  std::map<std::string, double> out;
  const double others = static_cast<double>(workers.size() - 1);
  for (const auto& [w, xs] : workers) {
    double total = 0.0;
    for (const auto& [v, ys] : workers) {
      if (v == w) continue;
      total += agreement(xs, ys, variant);
    }
    out.emplace(w, total / others);
  }
  return out;
}

// How the corpus mean is formed: over workers (each worker's mean counts
// once) or over every scored (item, worker) pair.
enum class Weighting { Worker, WorkerItem };

struct PeaOptions {
  AgreementVariant variant = AgreementVariant::Directed;
  Weighting weighting = Weighting::Worker;
};

struct AgreementReport {
  std::map<std::pair<std::string, std::string>, double> per_item_per_worker;
  std::map<std::string, double> per_worker;
  double corpus_mean = 0.0;
  std::size_t items_scored = 0;
  std::size_t items_skipped = 0;

  // Filled by apply_filter(); empty and equal to corpus_mean until then.
  std::optional<double> threshold;
  std::set<std::string> dropped_workers;
  double corpus_mean_kept = 0.0;

  Warnings warnings;
};

namespace detail {

inline double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double total = 0.0;
  for (double x : xs) total += x;
  return total / static_cast<double>(xs.size());
}

}  // namespace detail

inline AgreementReport corpus_pea(const AnnotationTable& table,
                                  const PeaOptions& options = {}) {
  AgreementReport report;
  std::map<std::string, std::vector<double>> by_worker;
  for (const auto& [item, workers] : table.items()) {
    auto scores = per_item_pea(workers, options.variant);
    if (!scores) {
      ++report.items_skipped;
      continue;
    }
    ++report.items_scored;
    for (const auto& [w, s] : *scores) {
      report.per_item_per_worker.emplace(std::make_pair(item, w), s);
      by_worker[w].push_back(s);
    }
  }
  if (report.items_scored == 0) {
    report.warnings.push_back("no items with two or more annotators; report is empty");
    return report;
  }

  std::vector<double> worker_means;
  for (const auto& [w, scores] : by_worker) {
    const double m = detail::mean_of(scores);
    report.per_worker.emplace(w, m);
    worker_means.push_back(m);
  }
  if (options.weighting == Weighting::Worker) {
    report.corpus_mean = detail::mean_of(worker_means);
  } else {
    std::vector<double> all;
    for (const auto& [key, s] : report.per_item_per_worker) all.push_back(s);
    report.corpus_mean = detail::mean_of(all);
  }
  report.corpus_mean_kept = report.corpus_mean;
  return report;
}

struct WorkerPartition {
  std::set<std::string> kept;
  std::set<std::string> dropped;
};

inline constexpr double kDefaultWorkerThreshold = 0.55;

// Single pass over precomputed scores: PEA <= threshold is dropped.
inline WorkerPartition filter_workers(const AgreementReport& report,
                                      double threshold = kDefaultWorkerThreshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw PreconditionError("threshold must lie in [0, 1]");
  WorkerPartition out;
  for (const auto& [w, s] : report.per_worker) {
    if (s <= threshold)
      out.dropped.insert(w);
    else
      out.kept.insert(w);
  }
  return out;
}

// Records the filter decision in the report and the mean over kept workers.
inline AgreementReport apply_filter(AgreementReport report,
                                    double threshold = kDefaultWorkerThreshold) {
  auto part = filter_workers(report, threshold);
  std::vector<double> kept;
  for (const auto& w : part.kept) kept.push_back(report.per_worker.at(w));
  report.threshold = threshold;
  report.dropped_workers = std::move(part.dropped);
  report.corpus_mean_kept = detail::mean_of(kept);
  return report;
}

struct AggregatedLabels {
  std::map<std::string, EmotionSet> labels;
  // Items whose vote threshold left no emotion; still present in `labels`.
  std::vector<std::string> empty_items;
};

inline AggregatedLabels aggregate_labels(const AnnotationTable& table,
                                         std::size_t min_votes = 1) {
  if (min_votes < 1) throw PreconditionError("min_votes must be at least 1");
  AggregatedLabels out;
  for (const auto& [item, workers] : table.items()) {
    std::array<std::size_t, kNumEmotion24> votes{};
    for (const auto& [w, s] : workers)
      for (auto e : s.members()) ++votes[index_of(e)];
    EmotionSet label;
    for (auto e : kAllEmotion24)
      if (votes[index_of(e)] >= min_votes) label.insert(e);
    if (label.empty()) out.empty_items.push_back(item);
    out.labels.emplace(item, label);
  }
  return out;
}

inline double jaccard(EmotionSet a, EmotionSet b) {
  if (a.empty() && b.empty())
    throw PreconditionError("jaccard is undefined for two empty sets");
  return static_cast<double>((a & b).size()) / static_cast<double>((a | b).size());
}

template <typename T, typename Cmp>
double jaccard(const std::set<T, Cmp>& a, const std::set<T, Cmp>& b) {
  if (a.empty() && b.empty())
    throw PreconditionError("jaccard is undefined for two empty sets");
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.contains(x) ? 1 : 0;
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

struct NominalDistance {
  template <typename T>
  double operator()(const T& a, const T& b) const { return a == b ? 0.0 : 1.0; }
};

struct JaccardDistance {
  template <typename T>
  double operator()(const T& a, const T& b) const { return 1.0 - jaccard(a, b); }
};

struct AlphaResult {
  double alpha = 1.0;
  double observed_disagreement = 0.0;
  double expected_disagreement = 0.0;
  std::size_t pairable_values = 0;
  Warnings warnings;
};

// Krippendorff's alpha, 1 - D_o / D_e, over the coincidence matrix of the
// pairable values. Each unit lists the values its coders assigned (missing
// codings are simply absent). Units with fewer than two values are not
// pairable and are ignored.
template <typename Value, typename Distance = NominalDistance>
AlphaResult krippendorff_alpha(std::span<const std::vector<Value>> units,
                               Distance distance = {}) {
  if (units.size() < 2) throw PreconditionError("alpha needs at least two units");

  std::vector<Value> values;  // distinct values, first-seen order
  auto value_index = [&](const Value& v) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) return i;
    values.push_back(v);
    return values.size() - 1;
  };

  std::vector<std::vector<std::size_t>> coded;
  for (const auto& unit : units) {
    if (unit.size() < 2) continue;
    std::vector<std::size_t> ids;
    for (const auto& v : unit) ids.push_back(value_index(v));
    coded.push_back(std::move(ids));
  }
  if (coded.empty())
    throw PreconditionError("alpha needs at least one unit with two or more values");

  const std::size_t k = values.size();
  std::vector<double> coincidence(k * k, 0.0);
  for (const auto& ids : coded) {
    const double weight = 1.0 / static_cast<double>(ids.size() - 1);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (i != j) coincidence[ids[i] * k + ids[j]] += weight;
  }

  std::vector<double> marginal(k, 0.0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) marginal[c] += coincidence[c * k + d];
  double n = 0.0;
  for (double m : marginal) n += m;

  std::vector<double> delta(k * k, 0.0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d)
      if (c != d) delta[c * k + d] = distance(values[c], values[d]);

  double observed = 0.0, expected = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      observed += coincidence[c * k + d] * delta[c * k + d];
      expected += marginal[c] * marginal[d] * delta[c * k + d];
    }
  }
  observed /= n;
  expected /= n * (n - 1.0);

  AlphaResult result;
  result.observed_disagreement = observed;
  result.expected_disagreement = expected;
  result.pairable_values = static_cast<std::size_t>(n + 0.5);
  if (expected == 0.0) {
    result.alpha = 1.0;
    result.warnings.push_back("expected disagreement is zero; alpha defined as 1");
  } else {
    result.alpha = 1.0 - observed / expected;
  }
  return result;
}

template <typename Value, typename Distance = NominalDistance>
AlphaResult krippendorff_alpha(const std::vector<std::vector<Value>>& units,
                               Distance distance = {}) {
  return krippendorff_alpha<Value, Distance>(
      std::span<const std::vector<Value>>(units), distance);
}

// One unit per item, holding every worker's emotion set.
inline std::vector<std::vector<EmotionSet>> alpha_units(const AnnotationTable& table) {
  std::vector<std::vector<EmotionSet>> units;
  for (const auto& [item, workers] : table.items()) {
    std::vector<EmotionSet> unit;
    for (const auto& [w, s] : workers) unit.push_back(s);
    units.push_back(std::move(unit));
  }
  return units;
}

}  // namespace pea
