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

// Interpretable scale for PEA: a random-annotation baseline, score bands,
// and the A/B pair construction used for human evaluation of rankings.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pea/agreement.hpp"
#include "pea/error.hpp"
#include "pea/random.hpp"

namespace pea {

inline constexpr std::size_t kWorkersPerItem = 5;

struct BaselineParams {
  std::size_t n_annotations = 5000;
  std::size_t emotions_per_annotation = 3;
  std::size_t workers_per_item = kWorkersPerItem;
  std::size_t histogram_bins = 20;
};

struct HistogramBin {
  double low = 0.0, high = 0.0;
  std::size_t count = 0;
};

struct CalibrationResult {
  std::vector<double> scores;  // per-worker PEA, worker-id order
  double mean = 0.0;
  std::vector<HistogramBin> histogram;

  bool operator==(const CalibrationResult& o) const {
    if (scores != o.scores || mean != o.mean || histogram.size() != o.histogram.size())
      return false;
    for (std::size_t i = 0; i < histogram.size(); ++i)
      if (histogram[i].count != o.histogram[i].count) return false;
    return true;
  }
};

// Equal-width bins over [0, 1]; 1.0 falls in the last bin.
inline std::vector<HistogramBin> histogram(const std::vector<double>& scores,
                                           std::size_t bins) {
  if (bins == 0) throw PreconditionError("histogram needs at least one bin");
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].low = static_cast<double>(b) / static_cast<double>(bins);
    out[b].high = static_cast<double>(b + 1) / static_cast<double>(bins);
  }
  for (double s : scores) {
    auto b = static_cast<std::size_t>(s * static_cast<double>(bins));
    if (b >= bins) b = bins - 1;
    ++out[b].count;
  }
  return out;
}

// Synthetic annotation table: every item gets `workers_per_item` fresh
// workers, each picking a uniform random subset of groups, materialized as
// the groups' middle-intensity emotions. Item i draws from its own stream
// derived from (seed, i).
inline AnnotationTable random_annotations(const BaselineParams& p, std::uint64_t seed) {
  if (p.n_annotations == 0 || p.workers_per_item == 0 || p.emotions_per_annotation == 0)
    throw PreconditionError("baseline parameters must be positive");
  if (p.emotions_per_annotation > kNumEmotion8)
    throw PreconditionError("at most 8 groups can be chosen per annotation");
  if (p.n_annotations % p.workers_per_item != 0)
    throw PreconditionError("n_annotations must be a multiple of workers_per_item");

  AnnotationTable table;
  const std::size_t items = p.n_annotations / p.workers_per_item;
  const auto width = std::to_string(items).size();
  auto padded = [](std::size_t v, std::size_t w) {
    auto s = std::to_string(v);
    return std::string(w > s.size() ? w - s.size() : 0, '0') + s;
  };
  for (std::size_t i = 0; i < items; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const auto item_id = "r" + padded(i, width);
    for (std::size_t w = 0; w < p.workers_per_item; ++w) {
      EmotionSet s;
      for (auto g : rng.sample_indices(kNumEmotion8, p.emotions_per_annotation))
        s.insert(representative_of(emotion8_at(g)));
      table.add({item_id, item_id + "-w" + std::to_string(w), s});
    }
  }
  return table;
}

inline CalibrationResult random_baseline(const BaselineParams& p, std::uint64_t seed) {
  const auto report = corpus_pea(random_annotations(p, seed));
  CalibrationResult r;
  for (const auto& [w, s] : report.per_worker) r.scores.push_back(s);
  r.mean = report.corpus_mean;
  r.histogram = histogram(r.scores, p.histogram_bins);
  return r;
}

enum class Band { None, Poor, Moderate, High };

constexpr std::string_view describe(Band b) {
  switch (b) {
    case Band::None: return "no agreement";
    case Band::Poor: return "poor agreement";
    case Band::Moderate: return "moderate agreement";
    case Band::High: return "high agreement";
  }
  return "";
}

// Bands on the x100 scale: [0,25) [25,50) [50,75) [75,100].
inline Band interpret(double score) {
  if (!(score >= 0.0 && score <= 1.0))
    throw PreconditionError("score " + std::to_string(score) + " is outside [0, 1]");
  const double pct = score * 100.0;
  if (pct < 25.0) return Band::None;
  if (pct < 50.0) return Band::Poor;
  if (pct < 75.0) return Band::Moderate;
  return Band::High;
}

struct ABPair {
  std::string item_id;
  std::string shared_worker;
  std::string worker2;  // pair A = (shared, worker2)
  std::string worker3;  // pair B = (shared, worker3)

  bool operator==(const ABPair&) const = default;
};

// For every item, every shared worker and every unordered pair of its
// co-annotators: m * C(m-1, 2) pairs for an item with m workers.
inline std::vector<ABPair> enumerate_ab_pairs(const AnnotationTable& table) {
  std::vector<ABPair> out;
  for (const auto& [item, workers] : table.items()) {
    std::vector<std::string> ids;
    for (const auto& [w, s] : workers) ids.push_back(w);
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = 0; b < ids.size(); ++b) {
        if (b == a) continue;
        for (std::size_t c = b + 1; c < ids.size(); ++c) {
          if (c == a) continue;
          out.push_back({item, ids[a], ids[b], ids[c]});
        }
      }
    }
  }
  return out;
}

inline constexpr std::size_t kHitSampleSize = 500;
inline constexpr std::size_t kPairsPerHit = 10;

using HitBatch = std::vector<ABPair>;

// Seeded sample without replacement, chunked into batches of
// `pairs_per_hit`; a short last batch is allowed with a warning.
inline std::vector<HitBatch> sample_hits(const std::vector<ABPair>& pairs,
                                         std::size_t n_sample, std::size_t pairs_per_hit,
                                         std::uint64_t seed, Warnings* warnings = nullptr) {
  if (pairs.empty()) throw PreconditionError("A/B pair pool is empty");
  if (pairs_per_hit == 0) throw PreconditionError("pairs_per_hit must be positive");
  if (n_sample > pairs.size())
    throw PreconditionError("cannot sample " + std::to_string(n_sample) + " of " +
                            std::to_string(pairs.size()) + " pairs");
  if (n_sample % pairs_per_hit != 0 && warnings)
    warnings->push_back("sample size " + std::to_string(n_sample) +
                        " is not a multiple of " + std::to_string(pairs_per_hit) +
                        "; last batch is short");
  Rng rng(derive_seed(seed, std::string_view("hits")));
  std::vector<HitBatch> batches;
  for (auto idx : rng.sample_indices(pairs.size(), n_sample)) {
    if (batches.empty() || batches.back().size() == pairs_per_hit) batches.emplace_back();
    batches.back().push_back(pairs[idx]);
  }
  return batches;
}

enum class Ranking { AHigher, Same, BHigher };

constexpr std::string_view describe(Ranking r) {
  switch (r) {
    case Ranking::AHigher: return "A_higher";
    case Ranking::Same: return "same";
    case Ranking::BHigher: return "B_higher";
  }
  return "";
}

inline Ranking pea_rank(const ABPair& pair, const AnnotationTable& table,
                        AgreementVariant variant = AgreementVariant::Symmetric) {
  auto get = [&](const std::string& w) {
    const auto* s = table.find(pair.item_id, w);
    if (!s)
      throw DataError("no annotation for item '" + pair.item_id + "', worker '" + w + "'");
    return *s;
  };
  const auto shared = get(pair.shared_worker);
  const double a = agreement(shared, get(pair.worker2), variant);
  const double b = agreement(shared, get(pair.worker3), variant);
  if (std::abs(a - b) <= 1e-12) return Ranking::Same;
  return a > b ? Ranking::AHigher : Ranking::BHigher;
}

}  // namespace pea
