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

// Balanced binary classification tasks, one per wheel group (or per class
// of a single-label dataset), split 80/10/10.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pea/emotion_set.hpp"
#include "pea/error.hpp"
#include "pea/random.hpp"

namespace pea {

struct LabeledItem {
  std::string id;
  std::string text;
  EmotionSet labels;
};

struct TaskExample {
  std::string id;
  std::string text;
  int label = 0;  // 1 positive, 0 negative

  bool operator==(const TaskExample&) const = default;
};

struct TaskSplit {
  std::string task;  // group name, or class name for multi-class sources
  std::uint64_t seed = 0;
  std::vector<TaskExample> train, valid, test;

  std::size_t size() const { return train.size() + valid.size() + test.size(); }
};

struct SplitSizes {
  std::size_t train = 0, valid = 0, test = 0;
  bool operator==(const SplitSizes&) const = default;
};

// Cumulative boundaries floor(0.8n) and floor(0.9n); the test partition
// takes what is left. Integer arithmetic keeps this exact for any n.
constexpr SplitSizes split_sizes(std::size_t n) {
  const std::size_t b1 = n * 8 / 10;
  const std::size_t b2 = n * 9 / 10;
  return {b1, b2 - b1, n - b2};
}

struct TaskOptions {
  // Keep every negative candidate instead of sampling |positives| of them.
  bool keep_all_negatives = false;
};

namespace detail {

inline TaskSplit assemble_split(std::string task, std::uint64_t seed,
                                std::vector<TaskExample> pool, Rng& rng) {
  rng.shuffle(pool);
  const auto sizes = split_sizes(pool.size());
  TaskSplit split;
  split.task = std::move(task);
  split.seed = seed;
  auto it = pool.begin();
  split.train.assign(it, it + static_cast<std::ptrdiff_t>(sizes.train));
  it += static_cast<std::ptrdiff_t>(sizes.train);
  split.valid.assign(it, it + static_cast<std::ptrdiff_t>(sizes.valid));
  it += static_cast<std::ptrdiff_t>(sizes.valid);
  split.test.assign(it, pool.end());
  return split;
}

template <typename Item, typename IsPositive, typename IsCandidate>
TaskSplit build_one(const std::string& task, const std::vector<Item>& items,
                    std::uint64_t seed, const TaskOptions& options,
                    IsPositive is_positive, IsCandidate is_candidate) {
  std::vector<TaskExample> pool;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (is_positive(items[i]))
      pool.push_back({items[i].id, items[i].text, 1});
    else if (is_candidate(items[i]))
      candidates.push_back(i);
  }
  const std::size_t positives = pool.size();
  Rng rng(derive_seed(seed, task));
  if (options.keep_all_negatives) {
    for (auto i : candidates) pool.push_back({items[i].id, items[i].text, 0});
  } else {
    if (candidates.size() < positives)
      throw DataError("task '" + task + "': " + std::to_string(positives) +
                      " positives but only " + std::to_string(candidates.size()) +
                      " negative candidates (short by " +
                      std::to_string(positives - candidates.size()) + ")");
    for (auto k : rng.sample_indices(candidates.size(), positives)) {
      const auto& item = items[candidates[k]];
      pool.push_back({item.id, item.text, 0});
    }
  }
  return assemble_split(task, seed, std::move(pool), rng);
}

}  // namespace detail

// One task per group, in group order. Positives carry the group; negatives
// are sampled from items that carry some other group but not this one.
inline std::vector<TaskSplit> build_binary_tasks(const std::vector<LabeledItem>& items,
                                                 std::uint64_t seed,
                                                 const TaskOptions& options = {}) {
  std::set<std::string> ids;
  for (const auto& it : items)
    if (!ids.insert(it.id).second) throw DataError("duplicate item id '" + it.id + "'");
  std::vector<TaskSplit> out;
  for (auto g : kAllEmotion8) {
    out.push_back(detail::build_one(
        std::string(name_of(g)), items, seed, options,
        [g](const LabeledItem& it) { return it.labels.has_group(g); },
        [](const LabeledItem& it) { return it.labels.group_mask() != 0; }));
  }
  return out;
}

struct ClassItem {
  std::string id;
  std::string text;
  std::string label;
};

// One binary task per listed class; classes without items are skipped with
// a warning.
inline std::vector<TaskSplit> split_multiclass(const std::vector<ClassItem>& items,
                                               const std::vector<std::string>& classes,
                                               std::uint64_t seed,
                                               Warnings* warnings = nullptr,
                                               const TaskOptions& options = {}) {
  std::map<std::string, std::size_t> per_class;
  for (const auto& it : items) ++per_class[it.label];
  std::vector<TaskSplit> out;
  for (const auto& c : classes) {
    if (per_class[c] == 0) {
      if (warnings) warnings->push_back("class '" + c + "' has no items; task skipped");
      continue;
    }
    out.push_back(detail::build_one(
        c, items, seed, options, [&c](const ClassItem& it) { return it.label == c; },
        [](const ClassItem&) { return true; }));
  }
  return out;
}

// Reference per-partition counts for the eight group tasks of the released
// corpus, in group order (train, valid, test).
inline constexpr std::array<SplitSizes, kNumEmotion8> kReleasedSplitCounts{{
    {4209, 526, 527},    // aggressiveness
    {11902, 1488, 1488}, // optimism
    {2569, 321, 322},    // love
    {6092, 762, 762},    // submission
    {7324, 916, 916},    // awe
    {5931, 741, 742},    // disapproval
    {7732, 967, 967},    // remorse
    {3763, 470, 471},    // contempt
}};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SplitReport {
  std::string task;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Structural checks on one task: disjoint partitions, 80/10/10 within one
// item, aggregate positive/negative balance, and optionally exact counts.
inline SplitReport verify_split(const TaskSplit& split,
                                std::optional<SplitSizes> expected = std::nullopt) {
  SplitReport report;
  report.task = split.task;

  std::map<std::string, int> seen;
  std::string overlap;
  auto visit = [&](const std::vector<TaskExample>& part, int which) {
    for (const auto& ex : part) {
      auto [it, fresh] = seen.emplace(ex.id, which);
      if (!fresh && overlap.empty()) overlap = ex.id;
    }
  };
  visit(split.train, 0);
  visit(split.valid, 1);
  visit(split.test, 2);
  report.checks.push_back({"disjoint", overlap.empty(),
                           overlap.empty() ? "" : "item '" + overlap + "' repeats"});

  const double n = static_cast<double>(split.size());
  auto near = [](std::size_t got, double want) {
    const double d = static_cast<double>(got) - want;
    return d >= -1.0 && d <= 1.0;
  };
  const bool ratio_ok = near(split.train.size(), 0.8 * n) &&
                        near(split.valid.size(), 0.1 * n) &&
                        near(split.test.size(), 0.1 * n);
  report.checks.push_back(
      {"ratio", ratio_ok,
       std::to_string(split.train.size()) + "/" + std::to_string(split.valid.size()) +
           "/" + std::to_string(split.test.size())});

  std::size_t pos = 0, neg = 0;
  for (const auto* part : {&split.train, &split.valid, &split.test})
    for (const auto& ex : *part) (ex.label == 1 ? pos : neg) += 1;
  report.checks.push_back({"balance", pos == neg,
                           std::to_string(pos) + " positive, " + std::to_string(neg) +
                               " negative"});

  if (expected) {
    const SplitSizes got{split.train.size(), split.valid.size(), split.test.size()};
    report.checks.push_back(
        {"counts", got == *expected,
         "expected " + std::to_string(expected->train) + "/" +
             std::to_string(expected->valid) + "/" + std::to_string(expected->test)});
  }
  return report;
}

}  // namespace pea
