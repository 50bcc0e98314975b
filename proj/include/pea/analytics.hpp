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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pea/corpus.hpp"
#include "pea/emotion_set.hpp"
#include "pea/error.hpp"

namespace pea {

using EmotionCounts = std::array<std::uint64_t, kNumEmotion24>;

// Items containing each emotion; a multi-label item counts once per label.
template <typename Range>
EmotionCounts emotion_distribution(const Range& label_sets) {
  EmotionCounts counts{};
  for (const EmotionSet& s : label_sets)
    for (auto e : s.members()) ++counts[index_of(e)];
  return counts;
}

// Symmetric 8x8 group co-occurrence counts. Off-diagonal (g, h) counts items
// whose group set holds both g and h; diagonal (g, g) counts items holding g.
class CooccurrenceMatrix {
 public:
  std::uint64_t operator()(Emotion8 a, Emotion8 b) const {
    return counts_[index_of(a)][index_of(b)];
  }

  void add_item(EmotionSet labels) {
    const auto groups = labels.group_mask();
    for (std::size_t i = 0; i < kNumEmotion8; ++i) {
      if (!(groups & (1u << i))) continue;
      ++counts_[i][i];
      for (std::size_t j = i + 1; j < kNumEmotion8; ++j) {
        if (!(groups & (1u << j))) continue;
        ++counts_[i][j];
        ++counts_[j][i];
      }
    }
  }

  void merge(const CooccurrenceMatrix& other) {
    for (std::size_t i = 0; i < kNumEmotion8; ++i)
      for (std::size_t j = 0; j < kNumEmotion8; ++j) counts_[i][j] += other.counts_[i][j];
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < kNumEmotion8; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (counts_[i][j] != counts_[j][i]) return false;
    return true;
  }

  bool operator==(const CooccurrenceMatrix&) const = default;

 private:
  std::array<std::array<std::uint64_t, kNumEmotion8>, kNumEmotion8> counts_{};
};

template <typename Range>
CooccurrenceMatrix cooccurrence(const Range& label_sets) {
  CooccurrenceMatrix m;
  for (const EmotionSet& s : label_sets) m.add_item(s);
  return m;
}

using TokenCounts = std::map<std::string, std::uint64_t>;

struct TokenDistribution {
  std::map<std::string, double> probs;

  static TokenDistribution from_counts(const TokenCounts& counts) {
    TokenDistribution d;
    std::uint64_t total = 0;
    for (const auto& [t, c] : counts) total += c;
    if (total == 0) return d;
    for (const auto& [t, c] : counts)
      if (c > 0) d.probs.emplace(t, static_cast<double>(c) / static_cast<double>(total));
    return d;
  }
};

enum class LogBase { Two, E };

// Jensen-Shannon divergence, 0.5 KL(A||M) + 0.5 KL(B||M) with M the
// midpoint. In base 2 the value lies in [0, 1].
inline double jsd(const TokenDistribution& a, const TokenDistribution& b,
                  LogBase base = LogBase::Two) {
  const double scale = base == LogBase::Two ? 1.0 / std::numbers::ln2 : 1.0;
  auto term = [](double p, double m) { return p > 0.0 ? p * std::log(p / m) : 0.0; };
  double kl_a = 0.0, kl_b = 0.0;
  auto ia = a.probs.begin();
  auto ib = b.probs.begin();
  // Merge walk over the sorted union of supports.
  while (ia != a.probs.end() || ib != b.probs.end()) {
    double p = 0.0, q = 0.0;
    if (ib == b.probs.end() || (ia != a.probs.end() && ia->first < ib->first)) {
      p = (ia++)->second;
    } else if (ia == a.probs.end() || ib->first < ia->first) {
      q = (ib++)->second;
    } else {
      p = (ia++)->second;
      q = (ib++)->second;
    }
    const double m = 0.5 * (p + q);
    kl_a += term(p, m);
    kl_b += term(q, m);
  }
  const double d = 0.5 * (kl_a + kl_b) * scale;
  return d < 0.0 ? 0.0 : d;
}

struct DensityRow {
  std::string token;
  double density_a = 0.0;
  double density_b = 0.0;
};

// Densities of the k most frequent tokens common to both corpora, each side
// renormalized over the shared set, sorted by combined count (ties by token).
inline std::vector<DensityRow> top_k_density(const TokenCounts& a, const TokenCounts& b,
                                             std::size_t k = 1000,
                                             Warnings* warnings = nullptr) {
  if (k < 1) throw PreconditionError("top-k must be at least 1");
  struct Shared {
    std::string token;
    std::uint64_t ca, cb;
  };
  std::vector<Shared> shared;
  for (const auto& [t, ca] : a) {
    auto it = b.find(t);
    if (ca > 0 && it != b.end() && it->second > 0) shared.push_back({t, ca, it->second});
  }
  std::sort(shared.begin(), shared.end(), [](const Shared& x, const Shared& y) {
    const auto sx = x.ca + x.cb, sy = y.ca + y.cb;
    return sx != sy ? sx > sy : x.token < y.token;
  });
  if (shared.size() < k) {
    if (warnings)
      warnings->push_back("only " + std::to_string(shared.size()) +
                          " common tokens; using all of them");
  } else {
    shared.resize(k);
  }
  double ta = 0.0, tb = 0.0;
  for (const auto& s : shared) {
    ta += static_cast<double>(s.ca);
    tb += static_cast<double>(s.cb);
  }
  std::vector<DensityRow> rows;
  rows.reserve(shared.size());
  for (const auto& s : shared)
    rows.push_back({s.token, static_cast<double>(s.ca) / ta, static_cast<double>(s.cb) / tb});
  return rows;
}

// Greedy longest-match subword segmentation over a fixed vocabulary, with
// "##" marking word-internal pieces. Words are lowercased and split on ASCII
// punctuation first; a word with no full segmentation becomes the unknown
// token.
class WordpieceTokenizer {
 public:
  explicit WordpieceTokenizer(std::unordered_set<std::string> vocab,
                              std::string unknown = "[UNK]",
                              std::size_t max_chars_per_word = 100)
      : vocab_(std::move(vocab)),
        unknown_(std::move(unknown)),
        max_chars_(max_chars_per_word) {}

  // One token per line; trailing whitespace ignored.
  static WordpieceTokenizer from_stream(std::istream& in) {
    std::unordered_set<std::string> vocab;
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && detail::is_space(line.back())) line.pop_back();
      if (!line.empty()) vocab.insert(line);
    }
    return WordpieceTokenizer(std::move(vocab));
  }

  std::vector<std::string> tokenize(std::string_view text) const {
    std::vector<std::string> out;
    for (const auto& word : basic_split(text)) segment(word, out);
    return out;
  }

 private:
  static std::vector<std::string> basic_split(std::string_view text) {
    std::vector<std::string> words;
    for (const auto& tok : whitespace_tokens(text)) {
      std::string cur;
      for (char c : tok) {
        if (std::ispunct(static_cast<unsigned char>(c))) {
          if (!cur.empty()) words.push_back(std::move(cur));
          cur.clear();
          words.emplace_back(1, c);
        } else {
          cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
      }
      if (!cur.empty()) words.push_back(std::move(cur));
    }
    return words;
  }

  void segment(const std::string& word, std::vector<std::string>& out) const {
    if (word.size() > max_chars_) {
      out.push_back(unknown_);
      return;
    }
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (start < word.size()) {
      std::size_t end = word.size();
      std::string match;
      while (end > start) {
        std::string piece = word.substr(start, end - start);
        if (start > 0) piece = "##" + piece;
        if (vocab_.contains(piece)) {
          match = std::move(piece);
          break;
        }
        --end;
      }
      if (match.empty()) {
        out.push_back(unknown_);
        return;
      }
      pieces.push_back(std::move(match));
      start = end;
    }
    for (auto& p : pieces) out.push_back(std::move(p));
  }

  std::unordered_set<std::string> vocab_;
  std::string unknown_;
  std::size_t max_chars_;
};

inline void count_whitespace_tokens(std::string_view text, TokenCounts& counts) {
  for (auto& tok : whitespace_tokens(text)) ++counts[std::move(tok)];
}

inline void count_wordpieces(const WordpieceTokenizer& tokenizer, std::string_view text,
                             TokenCounts& counts) {
  for (auto& tok : tokenizer.tokenize(text)) ++counts[std::move(tok)];
}

}  // namespace pea
