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

// Tweet preprocessing: entity masking, deduplication, emotion-lexicon
// filtering and whitespace-token corpus statistics.
//
// Entity patterns (bytes, applied left to right in one pass):
//   URL      "http://" or "https://" or "t.co/" at a token boundary, up to the
//            next whitespace            -> <URL>
//   mention  '@' at a token boundary followed by one or more word
//            characters ([A-Za-z0-9_] or any byte >= 0x80), including any
//            directly chained "@word" segments -> <USER>
//   hashtag  a whitespace token starting with '#' and a word character
// A token boundary is the start of the text or a preceding non-word byte.

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pea/emotion_set.hpp"
#include "pea/error.hpp"

namespace pea {

inline constexpr std::string_view kUserSentinel = "<USER>";
inline constexpr std::string_view kUrlSentinel = "<URL>";

struct TweetRecord {
  std::string id;
  std::string text;      // normalized
  std::string raw_text;  // as ingested
  std::optional<std::string> source;
  std::optional<EmotionSet> labels;
};

using Corpus = std::vector<TweetRecord>;

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_word(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '_';
}

inline bool at_boundary(std::string_view s, std::size_t i) {
  return i == 0 || !is_word(s[i - 1]);
}

inline std::size_t url_length(std::string_view s, std::size_t i) {
  if (!at_boundary(s, i)) return 0;
  const auto rest = s.substr(i);
  if (!(rest.starts_with("http://") || rest.starts_with("https://") ||
        rest.starts_with("t.co/")))
    return 0;
  if (rest.starts_with("t.co/") && i > 0 && (s[i - 1] == '.' || s[i - 1] == '/'))
    return 0;
  std::size_t n = 0;
  while (n < rest.size() && !is_space(rest[n])) ++n;
  return n;
}

inline std::size_t mention_length(std::string_view s, std::size_t i) {
  if (s[i] != '@' || !at_boundary(s, i)) return 0;
  std::size_t n = 1;
  while (i + n < s.size() && is_word(s[i + n])) ++n;
  if (n == 1) return 0;
  // Absorb chained segments ("@a@b") so masking is idempotent.
  while (i + n + 1 < s.size() && s[i + n] == '@' && is_word(s[i + n + 1])) {
    n += 2;
    while (i + n < s.size() && is_word(s[i + n])) ++n;
  }
  return n;
}

struct EntityFlags {
  bool mention = false;
  bool url = false;
  bool hashtag = false;
};

// Masks entities and reports which kinds were seen.
inline std::string mask_entities(std::string_view s, EntityFlags* flags) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (auto n = url_length(s, i)) {
      out += kUrlSentinel;
      if (flags) flags->url = true;
      i += n;
    } else if (auto m = mention_length(s, i)) {
      out += kUserSentinel;
      if (flags) flags->mention = true;
      i += m;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace detail

inline std::string normalize_tweet(std::string_view text) {
  return detail::mask_entities(text, nullptr);
}

inline std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !detail::is_space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::string_view strip_punct(std::string_view s) {
  auto punct = [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && punct(s.front())) s.remove_prefix(1);
  while (!s.empty() && punct(s.back())) s.remove_suffix(1);
  return s;
}

inline bool has_hashtag(std::string_view raw) {
  for (const auto& tok : whitespace_tokens(raw))
    if (tok.size() >= 2 && tok[0] == '#' && detail::is_word(tok[1])) return true;
  return false;
}

inline TweetRecord make_tweet(std::string id, std::string raw_text,
                              std::optional<std::string> source = std::nullopt) {
  TweetRecord t;
  t.id = std::move(id);
  t.text = normalize_tweet(raw_text);
  t.raw_text = std::move(raw_text);
  t.source = std::move(source);
  return t;
}

enum class DedupKey { Normalized, Raw };

// Keeps the first tweet for each distinct text, in input order.
inline Corpus dedup(const Corpus& corpus, DedupKey key = DedupKey::Normalized) {
  Corpus out;
  std::unordered_set<std::string> seen;
  for (const auto& t : corpus) {
    const auto& k = key == DedupKey::Normalized ? t.text : t.raw_text;
    if (seen.insert(k).second) out.push_back(t);
  }
  return out;
}

// Word -> associated categories. Words are case-folded on insert and on
// lookup; words whose flags are all 0 are kept with an empty category set.
class Lexicon {
 public:
  void add(std::string_view word, std::string_view category, bool associated) {
    auto& cats = entries_[ascii_lower(word)];
    if (associated) cats.insert(std::string(category));
  }

  const std::set<std::string>* categories(std::string_view word) const {
    auto it = entries_.find(ascii_lower(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool is_emotive(std::string_view word) const {
    const auto* c = categories(word);
    return c && !c->empty();
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t emotive_size() const {
    std::size_t n = 0;
    for (const auto& [w, c] : entries_) n += c.empty() ? 0 : 1;
    return n;
  }

 private:
  std::map<std::string, std::set<std::string>> entries_;
};

// EmoLex word-level TSV: word<TAB>category<TAB>0|1.
inline Lexicon load_emolex(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
      throw DataError("lexicon line " + std::to_string(lineno) +
                      ": expected word<TAB>category<TAB>flag");
    const auto flag = std::string_view(line).substr(t2 + 1);
    if (flag != "0" && flag != "1")
      throw DataError("lexicon line " + std::to_string(lineno) + ": flag must be 0 or 1");
    lex.add(std::string_view(line).substr(0, t1),
            std::string_view(line).substr(t1 + 1, t2 - t1 - 1), flag == "1");
  }
  return lex;
}

inline bool has_lexicon_word(const TweetRecord& tweet, const Lexicon& lexicon) {
  for (const auto& tok : whitespace_tokens(tweet.text)) {
    const auto word = strip_punct(tok);
    if (!word.empty() && lexicon.is_emotive(word)) return true;
  }
  return false;
}

inline Corpus lexicon_filter(const Corpus& corpus, const Lexicon& lexicon,
                             Warnings* warnings = nullptr) {
  if (lexicon.emotive_size() == 0 && warnings && !corpus.empty())
    warnings->push_back("lexicon has no associated words; every tweet is dropped");
  Corpus out;
  for (const auto& t : corpus)
    if (has_lexicon_word(t, lexicon)) out.push_back(t);
  return out;
}

struct CorpusStats {
  std::size_t tweet_count = 0;
  std::size_t vocab_original = 0;
  std::size_t vocab_filtered = 0;
  double pct_hashtag = 0.0;
  double pct_mention = 0.0;
  double pct_link = 0.0;
};

inline CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats s;
  s.tweet_count = corpus.size();
  if (corpus.empty()) return s;
  std::unordered_set<std::string> orig, filtered;
  std::size_t hashtags = 0, mentions = 0, links = 0;
  for (const auto& t : corpus) {
    for (auto& tok : whitespace_tokens(t.raw_text)) orig.insert(std::move(tok));
    for (auto& tok : whitespace_tokens(t.text))
      if (tok != kUserSentinel && tok != kUrlSentinel) filtered.insert(std::move(tok));
    detail::EntityFlags flags;
    detail::mask_entities(t.raw_text, &flags);
    hashtags += has_hashtag(t.raw_text) ? 1 : 0;
    mentions += flags.mention ? 1 : 0;
    links += flags.url ? 1 : 0;
  }
  const double n = static_cast<double>(corpus.size());
  s.vocab_original = orig.size();
  s.vocab_filtered = filtered.size();
  s.pct_hashtag = 100.0 * static_cast<double>(hashtags) / n;
  s.pct_mention = 100.0 * static_cast<double>(mentions) / n;
  s.pct_link = 100.0 * static_cast<double>(links) / n;
  return s;
}

}  // namespace pea
