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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pea/corpus.hpp"

namespace pea {
namespace {

TEST(NormalizeTweet, MasksMentionsAndLinks) {
  EXPECT_EQ(normalize_tweet("@bob stay safe http://t.co/x"), "<USER> stay safe <URL>");
  EXPECT_EQ(normalize_tweet("no entities here"), "no entities here");
  EXPECT_EQ(normalize_tweet("see https://example.com/a?b=1, ok"), "see <URL> ok");
  EXPECT_EQ(normalize_tweet("via t.co/abc"), "via <URL>");
  EXPECT_EQ(normalize_tweet("(@alice_1) hi"), "(<USER>) hi");
  EXPECT_EQ(normalize_tweet("RT @a: @b_c!"), "RT <USER>: <USER>!");
  EXPECT_EQ(normalize_tweet("@a@b@ x"), "<USER>@ x");
}

TEST(NormalizeTweet, LeavesNonEntitiesAlone) {
  EXPECT_EQ(normalize_tweet("mail me at bob@example.com"), "mail me at bob@example.com");
  EXPECT_EQ(normalize_tweet("@ alone"), "@ alone");
  EXPECT_EQ(normalize_tweet("#harvey  double  space\t"), "#harvey  double  space\t");
  EXPECT_EQ(normalize_tweet("httpx://nope"), "httpx://nope");
  EXPECT_EQ(normalize_tweet(""), "");
}

TEST(NormalizeTweet, IsIdempotent) {
  const std::string alphabet = "@ht:/.cosp_#a1 <>USERL\t";
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 5000; ++trial) {
    std::string s;
    const auto len = gen() % 24;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[gen() % alphabet.size()];
    if (trial % 3 == 0) s += " http://t.co/" + s;
    if (trial % 5 == 0) s = "@" + s;
    const auto once = normalize_tweet(s);
    EXPECT_EQ(normalize_tweet(once), once) << "input: " << s;
    EXPECT_EQ(once.find("http://"), std::string::npos);
  }
}

Corpus make(std::initializer_list<const char*> texts) {
  Corpus c;
  int i = 0;
  for (auto t : texts) c.push_back(make_tweet("t" + std::to_string(i++), t));
  return c;
}

TEST(Dedup, KeepsFirstOccurrence) {
  const auto c = make({"same", "same"});
  const auto d = dedup(c);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].id, "t0");

  const auto unique = make({"a", "b", "c"});
  EXPECT_EQ(dedup(unique).size(), 3u);
}

TEST(Dedup, CollapsesTweetsDifferingOnlyInMention) {
  const auto c = make({"@alice we are safe", "@bob we are safe"});
  EXPECT_EQ(dedup(c).size(), 1u);
  EXPECT_EQ(dedup(c, DedupKey::Raw).size(), 2u);
}

TEST(Dedup, OutputTextsArePairwiseDistinct) {
  std::mt19937_64 gen(1);
  const char* pool[] = {"a", "b", "@x a", "@y a", "http://q b", "c"};
  Corpus c;
  for (int i = 0; i < 200; ++i) c.push_back(make_tweet(std::to_string(i), pool[gen() % 6]));
  const auto d = dedup(c);
  std::set<std::string> texts;
  for (const auto& t : d) EXPECT_TRUE(texts.insert(t.text).second);
  EXPECT_EQ(d.size(), 5u);
}

Lexicon small_lexicon() {
  std::istringstream in(
      "payback\tanger\t1\n"
      "payback\tjoy\t0\n"
      "table\tanger\t0\n"
      "Storm\tfear\t1\n");
  return load_emolex(in);
}

TEST(Lexicon, LoadsEmolexLayout) {
  const auto lex = small_lexicon();
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.emotive_size(), 2u);
  EXPECT_TRUE(lex.is_emotive("PAYBACK"));
  EXPECT_TRUE(lex.is_emotive("storm"));
  EXPECT_FALSE(lex.is_emotive("table"));
  EXPECT_EQ(*lex.categories("payback"), (std::set<std::string>{"anger"}));
}

TEST(Lexicon, MalformedLineNamesLineNumber) {
  std::istringstream in("ok\tanger\t1\nbroken line\n");
  try {
    load_emolex(in);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream bad_flag("w\tanger\t2\n");
  EXPECT_THROW(load_emolex(bad_flag), DataError);
}

TEST(LexiconFilter, RetainsTweetsWithLexiconWords) {
  const auto lex = small_lexicon();
  const auto c = make({"this is Payback!", "a table here", "the storm, again", ""});
  const auto kept = lexicon_filter(c, lex);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].id, "t0");
  EXPECT_EQ(kept[1].id, "t2");
  EXPECT_TRUE(lexicon_filter(Corpus{}, lex).empty());
}

TEST(LexiconFilter, EmptyLexiconDropsEverythingWithWarning) {
  Warnings w;
  EXPECT_TRUE(lexicon_filter(make({"payback"}), Lexicon{}, &w).empty());
  EXPECT_EQ(w.size(), 1u);
}

TEST(LexiconFilter, OnlyRemoves) {
  const auto lex = small_lexicon();
  const auto c = dedup(make({"payback", "x", "payback", "storm y", "z"}));
  const auto f = lexicon_filter(c, lex);
  for (const auto& t : f)
    EXPECT_TRUE(std::any_of(c.begin(), c.end(), [&](const auto& u) { return u.id == t.id; }));
}

TEST(CorpusStats, SingleTweetWithEverything) {
  const auto s = corpus_stats(make({"#a @b http://c"}));
  EXPECT_EQ(s.tweet_count, 1u);
  EXPECT_EQ(s.pct_hashtag, 100.0);
  EXPECT_EQ(s.pct_mention, 100.0);
  EXPECT_EQ(s.pct_link, 100.0);
  EXPECT_EQ(s.vocab_original, 3u);
  EXPECT_EQ(s.vocab_filtered, 1u);  // only "#a" survives the sentinels
}

TEST(CorpusStats, EmptyCorpusIsZero) {
  const auto s = corpus_stats(Corpus{});
  EXPECT_EQ(s.tweet_count, 0u);
  EXPECT_EQ(s.vocab_original, 0u);
  EXPECT_EQ(s.pct_link, 0.0);
}

TEST(CorpusStats, PercentagesIgnoreOrderAndFilteredVocabIsSmaller) {
  auto c = make({"#tx is wet", "@me hi", "plain text", "link http://x.y now", "#a #b @c"});
  const auto s = corpus_stats(c);
  EXPECT_DOUBLE_EQ(s.pct_hashtag, 40.0);
  EXPECT_DOUBLE_EQ(s.pct_mention, 40.0);
  EXPECT_DOUBLE_EQ(s.pct_link, 20.0);
  EXPECT_LE(s.vocab_filtered, s.vocab_original);
  std::reverse(c.begin(), c.end());
  const auto r = corpus_stats(c);
  EXPECT_EQ(r.pct_hashtag, s.pct_hashtag);
  EXPECT_EQ(r.pct_mention, s.pct_mention);
  EXPECT_EQ(r.vocab_original, s.vocab_original);
}

}  // namespace
}  // namespace pea
