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

// File formats: JSON-lines records, JSON reports, CSV tables and the
// human-readable renderings printed by the CLI.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pea/agreement.hpp"
#include "pea/analytics.hpp"
#include "pea/calibration.hpp"
#include "pea/corpus.hpp"
#include "pea/tasks.hpp"

namespace pea::io {

using json = nlohmann::json;

// Calls `fn(object, line_number)` for each non-blank line; parse and field
// errors become DataError naming the line.
inline void for_each_jsonl(std::istream& in, const std::function<void(const json&, std::size_t)>& fn,
                           const std::string& what = "input") {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto where = [&] { return what + " line " + std::to_string(lineno) + ": "; };
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where() + "invalid JSON");
    }
    if (!obj.is_object()) throw DataError(where() + "expected a JSON object");
    try {
      fn(obj, lineno);
    } catch (const json::exception& e) {
      throw DataError(where() + e.what());
    } catch (const UnknownLabelError& e) {
      throw DataError(where() + e.what());
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    }
  }
}

inline std::string id_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw DataError(std::string("field '") + key + "' must be a string");
}

inline EmotionSet emotions_field(const json& arr) {
  if (!arr.is_array()) throw DataError("emotion list must be an array");
  EmotionSet s;
  for (const auto& v : arr) s.insert(parse_emotion24(v.get<std::string>()));
  return s;
}

inline json emotions_json(EmotionSet s) { return s.names(); }

// {item_id, worker_id, emotions}
inline AnnotationTable read_annotations(std::istream& in) {
  AnnotationTable table;
  for_each_jsonl(in, [&](const json& o, std::size_t) {
    auto emotions = emotions_field(o.at("emotions"));
    table.add({id_field(o, "item_id"), id_field(o, "worker_id"), emotions});
  }, "annotations");
  return table;
}

inline void write_annotations(std::ostream& out, const AnnotationTable& table) {
  for (const auto& r : table.records())
    out << json{{"item_id", r.item_id}, {"worker_id", r.worker_id},
                {"emotions", emotions_json(r.emotions)}}.dump()
        << '\n';
}

// {id, text, raw_text?, source?, labels?}. Without raw_text the text field
// is taken as raw and normalized here.
inline Corpus read_tweets(std::istream& in) {
  Corpus corpus;
  std::set<std::string> ids;
  for_each_jsonl(in, [&](const json& o, std::size_t) {
    TweetRecord t;
    t.id = id_field(o, "id");
    if (!ids.insert(t.id).second) throw DataError("duplicate tweet id '" + t.id + "'");
    const auto text = o.at("text").get<std::string>();
    if (o.contains("raw_text")) {
      t.raw_text = o.at("raw_text").get<std::string>();
      t.text = text;
    } else {
      t.raw_text = text;
      t.text = normalize_tweet(text);
    }
    if (o.contains("source") && !o.at("source").is_null())
      t.source = o.at("source").get<std::string>();
    if (o.contains("labels") && !o.at("labels").is_null())
      t.labels = emotions_field(o.at("labels"));
    corpus.push_back(std::move(t));
  }, "tweets");
  return corpus;
}

inline json tweet_json(const TweetRecord& t) {
  json o{{"id", t.id}, {"text", t.text}, {"raw_text", t.raw_text}};
  if (t.source) o["source"] = *t.source;
  if (t.labels) o["labels"] = emotions_json(*t.labels);
  return o;
}

inline void write_tweets(std::ostream& out, const Corpus& corpus) {
  for (const auto& t : corpus) out << tweet_json(t).dump() << '\n';
}

// {id, text?, labels} (or "emotions" in place of "labels").
inline std::vector<LabeledItem> read_labeled(std::istream& in) {
  std::vector<LabeledItem> items;
  for_each_jsonl(in, [&](const json& o, std::size_t) {
    LabeledItem it;
    it.id = id_field(o, "id");
    it.text = o.value("text", std::string{});
    it.labels = emotions_field(o.contains("labels") ? o.at("labels") : o.at("emotions"));
    items.push_back(std::move(it));
  }, "labels");
  return items;
}

inline std::vector<ClassItem> read_multiclass(std::istream& in) {
  std::vector<ClassItem> items;
  for_each_jsonl(in, [&](const json& o, std::size_t) {
    items.push_back({id_field(o, "id"), o.value("text", std::string{}),
                     o.at("label").get<std::string>()});
  }, "dataset");
  return items;
}

inline json report_json(const AgreementReport& r) {
  json per_item = json::array();
  for (const auto& [key, s] : r.per_item_per_worker)
    per_item.push_back({{"item_id", key.first}, {"worker_id", key.second}, {"pea", s}});
  json per_worker = json::object();
  for (const auto& [w, s] : r.per_worker) per_worker[w] = s;
  json o{{"per_item_per_worker", per_item},
         {"per_worker", per_worker},
         {"corpus_mean", r.corpus_mean},
         {"items_scored", r.items_scored},
         {"items_skipped", r.items_skipped},
         {"warnings", r.warnings}};
  if (r.threshold) {
    o["threshold"] = *r.threshold;
    o["dropped_workers"] = r.dropped_workers;
    o["corpus_mean_kept"] = r.corpus_mean_kept;
  }
  return o;
}

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// x100, one decimal.
inline std::string pct(double score) { return fixed(score * 100.0, 1); }

inline void render_report(std::ostream& out, const AgreementReport& r) {
  std::size_t width = 6;
  for (const auto& [w, s] : r.per_worker) width = std::max(width, w.size());
  out << std::left << std::setw(static_cast<int>(width)) << "worker" << "  "
      << std::right << std::setw(6) << "PEA" << '\n';
  for (const auto& [w, s] : r.per_worker) {
    out << std::left << std::setw(static_cast<int>(width)) << w << "  " << std::right
        << std::setw(6) << pct(s);
    if (r.dropped_workers.contains(w)) out << "  dropped";
    out << '\n';
  }
  out << "corpus mean: " << pct(r.corpus_mean) << " ("
      << describe(interpret(r.corpus_mean)) << ")\n";
  if (r.threshold)
    out << "corpus mean after filter (<= " << fixed(*r.threshold, 2)
        << " dropped): " << pct(r.corpus_mean_kept) << '\n';
}

inline json stats_json(const CorpusStats& s) {
  return {{"tweet_count", s.tweet_count},       {"vocab_original", s.vocab_original},
          {"vocab_filtered", s.vocab_filtered}, {"pct_hashtag", s.pct_hashtag},
          {"pct_mention", s.pct_mention},       {"pct_link", s.pct_link}};
}

inline std::string thousands(std::size_t n) {
  if (n < 1000) return std::to_string(n);
  return fixed(static_cast<double>(n) / 1000.0, 1) + "K";
}

// Columns: Orig. Filt. # @ //
inline void render_stats(std::ostream& out, const CorpusStats& s,
                         const std::string& name = "corpus") {
  const int w = std::max<int>(8, static_cast<int>(name.size()));
  out << std::left << std::setw(w) << "" << std::right << std::setw(8) << "Orig."
      << std::setw(8) << "Filt." << std::setw(7) << "#" << std::setw(7) << "@"
      << std::setw(7) << "//" << '\n';
  out << std::left << std::setw(w) << name << std::right << std::setw(8)
      << thousands(s.vocab_original) << std::setw(8) << thousands(s.vocab_filtered)
      << std::setw(7) << fixed(s.pct_hashtag, 1) << std::setw(7) << fixed(s.pct_mention, 1)
      << std::setw(7) << fixed(s.pct_link, 1) << '\n';
}

inline void write_distribution_csv(std::ostream& out, const EmotionCounts& counts) {
  for (std::size_t i = 0; i < kNumEmotion24; ++i)
    out << (i ? "," : "") << abbrev_of(emotion24_at(i));
  out << '\n';
  for (std::size_t i = 0; i < kNumEmotion24; ++i) out << (i ? "," : "") << counts[i];
  out << '\n';
}

// Full symmetric matrix; first column holds the row code.
inline void write_cooccurrence_csv(std::ostream& out, const CooccurrenceMatrix& m) {
  out << "emotion";
  for (auto g : kAllEmotion8) out << ',' << abbrev_of(g);
  out << '\n';
  for (auto r : kAllEmotion8) {
    out << abbrev_of(r);
    for (auto c : kAllEmotion8) out << ',' << m(r, c);
    out << '\n';
  }
}

// Lower triangle only (upper masked).
inline void render_cooccurrence(std::ostream& out, const CooccurrenceMatrix& m) {
  out << std::setw(6) << "";
  for (auto g : kAllEmotion8) out << std::setw(7) << abbrev_of(g);
  out << '\n';
  for (std::size_t i = 0; i < kNumEmotion8; ++i) {
    out << std::left << std::setw(6) << abbrev_of(emotion8_at(i)) << std::right;
    for (std::size_t j = 0; j <= i; ++j)
      out << std::setw(7) << m(emotion8_at(i), emotion8_at(j));
    out << '\n';
  }
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_density_csv(std::ostream& out, const std::vector<DensityRow>& rows) {
  out << "token_a,density_a,token_b,density_b\n";
  for (const auto& r : rows) {
    const auto tok = csv_escape(r.token);
    out << tok << ',' << json(r.density_a).dump() << ',' << tok << ','
        << json(r.density_b).dump() << '\n';
  }
}

inline void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins) {
  out << "bin_low,bin_high,count\n";
  for (const auto& b : bins)
    out << json(b.low).dump() << ',' << json(b.high).dump() << ',' << b.count << '\n';
}

inline json split_example_json(const TaskExample& ex) {
  return {{"id", ex.id}, {"text", ex.text}, {"label", ex.label}};
}

inline constexpr std::array<const char*, 3> kPartitions{"train", "valid", "test"};

inline std::filesystem::path split_path(const std::filesystem::path& dir,
                                        const std::string& task, const char* part) {
  return dir / (task + "." + part + ".jsonl");
}

inline void write_partition(std::ostream& out, const std::vector<TaskExample>& part) {
  for (const auto& ex : part) out << split_example_json(ex).dump() << '\n';
}

inline std::vector<TaskExample> read_partition(std::istream& in, const std::string& what) {
  std::vector<TaskExample> out;
  for_each_jsonl(in, [&](const json& o, std::size_t) {
    TaskExample ex{id_field(o, "id"), o.value("text", std::string{}), o.at("label").get<int>()};
    if (ex.label != 0 && ex.label != 1) throw DataError("label must be 0 or 1");
    out.push_back(std::move(ex));
  }, what);
  return out;
}

// Reads <task>.{train,valid,test}.jsonl from `dir`.
inline TaskSplit read_split(const std::filesystem::path& dir, const std::string& task) {
  TaskSplit split;
  split.task = task;
  std::vector<TaskExample>* parts[] = {&split.train, &split.valid, &split.test};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto path = split_path(dir, task, kPartitions[i]);
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    *parts[i] = read_partition(in, path.filename().string());
  }
  return split;
}

inline json hit_json(std::size_t hit_id, const HitBatch& batch, const AnnotationTable& table,
                     const std::map<std::string, std::string>& texts) {
  json pairs = json::array();
  auto sets = [&](const ABPair& p, const std::string& other) {
    const auto* a = table.find(p.item_id, p.shared_worker);
    const auto* b = table.find(p.item_id, other);
    if (!a || !b) throw DataError("missing annotation for item '" + p.item_id + "'");
    return json::array({emotions_json(*a), emotions_json(*b)});
  };
  for (const auto& p : batch) {
    auto it = texts.find(p.item_id);
    pairs.push_back({{"item_text", it == texts.end() ? p.item_id : it->second},
                     {"annotations_a", sets(p, p.worker2)},
                     {"annotations_b", sets(p, p.worker3)}});
  }
  return {{"hit_id", hit_id}, {"pairs", pairs}};
}

}  // namespace pea::io
