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

// pea: command-line front end for the annotation pipeline. Every subcommand
// writes its artifacts plus a manifest JSON recording inputs, parameters,
// seed and tool version.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Errors are reported
// as one line on stderr: "error: <kind>: <message>".

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "pea/io.hpp"
#include "pea/pea.hpp"

namespace fs = std::filesystem;
using pea::io::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  double threshold = pea::kDefaultWorkerThreshold;
  std::size_t min_votes = 1;
  std::size_t top_k = 1000;
  std::string log_base = "2";
  bool symmetric = false;
  bool raw_dedup = false;
  std::string weighting = "worker";

  std::string lexicon;
  std::string tweets;
  std::string other;
  std::string vocab;
  std::string density_output;
  std::string name = "corpus";
  bool keep_all_negatives = false;
  bool multiclass = false;
  std::vector<std::string> classes;
  bool expect_released = false;
  std::size_t n_annotations = 5000;
  std::size_t emotions_per_annotation = 3;
  std::size_t workers_per_item = pea::kWorkersPerItem;
  std::size_t bins = 20;
  std::size_t n_sample = pea::kHitSampleSize;
  std::size_t per_hit = pea::kPairsPerHit;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pea::DataError("cannot open input '" + path + "'");
  return in;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pea::DataError("cannot write '" + path.string() + "'");
  return out;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

// Inputs are never overwritten.
void guard_inputs(const std::vector<std::string>& inputs, const std::string& output) {
  if (output.empty()) return;
  std::error_code ec;
  for (const auto& in : inputs) {
    if (in.empty()) continue;
    if (fs::exists(output) && fs::equivalent(in, output, ec))
      throw UsageError("output '" + output + "' would overwrite input '" + in + "'");
  }
}

std::uint64_t resolve_seed(const Options& o, json& manifest) {
  if (o.seed) {
    manifest["seed"] = *o.seed;
    manifest["seed_generated"] = false;
    return *o.seed;
  }
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  manifest["seed"] = seed;
  manifest["seed_generated"] = true;
  return seed;
}

json base_manifest(const std::string& command, const std::vector<std::string>& inputs) {
  json m;
  m["tool"] = "pea";
  m["version"] = std::string(pea::kVersion);
  m["subcommand"] = command;
  m["inputs"] = inputs;
  m["seed"] = nullptr;
  return m;
}

// Next to a file output, or inside a directory output.
void write_manifest(const fs::path& output, bool is_dir, const json& manifest) {
  const fs::path path = is_dir ? output / "manifest.json"
                               : fs::path(output.string() + ".manifest.json");
  auto out = open_out(path);
  out << manifest.dump(2) << '\n';
}

void print_warnings(const pea::Warnings& w) {
  for (const auto& msg : w) std::cerr << "warning: " << msg << '\n';
}

pea::PeaOptions pea_options(const Options& o) {
  pea::PeaOptions p;
  p.variant = o.symmetric ? pea::AgreementVariant::Symmetric : pea::AgreementVariant::Directed;
  if (o.weighting == "worker")
    p.weighting = pea::Weighting::Worker;
  else if (o.weighting == "worker-item")
    p.weighting = pea::Weighting::WorkerItem;
  else
    throw UsageError("--weighting must be 'worker' or 'worker-item'");
  return p;
}

json pea_parameters(const Options& o) {
  return {{"threshold", o.threshold}, {"symmetric", o.symmetric}, {"weighting", o.weighting}};
}

std::map<std::string, std::string> tweet_texts(const std::string& path) {
  std::map<std::string, std::string> texts;
  if (path.empty()) return texts;
  auto in = open_in(path);
  for (const auto& t : pea::io::read_tweets(in)) texts.emplace(t.id, t.text);
  return texts;
}

// ---------------------------------------------------------------------------

int cmd_preprocess(const Options& o) {
  require(o.input, "--input");
  require(o.output, "--output");
  guard_inputs({o.input}, o.output);
  auto in = open_in(o.input);
  const auto corpus = pea::io::read_tweets(in);
  const auto key = o.raw_dedup ? pea::DedupKey::Raw : pea::DedupKey::Normalized;
  const auto deduped = pea::dedup(corpus, key);
  {
    auto out = open_out(o.output);
    pea::io::write_tweets(out, deduped);
  }
  auto m = base_manifest("preprocess", {o.input});
  m["parameters"] = {{"raw_dedup", o.raw_dedup}};
  m["counts"] = {{"input", corpus.size()}, {"output", deduped.size()}};
  write_manifest(o.output, false, m);
  std::cout << "tweets: " << corpus.size() << " in, " << deduped.size() << " after dedup\n";
  return 0;
}

int cmd_lexfilter(const Options& o) {
  require(o.input, "--input");
  require(o.lexicon, "--lexicon");
  require(o.output, "--output");
  guard_inputs({o.input, o.lexicon}, o.output);
  auto in = open_in(o.input);
  const auto corpus = pea::io::read_tweets(in);
  auto lex_in = open_in(o.lexicon);
  const auto lexicon = pea::load_emolex(lex_in);
  pea::Warnings warnings;
  const auto kept = pea::lexicon_filter(corpus, lexicon, &warnings);
  print_warnings(warnings);
  {
    auto out = open_out(o.output);
    pea::io::write_tweets(out, kept);
  }
  auto m = base_manifest("lexfilter", {o.input, o.lexicon});
  m["counts"] = {{"input", corpus.size()}, {"output", kept.size()},
                 {"lexicon_words", lexicon.size()}, {"emotive_words", lexicon.emotive_size()}};
  m["warnings"] = warnings;
  write_manifest(o.output, false, m);
  std::cout << "tweets: " << corpus.size() << " in, " << kept.size() << " with lexicon words\n";
  return 0;
}

int cmd_stats(const Options& o) {
  require(o.input, "--input");
  guard_inputs({o.input}, o.output);
  auto in = open_in(o.input);
  const auto stats = pea::corpus_stats(pea::io::read_tweets(in));
  pea::io::render_stats(std::cout, stats, o.name);
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      out << pea::io::stats_json(stats).dump(2) << '\n';
    }
    auto m = base_manifest("stats", {o.input});
    m["parameters"] = {{"name", o.name}};
    write_manifest(o.output, false, m);
  }
  return 0;
}

pea::AgreementReport scored_report(const pea::AnnotationTable& table, const Options& o) {
  auto report = pea::apply_filter(pea::corpus_pea(table, pea_options(o)), o.threshold);
  print_warnings(report.warnings);
  return report;
}

int cmd_pea(const Options& o) {
  require(o.input, "--input");
  guard_inputs({o.input}, o.output);
  auto in = open_in(o.input);
  const auto table = pea::io::read_annotations(in);
  const auto report = scored_report(table, o);
  pea::io::render_report(std::cout, report);

  auto j = pea::io::report_json(report);
  j["interpretation"] = std::string(pea::describe(pea::interpret(report.corpus_mean)));
  j["krippendorff_alpha_jaccard"] = nullptr;
  const auto units = pea::alpha_units(table);
  std::size_t pairable = 0;
  for (const auto& u : units) pairable += u.size() >= 2;
  if (units.size() >= 2 && pairable > 0) {
    const auto alpha = pea::krippendorff_alpha(units, pea::JaccardDistance{});
    j["krippendorff_alpha_jaccard"] = alpha.alpha;
    std::cout << "krippendorff alpha (jaccard): " << pea::io::pct(alpha.alpha) << '\n';
  }
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      out << j.dump(2) << '\n';
    }
    auto m = base_manifest("pea", {o.input});
    m["parameters"] = pea_parameters(o);
    write_manifest(o.output, false, m);
  }
  return 0;
}

int cmd_filter_workers(const Options& o) {
  require(o.input, "--input");
  require(o.output, "--output");
  guard_inputs({o.input}, o.output);
  auto in = open_in(o.input);
  const auto table = pea::io::read_annotations(in);
  const auto report = scored_report(table, o);
  const auto kept = table.without_workers(report.dropped_workers);
  {
    auto out = open_out(o.output);
    pea::io::write_annotations(out, kept);
  }
  auto m = base_manifest("filter-workers", {o.input});
  m["parameters"] = pea_parameters(o);
  m["dropped_workers"] = report.dropped_workers;
  m["counts"] = {{"input_records", table.size()}, {"output_records", kept.size()},
                 {"workers", report.per_worker.size()},
                 {"dropped_workers", report.dropped_workers.size()}};
  write_manifest(o.output, false, m);
  std::cout << "workers: " << report.dropped_workers.size() << " of " << report.per_worker.size()
            << " dropped (PEA <= " << o.threshold << "); records: " << kept.size() << " of "
            << table.size() << " kept\n";
  return 0;
}

int cmd_aggregate(const Options& o) {
  require(o.input, "--input");
  require(o.output, "--output");
  guard_inputs({o.input, o.tweets}, o.output);
  auto in = open_in(o.input);
  const auto table = pea::io::read_annotations(in);
  const auto texts = tweet_texts(o.tweets);
  const auto agg = pea::aggregate_labels(table, o.min_votes);
  {
    auto out = open_out(o.output);
    for (const auto& [item, labels] : agg.labels) {
      json rec{{"id", item}};
      if (auto it = texts.find(item); it != texts.end()) rec["text"] = it->second;
      rec["labels"] = pea::io::emotions_json(labels);
      rec["empty"] = labels.empty();
      out << rec.dump() << '\n';
    }
  }
  for (const auto& item : agg.empty_items)
    std::cerr << "warning: item '" << item << "' has no label with " << o.min_votes
              << " or more votes\n";
  auto m = base_manifest("aggregate", {o.input, o.tweets});
  m["parameters"] = {{"min_votes", o.min_votes}};
  m["flagged_empty"] = agg.empty_items;
  write_manifest(o.output, false, m);
  std::cout << "items: " << agg.labels.size() << " labeled, " << agg.empty_items.size()
            << " flagged empty\n";
  return 0;
}

std::vector<pea::EmotionSet> read_label_sets(const std::string& path) {
  auto in = open_in(path);
  std::vector<pea::EmotionSet> sets;
  for (auto& it : pea::io::read_labeled(in)) sets.push_back(it.labels);
  return sets;
}

int cmd_distribution(const Options& o) {
  require(o.input, "--input");
  guard_inputs({o.input}, o.output);
  const auto counts = pea::emotion_distribution(read_label_sets(o.input));
  for (auto e : pea::kAllEmotion24)
    std::cout << std::left << std::setw(14) << pea::name_of(e) << std::right << std::setw(8)
              << counts[pea::index_of(e)] << '\n';
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      pea::io::write_distribution_csv(out, counts);
    }
    write_manifest(o.output, false, base_manifest("distribution", {o.input}));
  }
  return 0;
}

int cmd_cooccur(const Options& o) {
  require(o.input, "--input");
  guard_inputs({o.input}, o.output);
  const auto m = pea::cooccurrence(read_label_sets(o.input));
  pea::io::render_cooccurrence(std::cout, m);
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      pea::io::write_cooccurrence_csv(out, m);
    }
    write_manifest(o.output, false, base_manifest("cooccur", {o.input}));
  }
  return 0;
}

pea::TokenCounts corpus_tokens(const std::string& path,
                               const std::optional<pea::WordpieceTokenizer>& tokenizer) {
  auto in = open_in(path);
  pea::TokenCounts counts;
  for (const auto& t : pea::io::read_tweets(in)) {
    if (tokenizer)
      pea::count_wordpieces(*tokenizer, t.text, counts);
    else
      pea::count_whitespace_tokens(t.text, counts);
  }
  return counts;
}

int cmd_jsd(const Options& o) {
  require(o.input, "--input");
  require(o.other, "--other");
  guard_inputs({o.input, o.other, o.vocab}, o.output);
  guard_inputs({o.input, o.other, o.vocab}, o.density_output);
  pea::LogBase base;
  if (o.log_base == "2")
    base = pea::LogBase::Two;
  else if (o.log_base == "e")
    base = pea::LogBase::E;
  else
    throw UsageError("--log-base must be '2' or 'e'");

  std::optional<pea::WordpieceTokenizer> tokenizer;
  if (!o.vocab.empty()) {
    auto in = open_in(o.vocab);
    tokenizer = pea::WordpieceTokenizer::from_stream(in);
  }
  const auto a = corpus_tokens(o.input, tokenizer);
  const auto b = corpus_tokens(o.other, tokenizer);
  const double d = pea::jsd(pea::TokenDistribution::from_counts(a),
                            pea::TokenDistribution::from_counts(b), base);
  pea::Warnings warnings;
  const auto rows = pea::top_k_density(a, b, o.top_k, &warnings);
  print_warnings(warnings);
  std::cout << "jsd: " << pea::io::fixed(d, 6) << " (log base " << o.log_base << ", "
            << (tokenizer ? "wordpiece" : "whitespace") << " tokens)\n";

  json params{{"log_base", o.log_base}, {"top_k", o.top_k},
              {"tokenizer", tokenizer ? "wordpiece" : "whitespace"}};
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      out << json{{"jsd", d},
                  {"log_base", o.log_base},
                  {"vocab_a", a.size()},
                  {"vocab_b", b.size()},
                  {"shared_top_k", rows.size()},
                  {"warnings", warnings}}
                 .dump(2)
          << '\n';
    }
    auto m = base_manifest("jsd", {o.input, o.other, o.vocab});
    m["parameters"] = params;
    write_manifest(o.output, false, m);
  }
  if (!o.density_output.empty()) {
    {
      auto out = open_out(o.density_output);
      pea::io::write_density_csv(out, rows);
    }
    auto m = base_manifest("jsd", {o.input, o.other, o.vocab});
    m["parameters"] = params;
    write_manifest(o.density_output, false, m);
  }
  return 0;
}

int cmd_tasks_build(const Options& o) {
  require(o.input, "--input");
  require(o.output, "--output");
  guard_inputs({o.input}, o.output);
  json manifest = base_manifest("tasks-build", {o.input});
  const auto seed = resolve_seed(o, manifest);
  pea::TaskOptions topts;
  topts.keep_all_negatives = o.keep_all_negatives;

  auto in = open_in(o.input);
  std::vector<pea::TaskSplit> tasks;
  pea::Warnings warnings;
  if (o.multiclass) {
    const auto items = pea::io::read_multiclass(in);
    auto classes = o.classes;
    if (classes.empty()) {
      std::set<std::string> seen;
      for (const auto& it : items) seen.insert(it.label);
      classes.assign(seen.begin(), seen.end());
    }
    tasks = pea::split_multiclass(items, classes, seed, &warnings, topts);
  } else {
    tasks = pea::build_binary_tasks(pea::io::read_labeled(in), seed, topts);
  }
  print_warnings(warnings);

  const fs::path dir(o.output);
  fs::create_directories(dir);
  json task_entries = json::array();
  for (const auto& t : tasks) {
    const std::vector<pea::TaskExample>* parts[] = {&t.train, &t.valid, &t.test};
    json counts = json::object();
    std::size_t positives = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      auto out = open_out(pea::io::split_path(dir, t.task, pea::io::kPartitions[i]));
      pea::io::write_partition(out, *parts[i]);
      counts[pea::io::kPartitions[i]] = parts[i]->size();
      for (const auto& ex : *parts[i]) positives += ex.label;
    }
    task_entries.push_back({{"emotion", t.task},
                            {"seed", t.seed},
                            {"task_seed", pea::derive_seed(t.seed, t.task)},
                            {"counts", counts},
                            {"positives", positives},
                            {"negatives", t.size() - positives}});
    std::cout << std::left << std::setw(16) << t.task << std::right << std::setw(8)
              << t.train.size() << std::setw(8) << t.valid.size() << std::setw(8)
              << t.test.size() << '\n';
  }
  manifest["parameters"] = {{"keep_all_negatives", o.keep_all_negatives},
                            {"multiclass", o.multiclass},
                            {"classes", o.classes}};
  manifest["generator"] = std::string(pea::kSeedDerivationRule);
  manifest["tasks"] = task_entries;
  manifest["warnings"] = warnings;
  write_manifest(dir, true, manifest);
  return 0;
}

int cmd_tasks_verify(const Options& o) {
  require(o.input, "--input");
  const fs::path dir(o.input);
  if (!fs::is_directory(dir)) throw pea::DataError("'" + o.input + "' is not a directory");
  std::set<std::string> tasks;
  const std::regex train_file(R"((.+)\.train\.jsonl)");
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::smatch m;
    const auto name = entry.path().filename().string();
    if (std::regex_match(name, m, train_file)) tasks.insert(m[1]);
  }
  if (tasks.empty()) throw pea::DataError("no <task>.train.jsonl files in '" + o.input + "'");

  bool all = true;
  json reports = json::array();
  for (const auto& task : tasks) {
    const auto split = pea::io::read_split(dir, task);
    std::optional<pea::SplitSizes> expected;
    if (o.expect_released) {
      const auto g = pea::try_parse_emotion8(task);
      if (!g) throw pea::DataError("task '" + task + "' is not a wheel group");
      expected = pea::kReleasedSplitCounts[pea::index_of(*g)];
    }
    const auto r = pea::verify_split(split, expected);
    all = all && r.passed();
    json checks = json::array();
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << task << ' ' << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << '\n';
      checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    reports.push_back({{"task", task}, {"passed", r.passed()}, {"checks", checks}});
  }
  if (!o.output.empty()) {
    {
      auto out = open_out(o.output);
      out << json{{"passed", all}, {"tasks", reports}}.dump(2) << '\n';
    }
    auto m = base_manifest("tasks-verify", {o.input});
    m["parameters"] = {{"expect_released", o.expect_released}};
    write_manifest(o.output, false, m);
  }
  if (!all) {
    std::cerr << "error: verify: split verification failed\n";
    return kExitData;
  }
  return 0;
}

int cmd_calibrate(const Options& o) {
  require(o.output, "--output");
  json manifest = base_manifest("calibrate", {});
  const auto seed = resolve_seed(o, manifest);
  pea::BaselineParams p;
  p.n_annotations = o.n_annotations;
  p.emotions_per_annotation = o.emotions_per_annotation;
  p.workers_per_item = o.workers_per_item;
  p.histogram_bins = o.bins;
  const auto r = pea::random_baseline(p, seed);

  const fs::path dir(o.output);
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "histogram.csv");
    pea::io::write_histogram_csv(out, r.histogram);
  }
  {
    auto out = open_out(dir / "calibration.json");
    out << json{{"mean", r.mean},
                {"interpretation", std::string(pea::describe(pea::interpret(r.mean)))},
                {"scores", r.scores}}
               .dump(2)
        << '\n';
  }
  manifest["parameters"] = {{"n_annotations", p.n_annotations},
                            {"emotions_per_annotation", p.emotions_per_annotation},
                            {"workers_per_item", p.workers_per_item},
                            {"bins", p.histogram_bins}};
  manifest["generator"] = "mt19937_64(splitmix64(seed XOR splitmix64(item_index)))";
  write_manifest(dir, true, manifest);
  std::cout << "random baseline: " << r.scores.size() << " worker scores, mean "
            << pea::io::fixed(r.mean, 4) << '\n';
  return 0;
}

int cmd_ab_pairs(const Options& o) {
  require(o.input, "--input");
  require(o.output, "--output");
  guard_inputs({o.input, o.tweets}, o.output);
  json manifest = base_manifest("ab-pairs", {o.input, o.tweets});
  const auto seed = resolve_seed(o, manifest);
  auto in = open_in(o.input);
  const auto table = pea::io::read_annotations(in);
  const auto texts = tweet_texts(o.tweets);
  const auto pairs = pea::enumerate_ab_pairs(table);
  pea::Warnings warnings;
  const auto batches = pea::sample_hits(pairs, o.n_sample, o.per_hit, seed, &warnings);
  print_warnings(warnings);

  const fs::path dir(o.output);
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "rankings.jsonl");
    for (std::size_t h = 0; h < batches.size(); ++h) {
      for (const auto& p : batches[h]) {
        out << json{{"hit_id", h},
                    {"item_id", p.item_id},
                    {"shared_worker", p.shared_worker},
                    {"worker_a", p.worker2},
                    {"worker_b", p.worker3},
                    {"pea_rank", std::string(pea::describe(pea::pea_rank(p, table)))}}
                   .dump()
            << '\n';
      }
    }
  }
  const auto width = std::to_string(batches.size()).size();
  for (std::size_t h = 0; h < batches.size(); ++h) {
    auto id = std::to_string(h);
    id.insert(0, width - id.size(), '0');
    auto out = open_out(dir / ("hit_" + id + ".json"));
    out << pea::io::hit_json(h, batches[h], table, texts).dump(2) << '\n';
  }
  manifest["parameters"] = {{"n_sample", o.n_sample}, {"pairs_per_hit", o.per_hit}};
  manifest["pool_size"] = pairs.size();
  manifest["batches"] = batches.size();
  manifest["warnings"] = warnings;
  write_manifest(dir, true, manifest);
  std::cout << "A/B pairs: " << pairs.size() << " in pool, " << batches.size()
            << " HIT batches written\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PEA toolkit: emotion annotation agreement and corpus pipeline", "pea"};
  app.set_version_flag("--version", std::string(pea::kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub, bool input_required = true) {
    auto* opt = sub->add_option("--input,-i", o.input, "input path");
    if (input_required) opt->required();
    sub->add_option("--output,-o", o.output, "output path");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed (generated and recorded if omitted)");
  };
  auto add_pea = [&](CLI::App* sub) {
    sub->add_option("--threshold", o.threshold, "drop workers with PEA <= threshold")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_flag("--symmetric", o.symmetric, "use the symmetric agreement variant");
    sub->add_option("--weighting", o.weighting, "corpus mean over 'worker' or 'worker-item'")
        ->check(CLI::IsMember({"worker", "worker-item"}));
  };

  auto* preprocess = app.add_subcommand("preprocess", "mask entities and deduplicate tweets");
  add_io(preprocess);
  preprocess->add_flag("--raw-dedup", o.raw_dedup, "deduplicate on raw rather than normalized text");

  auto* lexfilter = app.add_subcommand("lexfilter", "keep tweets with an emotion-lexicon word");
  add_io(lexfilter);
  lexfilter->add_option("--lexicon", o.lexicon, "EmoLex word-level TSV")->required();

  auto* stats = app.add_subcommand("stats", "vocabulary and entity statistics");
  add_io(stats);
  stats->add_option("--name", o.name, "row label for the table");

  auto* pea_cmd = app.add_subcommand("pea", "per-worker and corpus PEA report");
  add_io(pea_cmd);
  add_pea(pea_cmd);

  auto* filter = app.add_subcommand("filter-workers", "drop annotations of low-PEA workers");
  add_io(filter);
  add_pea(filter);

  auto* aggregate = app.add_subcommand("aggregate", "aggregate worker annotations into labels");
  add_io(aggregate);
  aggregate->add_option("--min-votes", o.min_votes, "votes needed for an emotion")
      ->check(CLI::PositiveNumber);
  aggregate->add_option("--tweets", o.tweets, "tweets JSON-lines to attach text");

  auto* distribution = app.add_subcommand("distribution", "fine-grained emotion counts");
  add_io(distribution);

  auto* cooccur = app.add_subcommand("cooccur", "group co-occurrence matrix");
  add_io(cooccur);

  auto* jsd = app.add_subcommand("jsd", "Jensen-Shannon divergence between two corpora");
  add_io(jsd);
  jsd->add_option("--other", o.other, "second corpus (tweets JSON-lines)")->required();
  jsd->add_option("--log-base", o.log_base, "2 or e")->check(CLI::IsMember({"2", "e"}));
  jsd->add_option("--top-k", o.top_k, "shared tokens in the density table")
      ->check(CLI::PositiveNumber);
  jsd->add_option("--vocab", o.vocab, "subword vocabulary (one piece per line)");
  jsd->add_option("--density-output", o.density_output, "density table CSV");

  auto* tasks_build = app.add_subcommand("tasks-build", "build balanced binary task splits");
  add_io(tasks_build);
  add_seed(tasks_build);
  tasks_build->add_flag("--keep-all-negatives", o.keep_all_negatives,
                        "keep every negative candidate");
  tasks_build->add_flag("--multiclass", o.multiclass,
                        "input is single-label {id, text, label} records");
  tasks_build->add_option("--classes", o.classes, "class order for --multiclass");

  auto* tasks_verify = app.add_subcommand("tasks-verify", "check split files");
  add_io(tasks_verify);
  tasks_verify->add_flag("--expect-released", o.expect_released,
                         "also require the released per-partition counts");

  auto* calibrate = app.add_subcommand("calibrate", "random-annotation PEA baseline");
  add_io(calibrate, false);
  add_seed(calibrate);
  calibrate->add_option("--n-annotations", o.n_annotations)->check(CLI::PositiveNumber);
  calibrate->add_option("--emotions-per-annotation", o.emotions_per_annotation)
      ->check(CLI::Range(1, 8));
  calibrate->add_option("--workers-per-item", o.workers_per_item)->check(CLI::PositiveNumber);
  calibrate->add_option("--bins", o.bins)->check(CLI::PositiveNumber);

  auto* ab = app.add_subcommand("ab-pairs", "A/B pair pool and HIT batches");
  add_io(ab);
  add_seed(ab);
  ab->add_option("--n-sample", o.n_sample)->check(CLI::PositiveNumber);
  ab->add_option("--per-hit", o.per_hit)->check(CLI::PositiveNumber);
  ab->add_option("--tweets", o.tweets, "tweets JSON-lines for item text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*preprocess) return cmd_preprocess(o);
    if (*lexfilter) return cmd_lexfilter(o);
    if (*stats) return cmd_stats(o);
    if (*pea_cmd) return cmd_pea(o);
    if (*filter) return cmd_filter_workers(o);
    if (*aggregate) return cmd_aggregate(o);
    if (*distribution) return cmd_distribution(o);
    if (*cooccur) return cmd_cooccur(o);
    if (*jsd) return cmd_jsd(o);
    if (*tasks_build) return cmd_tasks_build(o);
    if (*tasks_verify) return cmd_tasks_verify(o);
    if (*calibrate) return cmd_calibrate(o);
    if (*ab) return cmd_ab_pairs(o);
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pea::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
