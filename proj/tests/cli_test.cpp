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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pea/io.hpp"
#include "pea/version.hpp"

namespace pea {
namespace {

namespace fs = std::filesystem;
using io::json;

const fs::path kData = PEA_TEST_DATA;

struct Outcome {
  int status;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    tmp_ = fs::temp_directory_path() /
           ("pea_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(tmp_);
    fs::create_directories(tmp_);
  }
  void TearDown() override { fs::remove_all(tmp_); }

  Outcome run(const std::string& args) {
    const auto out = tmp_ / "stdout", err = tmp_ / "stderr";
    const std::string cmd = std::string("\"") + PEA_CLI + "\" " + args + " >\"" + out.string() +
                            "\" 2>\"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path tmp_;
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

TEST_F(Cli, PeaMatchesHandComputedFixture) {
  const auto report = tmp_ / "report.json";
  const auto r = run("pea --input " + q(kData / "three_workers.jsonl") + " --output " + q(report));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(slurp(report));
  EXPECT_DOUBLE_EQ(j["per_worker"]["w1"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["per_worker"]["w2"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["per_worker"]["w3"].get<double>(), 0.0);
  const auto m = json::parse(slurp(report.string() + ".manifest.json"));
  EXPECT_EQ(m["subcommand"], "pea");
  EXPECT_EQ(m["version"], std::string(kVersion));
  EXPECT_DOUBLE_EQ(m["parameters"]["threshold"].get<double>(), 0.55);
  EXPECT_NE(r.out.find("w3"), std::string::npos);
}

TEST_F(Cli, TasksBuildIsByteIdenticalForSameSeed) {
  const auto labels = tmp_ / "labels.jsonl";
  {
    std::ofstream out(labels);
    for (const auto& it : fixtures::synthetic_corpus(400, 5))
      out << json{{"id", it.id}, {"text", it.text}, {"labels", io::emotions_json(it.labels)}}.dump()
          << '\n';
  }
  ASSERT_EQ(run("tasks-build --input " + q(labels) + " --output " + q(tmp_ / "a") + " --seed 42").status, 0);
  ASSERT_EQ(run("tasks-build --input " + q(labels) + " --output " + q(tmp_ / "b") + " --seed 42").status, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(tmp_ / "a")) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(tmp_ / "b" / e.path().filename())) << e.path();
  }
  EXPECT_EQ(files, 8u * 3u + 1u);
  const auto m = json::parse(slurp(tmp_ / "a" / "manifest.json"));
  EXPECT_EQ(m["seed"].get<std::uint64_t>(), 42u);
  EXPECT_FALSE(m["seed_generated"].get<bool>());

  const auto v = run("tasks-verify --input " + q(tmp_ / "a"));
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, VerifyDetectsLeakage) {
  const auto dir = tmp_ / "s";
  fs::create_directories(dir);
  std::ofstream(dir / "joy.train.jsonl") << "{\"id\":\"x\",\"label\":1}\n{\"id\":\"y\",\"label\":0}\n";
  std::ofstream(dir / "joy.valid.jsonl") << "{\"id\":\"x\",\"label\":1}\n";
  std::ofstream(dir / "joy.test.jsonl") << "";
  const auto r = run("tasks-verify --input " + q(dir));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, SeedIsGeneratedAndRecorded) {
  ASSERT_EQ(run("calibrate --n-annotations 50 --output " + q(tmp_ / "c")).status, 0);
  const auto m = json::parse(slurp(tmp_ / "c" / "manifest.json"));
  EXPECT_TRUE(m["seed_generated"].get<bool>());
  const auto seed = m["seed"].get<std::uint64_t>();
  ASSERT_EQ(run("calibrate --n-annotations 50 --seed " + std::to_string(seed) + " --output " +
                q(tmp_ / "d")).status, 0);
  EXPECT_EQ(slurp(tmp_ / "c" / "calibration.json"), slurp(tmp_ / "d" / "calibration.json"));
  EXPECT_EQ(slurp(tmp_ / "c" / "histogram.csv"), slurp(tmp_ / "d" / "histogram.csv"));
}

TEST_F(Cli, StatsOnEmptyFileIsZero) {
  const auto out = tmp_ / "stats.json";
  const auto r = run("stats --input " + q(kData / "empty.jsonl") + " --output " + q(out));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(slurp(out));
  EXPECT_EQ(j["tweet_count"], 0);
  EXPECT_EQ(j["vocab_original"], 0);
  EXPECT_EQ(j["pct_link"], 0.0);
}

TEST_F(Cli, PreprocessMasksAndDoesNotTouchInput) {
  const auto before = slurp(kData / "tweets.jsonl");
  const auto out = tmp_ / "clean.jsonl";
  ASSERT_EQ(run("preprocess --input " + q(kData / "tweets.jsonl") + " --output " + q(out)).status, 0);
  EXPECT_EQ(slurp(kData / "tweets.jsonl"), before);
  const auto text = slurp(out);
  EXPECT_NE(text.find("<USER> <URL>"), std::string::npos);
  EXPECT_EQ(text.find("@alice\","), std::string::npos);
}

TEST_F(Cli, RefusesToOverwriteInput) {
  const auto in = tmp_ / "in.jsonl";
  fs::copy_file(kData / "tweets.jsonl", in);
  const auto r = run("preprocess --input " + q(in) + " --output " + q(in));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(slurp(in), slurp(kData / "tweets.jsonl"));
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("no-such-command").status, 1);
  EXPECT_EQ(run("pea").status, 1);
  EXPECT_EQ(run("jsd --input a --other b --log-base 10").status, 1);
}

TEST_F(Cli, DataErrorsExitTwoWithOneLine) {
  const auto r = run("pea --input " + q(kData / "broken.jsonl"));
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err, "error: data: annotations line 2: invalid JSON\n");
  const auto missing = run("pea --input " + q(tmp_ / "missing.jsonl"));
  EXPECT_EQ(missing.status, 2);
  EXPECT_EQ(missing.err.rfind("error: data: cannot open input", 0), 0u) << missing.err;
}

TEST_F(Cli, FilterThenAggregate) {
  const auto ann = tmp_ / "ann.jsonl";
  std::ofstream(ann) << "{\"item_id\":\"a\",\"worker_id\":\"w1\",\"emotions\":[\"joy\"]}\n"
                        "{\"item_id\":\"a\",\"worker_id\":\"w2\",\"emotions\":[\"joy\",\"fear\"]}\n"
                        "{\"item_id\":\"a\",\"worker_id\":\"w3\",\"emotions\":[\"joy\"]}\n";
  ASSERT_EQ(run("filter-workers --input " + q(ann) + " --output " + q(tmp_ / "kept.jsonl")).status, 0);
  const auto agg = run("aggregate --input " + q(tmp_ / "kept.jsonl") + " --min-votes 2 --output " +
                       q(tmp_ / "labels.jsonl"));
  ASSERT_EQ(agg.status, 0) << agg.err;
  const auto j = json::parse(slurp(tmp_ / "labels.jsonl"));
  EXPECT_EQ(j["labels"], json::array({"joy"}));
}

TEST_F(Cli, JsdOfCorpusWithItselfIsZero) {
  const auto out = tmp_ / "jsd.json";
  const auto r = run("jsd --input " + q(kData / "tweets.jsonl") + " --other " +
                     q(kData / "tweets.jsonl") + " --log-base e --output " + q(out) +
                     " --density-output " + q(tmp_ / "density.csv"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(slurp(out))["jsd"].get<double>(), 0.0);
  EXPECT_EQ(slurp(tmp_ / "density.csv").rfind("token_a,density_a,token_b,density_b\n", 0), 0u);
}

TEST_F(Cli, AbPairsWritesBatches) {
  const auto ann = tmp_ / "ann.jsonl";
  {
    std::ofstream out(ann);
    for (int i = 0; i < 30; ++i)
      for (int w = 0; w < 4; ++w)
        out << json{{"item_id", "t" + std::to_string(i)},
                    {"worker_id", "w" + std::to_string(w)},
                    {"emotions", w % 2 ? json{"joy"} : json{"fear"}}}
                   .dump()
            << '\n';
  }
  const auto r = run("ab-pairs --input " + q(ann) + " --seed 3 --n-sample 40 --output " + q(tmp_ / "ab"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto m = json::parse(slurp(tmp_ / "ab" / "manifest.json"));
  EXPECT_EQ(m["pool_size"], 30 * 12);
  EXPECT_EQ(m["batches"], 4);
  const auto hit = json::parse(slurp(tmp_ / "ab" / "hit_0.json"));
  EXPECT_EQ(hit["pairs"].size(), 10u);
}

TEST_F(Cli, DistributionAndCooccurrenceCsv) {
  const auto labels = tmp_ / "labels.jsonl";
  std::ofstream(labels) << "{\"id\":\"a\",\"labels\":[\"joy\",\"fear\"]}\n{\"id\":\"b\",\"labels\":[\"joy\"]}\n";
  ASSERT_EQ(run("distribution --input " + q(labels) + " --output " + q(tmp_ / "d.csv")).status, 0);
  ASSERT_EQ(run("cooccur --input " + q(labels) + " --output " + q(tmp_ / "c.csv")).status, 0);
  EXPECT_NE(slurp(tmp_ / "d.csv").find('\n'), std::string::npos);
  EXPECT_EQ(slurp(tmp_ / "c.csv").rfind("emotion,", 0), 0u);
}

}  // namespace
}  // namespace pea
