// Copyright 2026 The kwbench Authors.
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

#include "kwbench/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace kwbench {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kCorpus = KWBENCH_FIXTURES "/mini_corpus.jsonl";
const std::string kVectors = KWBENCH_FIXTURES "/toy_vectors.txt";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Kwbench(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("kwbench_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Split, then extract with `method` into `name`.
  std::string MakeSplit() {
    const auto split = Path("split.json");
    const auto r = Kwbench({"split", "--corpus", kCorpus, "--out", split});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return split;
  }
  std::string Extract(const std::string& method, const std::string& split,
                      const std::string& name) {
    const auto out = Path(name);
    const auto r = Kwbench({"extract", "--corpus", kCorpus, "--split", split, "--method",
                        method, "--k", "5", "--out", out});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return out;
  }

  fs::path dir_;
};

TEST_F(CliTest, StatsMatchesIndependentRecount) {
  const auto r = Kwbench({"stats", "--corpus", kCorpus, "--min-docs", "2", "--min-docs", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json got = json::parse(r.out);
  const json want = json::parse(Slurp(KWBENCH_FIXTURES "/mini_corpus.expected_stats.json"));
  for (const auto& [key, value] : want.items()) {
    SCOPED_TRACE(key);
    ASSERT_TRUE(got.contains(key));
    if (value.is_number_float()) {
      EXPECT_NEAR(got[key].get<double>(), value.get<double>(), 1e-12);
    } else {
      EXPECT_EQ(got[key], value);
    }
  }
}

TEST_F(CliTest, StatsPerFold) {
  const auto split = MakeSplit();
  const auto r = Kwbench({"stats", "--corpus", kCorpus, "--split", split});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json got = json::parse(r.out);
  ASSERT_TRUE(got.contains("folds"));
  std::size_t docs = 0;
  for (const auto& [fold, stats] : got["folds"].items()) docs += stats["documents"].get<std::size_t>();
  EXPECT_EQ(docs, 10u);
}

TEST_F(CliTest, ExitCodes) {
  const auto empty = Path("empty.jsonl");
  std::ofstream(empty).close();
  const auto e = Kwbench({"stats", "--corpus", empty});
  EXPECT_EQ(e.code, kExitData);
  EXPECT_NE(e.err.find("empty corpus"), std::string::npos);

  const auto missing = Kwbench({"stats", "--corpus", Path("nope.jsonl")});
  EXPECT_EQ(missing.code, kExitData);

  const auto kb = Kwbench({"extract", "--corpus", kCorpus, "--method", "keybert", "--out",
                       Path("kb.jsonl")});
  EXPECT_EQ(kb.code, kExitUsage);
  EXPECT_NE(kb.err.find("--vectors"), std::string::npos);

  EXPECT_EQ(Kwbench({"stats", "--corpus", kCorpus, "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Kwbench({"extract", "--corpus", kCorpus, "--method", "nope", "--out",
                 Path("x.jsonl")}).code,
            kExitUsage);
  EXPECT_EQ(Kwbench({}).code, kExitUsage);
  EXPECT_EQ(Kwbench({"--help"}).code, kExitOk);
  EXPECT_EQ(Kwbench({"split", "--corpus", kCorpus, "--ratios", "train=0.5,test=0.2", "--out",
                 Path("s.json")}).code,
            kExitUsage);
}

TEST_F(CliTest, ExtractAllMethods) {
  const auto split = MakeSplit();
  for (const std::string method : {"tfidf", "textrank", "cvalue", "ncvalue", "firstphrases"}) {
    SCOPED_TRACE(method);
    const auto out = Extract(method, split, method + ".jsonl");
    std::ifstream in(out);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
      const json record = json::parse(line);
      EXPECT_EQ(record["method"], method);
      EXPECT_LE(record["keywords"].size(), 5u);
      ++lines;
    }
    EXPECT_EQ(lines, 10u);
    EXPECT_TRUE(fs::exists(ManifestPath(out)));
  }
  const auto kb = Kwbench({"extract", "--corpus", kCorpus, "--method", "keybert", "--vectors",
                       kVectors, "--zero-fallback", "--out", Path("kb.jsonl")});
  EXPECT_EQ(kb.code, kExitOk) << kb.err;
  const json config = json::parse(Slurp(ManifestPath(Path("kb.jsonl"))))["config"];
  EXPECT_EQ(config["diversity_mode"], "mmr");
  EXPECT_NE(std::find(config["tool_defaults"].begin(), config["tool_defaults"].end(), "--pool"),
            config["tool_defaults"].end());
}

TEST_F(CliTest, KAllKeepsEveryCandidate) {
  const auto five = Path("five.jsonl");
  const auto all = Path("all.jsonl");
  ASSERT_EQ(Kwbench({"extract", "--corpus", kCorpus, "--method", "cvalue", "--k", "5", "--out",
                 five}).code,
            kExitOk);
  ASSERT_EQ(Kwbench({"extract", "--corpus", kCorpus, "--method", "cvalue", "--k", "all", "--out",
                 all}).code,
            kExitOk);
  EXPECT_GT(Slurp(all).size(), Slurp(five).size());
}

TEST_F(CliTest, EvaluateAndReport) {
  const auto split = MakeSplit();
  const auto a = Extract("tfidf", split, "a.jsonl");
  const auto b = Extract("textrank", split, "b.jsonl");
  const auto tsv = Path("eval.tsv");
  const auto js = Path("eval.json");
  const auto r = Kwbench({"evaluate", "--corpus", kCorpus, "--split", split, "--predictions", a,
                      "--predictions", b, "--ranks", "1,3,5,10", "--tsv", tsv, "--json", js});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string table = Slurp(tsv);
  // Header plus two methods times four ranks.
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 9);
  EXPECT_NE(table.find("tfidf\tfull_vocab"), std::string::npos);
  EXPECT_NE(table.find("textrank\tfull_vocab"), std::string::npos);
  EXPECT_NE(table.find("\t10\t"), std::string::npos);
  EXPECT_EQ(json::parse(Slurp(js))["reports"].size(), 2u);

  const auto rep = Kwbench({"report", "--json", js});
  ASSERT_EQ(rep.code, kExitOk) << rep.err;
  EXPECT_EQ(rep.out, table);

  const auto all = Kwbench({"evaluate", "--corpus", kCorpus, "--split", split, "--predictions", a,
                        "--scenario", "all", "--min-label-docs", "2"});
  ASSERT_EQ(all.code, kExitOk) << all.err;
  EXPECT_NE(all.out.find("min_freq_10"), std::string::npos);
  EXPECT_NE(all.out.find("train_vocab_restricted"), std::string::npos);
}

TEST_F(CliTest, TransferReadsTextFiles) {
  const auto in = dir_ / "texts";
  fs::create_directories(in);
  std::ofstream(in / "b.txt") << "Bezpieczeństwo energetyczne i polityka energetyczna.\n";
  std::ofstream(in / "a.txt") << "Ochrona środowiska w gminach.\n";
  const auto out = Path("t.jsonl");
  const auto r = Kwbench({"transfer", "--input", in.string(), "--method", "cvalue", "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(Slurp(out));
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(json::parse(first)["id"], "a.txt");
}

TEST_F(CliTest, RerunFromManifestIsByteIdentical) {
  const auto split = MakeSplit();
  const auto out = Path("p.jsonl");
  ASSERT_EQ(Kwbench({"--seed", "7", "extract", "--corpus", kCorpus, "--split", split, "--method",
                 "textrank", "--k", "4", "--out", out}).code,
            kExitOk);
  const std::string first = Slurp(out);
  const std::string manifest = Slurp(ManifestPath(out));
  const json m = json::parse(manifest);
  EXPECT_EQ(m["subcommand"], "extract");
  EXPECT_EQ(m["seed"], 7);
  EXPECT_EQ(m["config"]["method"], "textrank");
  fs::remove(out);

  const auto copy = Path("saved.manifest.json");
  fs::copy_file(ManifestPath(out), copy);
  const auto r = Kwbench({"rerun", "--manifest", copy});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Slurp(out), first);
  EXPECT_EQ(Slurp(ManifestPath(out)), manifest);
}

TEST_F(CliTest, SplitIsSeeded) {
  const auto a = Path("a.json");
  const auto b = Path("b.json");
  const auto c = Path("c.json");
  ASSERT_EQ(Kwbench({"--seed", "3", "split", "--corpus", kCorpus, "--out", a}).code, kExitOk);
  ASSERT_EQ(Kwbench({"--seed", "3", "split", "--corpus", kCorpus, "--out", b}).code, kExitOk);
  ASSERT_EQ(Kwbench({"--seed", "3", "split", "--corpus", kCorpus, "--method", "random", "--out",
                 c}).code,
            kExitOk);
  EXPECT_EQ(Slurp(a), Slurp(b));
  const json s = json::parse(Slurp(a));
  EXPECT_EQ(s["seed"], 3);
}

}  // namespace
}  // namespace kwbench
