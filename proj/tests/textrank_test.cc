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

#include "kwbench/textrank.h"

#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"

namespace kwbench {
namespace {

const StopwordList& None() { return StopwordList::Default(StopwordList::Language::kNone); }

std::vector<Token> RandomTokens(std::mt19937_64& rng, std::size_t n, std::size_t vocab) {
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    text += testing::Uniform(rng, 0, 6) == 0 ? "i " : testing::RandomWord(rng, vocab) + " ";
  }
  return Tokenize(text, StopwordList::Default(StopwordList::Language::kPolish));
}

TEST(CooccurrenceGraphTest, MatchesDenseConstruction) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tokens = RandomTokens(rng, 40, 12);
    const std::size_t window = testing::Uniform(rng, 2, 6);
    const WordGraph g = BuildCooccurrenceGraph(tokens, window);
    const oracle::DenseGraph dense = oracle::BuildDenseGraph(tokens, window);
    ASSERT_EQ(g.nodes, dense.nodes);
    for (std::size_t u = 0; u < g.size(); ++u) {
      std::vector<double> row(g.size(), 0.0);
      for (const auto& [v, w] : g.adjacency[u]) row[v] = w;
      EXPECT_EQ(row, dense.w[u]);
    }
  }
}

TEST(PageRankTest, SymmetricPair) {
  const auto tokens = Tokenize("alpha beta alpha beta", None());
  const auto g = BuildCooccurrenceGraph(tokens, 4);
  const auto r = PageRank(g, 0.85, 1e-6, 100);
  ASSERT_EQ(r.scores.size(), 2u);
  EXPECT_DOUBLE_EQ(r.scores[0], r.scores[1]);
}

TEST(PageRankTest, SingleNode) {
  Document doc;
  doc.id = "d";
  doc.title = "jedno";
  ExtractOptions options;
  options.stopwords = &None();
  const auto g = BuildCooccurrenceGraph(TokenizeDocument(doc, options), 4);
  const auto r = PageRank(g, 0.85, 1e-6, 100);
  ASSERT_EQ(r.scores.size(), 1u);
  EXPECT_NEAR(r.scores[0], 0.15, 1e-12);
  const auto p = TextRankRank(doc, options, {}, 5);
  ASSERT_EQ(p.items.size(), 1u);
  EXPECT_EQ(p.items[0].keyword, "jedno");
}

TEST(PageRankTest, EmptyGraph) {
  Document doc;
  doc.id = "d";
  doc.title = "i w na";
  ExtractOptions options;
  EXPECT_TRUE(TextRankRank(doc, options, {}, 5).items.empty());
}

TEST(PageRankProperty, MatchesDenseOracleAndResidual) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tokens = RandomTokens(rng, testing::Uniform(rng, 2, 80), 50);
    const std::size_t window = testing::Uniform(rng, 2, 5);
    const auto g = BuildCooccurrenceGraph(tokens, window);
    if (g.size() == 0) continue;
    const double d = 0.85;
    const auto precise = PageRank(g, d, 1e-13, 100000);
    const auto want = oracle::DensePageRank(oracle::BuildDenseGraph(tokens, window), d);
    ASSERT_EQ(precise.scores.size(), want.size());
    for (std::size_t v = 0; v < want.size(); ++v) {
      EXPECT_NEAR(precise.scores[v], want[v], 1e-8);
    }
    const auto defaults = PageRank(g, d, 1e-6, 100);
    EXPECT_TRUE(defaults.converged);
    EXPECT_LT(PageRankResidual(g, defaults.scores, d), 10 * 1e-6);
  }
}

TEST(TextRankRankTest, PhraseScoreIsSumOfMembers) {
  ExtractOptions options;
  options.stopwords = &None();
  Document doc;
  doc.id = "d";
  doc.abstract = "sieci neuronowe, sieci grafowe. uczenie sieci neuronowe";
  const auto tokens = TokenizeDocument(doc, options);
  const auto g = BuildCooccurrenceGraph(tokens, 4);
  const auto r = PageRank(g, 0.85, 1e-6, 100);
  std::map<std::string, double> node;
  for (std::size_t i = 0; i < g.size(); ++i) node[g.nodes[i]] = r.scores[i];
  const auto p = TextRankRank(doc, options, {}, kAllRanks);
  for (const auto& item : p.items) {
    double sum = 0;
    std::size_t from = 0;
    while (from <= item.keyword.size()) {
      const std::size_t sp = std::min(item.keyword.find(' ', from), item.keyword.size());
      sum += node.at(item.keyword.substr(from, sp - from));
      from = sp + 1;
    }
    EXPECT_NEAR(item.score, sum, 1e-12) << item.keyword;
  }
  EXPECT_EQ(p.method, "textrank");
}

}  // namespace
}  // namespace kwbench
