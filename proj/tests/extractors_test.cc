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

#include "kwbench/extractors.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "kwbench/errors.h"
#include "test_util.h"

namespace kwbench {
namespace {

Document Doc(const std::string& id, const std::string& abstract) {
  Document doc;
  doc.id = id;
  doc.abstract = abstract;
  return doc;
}

ExtractOptions NoStop() {
  ExtractOptions options;
  options.stopwords = &StopwordList::Default(StopwordList::Language::kNone);
  return options;
}

double Score(const RankedPrediction& p, const std::string& keyword) {
  for (const auto& item : p.items) {
    if (item.keyword == keyword) return item.score;
  }
  ADD_FAILURE() << "missing " << keyword;
  return std::nan("");
}

TEST(IdfTableTest, FormulaExamples) {
  const auto options = NoStop();
  std::vector<Document> train;
  for (int i = 0; i < 9; ++i) train.push_back(Doc(std::to_string(i), "common word" + std::to_string(i)));
  const auto idf = IdfTable::Build(train, options, 1, 1);
  EXPECT_EQ(idf.num_documents(), 9u);
  EXPECT_DOUBLE_EQ(idf.idf("common"), 1.0);
  EXPECT_DOUBLE_EQ(idf.idf("unseen"), std::log(10.0) + 1.0);

  const auto p = TfidfRank(Doc("x", "common"), idf, options, 5);
  EXPECT_DOUBLE_EQ(Score(p, "common"), 1.0);

  const auto two = IdfTable::Build({Doc("a", "rare rare"), Doc("b", "other")}, options, 1, 2);
  const auto q = TfidfRank(Doc("a", "rare rare"), two, options, kAllRanks);
  EXPECT_DOUBLE_EQ(Score(q, "rare"), 2.0 * (std::log(1.5) + 1.0));
  EXPECT_THROW(IdfTable::Build(train, options, 2, 1), UsageError);
  EXPECT_THROW(TfidfRank(Doc("x", "a"), idf, options, 0), UsageError);
}

TEST(TfidfRankTest, EmptyDocumentGivesEmptyPrediction) {
  const auto options = NoStop();
  const auto idf = IdfTable::Build({Doc("a", "x")}, options, 1, 2);
  Document doc;
  doc.id = "e";
  doc.title = "...";
  EXPECT_TRUE(TfidfRank(doc, idf, options, 5).items.empty());
  EXPECT_EQ(TfidfRank(doc, idf, options, 5).method, "tfidf");
}

TEST(TfidfRankProperty, BagOfWords) {
  std::mt19937_64 rng(31);
  const auto options = NoStop();
  std::vector<Document> train;
  for (int i = 0; i < 30; ++i) {
    std::string text;
    for (int w = 0; w < 20; ++w) text += testing::RandomWord(rng, 25) + " ";
    train.push_back(Doc(std::to_string(i), text));
  }
  const auto idf = IdfTable::Build(train, options, 1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> words;
    for (int w = 0; w < 30; ++w) words.push_back(testing::RandomWord(rng, 25));
    auto join = [](const std::vector<std::string>& ws) {
      std::string s;
      for (const auto& w : ws) s += w + " ";
      return s;
    };
    const auto a = TfidfRank(Doc("d", join(words)), idf, options, kAllRanks);
    std::shuffle(words.begin(), words.end(), rng);
    const auto b = TfidfRank(Doc("d", join(words)), idf, options, kAllRanks);
    EXPECT_EQ(a, b);
  }
}

TEST(FirstPhrasesRankTest, Examples) {
  ExtractOptions options;  // Polish stopwords
  Document doc;
  doc.id = "d";
  doc.title = "Ochrona gleb";
  doc.abstract = "Badanie i analiza erozji.";
  const auto p = FirstPhrasesRank(doc, options, kAllRanks);
  ASSERT_FALSE(p.items.empty());
  // Title tokens come first; the nested spans at position 0 tie-break
  // lexicographically.
  EXPECT_EQ(p.items[0].keyword, "ochrona");
  EXPECT_EQ(p.items[1].keyword, "ochrona gleb");
  EXPECT_DOUBLE_EQ(p.items[0].score, 0.0);
  EXPECT_DOUBLE_EQ(Score(p, "analiza erozji"), -4.0);
  EXPECT_EQ(FirstPhrasesRank(doc, options, 1).items.size(), 1u);
}

TEST(ExtractorsTest, UseLemmas) {
  Document doc = Doc("d", "Koty");
  doc.lemma_text = "kot";
  ExtractOptions options = NoStop();
  EXPECT_EQ(FirstPhrasesRank(doc, options, 1).items[0].keyword, "koty");
  options.use_lemmas = true;
  EXPECT_EQ(FirstPhrasesRank(doc, options, 1).items[0].keyword, "kot");
}

TEST(IdfTableTest, ParallelBuildMatchesSerial) {
  std::mt19937_64 rng(32);
  std::vector<Document> docs;
  for (int i = 0; i < 2500; ++i) {
    std::string text;
    for (int w = 0; w < 8; ++w) text += testing::RandomWord(rng, 50) + " ";
    docs.push_back(Doc(std::to_string(i), text));
  }
  const auto options = NoStop();
  const auto serial = IdfTable::Build(docs, options, 1, 2, 1);
  const auto parallel = IdfTable::Build(docs, options, 1, 2, 4);
  for (int w = 0; w < 50; ++w) {
    const std::string form = "w" + std::to_string(w);
    EXPECT_EQ(serial.document_frequency(form), parallel.document_frequency(form));
  }
}

}  // namespace
}  // namespace kwbench
