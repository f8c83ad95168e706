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

#include "kwbench/eval.h"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "kwbench/errors.h"
#include "oracles.h"
#include "published_rows.h"
#include "test_util.h"

namespace kwbench {
namespace {

using testing::Pred;
using testing::RandomSetup;
using testing::Setup;
using testing::View;

Document Doc(const std::string& id, const std::vector<std::string>& keywords) {
  Document d;
  d.id = id;
  d.title = id;
  for (const auto& kw : keywords) AddKeyword(&d, kw);
  return d;
}

SplitAssignment AllTest(const std::vector<Document>& docs) {
  SplitAssignment s;
  s.ratios = {{"test", 1.0}};
  for (const auto& d : docs) s.fold_ids["test"].push_back(d.id);
  return s;
}

TEST(F1ScoreTest, Examples) {
  EXPECT_DOUBLE_EQ(F1Score(0.5, 0.5), 0.5);
  EXPECT_EQ(F1Score(0, 0), 0.0);
  EXPECT_NEAR(F1Score(0.318, 0.237), 0.27159, 1e-5);
  const auto t = MakeTriple(1, 0.5);
  EXPECT_DOUBLE_EQ(t.f1, 2.0 / 3.0);
}

TEST(F1ScoreTest, PublishedCellsSatisfyIdentity) {
  for (const auto& row : testing::kPublishedRows) {
    SCOPED_TRACE(std::string(row.scenario) + " " + row.method + " @" + row.rank);
    EXPECT_NEAR(F1Score(row.micro_p, row.micro_r), row.micro_f1, 0.0015);
    EXPECT_NEAR(F1Score(row.macro_p, row.macro_r), row.macro_f1, 0.0015);
  }
}

TEST(RoundHalfUpTest, Examples) {
  EXPECT_EQ(RoundHalfUp(0.2715, 3), 0.272);
  EXPECT_EQ(RoundHalfUp(0.2714, 3), 0.271);
  EXPECT_EQ(RoundHalfUp(0.0625, 3), 0.063);
  EXPECT_EQ(RoundHalfUp(1.0, 3), 1.0);
}

using Keywords = std::vector<std::string>;

TEST(MatchAtKTest, Examples) {
  const std::set<std::string> gold = {"a", "b", "c"};
  EXPECT_EQ(MatchAtK(gold, Keywords{"a", "x", "b"}, 3), (MatchCounts{2, 1, 1}));
  EXPECT_EQ(MatchAtK(gold, Keywords{"a", "x", "b"}, 1), (MatchCounts{1, 0, 2}));
  EXPECT_EQ(MatchAtK(gold, Keywords{"a"}, 5), (MatchCounts{1, 0, 2}));
  EXPECT_EQ(MatchAtK(gold, Keywords{}, 5), (MatchCounts{0, 0, 3}));
  EXPECT_EQ(MatchAtK(gold, Keywords{"a", "x", "b"}, kAllRanks), (MatchCounts{2, 1, 1}));
}

TEST(MicroMetricsTest, Example) {
  const auto m = MicroMetrics({{2, 1, 1}});
  EXPECT_DOUBLE_EQ(m.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.f1, 2.0 / 3.0);
  const auto zero = MicroMetrics({{0, 0, 4}});
  EXPECT_EQ(zero.precision, 0.0);
  EXPECT_EQ(zero.f1, 0.0);
}

TEST(MacroMetricsTest, Example) {
  // Label a: tp 1, fn 1 -> P 1, R 0.5. Label b: fp 1, fn 1 -> P 0, R 0.
  const std::vector<EvalDoc> docs = {{{"a", "b"}, {"a"}}, {{"a"}, {"b"}}};
  const auto r = MacroMetrics(docs, 1, MacroMode::kLabelGoldOnly);
  EXPECT_EQ(r.universe, 2u);
  EXPECT_DOUBLE_EQ(r.metrics.precision, 0.5);
  EXPECT_DOUBLE_EQ(r.metrics.recall, 0.25);
  EXPECT_DOUBLE_EQ(r.metrics.f1, F1Score(0.5, 0.25));
  EXPECT_DOUBLE_EQ(r.mean_f1, (F1Score(1, 0.5) + 0) / 2);
}

TEST(MacroMetricsTest, SpuriousLabelOnlyInUnionMode) {
  const std::vector<EvalDoc> docs = {{{"a"}, {"a", "z"}}};
  const auto gold_only = MacroMetrics(docs, 2, MacroMode::kLabelGoldOnly);
  EXPECT_EQ(gold_only.universe, 1u);
  EXPECT_DOUBLE_EQ(gold_only.metrics.precision, 1.0);
  const auto with_pred = MacroMetrics(docs, 2, MacroMode::kLabelGoldUnionPredicted);
  EXPECT_EQ(with_pred.universe, 2u);
  EXPECT_DOUBLE_EQ(with_pred.metrics.precision, 0.5);
  EXPECT_DOUBLE_EQ(with_pred.metrics.recall, 0.5);
  const auto per_doc = MacroMetrics(docs, 2, MacroMode::kPerDocument);
  EXPECT_EQ(per_doc.universe, 1u);
  EXPECT_DOUBLE_EQ(per_doc.metrics.precision, 0.5);
  EXPECT_DOUBLE_EQ(per_doc.metrics.recall, 1.0);
  EXPECT_EQ(MacroMetrics({}, 1, MacroMode::kLabelGoldOnly).universe, 0u);
}

TEST(NamesTest, RoundTrip) {
  for (auto m : {MacroMode::kLabelGoldOnly, MacroMode::kLabelGoldUnionPredicted,
                 MacroMode::kPerDocument}) {
    EXPECT_EQ(ParseMacroMode(MacroModeName(m)), m);
  }
  for (auto s : {Scenario::kFullVocab, Scenario::kMinFreq,
                 Scenario::kTrainVocabRestricted}) {
    EXPECT_EQ(ParseScenario(ScenarioName(s)), s);
  }
  EXPECT_EQ(ParseScenario("min_freq"), Scenario::kMinFreq);
  EXPECT_THROW(ParseScenario("bogus"), UsageError);
  EXPECT_THROW(ParseMacroMode("bogus"), UsageError);
}

TEST(EvaluateRunTest, CountsAndErrors) {
  const std::vector<Document> corpus = {Doc("a", {"x", "y"}), Doc("b", {}),
                                        Doc("c", {"z"}), Doc("d", {"x"})};
  const auto split = AllTest(corpus);
  const auto report = EvaluateRun(
      corpus, split, {Pred("a", {"x", "q"}), Pred("b", {"x"}), Pred("d", {})},
      Scenario::kFullVocab, {1, kAllRanks});
  EXPECT_EQ(report.method, "m");
  EXPECT_EQ(report.counts.test_docs, 4u);
  EXPECT_EQ(report.counts.docs_scored, 3u);
  EXPECT_EQ(report.counts.docs_empty_gold, 1u);
  EXPECT_EQ(report.counts.missing_predictions, 1u);
  EXPECT_EQ(report.counts.empty_predictions, 2u);
  EXPECT_EQ(report.counts.gold_label_universe, 3u);
  EXPECT_FALSE(report.warnings.empty());
  ASSERT_EQ(report.ranks.size(), 2u);
  EXPECT_EQ(report.ranks[0].micro_counts, (MatchCounts{1, 0, 3}));
  EXPECT_EQ(report.ranks[1].micro_counts, (MatchCounts{1, 1, 3}));

  const std::vector<std::size_t> r1 = {1};
  EXPECT_THROW(EvaluateRun(corpus, split, {Pred("nope", {"x"})}, Scenario::kFullVocab, r1),
               DataError);
  EXPECT_THROW(EvaluateRun(corpus, split, {Pred("a", {"x"}), Pred("a", {"y"})},
                           Scenario::kFullVocab, r1),
               DataError);
  EXPECT_THROW(EvaluateRun(corpus, split, {Pred("a", {"x"}), Pred("c", {"y"}, "other")},
                           Scenario::kFullVocab, r1),
               DataError);
  SplitAssignment shifted;
  shifted.fold_ids = {{"train", {"a"}}, {"test", {"b", "c"}}};
  EXPECT_THROW(EvaluateRun(corpus, shifted, {Pred("a", {"x"})}, Scenario::kFullVocab, r1),
               DataError);
  EXPECT_THROW(EvaluateRun(corpus, split, {}, Scenario::kFullVocab, {}), UsageError);
  EXPECT_THROW(EvaluateRun(corpus, split, {}, Scenario::kFullVocab, {0}), UsageError);
  EXPECT_THROW(EvaluateRun(corpus, shifted, {}, Scenario::kFullVocab, r1, {.test_fold = "dev"}),
               DataError);
}

TEST(EvaluateRunTest, ScenarioFilters) {
  // "x" appears in 3 documents, "y" and "z" in one each.
  std::vector<Document> corpus = {Doc("a", {"x", "y"}), Doc("b", {"x"}),
                                  Doc("c", {"x", "z"})};
  SplitAssignment split;
  split.fold_ids = {{"train", {"a", "b"}}, {"test", {"c"}}};
  const std::vector<RankedPrediction> preds = {Pred("c", {"z", "y", "x"})};
  const std::vector<std::size_t> ranks = {1, kAllRanks};

  EvalOptions options;
  options.min_label_docs = 2;
  const auto freq = EvaluateRun(corpus, split, preds, Scenario::kMinFreq, ranks, options);
  EXPECT_EQ(freq.counts.gold_label_universe, 1u);
  EXPECT_EQ(freq.ranks[1].micro_counts, (MatchCounts{1, 2, 0}));
  options.filter_predictions = true;
  const auto freq_both = EvaluateRun(corpus, split, preds, Scenario::kMinFreq, ranks, options);
  EXPECT_EQ(freq_both.ranks[0].micro_counts, (MatchCounts{1, 0, 0}));

  // Train vocabulary is {x, y}; "z" is dropped before truncation.
  const auto train = EvaluateRun(corpus, split, preds, Scenario::kTrainVocabRestricted, ranks);
  EXPECT_EQ(train.ranks[0].micro_counts, (MatchCounts{0, 1, 2}));
  EXPECT_EQ(train.ranks[1].micro_counts, (MatchCounts{1, 1, 1}));
}

TEST(EvaluateRunProperty, MatchesBruteForceRecount) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const auto s = RandomSetup(rng, 100, 10);
    const auto v = View(s);
    if (v.gold.empty()) continue;
    const std::vector<std::size_t> ranks = {1, 3, 5, kAllRanks};
    for (const auto mode : {MacroMode::kLabelGoldOnly, MacroMode::kLabelGoldUnionPredicted}) {
      EvalOptions options;
      options.macro_mode = mode;
      const auto report = EvaluateRun(s.corpus, s.split, s.predictions,
                                      Scenario::kFullVocab, ranks, options);
      ASSERT_EQ(report.counts.docs_scored, v.gold.size());
      for (const auto& r : report.ranks) {
        const auto m = oracle::RecountMicro(v.gold, v.predicted, r.k);
        EXPECT_EQ(r.micro_counts, (MatchCounts{m.tp, m.fp, m.fn}));
        EXPECT_NEAR(r.micro.precision, m.p().value(), 1e-12);
        EXPECT_NEAR(r.micro.recall, m.r().value(), 1e-12);
        const auto [mp, mr] = oracle::RecountMacro(
            v.gold, v.predicted, r.k, mode == MacroMode::kLabelGoldUnionPredicted);
        EXPECT_NEAR(r.macro.metrics.precision, mp, 1e-12);
        EXPECT_NEAR(r.macro.metrics.recall, mr, 1e-12);
        EXPECT_NEAR(r.macro.metrics.f1, F1Score(mp, mr), 1e-12);
      }
    }
  }
}

TEST(EvaluateRunProperty, InvariantUnderDocumentOrder) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 50; ++t) {
    auto s = RandomSetup(rng, 60, 8);
    const std::vector<std::size_t> ranks = {1, 5};
    const auto a = EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab, ranks);
    std::shuffle(s.corpus.begin(), s.corpus.end(), rng);
    std::shuffle(s.predictions.begin(), s.predictions.end(), rng);
    std::shuffle(s.split.fold_ids["test"].begin(), s.split.fold_ids["test"].end(), rng);
    const auto b = EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab, ranks);
    EXPECT_EQ(ReportToJson(a), ReportToJson(b));
  }
}

TEST(EvaluateRunProperty, RecallNonDecreasingInK) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 100; ++t) {
    const auto s = RandomSetup(rng, 80, 10);
    const auto report = EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab,
                                    {1, 2, 3, 5, 8, kAllRanks});
    for (std::size_t i = 1; i < report.ranks.size(); ++i) {
      EXPECT_GE(report.ranks[i].micro.recall, report.ranks[i - 1].micro.recall);
      EXPECT_GE(report.ranks[i].macro.metrics.recall,
                report.ranks[i - 1].macro.metrics.recall - 1e-15);
    }
  }
}

TEST(EvaluateRunProperty, PerfectPredictorScoresOne) {
  std::mt19937_64 rng(74);
  for (int t = 0; t < 50; ++t) {
    auto s = RandomSetup(rng, 80, 10);
    s.predictions.clear();
    for (const auto& doc : s.corpus) {
      std::vector<std::string> kws;
      for (const auto& kw : doc.keywords) kws.push_back(kw.normalized);
      s.predictions.push_back(Pred(doc.id, kws));
    }
    const auto report =
        EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab, {kAllRanks});
    if (report.counts.docs_scored == 0) continue;
    EXPECT_EQ(report.ranks[0].micro.f1, 1.0);
    EXPECT_EQ(report.ranks[0].macro.metrics.f1, 1.0);
  }
}

TEST(EvaluateRunProperty, MinFreqScanShrinksUniverse) {
  std::mt19937_64 rng(75);
  for (int t = 0; t < 30; ++t) {
    const auto s = RandomSetup(rng, 100, 10);
    std::size_t last_universe = SIZE_MAX;
    std::size_t last_scored = SIZE_MAX;
    for (std::size_t n = 1; n <= 20; ++n) {
      EvalOptions options;
      options.min_label_docs = n;
      const auto r = EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kMinFreq,
                                 {5}, options);
      EXPECT_LE(r.counts.gold_label_universe, last_universe);
      EXPECT_LE(r.counts.docs_scored, last_scored);
      EXPECT_EQ(r.counts.docs_scored + r.counts.docs_empty_gold, r.counts.test_docs);
      last_universe = r.counts.gold_label_universe;
      last_scored = r.counts.docs_scored;
    }
  }
}

TEST(EvaluateRunProperty, TrainVocabRestriction) {
  std::mt19937_64 rng(76);
  for (int t = 0; t < 100; ++t) {
    const auto s = RandomSetup(rng, 100, 6);
    const auto full =
        EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab, {kAllRanks});
    const auto restricted = EvaluateRun(s.corpus, s.split, s.predictions,
                                        Scenario::kTrainVocabRestricted, {kAllRanks});
    const auto& f = full.ranks[0].micro_counts;
    const auto& r = restricted.ranks[0].micro_counts;
    EXPECT_LE(r.tp, f.tp);
    EXPECT_LE(r.fp, f.fp);
    EXPECT_LE(restricted.ranks[0].micro.recall, full.ranks[0].micro.recall);
    // Only keywords outside the training vocabulary are removed; if every
    // removed one was a false positive, precision cannot fall.
    if (r.tp == f.tp) {
      EXPECT_GE(restricted.ranks[0].micro.precision, full.ranks[0].micro.precision);
    }
  }
}

TEST(ReportIoTest, JsonRoundTripAndTsv) {
  std::mt19937_64 rng(77);
  const auto s = RandomSetup(rng, 50, 6);
  EvalOptions options;
  options.macro_mode = MacroMode::kLabelGoldUnionPredicted;
  const auto report = EvaluateRun(s.corpus, s.split, s.predictions, Scenario::kFullVocab,
                                  {1, 3, kAllRanks}, options);
  const auto json = ReportToJson(report);
  const auto back = ReportFromJson(json);
  EXPECT_EQ(ReportToJson(back), json);

  std::ostringstream a, b;
  WriteReportTsvHeader(a);
  WriteReportTsvRows(report, a);
  WriteReportTsvHeader(b);
  WriteReportTsvRows(back, b);
  const std::string tsv = a.str();
  EXPECT_EQ(tsv, b.str());
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 4);
  EXPECT_NE(tsv.find("\tall\t"), std::string::npos);

  EXPECT_THROW(ReportFromJson(nlohmann::json::array()), DataError);
  EXPECT_THROW(ReportFromJson(nlohmann::json{{"method", 3}}), DataError);
}

}  // namespace
}  // namespace kwbench
