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
//
// Precision, recall and F1 of ranked keyword predictions at rank k.
//
// Matching is exact equality of normalized keywords. Micro metrics pool
// true/false positives and false negatives over all documents; macro metrics
// average per-label (or per-document) precision and recall. In both cases
// F1 is the harmonic mean of the reported precision and recall.

#ifndef KWBENCH_EVAL_H_
#define KWBENCH_EVAL_H_

#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kwbench/corpus.h"
#include "kwbench/prediction.h"
#include "kwbench/split.h"

namespace kwbench {

struct MetricTriple {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// 2pr / (p + r), or 0 when p + r == 0.
double F1Score(double precision, double recall);
MetricTriple MakeTriple(double precision, double recall);

struct MatchCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  MatchCounts& operator+=(const MatchCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  bool operator==(const MatchCounts&) const = default;
};

// Compares the first min(k, |pred|) predicted keywords with the gold set.
MatchCounts MatchAtK(const std::set<std::string>& gold,
                     const std::vector<std::string>& predicted, std::size_t k);
MatchCounts MatchAtK(const std::set<std::string>& gold,
                     const RankedPrediction& pred, std::size_t k);

// P = sum TP / (sum TP + sum FP), R = sum TP / (sum TP + sum FN); zero
// denominators give 0.
MetricTriple MicroMetrics(const std::vector<MatchCounts>& per_doc);

enum class MacroMode {
  kLabelGoldOnly,           // mean over labels found in the gold sets
  kLabelGoldUnionPredicted, // ... plus labels that were only predicted
  kPerDocument,             // mean over documents
};

std::string MacroModeName(MacroMode mode);
MacroMode ParseMacroMode(const std::string& name);

// One document as seen by the metric code: gold labels and the ordered
// predicted keywords.
struct EvalDoc {
  std::set<std::string> gold;
  std::vector<std::string> predicted;
};

struct MacroResult {
  MetricTriple metrics;
  // Mean of per-label (or per-document) F1, for reference.
  double mean_f1 = 0;
  // Labels (or documents) averaged over.
  std::size_t universe = 0;
};

// Per label l, TP_l / FP_l / FN_l are pooled over documents at rank k and
// turned into P_l and R_l (zero denominators give 0). An empty universe
// yields an all-zero result.
MacroResult MacroMetrics(const std::vector<EvalDoc>& docs, std::size_t k,
                         MacroMode mode);

enum class Scenario {
  kFullVocab,             // gold labels as-is
  kMinFreq,               // drop gold labels in fewer than N corpus documents
  kTrainVocabRestricted,  // drop predictions never used as a training label
};

std::string ScenarioName(Scenario scenario);
Scenario ParseScenario(const std::string& name);

struct EvalOptions {
  MacroMode macro_mode = MacroMode::kLabelGoldOnly;
  std::size_t min_label_docs = 10;
  // In the min-frequency scenario, also drop rare predicted keywords.
  bool filter_predictions = false;
  std::string train_fold = "train";
  std::string test_fold = "test";
};

struct RankMetrics {
  std::size_t k = 0;
  MatchCounts micro_counts;
  MetricTriple micro;
  MacroResult macro;
};

struct EvalCounts {
  std::size_t test_docs = 0;        // size of the test fold
  std::size_t docs_scored = 0;      // test docs with non-empty gold
  std::size_t docs_empty_gold = 0;  // excluded from all metrics
  std::size_t empty_predictions = 0;  // scored docs with nothing predicted
  std::size_t missing_predictions = 0;  // scored docs absent from the run
  std::size_t gold_label_universe = 0;
};

struct EvalReport {
  std::string method;
  Scenario scenario = Scenario::kFullVocab;
  MacroMode macro_mode = MacroMode::kLabelGoldOnly;
  std::size_t min_label_docs = 10;
  std::vector<RankMetrics> ranks;
  EvalCounts counts;
  std::vector<std::string> warnings;
};

// Evaluates one method's predictions on the test fold. Predictions for ids
// outside the corpus are an error; test documents without a prediction are
// treated as empty predictions.
EvalReport EvaluateRun(const std::vector<Document>& corpus,
                       const SplitAssignment& split,
                       const std::vector<RankedPrediction>& predictions,
                       Scenario scenario, const std::vector<std::size_t>& ranks,
                       const EvalOptions& options = {});

// Half-up rounding to `digits` decimals.
double RoundHalfUp(double value, int digits);

void WriteReportTsvHeader(std::ostream& out);
void WriteReportTsvRows(const EvalReport& report, std::ostream& out);

nlohmann::json ReportToJson(const EvalReport& report);
EvalReport ReportFromJson(const nlohmann::json& value);

}  // namespace kwbench

#endif  // KWBENCH_EVAL_H_
