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
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "kwbench/errors.h"

namespace kwbench {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::size_t TopCount(std::size_t size, std::size_t k) {
  return std::min(size, k);
}

std::string ListSome(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < 5; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > 5) out += ", ...";
  return out;
}

std::string Fixed3(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", RoundHalfUp(value, 3));
  return buf;
}

nlohmann::json TripleToJson(const MetricTriple& t) {
  return {{"precision", t.precision}, {"recall", t.recall}, {"f1", t.f1}};
}

MetricTriple TripleFromJson(const nlohmann::json& v) {
  return {v.at("precision").get<double>(), v.at("recall").get<double>(),
          v.at("f1").get<double>()};
}

}  // namespace

double F1Score(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0 ? 0.0 : 2.0 * precision * recall / sum;
}

MetricTriple MakeTriple(double precision, double recall) {
  return {precision, recall, F1Score(precision, recall)};
}

MatchCounts MatchAtK(const std::set<std::string>& gold,
                     const std::vector<std::string>& predicted, std::size_t k) {
  MatchCounts counts;
  const std::size_t n = TopCount(predicted.size(), k);
  for (std::size_t i = 0; i < n; ++i) {
    if (gold.contains(predicted[i])) {
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  counts.fn = gold.size() - counts.tp;
  return counts;
}

MatchCounts MatchAtK(const std::set<std::string>& gold,
                     const RankedPrediction& pred, std::size_t k) {
  std::vector<std::string> predicted;
  predicted.reserve(pred.items.size());
  for (const auto& item : pred.items) predicted.push_back(item.keyword);
  return MatchAtK(gold, predicted, k);
}

MetricTriple MicroMetrics(const std::vector<MatchCounts>& per_doc) {
  MatchCounts total;
  for (const auto& c : per_doc) total += c;
  return MakeTriple(Ratio(total.tp, total.tp + total.fp),
                    Ratio(total.tp, total.tp + total.fn));
}

std::string MacroModeName(MacroMode mode) {
  switch (mode) {
    case MacroMode::kLabelGoldOnly:
      return "label_gold";
    case MacroMode::kLabelGoldUnionPredicted:
      return "label_gold_union_predicted";
    case MacroMode::kPerDocument:
      return "document";
  }
  return "";
}

MacroMode ParseMacroMode(const std::string& name) {
  for (const MacroMode mode :
       {MacroMode::kLabelGoldOnly, MacroMode::kLabelGoldUnionPredicted,
        MacroMode::kPerDocument}) {
    if (MacroModeName(mode) == name) return mode;
  }
  throw UsageError("unknown macro mode '" + name + "'");
}

MacroResult MacroMetrics(const std::vector<EvalDoc>& docs, std::size_t k,
                         MacroMode mode) {
  MacroResult result;
  double sum_p = 0;
  double sum_r = 0;
  double sum_f1 = 0;

  if (mode == MacroMode::kPerDocument) {
    for (const auto& doc : docs) {
      const MatchCounts c = MatchAtK(doc.gold, doc.predicted, k);
      const double p = Ratio(c.tp, c.tp + c.fp);
      const double r = Ratio(c.tp, c.tp + c.fn);
      sum_p += p;
      sum_r += r;
      sum_f1 += F1Score(p, r);
    }
    result.universe = docs.size();
  } else {
    std::map<std::string, MatchCounts> per_label;
    for (const auto& doc : docs) {
      const std::size_t n = TopCount(doc.predicted.size(), k);
      std::unordered_set<std::string_view> hit;
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& p = doc.predicted[i];
        if (doc.gold.contains(p)) {
          ++per_label[p].tp;
          hit.insert(p);
        } else {
          ++per_label[p].fp;
        }
      }
      for (const auto& g : doc.gold) {
        if (!hit.contains(g)) ++per_label[g].fn;
      }
    }
    std::set<std::string> gold_labels;
    for (const auto& doc : docs) gold_labels.insert(doc.gold.begin(), doc.gold.end());
    for (const auto& [label, c] : per_label) {
      if (mode == MacroMode::kLabelGoldOnly && !gold_labels.contains(label)) {
        continue;
      }
      const double p = Ratio(c.tp, c.tp + c.fp);
      const double r = Ratio(c.tp, c.tp + c.fn);
      sum_p += p;
      sum_r += r;
      sum_f1 += F1Score(p, r);
      ++result.universe;
    }
  }

  if (result.universe == 0) return result;
  const double n = static_cast<double>(result.universe);
  result.metrics = MakeTriple(sum_p / n, sum_r / n);
  result.mean_f1 = sum_f1 / n;
  return result;
}

std::string ScenarioName(Scenario scenario) {
  switch (scenario) {
    case Scenario::kFullVocab:
      return "full_vocab";
    case Scenario::kMinFreq:
      return "min_freq_10";
    case Scenario::kTrainVocabRestricted:
      return "train_vocab_restricted";
  }
  return "";
}

Scenario ParseScenario(const std::string& name) {
  for (const Scenario s : {Scenario::kFullVocab, Scenario::kMinFreq,
                           Scenario::kTrainVocabRestricted}) {
    if (ScenarioName(s) == name) return s;
  }
  if (name == "min_freq") return Scenario::kMinFreq;
  throw UsageError("unknown scenario '" + name + "'");
}

EvalReport EvaluateRun(const std::vector<Document>& corpus,
                       const SplitAssignment& split,
                       const std::vector<RankedPrediction>& predictions,
                       Scenario scenario, const std::vector<std::size_t>& ranks,
                       const EvalOptions& options) {
  if (ranks.empty()) throw UsageError("no ranks requested");
  for (const std::size_t k : ranks) {
    if (k < 1) throw UsageError("ranks must be at least 1");
  }
  if (scenario == Scenario::kMinFreq && options.min_label_docs < 1) {
    throw UsageError("minimum label frequency must be at least 1");
  }

  std::unordered_map<std::string_view, const Document*> by_id;
  for (const auto& doc : corpus) by_id.emplace(doc.id, &doc);

  EvalReport report;
  report.scenario = scenario;
  report.macro_mode = options.macro_mode;
  report.min_label_docs = options.min_label_docs;

  std::unordered_map<std::string_view, const RankedPrediction*> pred_by_id;
  std::vector<std::string> unknown;
  for (const auto& pred : predictions) {
    if (report.method.empty()) {
      report.method = pred.method;
    } else if (pred.method != report.method) {
      throw DataError("predictions mix methods '" + report.method + "' and '" +
                      pred.method + "'");
    }
    if (!by_id.contains(pred.doc_id)) {
      unknown.push_back(pred.doc_id);
      continue;
    }
    if (!pred_by_id.emplace(pred.doc_id, &pred).second) {
      throw DataError("duplicate prediction for document '" + pred.doc_id + "'");
    }
  }
  if (!unknown.empty()) {
    throw DataError(std::to_string(unknown.size()) +
                    " prediction(s) refer to documents not in the corpus: " +
                    ListSome(unknown));
  }

  const auto& test_ids = split.ids(options.test_fold);
  if (test_ids.empty()) {
    throw DataError("split has no documents in fold '" + options.test_fold + "'");
  }

  if (!pred_by_id.empty() &&
      std::none_of(test_ids.begin(), test_ids.end(), [&](const std::string& id) {
        return pred_by_id.contains(id);
      })) {
    throw DataError("none of the " + std::to_string(pred_by_id.size()) +
                    " predictions refer to a document in fold '" +
                    options.test_fold + "'");
  }

  // Keyword filters for the scenario.
  std::map<std::string, std::size_t> corpus_df;
  std::unordered_set<std::string> train_vocab;
  if (scenario == Scenario::kMinFreq) {
    corpus_df = KeywordDocumentFrequency(corpus);
  } else if (scenario == Scenario::kTrainVocabRestricted) {
    const auto& train_ids = split.ids(options.train_fold);
    if (train_ids.empty()) {
      throw DataError("split has no documents in fold '" + options.train_fold +
                      "'");
    }
    for (const auto& id : train_ids) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw DataError("split refers to unknown document '" + id + "'");
      }
      for (const auto& kw : it->second->keywords) {
        train_vocab.insert(kw.normalized);
      }
    }
  }
  const auto frequent = [&](const std::string& label) {
    const auto it = corpus_df.find(label);
    return it != corpus_df.end() && it->second >= options.min_label_docs;
  };

  std::vector<EvalDoc> docs;
  std::set<std::string> universe;
  report.counts.test_docs = test_ids.size();
  for (const auto& id : test_ids) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw DataError("split refers to unknown document '" + id + "'");
    }
    EvalDoc doc;
    for (const auto& kw : it->second->keywords) {
      if (scenario == Scenario::kMinFreq && !frequent(kw.normalized)) continue;
      doc.gold.insert(kw.normalized);
    }
    if (doc.gold.empty()) {
      ++report.counts.docs_empty_gold;
      continue;
    }
    const auto pred = pred_by_id.find(id);
    if (pred == pred_by_id.end()) {
      ++report.counts.missing_predictions;
    } else {
      for (const auto& item : pred->second->items) {
        if (scenario == Scenario::kTrainVocabRestricted &&
            !train_vocab.contains(item.keyword)) {
          continue;
        }
        if (scenario == Scenario::kMinFreq && options.filter_predictions &&
            !frequent(item.keyword)) {
          continue;
        }
        doc.predicted.push_back(item.keyword);
      }
    }
    if (doc.predicted.empty()) ++report.counts.empty_predictions;
    universe.insert(doc.gold.begin(), doc.gold.end());
    docs.push_back(std::move(doc));
  }
  report.counts.docs_scored = docs.size();
  report.counts.gold_label_universe = universe.size();

  if (docs.empty()) {
    report.warnings.push_back("no test document has gold keywords; all metrics are 0");
  }
  if (report.counts.missing_predictions > 0) {
    report.warnings.push_back(
        std::to_string(report.counts.missing_predictions) +
        " test document(s) have no prediction and count as empty");
  }

  for (const std::size_t k : ranks) {
    RankMetrics row;
    row.k = k;
    std::vector<MatchCounts> per_doc;
    per_doc.reserve(docs.size());
    for (const auto& doc : docs) {
      per_doc.push_back(MatchAtK(doc.gold, doc.predicted, k));
      row.micro_counts += per_doc.back();
    }
    row.micro = MicroMetrics(per_doc);
    row.macro = MacroMetrics(docs, k, options.macro_mode);
    report.ranks.push_back(row);
  }
  return report;
}

double RoundHalfUp(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  // The epsilon keeps values such as 0.2715 (stored as 0.27149999...) from
  // rounding down.
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

void WriteReportTsvHeader(std::ostream& out) {
  out << "method\tscenario\tmacro_mode\trank\tmicro_p\tmicro_r\tmicro_f1"
         "\tmacro_p\tmacro_r\tmacro_f1\tdocs\tempty_preds\n";
}

void WriteReportTsvRows(const EvalReport& report, std::ostream& out) {
  for (const auto& row : report.ranks) {
    out << report.method << '\t' << ScenarioName(report.scenario) << '\t'
        << MacroModeName(report.macro_mode) << '\t' << RankName(row.k) << '\t'
        << Fixed3(row.micro.precision) << '\t' << Fixed3(row.micro.recall)
        << '\t' << Fixed3(row.micro.f1) << '\t'
        << Fixed3(row.macro.metrics.precision) << '\t'
        << Fixed3(row.macro.metrics.recall) << '\t'
        << Fixed3(row.macro.metrics.f1) << '\t' << report.counts.docs_scored
        << '\t' << report.counts.empty_predictions << '\n';
  }
}

nlohmann::json ReportToJson(const EvalReport& report) {
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& row : report.ranks) {
    ranks.push_back({
        {"rank", RankName(row.k)},
        {"micro",
         {{"tp", row.micro_counts.tp},
          {"fp", row.micro_counts.fp},
          {"fn", row.micro_counts.fn},
          {"metrics", TripleToJson(row.micro)}}},
        {"macro",
         {{"metrics", TripleToJson(row.macro.metrics)},
          {"mean_f1", row.macro.mean_f1},
          {"universe", row.macro.universe}}},
    });
  }
  const EvalCounts& c = report.counts;
  return {
      {"method", report.method},
      {"scenario", ScenarioName(report.scenario)},
      {"macro_mode", MacroModeName(report.macro_mode)},
      {"min_label_docs", report.min_label_docs},
      {"counts",
       {{"test_docs", c.test_docs},
        {"docs_scored", c.docs_scored},
        {"docs_empty_gold", c.docs_empty_gold},
        {"empty_predictions", c.empty_predictions},
        {"missing_predictions", c.missing_predictions},
        {"gold_label_universe", c.gold_label_universe}}},
      {"ranks", ranks},
      {"warnings", report.warnings},
  };
}

EvalReport ReportFromJson(const nlohmann::json& value) {
  try {
    EvalReport report;
    report.method = value.at("method").get<std::string>();
    report.scenario = ParseScenario(value.at("scenario").get<std::string>());
    report.macro_mode = ParseMacroMode(value.at("macro_mode").get<std::string>());
    report.min_label_docs = value.at("min_label_docs").get<std::size_t>();
    const auto& c = value.at("counts");
    report.counts.test_docs = c.at("test_docs").get<std::size_t>();
    report.counts.docs_scored = c.at("docs_scored").get<std::size_t>();
    report.counts.docs_empty_gold = c.at("docs_empty_gold").get<std::size_t>();
    report.counts.empty_predictions = c.at("empty_predictions").get<std::size_t>();
    report.counts.missing_predictions =
        c.at("missing_predictions").get<std::size_t>();
    report.counts.gold_label_universe =
        c.at("gold_label_universe").get<std::size_t>();
    for (const auto& r : value.at("ranks")) {
      RankMetrics row;
      row.k = ParseRank(r.at("rank").get<std::string>());
      const auto& micro = r.at("micro");
      row.micro_counts = {micro.at("tp").get<std::size_t>(),
                          micro.at("fp").get<std::size_t>(),
                          micro.at("fn").get<std::size_t>()};
      row.micro = TripleFromJson(micro.at("metrics"));
      const auto& macro = r.at("macro");
      row.macro.metrics = TripleFromJson(macro.at("metrics"));
      row.macro.mean_f1 = macro.at("mean_f1").get<double>();
      row.macro.universe = macro.at("universe").get<std::size_t>();
      report.ranks.push_back(row);
    }
    report.warnings = value.value("warnings", std::vector<std::string>{});
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed evaluation report: ") + e.what());
  } catch (const UsageError& e) {
    throw DataError(std::string("malformed evaluation report: ") + e.what());
  }
}

}  // namespace kwbench
