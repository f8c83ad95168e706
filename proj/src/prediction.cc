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

#include "kwbench/prediction.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "kwbench/errors.h"

namespace kwbench {

using nlohmann::json;

std::string RankName(std::size_t k) {
  return k == kAllRanks ? "all" : std::to_string(k);
}

std::size_t ParseRank(const std::string& text) {
  if (text == "all") return kAllRanks;
  std::size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw UsageError("invalid rank \"" + text +
                     "\" (expected a positive integer or \"all\")");
  }
  return value;
}

RankedPrediction MakePrediction(std::string doc_id, std::string method,
                                std::vector<ScoredKeyword> scored,
                                std::size_t k) {
  std::erase_if(scored, [](const ScoredKeyword& s) {
    return !std::isfinite(s.score) || s.keyword.empty();
  });
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredKeyword& a, const ScoredKeyword& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.keyword < b.keyword;
                   });
  RankedPrediction out{std::move(doc_id), std::move(method), {}};
  std::unordered_set<std::string> seen;
  for (auto& s : scored) {
    if (out.items.size() >= k) break;
    if (!seen.insert(s.keyword).second) continue;
    out.items.push_back(std::move(s));
  }
  return out;
}

json PredictionToJson(const RankedPrediction& prediction) {
  json keywords = json::array();
  for (const auto& item : prediction.items) {
    keywords.push_back({{"text", item.keyword}, {"score", item.score}});
  }
  return {{"id", prediction.doc_id},
          {"method", prediction.method},
          {"keywords", std::move(keywords)}};
}

RankedPrediction PredictionFromJson(const json& record,
                                    const NormalizeOptions& options) {
  if (!record.is_object()) throw DataError("record is not a JSON object");
  RankedPrediction out;
  const auto id = record.find("id");
  if (id == record.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw DataError("\"id\" must be a non-empty string");
  }
  out.doc_id = id->get<std::string>();
  const auto method = record.find("method");
  if (method == record.end() || !method->is_string()) {
    throw DataError("\"method\" must be a string");
  }
  out.method = method->get<std::string>();
  const auto keywords = record.find("keywords");
  if (keywords == record.end() || !keywords->is_array()) {
    throw DataError("\"keywords\" must be an array");
  }
  std::unordered_set<std::string> seen;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& item : *keywords) {
    if (!item.is_object() || !item.contains("text") ||
        !item["text"].is_string()) {
      throw DataError("keyword items need a string \"text\"");
    }
    if (!item.contains("score") || !item["score"].is_number()) {
      throw DataError("keyword items need a numeric \"score\"");
    }
    const double score = item["score"].get<double>();
    if (!std::isfinite(score)) throw DataError("scores must be finite");
    if (score > previous) {
      throw DataError("keywords of \"" + out.doc_id +
                      "\" are not sorted by descending score");
    }
    previous = score;
    std::string keyword =
        NormalizeKeyword(item["text"].get<std::string>(), options);
    if (keyword.empty() || !seen.insert(keyword).second) continue;
    out.items.push_back({std::move(keyword), score});
  }
  return out;
}

void WritePredictions(const std::vector<RankedPrediction>& predictions,
                      std::ostream& out) {
  for (const auto& p : predictions) out << PredictionToJson(p).dump() << '\n';
}

std::vector<RankedPrediction> ReadPredictions(const std::string& path,
                                              const NormalizeOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open predictions file: " + path);
  std::vector<RankedPrediction> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(PredictionFromJson(json::parse(line), options));
    } catch (const std::exception& e) {
      throw DataError(path + ":" + std::to_string(line_number) + ": " +
                      e.what());
    }
  }
  return out;
}

}  // namespace kwbench
