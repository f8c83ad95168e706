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

#ifndef KWBENCH_PREDICTION_H_
#define KWBENCH_PREDICTION_H_

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kwbench/text.h"

namespace kwbench {

// Rank cutoff meaning "no limit".
inline constexpr std::size_t kAllRanks = std::numeric_limits<std::size_t>::max();

// "all" or the decimal value.
std::string RankName(std::size_t k);
// Parses "all" or a positive integer. Throws UsageError.
std::size_t ParseRank(const std::string& text);

struct ScoredKeyword {
  std::string keyword;  // normalized
  double score = 0;

  bool operator==(const ScoredKeyword&) const = default;
};

// One method's ranked output for one document. Items are ordered by score
// descending with ties broken by keyword, contain no duplicates and only
// finite scores.
struct RankedPrediction {
  std::string doc_id;
  std::string method;
  std::vector<ScoredKeyword> items;

  bool operator==(const RankedPrediction&) const = default;
};

// Orders by score descending, then keyword ascending. Drops non-finite
// scores and repeated keywords (keeping the best-ranked copy), then keeps
// the first k.
RankedPrediction MakePrediction(std::string doc_id, std::string method,
                                std::vector<ScoredKeyword> scored,
                                std::size_t k = kAllRanks);

nlohmann::json PredictionToJson(const RankedPrediction& prediction);

// Parses one predictions record. Keyword texts are normalized with
// `options`; the file order of items is kept and later duplicates dropped.
// Throws DataError on schema violations or scores that increase.
RankedPrediction PredictionFromJson(const nlohmann::json& record,
                                    const NormalizeOptions& options = {});

void WritePredictions(const std::vector<RankedPrediction>& predictions,
                      std::ostream& out);
std::vector<RankedPrediction> ReadPredictions(
    const std::string& path, const NormalizeOptions& options = {});

}  // namespace kwbench

#endif  // KWBENCH_PREDICTION_H_
