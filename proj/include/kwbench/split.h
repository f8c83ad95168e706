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

#ifndef KWBENCH_SPLIT_H_
#define KWBENCH_SPLIT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kwbench/corpus.h"

namespace kwbench {

// Fold name -> requested share of documents. Folds are kept in name order;
// the order only matters for tie-breaking and is deterministic.
using FoldRatios = std::map<std::string, double>;

inline constexpr std::size_t kDefaultRefineMinDf = 10;

struct LabelBalance {
  std::string label;
  std::size_t document_frequency = 0;
  // Fold name -> share of this label's documents placed in the fold.
  std::map<std::string, double> proportions;
};

struct SplitAssignment {
  std::map<std::string, std::vector<std::string>> fold_ids;
  FoldRatios ratios;
  uint64_t seed = 0;
  std::vector<LabelBalance> balance_report;

  // Ids of a fold, or an empty list if the fold does not exist.
  const std::vector<std::string>& ids(const std::string& fold) const;
};

// Validates ratios: every ratio > 0, sum 1 within 1e-9. Throws UsageError.
void ValidateRatios(const FoldRatios& ratios);

// Multilabel iterative stratification. The rarest remaining label is
// processed first; each of its documents goes to the fold with the largest
// remaining demand for that label, then the largest overall demand, then a
// seeded random pick. Unlabeled documents are placed last by overall demand.
// Labels are the documents' normalized keywords.
//
// Unless `refine_min_df` is 0, the iterative assignment is followed by a
// swap-based local search that moves the fold proportions of labels with at
// least `refine_min_df` documents closer to the fold ratios. Fold sizes are
// kept.
SplitAssignment IterativeStratifiedSplit(const std::vector<Document>& docs,
                                         const FoldRatios& ratios,
                                         uint64_t seed,
                                         std::size_t refine_min_df = kDefaultRefineMinDf);

// Seeded uniform shuffle cut at the requested ratios. Used as a baseline for
// balance comparisons.
SplitAssignment RandomSplit(const std::vector<Document>& docs,
                            const FoldRatios& ratios, uint64_t seed);

// Per-label share of documents in each fold.
std::vector<LabelBalance> ComputeBalance(
    const std::vector<Document>& docs,
    const std::map<std::string, std::vector<std::string>>& fold_ids);

// Mean over labels with document frequency >= min_df of the largest absolute
// deviation between a label's fold share and the fold ratio.
double MeanMaxLabelDeviation(const SplitAssignment& split,
                             std::size_t min_df = 1);

nlohmann::json SplitToJson(const SplitAssignment& split);
SplitAssignment SplitFromJson(const nlohmann::json& value);
SplitAssignment LoadSplit(const std::string& path);

}  // namespace kwbench

#endif  // KWBENCH_SPLIT_H_
