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
// Corpus-level term statistics and C-value / NC-value ranking.
//
// For a candidate term a with corpus frequency f(a), length |a| in words and
// the set T_a of longer candidates that contain it:
//
//   Cvalue(a) = log2(|a| + 1) * f(a)                               a unnested
//   Cvalue(a) = log2(|a| + 1) * (f(a) - sum_{b in T_a} f(b) / |T_a|)  otherwise
//
// The length factor is shifted by one so that single words keep a non-zero
// score. NC-value mixes in context words:
//
//   NCvalue(a) = alpha * Cvalue(a) + beta * sum_{w in C_a} f_a(w) * weight(w)
//
// with f_a(w) the number of times w occurs within the context window of a,
// and weight(w) the number of distinct candidates w occurs around divided by
// the number of candidates in the table.

#ifndef KWBENCH_TERM_TABLE_H_
#define KWBENCH_TERM_TABLE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kwbench/extractors.h"

namespace kwbench {

inline constexpr std::size_t kDefaultContextWindow = 2;

struct TermEntry {
  std::string form;
  std::size_t length = 0;
  std::size_t frequency = 0;
  // Indices of candidates that properly contain this one; sorted, unique.
  std::vector<std::size_t> nested_in;
  // Context word -> co-occurrence count.
  std::map<std::string, std::size_t> context;
};

class TermTable {
 public:
  // Candidates are ChunkNounPhrases(options.max_len) of every document.
  // Context words are non-stopword tokens within `context_window` positions
  // of an occurrence, outside it, in the same sentence.
  static TermTable Build(const std::vector<Document>& docs,
                         const ExtractOptions& options,
                         std::size_t context_window = kDefaultContextWindow,
                         std::size_t jobs = 1);

  const std::vector<TermEntry>& entries() const { return entries_; }
  std::optional<std::size_t> find(const std::string& form) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t context_window() const { return context_window_; }

  // Number of distinct candidates the word occurs around.
  std::size_t context_word_spread(const std::string& word) const;

  double CValue(std::size_t entry) const;
  double ContextScore(std::size_t entry) const;
  double NCValue(std::size_t entry, double alpha, double beta) const;

 private:
  std::vector<TermEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::size_t> context_spread_;
  std::size_t context_window_ = kDefaultContextWindow;
};

// C-value of an unnested candidate with the given length and frequency.
double UnnestedCValue(std::size_t length, std::size_t frequency);

struct NcValueWeights {
  double alpha = 0.8;
  double beta = 0.2;
};

// Ranks the document's own phrase candidates by corpus-level C-value.
// Candidates missing from the table count as f = 1, unnested. k may be
// kAllRanks.
RankedPrediction CValueRank(const Document& doc, const TermTable& table,
                            const ExtractOptions& options, std::size_t k);

// As CValueRank, scored by NC-value. alpha + beta must equal 1.
RankedPrediction NCValueRank(const Document& doc, const TermTable& table,
                             const ExtractOptions& options, std::size_t k,
                             const NcValueWeights& weights = {});

}  // namespace kwbench

#endif  // KWBENCH_TERM_TABLE_H_
