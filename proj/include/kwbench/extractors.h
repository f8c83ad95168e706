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
// Baseline extractors: TF-IDF and first-occurring phrases.

#ifndef KWBENCH_EXTRACTORS_H_
#define KWBENCH_EXTRACTORS_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "kwbench/candidates.h"
#include "kwbench/corpus.h"
#include "kwbench/prediction.h"

namespace kwbench {

// Settings shared by every native extractor.
struct ExtractOptions {
  const StopwordList* stopwords = &StopwordList::Default(
      StopwordList::Language::kPolish);
  std::size_t max_len = kDefaultMaxCandidateLength;
  bool use_lemmas = false;
};

std::vector<Token> TokenizeDocument(const Document& doc,
                                    const ExtractOptions& options);

// Document frequencies of n-gram candidates over a set of training
// documents.
class IdfTable {
 public:
  static IdfTable Build(const std::vector<Document>& docs,
                        const ExtractOptions& options, std::size_t n_min,
                        std::size_t n_max, std::size_t jobs = 1);

  // ln((N + 1) / (df + 1)) + 1
  double idf(const std::string& form) const;
  std::size_t document_frequency(const std::string& form) const;
  std::size_t num_documents() const { return num_documents_; }
  std::size_t n_min() const { return n_min_; }
  std::size_t n_max() const { return n_max_; }

 private:
  std::size_t num_documents_ = 0;
  std::size_t n_min_ = 1;
  std::size_t n_max_ = 1;
  std::unordered_map<std::string, std::size_t> df_;
};

// Scores each n-gram candidate by term frequency in the document times idf.
RankedPrediction TfidfRank(const Document& doc, const IdfTable& idf,
                           const ExtractOptions& options, std::size_t k);

// Ranks phrase candidates by first occurrence; the score is
// -first_position.
RankedPrediction FirstPhrasesRank(const Document& doc,
                                  const ExtractOptions& options,
                                  std::size_t k);

}  // namespace kwbench

#endif  // KWBENCH_EXTRACTORS_H_
