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

#include <cmath>

#include "kwbench/errors.h"
#include "kwbench/parallel.h"

namespace kwbench {

std::vector<Token> TokenizeDocument(const Document& doc,
                                    const ExtractOptions& options) {
  return Tokenize(DocumentText(doc, options.use_lemmas), *options.stopwords);
}

IdfTable IdfTable::Build(const std::vector<Document>& docs,
                         const ExtractOptions& options, std::size_t n_min,
                         std::size_t n_max, std::size_t jobs) {
  if (n_min < 1 || n_min > n_max) {
    throw UsageError("n-gram range must satisfy 1 <= min <= max");
  }
  IdfTable table;
  table.num_documents_ = docs.size();
  table.n_min_ = n_min;
  table.n_max_ = n_max;

  constexpr std::size_t kBlock = 1024;
  for (std::size_t begin = 0; begin < docs.size(); begin += kBlock) {
    const std::size_t end = std::min(docs.size(), begin + kBlock);
    std::vector<std::vector<Candidate>> block(end - begin);
    ParallelFor(block.size(), jobs, [&](std::size_t i) {
      block[i] = GenerateNgramCandidates(
          TokenizeDocument(docs[begin + i], options), n_min, n_max);
    });
    for (const auto& candidates : block) {
      for (const auto& c : candidates) ++table.df_[c.normalized_form];
    }
  }
  return table;
}

std::size_t IdfTable::document_frequency(const std::string& form) const {
  const auto it = df_.find(form);
  return it == df_.end() ? 0 : it->second;
}

double IdfTable::idf(const std::string& form) const {
  return std::log(static_cast<double>(num_documents_ + 1) /
                  static_cast<double>(document_frequency(form) + 1)) +
         1.0;
}

RankedPrediction TfidfRank(const Document& doc, const IdfTable& idf,
                           const ExtractOptions& options, std::size_t k) {
  if (k < 1) throw UsageError("k must be at least 1");
  const auto candidates = GenerateNgramCandidates(
      TokenizeDocument(doc, options), idf.n_min(), idf.n_max());
  std::vector<ScoredKeyword> scored;
  scored.reserve(candidates.size());
  for (const auto& c : candidates) {
    scored.push_back({c.normalized_form,
                      static_cast<double>(c.frequency) * idf.idf(c.normalized_form)});
  }
  return MakePrediction(doc.id, "tfidf", std::move(scored), k);
}

RankedPrediction FirstPhrasesRank(const Document& doc,
                                  const ExtractOptions& options,
                                  std::size_t k) {
  if (k < 1) throw UsageError("k must be at least 1");
  const auto candidates =
      ChunkNounPhrases(TokenizeDocument(doc, options), options.max_len);
  std::vector<ScoredKeyword> scored;
  scored.reserve(candidates.size());
  for (const auto& c : candidates) {
    scored.push_back({c.normalized_form, -static_cast<double>(c.first_position)});
  }
  return MakePrediction(doc.id, "firstphrases", std::move(scored), k);
}

}  // namespace kwbench
