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
// Corpus records and keyword vocabulary statistics.
//
// A corpus is a JSONL file with one record per line:
//
//   {"id": "...", "title": "...", "abstract": "...",
//    "keywords": ["..."], "domains": ["..."], "lemma_text": "..."}
//
// "domains" and "lemma_text" are optional. Keywords are normalized on load
// and deduplicated on their normalized form (first surface form wins).

#ifndef KWBENCH_CORPUS_H_
#define KWBENCH_CORPUS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kwbench/text.h"

namespace kwbench {

struct KeywordForm {
  std::string surface;
  std::string normalized;

  static KeywordForm FromSurface(std::string surface,
                                 const NormalizeOptions& options = {});
};

struct Document {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<KeywordForm> keywords;
  std::vector<std::string> domains;
  std::optional<std::string> lemma_text;

  bool has_keywords() const { return !keywords.empty(); }
};

// Adds a keyword unless its normalized form is empty or already present.
// Returns true if it was added.
bool AddKeyword(Document* doc, std::string surface,
                const NormalizeOptions& options = {});

// Title and abstract joined with ". " (or " " when the title already ends
// in punctuation). With `use_lemmas`, a present lemma_text replaces both.
std::string DocumentText(const Document& doc, bool use_lemmas = false);

enum class Strictness { kStrict, kSkipInvalid };

struct SkippedLine {
  std::size_t line_number;  // 1-based
  std::string reason;
};

struct ParseResult {
  std::vector<Document> documents;
  std::vector<SkippedLine> skipped;
};

// Parses a JSONL corpus. Blank lines are ignored. In strict mode the first
// malformed record throws DataError naming its line; in skip mode it is
// recorded in `skipped`. Duplicate ids always throw.
ParseResult ParseCorpus(const std::string& path, Strictness strictness,
                        const NormalizeOptions& options = {});
ParseResult ParseCorpusText(std::string_view content, Strictness strictness,
                            const NormalizeOptions& options = {});

// Validates and converts a single JSON record. Throws DataError.
Document DocumentFromJson(const nlohmann::json& record,
                          const NormalizeOptions& options = {});
nlohmann::json DocumentToJson(const Document& doc);

struct VocabStats {
  std::size_t documents = 0;
  std::size_t documents_with_keywords = 0;
  std::size_t keyword_assignments = 0;
  std::size_t distinct_count = 0;
  std::size_t count_used_more_than_once = 0;
  // Number of keywords assigned to at least n documents, per queried n.
  std::map<std::size_t, std::size_t> count_with_min_docs;
  // Means and deviations are absent when there are no keywords.
  std::optional<double> mean_keyword_length_words;
  std::optional<double> sd_keyword_length_words;
  std::optional<double> mean_keywords_per_doc;
  std::optional<double> median_keywords_per_doc;
};

// Keyword length is measured over distinct normalized keywords; the per-doc
// figures over documents that carry at least one keyword. The standard
// deviation is the sample (n - 1) estimate.
VocabStats ComputeVocabStats(const std::vector<Document>& docs,
                             const std::vector<std::size_t>& min_docs = {10});

nlohmann::json VocabStatsToJson(const VocabStats& stats);

// Number of distinct documents each normalized keyword is assigned to.
std::map<std::string, std::size_t> KeywordDocumentFrequency(
    const std::vector<Document>& docs);

// Restricts every document's keywords to labels found in at least
// `min_docs` input documents. The document list itself is unchanged.
std::vector<Document> FilterByMinLabelFreq(const std::vector<Document>& docs,
                                           std::size_t min_docs);

}  // namespace kwbench

#endif  // KWBENCH_CORPUS_H_
