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

#include "kwbench/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kwbench/errors.h"

namespace kwbench {
namespace {

using nlohmann::json;

std::string OptionalString(const json& record, const char* field) {
  const auto it = record.find(field);
  if (it == record.end() || it->is_null()) return "";
  if (!it->is_string()) {
    throw DataError(std::string("field \"") + field + "\" must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> OptionalStringList(const json& record,
                                            const char* field) {
  std::vector<std::string> out;
  const auto it = record.find(field);
  if (it == record.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw DataError(std::string("field \"") + field + "\" must be an array");
  }
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw DataError(std::string("field \"") + field +
                      "\" must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool EndsWithPunctuation(std::string_view text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;
  const char c = text.back();
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':';
}

}  // namespace

KeywordForm KeywordForm::FromSurface(std::string surface,
                                     const NormalizeOptions& options) {
  KeywordForm form;
  form.normalized = NormalizeKeyword(surface, options);
  form.surface = std::move(surface);
  return form;
}

bool AddKeyword(Document* doc, std::string surface,
                const NormalizeOptions& options) {
  KeywordForm form = KeywordForm::FromSurface(std::move(surface), options);
  if (form.normalized.empty()) return false;
  for (const auto& existing : doc->keywords) {
    if (existing.normalized == form.normalized) return false;
  }
  doc->keywords.push_back(std::move(form));
  return true;
}

std::string DocumentText(const Document& doc, bool use_lemmas) {
  if (use_lemmas && doc.lemma_text.has_value()) return *doc.lemma_text;
  if (doc.title.empty()) return doc.abstract;
  if (doc.abstract.empty()) return doc.title;
  return doc.title + (EndsWithPunctuation(doc.title) ? " " : ". ") +
         doc.abstract;
}

Document DocumentFromJson(const json& record, const NormalizeOptions& options) {
  if (!record.is_object()) throw DataError("record is not a JSON object");
  const auto id = record.find("id");
  if (id == record.end()) throw DataError("missing \"id\"");
  if (!id->is_string() || id->get<std::string>().empty()) {
    throw DataError("\"id\" must be a non-empty string");
  }
  Document doc;
  doc.id = id->get<std::string>();
  doc.title = OptionalString(record, "title");
  doc.abstract = OptionalString(record, "abstract");
  if (doc.title.empty() && doc.abstract.empty()) {
    throw DataError("title and abstract are both empty");
  }
  for (auto& keyword : OptionalStringList(record, "keywords")) {
    AddKeyword(&doc, std::move(keyword), options);
  }
  doc.domains = OptionalStringList(record, "domains");
  if (record.contains("lemma_text") && !record["lemma_text"].is_null()) {
    doc.lemma_text = OptionalString(record, "lemma_text");
  }
  return doc;
}

json DocumentToJson(const Document& doc) {
  json keywords = json::array();
  for (const auto& k : doc.keywords) keywords.push_back(k.surface);
  json out = {{"id", doc.id},
              {"title", doc.title},
              {"abstract", doc.abstract},
              {"keywords", std::move(keywords)}};
  if (!doc.domains.empty()) out["domains"] = doc.domains;
  if (doc.lemma_text) out["lemma_text"] = *doc.lemma_text;
  return out;
}

ParseResult ParseCorpusText(std::string_view content, Strictness strictness,
                            const NormalizeOptions& options) {
  ParseResult result;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == content.size()) break;
      continue;
    }

    Document doc;
    try {
      doc = DocumentFromJson(json::parse(line), options);
    } catch (const std::exception& e) {
      std::string reason = e.what();
      if (strictness == Strictness::kStrict) {
        throw DataError("line " + std::to_string(line_number) + ": " + reason);
      }
      result.skipped.push_back({line_number, std::move(reason)});
      continue;
    }
    const auto [it, inserted] = seen.emplace(doc.id, line_number);
    if (!inserted) {
      throw DataError("line " + std::to_string(line_number) +
                      ": duplicate id \"" + doc.id + "\" (first seen on line " +
                      std::to_string(it->second) + ")");
    }
    result.documents.push_back(std::move(doc));
    if (end == content.size()) break;
  }
  return result;
}

ParseResult ParseCorpus(const std::string& path, Strictness strictness,
                        const NormalizeOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("error reading corpus file: " + path);
  return ParseCorpusText(buffer.str(), strictness, options);
}

std::map<std::string, std::size_t> KeywordDocumentFrequency(
    const std::vector<Document>& docs) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    // Keywords are unique per document after loading, but documents built
    // by hand may not be.
    std::unordered_set<std::string_view> in_doc;
    for (const auto& k : doc.keywords) {
      if (in_doc.insert(k.normalized).second) ++df[k.normalized];
    }
  }
  return df;
}

VocabStats ComputeVocabStats(const std::vector<Document>& docs,
                             const std::vector<std::size_t>& min_docs) {
  VocabStats stats;
  stats.documents = docs.size();
  const auto df = KeywordDocumentFrequency(docs);
  stats.distinct_count = df.size();

  for (const std::size_t n : min_docs) stats.count_with_min_docs[n] = 0;
  double length_sum = 0;
  for (const auto& [keyword, count] : df) {
    if (count > 1) ++stats.count_used_more_than_once;
    for (auto& [n, c] : stats.count_with_min_docs) {
      if (count >= n) ++c;
    }
    length_sum += static_cast<double>(
        std::count(keyword.begin(), keyword.end(), ' ') + 1);
  }

  std::vector<std::size_t> per_doc;
  for (const auto& doc : docs) {
    std::unordered_set<std::string_view> distinct;
    for (const auto& k : doc.keywords) distinct.insert(k.normalized);
    if (!distinct.empty()) per_doc.push_back(distinct.size());
    stats.keyword_assignments += distinct.size();
  }
  stats.documents_with_keywords = per_doc.size();

  if (!df.empty()) {
    const double n = static_cast<double>(df.size());
    const double mean = length_sum / n;
    stats.mean_keyword_length_words = mean;
    double squares = 0;
    for (const auto& [keyword, count] : df) {
      const double len = static_cast<double>(
          std::count(keyword.begin(), keyword.end(), ' ') + 1);
      squares += (len - mean) * (len - mean);
    }
    stats.sd_keyword_length_words =
        df.size() > 1 ? std::sqrt(squares / (n - 1)) : 0.0;
  }
  if (!per_doc.empty()) {
    stats.mean_keywords_per_doc =
        static_cast<double>(stats.keyword_assignments) /
        static_cast<double>(per_doc.size());
    std::sort(per_doc.begin(), per_doc.end());
    const std::size_t mid = per_doc.size() / 2;
    stats.median_keywords_per_doc =
        per_doc.size() % 2 == 1
            ? static_cast<double>(per_doc[mid])
            : (static_cast<double>(per_doc[mid - 1]) +
               static_cast<double>(per_doc[mid])) /
                  2.0;
  }
  return stats;
}

nlohmann::json VocabStatsToJson(const VocabStats& stats) {
  auto optional = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json min_docs = json::object();
  for (const auto& [n, c] : stats.count_with_min_docs) {
    min_docs[std::to_string(n)] = c;
  }
  return {
      {"documents", stats.documents},
      {"documents_with_keywords", stats.documents_with_keywords},
      {"keyword_assignments", stats.keyword_assignments},
      {"distinct_count", stats.distinct_count},
      {"count_used_more_than_once", stats.count_used_more_than_once},
      {"count_with_min_docs", std::move(min_docs)},
      {"mean_keyword_length_words", optional(stats.mean_keyword_length_words)},
      {"sd_keyword_length_words", optional(stats.sd_keyword_length_words)},
      {"mean_keywords_per_doc", optional(stats.mean_keywords_per_doc)},
      {"median_keywords_per_doc", optional(stats.median_keywords_per_doc)},
  };
}

std::vector<Document> FilterByMinLabelFreq(const std::vector<Document>& docs,
                                           std::size_t min_docs) {
  if (min_docs < 1) throw UsageError("min_docs must be at least 1");
  const auto df = KeywordDocumentFrequency(docs);
  std::vector<Document> out = docs;
  for (auto& doc : out) {
    std::erase_if(doc.keywords, [&](const KeywordForm& k) {
      return df.at(k.normalized) < min_docs;
    });
  }
  return out;
}

}  // namespace kwbench
