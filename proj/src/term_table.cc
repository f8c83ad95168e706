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

#include "kwbench/term_table.h"

#include <algorithm>
#include <cmath>

#include "kwbench/errors.h"
#include "kwbench/parallel.h"

namespace kwbench {
namespace {

struct DocTerms {
  std::vector<Candidate> candidates;
  std::vector<std::map<std::string, std::size_t>> contexts;
};

DocTerms CollectDocTerms(const Document& doc, const ExtractOptions& options,
                         std::size_t window) {
  DocTerms out;
  const auto tokens = TokenizeDocument(doc, options);
  out.candidates = ChunkNounPhrases(tokens, options.max_len);
  out.contexts.resize(out.candidates.size());
  for (std::size_t c = 0; c < out.candidates.size(); ++c) {
    const Candidate& candidate = out.candidates[c];
    auto& context = out.contexts[c];
    for (const std::size_t start : candidate.positions) {
      const std::size_t end = start + candidate.length();
      const std::size_t sentence = tokens[start].sentence;
      const std::size_t lo = start >= window ? start - window : 0;
      const std::size_t hi = std::min(tokens.size(), end + window);
      for (std::size_t p = lo; p < hi; ++p) {
        if (p >= start && p < end) continue;
        const Token& t = tokens[p];
        if (t.is_stopword || t.sentence != sentence) continue;
        ++context[t.text];
      }
    }
  }
  return out;
}

void CheckK(std::size_t k) {
  if (k < 1) throw UsageError("k must be at least 1");
}

}  // namespace

double UnnestedCValue(std::size_t length, std::size_t frequency) {
  return std::log2(static_cast<double>(length) + 1.0) *
         static_cast<double>(frequency);
}

TermTable TermTable::Build(const std::vector<Document>& docs,
                           const ExtractOptions& options,
                           std::size_t context_window, std::size_t jobs) {
  if (docs.empty()) throw UsageError("term table needs at least one document");
  TermTable table;
  table.context_window_ = context_window;

  constexpr std::size_t kBlock = 1024;
  for (std::size_t begin = 0; begin < docs.size(); begin += kBlock) {
    const std::size_t end = std::min(docs.size(), begin + kBlock);
    std::vector<DocTerms> block(end - begin);
    ParallelFor(block.size(), jobs, [&](std::size_t i) {
      block[i] = CollectDocTerms(docs[begin + i], options, context_window);
    });
    for (auto& doc_terms : block) {
      for (std::size_t c = 0; c < doc_terms.candidates.size(); ++c) {
        Candidate& candidate = doc_terms.candidates[c];
        const auto [it, inserted] =
            table.index_.emplace(candidate.normalized_form, table.entries_.size());
        if (inserted) {
          TermEntry entry;
          entry.form = candidate.normalized_form;
          entry.length = candidate.length();
          table.entries_.push_back(std::move(entry));
        }
        TermEntry& entry = table.entries_[it->second];
        entry.frequency += candidate.frequency;
        for (const auto& [word, count] : doc_terms.contexts[c]) {
          entry.context[word] += count;
        }
      }
    }
  }

  // Every proper sub-span of a candidate is itself a candidate, so nesting
  // can be found by looking up sub-spans instead of comparing all pairs.
  for (std::size_t b = 0; b < table.entries_.size(); ++b) {
    std::vector<std::string> words;
    std::size_t from = 0;
    const std::string& form = table.entries_[b].form;
    while (from <= form.size()) {
      const std::size_t space = std::min(form.find(' ', from), form.size());
      words.push_back(form.substr(from, space - from));
      from = space + 1;
    }
    for (std::size_t start = 0; start < words.size(); ++start) {
      std::string sub;
      for (std::size_t len = 1; start + len <= words.size(); ++len) {
        if (len > 1) sub.push_back(' ');
        sub += words[start + len - 1];
        if (len == words.size()) break;
        const auto a = table.index_.find(sub);
        if (a != table.index_.end()) table.entries_[a->second].nested_in.push_back(b);
      }
    }
  }
  for (auto& entry : table.entries_) {
    std::sort(entry.nested_in.begin(), entry.nested_in.end());
    entry.nested_in.erase(
        std::unique(entry.nested_in.begin(), entry.nested_in.end()),
        entry.nested_in.end());
    for (const auto& [word, count] : entry.context) ++table.context_spread_[word];
  }
  return table;
}

std::optional<std::size_t> TermTable::find(const std::string& form) const {
  const auto it = index_.find(form);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TermTable::context_word_spread(const std::string& word) const {
  const auto it = context_spread_.find(word);
  return it == context_spread_.end() ? 0 : it->second;
}

double TermTable::CValue(std::size_t entry) const {
  const TermEntry& a = entries_[entry];
  if (a.nested_in.empty()) return UnnestedCValue(a.length, a.frequency);
  double nested_sum = 0;
  for (const std::size_t b : a.nested_in) {
    nested_sum += static_cast<double>(entries_[b].frequency);
  }
  return std::log2(static_cast<double>(a.length) + 1.0) *
         (static_cast<double>(a.frequency) -
          nested_sum / static_cast<double>(a.nested_in.size()));
}

double TermTable::ContextScore(std::size_t entry) const {
  const double total = static_cast<double>(entries_.size());
  double sum = 0;
  for (const auto& [word, count] : entries_[entry].context) {
    sum += static_cast<double>(count) *
           static_cast<double>(context_word_spread(word)) / total;
  }
  return sum;
}

double TermTable::NCValue(std::size_t entry, double alpha, double beta) const {
  return alpha * CValue(entry) + beta * ContextScore(entry);
}

RankedPrediction CValueRank(const Document& doc, const TermTable& table,
                            const ExtractOptions& options, std::size_t k) {
  CheckK(k);
  std::vector<ScoredKeyword> scored;
  for (const auto& c :
       ChunkNounPhrases(TokenizeDocument(doc, options), options.max_len)) {
    const auto entry = table.find(c.normalized_form);
    scored.push_back({c.normalized_form, entry ? table.CValue(*entry)
                                               : UnnestedCValue(c.length(), 1)});
  }
  return MakePrediction(doc.id, "cvalue", std::move(scored), k);
}

RankedPrediction NCValueRank(const Document& doc, const TermTable& table,
                             const ExtractOptions& options, std::size_t k,
                             const NcValueWeights& weights) {
  CheckK(k);
  if (std::abs(weights.alpha + weights.beta - 1.0) > 1e-9) {
    throw UsageError("NC-value weights must satisfy alpha + beta = 1");
  }
  std::vector<ScoredKeyword> scored;
  for (const auto& c :
       ChunkNounPhrases(TokenizeDocument(doc, options), options.max_len)) {
    const auto entry = table.find(c.normalized_form);
    const double score =
        entry ? table.NCValue(*entry, weights.alpha, weights.beta)
              : weights.alpha * UnnestedCValue(c.length(), 1);
    scored.push_back({c.normalized_form, score});
  }
  return MakePrediction(doc.id, "ncvalue", std::move(scored), k);
}

}  // namespace kwbench
