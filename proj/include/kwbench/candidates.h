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
// Tokenization and candidate phrase generation shared by the extractors.
//
// There is no tagger here. Noun phrases are approximated by runs of tokens
// that contain neither a stopword nor punctuation, which is what the
// extractive recall bound is measured on.

#ifndef KWBENCH_CANDIDATES_H_
#define KWBENCH_CANDIDATES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace kwbench {

inline constexpr std::size_t kDefaultMaxCandidateLength = 5;

class StopwordList {
 public:
  enum class Language { kPolish, kEnglish, kNone };

  StopwordList() = default;
  explicit StopwordList(const std::vector<std::string>& words);

  // Bundled lists. Entries are stored normalized.
  static const StopwordList& Default(Language language);
  static Language ParseLanguage(std::string_view name);

  // One token per line, UTF-8; '#' starts a comment. Throws DataError.
  static StopwordList Load(const std::string& path);

  bool contains(std::string_view normalized) const {
    return words_.count(std::string(normalized)) > 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct Token {
  std::string text;  // normalized, non-empty
  std::size_t position = 0;
  bool is_stopword = false;
  // Sentence index; sentences end at . ! ? ; and newlines.
  std::size_t sentence = 0;
  // Index of the punctuation-free segment the token belongs to. Every
  // sentence boundary also starts a new segment; in-word hyphens and
  // apostrophes do not.
  std::size_t segment = 0;
};

struct Candidate {
  std::vector<std::string> tokens;
  std::string normalized_form;
  std::size_t first_position = 0;
  std::size_t frequency = 0;
  // Start positions of every occurrence, ascending.
  std::vector<std::size_t> positions;

  std::size_t length() const { return tokens.size(); }
};

std::vector<Token> Tokenize(std::string_view text,
                            const StopwordList& stopwords);

// Contiguous stopword-free spans of n_min..n_max tokens inside one sentence,
// deduplicated on normalized form. Ordered by first position, then length.
std::vector<Candidate> GenerateNgramCandidates(const std::vector<Token>& tokens,
                                               std::size_t n_min,
                                               std::size_t n_max);

// Maximal stopword- and punctuation-free runs and all of their sub-spans of
// at most max_len tokens. Same ordering as GenerateNgramCandidates.
std::vector<Candidate> ChunkNounPhrases(const std::vector<Token>& tokens,
                                        std::size_t max_len);

// Joins tokens[begin, begin + length) with single spaces.
std::string JoinTokens(const std::vector<Token>& tokens, std::size_t begin,
                       std::size_t length);

}  // namespace kwbench

#endif  // KWBENCH_CANDIDATES_H_
