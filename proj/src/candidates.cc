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

#include "kwbench/candidates.h"

#include <cctype>
#include <fstream>
#include <unordered_map>

#include "kwbench/default_stopwords.h"
#include "kwbench/errors.h"
#include "kwbench/text.h"

namespace kwbench {
namespace {

enum class Break { kNone, kSegment, kSentence };

Break BreakOf(char c) {
  switch (c) {
    case '.': case '!': case '?': case ';': return Break::kSentence;
    default: return Break::kSegment;
  }
}

bool IsAlnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

class TokenizerState {
 public:
  TokenizerState(const StopwordList& stopwords, std::vector<Token>* out)
      : stopwords_(stopwords), out_(out) {}

  void Alnum(char c) {
    if (joiner_ != 0) {
      // "1.5" joins only digits; hyphens and apostrophes join anything.
      const bool digit_joiner = joiner_ == '.' || joiner_ == ',';
      if (digit_joiner && !std::isdigit(static_cast<unsigned char>(c))) {
        ResolveJoiner();
      }
      joiner_ = 0;
    }
    current_.push_back(c);
  }

  void Space(bool newline) {
    EndToken();
    ResolveJoiner();
    if (newline) Note(Break::kSentence);
  }

  void Punct(char c) {
    const bool after_alnum = !current_.empty();
    const bool after_digit =
        after_alnum &&
        std::isdigit(static_cast<unsigned char>(current_.back())) != 0;
    EndToken();
    ResolveJoiner();
    if (after_alnum && (c == '-' || c == '\'')) {
      joiner_ = c;
    } else if (after_digit && (c == '.' || c == ',')) {
      joiner_ = c;
    } else {
      Note(c == 0 ? Break::kSegment : BreakOf(c));
    }
  }

  void Finish() {
    EndToken();
    joiner_ = 0;
  }

 private:
  void Note(Break b) {
    if (b > pending_) pending_ = b;
  }

  void ResolveJoiner() {
    if (joiner_ != 0) Note(BreakOf(joiner_));
    joiner_ = 0;
  }

  void EndToken() {
    if (current_.empty()) return;
    if (!out_->empty()) {
      if (pending_ == Break::kSentence) {
        ++sentence_;
        ++segment_;
      } else if (pending_ == Break::kSegment) {
        ++segment_;
      }
    }
    pending_ = Break::kNone;
    Token token;
    token.position = out_->size();
    token.is_stopword = stopwords_.contains(current_);
    token.sentence = sentence_;
    token.segment = segment_;
    token.text = std::move(current_);
    current_.clear();
    out_->push_back(std::move(token));
  }

  const StopwordList& stopwords_;
  std::vector<Token>* out_;
  std::string current_;
  char joiner_ = 0;
  Break pending_ = Break::kNone;
  std::size_t sentence_ = 0;
  std::size_t segment_ = 0;
};

// Enumerates stopword-free spans whose tokens share the same group key and
// aggregates them by normalized form.
template <typename GroupOf>
std::vector<Candidate> CollectSpans(const std::vector<Token>& tokens,
                                    std::size_t n_min, std::size_t n_max,
                                    GroupOf group_of) {
  std::vector<Candidate> out;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t n = 1; n <= n_max && i + n <= tokens.size(); ++n) {
      const Token& last = tokens[i + n - 1];
      if (last.is_stopword || group_of(last) != group_of(tokens[i])) break;
      if (n < n_min) continue;
      std::string form = JoinTokens(tokens, i, n);
      const auto [it, inserted] = index.emplace(form, out.size());
      if (inserted) {
        Candidate c;
        for (std::size_t t = i; t < i + n; ++t) c.tokens.push_back(tokens[t].text);
        c.normalized_form = std::move(form);
        c.first_position = tokens[i].position;
        out.push_back(std::move(c));
      }
      Candidate& c = out[it->second];
      ++c.frequency;
      c.positions.push_back(tokens[i].position);
    }
  }
  return out;
}

}  // namespace

StopwordList::StopwordList(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    std::string normalized = NormalizeKeyword(w);
    if (!normalized.empty()) words_.insert(std::move(normalized));
  }
}

const StopwordList& StopwordList::Default(Language language) {
  static const StopwordList kPolish(internal::PolishStopwords());
  static const StopwordList kEnglish(internal::EnglishStopwords());
  static const StopwordList kNone;
  switch (language) {
    case Language::kPolish: return kPolish;
    case Language::kEnglish: return kEnglish;
    case Language::kNone: return kNone;
  }
  return kNone;
}

StopwordList::Language StopwordList::ParseLanguage(std::string_view name) {
  if (name == "pl") return Language::kPolish;
  if (name == "en") return Language::kEnglish;
  if (name == "none") return Language::kNone;
  throw UsageError("unknown stopword language \"" + std::string(name) +
                   "\" (expected pl, en or none)");
}

StopwordList StopwordList::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stopword file: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    words.push_back(line);
  }
  return StopwordList(words);
}

std::vector<Token> Tokenize(std::string_view text,
                            const StopwordList& stopwords) {
  std::vector<Token> tokens;
  TokenizerState state(stopwords, &tokens);
  std::string folded;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = NextCodePoint(text, &pos);
    switch (FoldCodePoint(cp, &folded)) {
      case FoldClass::kWhitespace:
        state.Space(cp == U'\n' || cp == 0x2028 || cp == 0x2029);
        break;
      case FoldClass::kPunctuation:
        state.Punct(0);
        break;
      case FoldClass::kDropped:
        break;
      case FoldClass::kText:
        for (const char c : folded) {
          if (IsAlnum(c)) {
            state.Alnum(c);
          } else if (c == ' ') {
            state.Space(false);
          } else {
            state.Punct(c);
          }
        }
        break;
    }
  }
  state.Finish();
  return tokens;
}

std::string JoinTokens(const std::vector<Token>& tokens, std::size_t begin,
                       std::size_t length) {
  std::string out;
  for (std::size_t t = begin; t < begin + length; ++t) {
    if (t > begin) out.push_back(' ');
    out += tokens[t].text;
  }
  return out;
}

std::vector<Candidate> GenerateNgramCandidates(const std::vector<Token>& tokens,
                                               std::size_t n_min,
                                               std::size_t n_max) {
  if (n_min < 1 || n_min > n_max) {
    throw UsageError("n-gram range must satisfy 1 <= min <= max");
  }
  return CollectSpans(tokens, n_min, n_max,
                      [](const Token& t) { return t.sentence; });
}

std::vector<Candidate> ChunkNounPhrases(const std::vector<Token>& tokens,
                                        std::size_t max_len) {
  if (max_len < 1) throw UsageError("maximum phrase length must be >= 1");
  return CollectSpans(tokens, 1, max_len,
                      [](const Token& t) { return t.segment; });
}

}  // namespace kwbench
