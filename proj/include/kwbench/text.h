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
// Keyword normalization: lowercasing and ASCII folding.
//
// Every string used for matching (gold keywords, predicted keywords, tokens)
// passes through the same folding so that "Bezpieczeństwo", "bezpieczenstwo"
// and "BEZPIECZEŃSTWO" compare equal. Polish letters use a fixed table; any
// other code point is NFKD-decomposed with combining marks removed, and
// whatever is still outside ASCII after that is dropped.

#ifndef KWBENCH_TEXT_H_
#define KWBENCH_TEXT_H_

#include <string>
#include <string_view>

namespace kwbench {

struct NormalizeOptions {
  // Treat '_' as a word separator. Classifier labels such as
  // "unia_europejska" become "unia europejska".
  bool underscores_as_spaces = false;
};

// Classification of a single code point after folding.
enum class FoldClass {
  kText,         // folded to one or more ASCII characters (see FoldCodePoint)
  kWhitespace,   // any Unicode white space or control character
  kPunctuation,  // Unicode punctuation or symbol that folds to nothing
  kDropped,      // no ASCII rendering; removed
};

// Folds a single code point to ASCII. `out` receives the folded characters
// (lowercased); the return value says how the code point should be treated
// by a tokenizer. ASCII punctuation is returned as kText with the character
// itself in `out`.
FoldClass FoldCodePoint(char32_t cp, std::string* out);

// Lowercases, folds to ASCII, trims and collapses internal white space.
// The result only contains characters in [0x20, 0x7E] and never two
// consecutive spaces. Idempotent.
std::string NormalizeKeyword(std::string_view raw,
                             const NormalizeOptions& options = {});

// Decodes one UTF-8 code point starting at `*pos` and advances `*pos`.
// Malformed sequences consume one byte and yield U+FFFD.
char32_t NextCodePoint(std::string_view text, std::size_t* pos);

}  // namespace kwbench

#endif  // KWBENCH_TEXT_H_
