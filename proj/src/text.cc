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

#include "kwbench/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace kwbench {
namespace {

// Polish letters, both cases. Ł/ł have no canonical decomposition, so NFKD
// alone would drop them.
char FoldPolish(char32_t cp) {
  switch (cp) {
    case U'ą': case U'Ą': return 'a';
    case U'ć': case U'Ć': return 'c';
    case U'ę': case U'Ę': return 'e';
    case U'ł': case U'Ł': return 'l';
    case U'ń': case U'Ń': return 'n';
    case U'ó': case U'Ó': return 'o';
    case U'ś': case U'Ś': return 's';
    case U'ź': case U'Ź': return 'z';
    case U'ż': case U'Ż': return 'z';
    default: return 0;
  }
}

bool IsMark(UChar32 c) {
  const int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_ENCLOSING_MARK ||
         type == U_COMBINING_SPACING_MARK;
}

bool IsPunctuationOrSymbol(UChar32 c) {
  if (u_ispunct(c)) return true;
  const int8_t type = u_charType(c);
  return type == U_MATH_SYMBOL || type == U_CURRENCY_SYMBOL ||
         type == U_MODIFIER_SYMBOL || type == U_OTHER_SYMBOL;
}

std::pair<FoldClass, std::string> FoldNonAscii(char32_t cp) {
  if (const char c = FoldPolish(cp)) return {FoldClass::kText, std::string(1, c)};
  const auto c = static_cast<UChar32>(cp);
  if (u_isUWhiteSpace(c) || u_iscntrl(c)) return {FoldClass::kWhitespace, ""};

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFKD normalizer unavailable");
  }
  icu::UnicodeString decomposed =
      nfkd->normalize(icu::UnicodeString(c), status);
  if (U_FAILURE(status)) return {FoldClass::kDropped, ""};

  std::string out;
  bool saw_space = false;
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 d = decomposed.char32At(i);
    i += U16_LENGTH(d);
    if (IsMark(d)) continue;
    if (d < 0x80) {
      if (d <= 0x20 || d == 0x7F) {
        saw_space = true;
        continue;
      }
      if (saw_space && !out.empty()) out.push_back(' ');
      saw_space = false;
      out.push_back(static_cast<char>(d >= 'A' && d <= 'Z' ? d + 32 : d));
    } else if (const char p = FoldPolish(static_cast<char32_t>(d))) {
      out.push_back(p);
    }
  }
  if (!out.empty()) return {FoldClass::kText, std::move(out)};
  if (saw_space) return {FoldClass::kWhitespace, ""};
  if (IsPunctuationOrSymbol(c)) return {FoldClass::kPunctuation, ""};
  return {FoldClass::kDropped, ""};
}

}  // namespace

char32_t NextCodePoint(std::string_view text, std::size_t* pos) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = static_cast<int32_t>(*pos);
  const auto length = static_cast<int32_t>(text.size());
  UChar32 c;
  U8_NEXT_OR_FFFD(bytes, i, length, c);
  *pos = static_cast<std::size_t>(i);
  return static_cast<char32_t>(c);
}

FoldClass FoldCodePoint(char32_t cp, std::string* out) {
  out->clear();
  if (cp < 0x80) {
    if (cp <= 0x20 || cp == 0x7F) return FoldClass::kWhitespace;
    out->push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + 32 : cp));
    return FoldClass::kText;
  }
  thread_local std::unordered_map<char32_t, std::pair<FoldClass, std::string>>
      cache;
  auto it = cache.find(cp);
  if (it == cache.end()) it = cache.emplace(cp, FoldNonAscii(cp)).first;
  *out = it->second.second;
  return it->second.first;
}

std::string NormalizeKeyword(std::string_view raw,
                             const NormalizeOptions& options) {
  std::string result;
  result.reserve(raw.size());
  bool pending_space = false;
  std::string folded;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const char32_t cp = NextCodePoint(raw, &pos);
    FoldClass cls;
    if (cp == U'_' && options.underscores_as_spaces) {
      cls = FoldClass::kWhitespace;
    } else {
      cls = FoldCodePoint(cp, &folded);
    }
    if (cls == FoldClass::kWhitespace) {
      pending_space = true;
      continue;
    }
    if (cls != FoldClass::kText) continue;
    for (const char c : folded) {
      if (c == ' ') {
        pending_space = true;
        continue;
      }
      if (pending_space && !result.empty()) result.push_back(' ');
      pending_space = false;
      result.push_back(c);
    }
  }
  return result;
}

}  // namespace kwbench
