// Copyright 2026 The kblink Authors.
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

#include "kblink/unicode.h"

#include <unicode/brkiter.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <memory>

namespace kblink::unicode {

std::u32string Decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto *s = reinterpret_cast<const uint8_t *>(utf8.data());
  int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

void AppendUtf8(char32_t c, std::string *out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) AppendUtf8(c, &out);
  return out;
}

char32_t ToLower(char32_t c) { return static_cast<char32_t>(u_tolower(c)); }
char32_t ToUpper(char32_t c) { return static_cast<char32_t>(u_toupper(c)); }
char32_t ToTitle(char32_t c) { return static_cast<char32_t>(u_totitle(c)); }

bool IsLetter(char32_t c) { return u_isalpha(c); }
bool IsUpper(char32_t c) { return u_isUUppercase(c); }
bool IsLower(char32_t c) { return u_isULowercase(c); }
bool IsDigit(char32_t c) { return u_isdigit(c); }
bool IsSpace(char32_t c) { return u_isUWhiteSpace(c); }

bool IsPunctuationOrSymbol(char32_t c) {
  switch (u_charType(c)) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

std::string Lowercase(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t c : Decode(utf8)) AppendUtf8(ToLower(c), &out);
  return out;
}

namespace {

// BreakIterator is not thread-safe; each thread keeps its own instance.
icu::BreakIterator *WordBreaker() {
  thread_local std::unique_ptr<icu::BreakIterator> breaker = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(),
                                               status));
    if (U_FAILURE(status)) it.reset();
    return it;
  }();
  return breaker.get();
}

bool HasWordCharacter(const std::u32string &segment) {
  for (char32_t c : segment) {
    if (u_isalnum(c) || u_hasBinaryProperty(c, UCHAR_IDEOGRAPHIC)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> WordTokens(std::string_view utf8) {
  std::vector<std::string> tokens;
  if (utf8.empty()) return tokens;
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::BreakIterator *breaker = WordBreaker();
  if (breaker == nullptr) {
    // Without ICU break data fall back to alphanumeric runs.
    std::u32string current;
    for (char32_t c : Decode(utf8)) {
      if (u_isalnum(c)) {
        current.push_back(ToLower(c));
      } else if (!current.empty()) {
        tokens.push_back(Encode(current));
        current.clear();
      }
    }
    if (!current.empty()) tokens.push_back(Encode(current));
    return tokens;
  }
  breaker->setText(text);
  int32_t start = breaker->first();
  for (int32_t end = breaker->next(); end != icu::BreakIterator::DONE;
       start = end, end = breaker->next()) {
    icu::UnicodeString piece = text.tempSubStringBetween(start, end);
    std::string segment;
    piece.toUTF8String(segment);
    std::u32string decoded = Decode(segment);
    if (!HasWordCharacter(decoded)) continue;
    for (char32_t &c : decoded) c = ToLower(c);
    tokens.push_back(Encode(decoded));
  }
  return tokens;
}

std::size_t CodepointCount(std::string_view utf8) {
  std::size_t count = 0;
  for (char ch : utf8) {
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::optional<std::size_t> ByteOffset(std::string_view utf8,
                                      std::size_t index) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < utf8.size(); ++i) {
    if ((static_cast<unsigned char>(utf8[i]) & 0xC0) == 0x80) continue;
    if (seen == index) return i;
    ++seen;
  }
  if (seen == index) return utf8.size();
  return std::nullopt;
}

}  // namespace kblink::unicode
