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

#ifndef KBLINK_UNICODE_H_
#define KBLINK_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kblink::unicode {

// Decodes UTF-8. Ill-formed sequences decode to U+FFFD.
std::u32string Decode(std::string_view utf8);

std::string Encode(std::u32string_view text);
void AppendUtf8(char32_t c, std::string *out);

char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);
char32_t ToTitle(char32_t c);

bool IsLetter(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);

// True for general categories P* and S*.
bool IsPunctuationOrSymbol(char32_t c);

// Simple (1:1) lowercase mapping applied per code point.
std::string Lowercase(std::string_view utf8);

// Splits on Unicode word boundaries and keeps the segments that contain a
// letter, digit or ideograph. Segments are returned lowercased.
std::vector<std::string> WordTokens(std::string_view utf8);

std::size_t CodepointCount(std::string_view utf8);

// Byte offset of the code point at `index`. index == CodepointCount() maps
// to utf8.size(); anything beyond is nullopt.
std::optional<std::size_t> ByteOffset(std::string_view utf8,
                                      std::size_t index);

}  // namespace kblink::unicode

#endif  // KBLINK_UNICODE_H_
