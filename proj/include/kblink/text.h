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

#ifndef KBLINK_TEXT_H_
#define KBLINK_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace kblink {

// 2 to 5 code points, all uppercase letters.
bool IsAcronym(std::string_view text);

// Mention/label normalization:
//   1. a space is inserted at every lowercase->uppercase boundary,
//   2. punctuation and symbols (categories P, S) become spaces,
//   3. whitespace is collapsed and trimmed,
//   4. each token is lowercased, then its first letter uppercased.
// "NEW YORK" -> "New York", "AmyWinehouse" -> "Amy Winehouse".
std::string Normalize(std::string_view text);

// Lookup key shared by the surface index and mention queries.
std::string SurfaceKey(std::string_view text);

std::vector<std::string> SplitWhitespace(std::string_view text);
std::string JoinTokens(const std::vector<std::string> &tokens,
                       std::string_view separator = " ");

// True iff text is one or more ASCII digits and nothing else.
bool IsDigitsOnly(std::string_view text);

// IRI-safe slug of a mention: normalized tokens joined by '_', reserved
// ASCII percent-encoded. Never empty.
std::string Slug(std::string_view text);

}  // namespace kblink

#endif  // KBLINK_TEXT_H_
