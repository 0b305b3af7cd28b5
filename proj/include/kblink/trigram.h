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

#ifndef KBLINK_TRIGRAM_H_
#define KBLINK_TRIGRAM_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kblink {

// Boundary sentinel as rendered by TrigramSet(): U+2423 OPEN BOX.
inline constexpr std::string_view kTrigramSentinel = "␣";

// Lowercases `text`, pads it with two sentinels on each side and returns all
// 3-code-point windows. The empty string has no trigrams.
std::set<std::string> TrigramSet(std::string_view text);

// Same windows, packed 21 bits per code point (sentinel = 0), sorted and
// unique. This is the representation used by the indexes.
std::vector<uint64_t> TrigramCodes(std::string_view text);

// Jaccard coefficient from set sizes. Both empty -> 1, one empty -> 0.
inline double JaccardFromCounts(std::size_t intersection, std::size_t size_a,
                                std::size_t size_b) {
  if (size_a == 0 && size_b == 0) return 1.0;
  if (size_a == 0 || size_b == 0) return 0.0;
  return static_cast<double>(intersection) /
         static_cast<double>(size_a + size_b - intersection);
}

double TrigramSimilarity(std::span<const uint64_t> a,
                         std::span<const uint64_t> b);
double TrigramSimilarity(std::string_view a, std::string_view b);

}  // namespace kblink

#endif  // KBLINK_TRIGRAM_H_
