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

#include "kblink/trigram.h"

#include <algorithm>

#include "kblink/simd/kernels.h"
#include "kblink/unicode.h"

namespace kblink {
namespace {

constexpr char32_t kPad = 0;

std::u32string Padded(std::string_view text) {
  std::u32string cps = unicode::Decode(text);
  if (cps.empty()) return cps;
  std::u32string padded;
  padded.reserve(cps.size() + 4);
  padded.append(2, kPad);
  for (char32_t c : cps) padded.push_back(unicode::ToLower(c));
  padded.append(2, kPad);
  return padded;
}

}  // namespace

std::set<std::string> TrigramSet(std::string_view text) {
  std::set<std::string> out;
  std::u32string padded = Padded(text);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    std::string gram;
    for (std::size_t k = i; k < i + 3; ++k) {
      if (padded[k] == kPad) {
        gram.append(kTrigramSentinel);
      } else {
        unicode::AppendUtf8(padded[k], &gram);
      }
    }
    out.insert(std::move(gram));
  }
  return out;
}

std::vector<uint64_t> TrigramCodes(std::string_view text) {
  std::u32string padded = Padded(text);
  std::vector<uint64_t> codes;
  if (padded.size() < 3) return codes;
  codes.reserve(padded.size() - 2);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    codes.push_back((static_cast<uint64_t>(padded[i]) << 42) |
                    (static_cast<uint64_t>(padded[i + 1]) << 21) |
                    static_cast<uint64_t>(padded[i + 2]));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

double TrigramSimilarity(std::span<const uint64_t> a,
                         std::span<const uint64_t> b) {
  return JaccardFromCounts(simd::IntersectCount(a, b), a.size(), b.size());
}

double TrigramSimilarity(std::string_view a, std::string_view b) {
  std::vector<uint64_t> ta = TrigramCodes(a);
  std::vector<uint64_t> tb = TrigramCodes(b);
  return TrigramSimilarity(ta, tb);
}

}  // namespace kblink
