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

#include "kblink/document.h"

#include <algorithm>

#include "kblink/error.h"
#include "kblink/unicode.h"

namespace kblink {

Document MakeDocument(std::string text, const std::vector<Span> &spans) {
  std::size_t length = unicode::CodepointCount(text);
  for (const Span &s : spans) {
    if (s.start >= s.end || s.end > length) {
      throw CodedError("SPAN_INVALID",
                       "span [" + std::to_string(s.start) + "," +
                           std::to_string(s.end) + ") outside [0," +
                           std::to_string(length) + "]");
    }
  }
  std::vector<Span> sorted = spans;
  std::sort(sorted.begin(), sorted.end(), [](const Span &a, const Span &b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].start < sorted[i - 1].end) {
      throw CodedError("SPAN_INVALID",
                       "span [" + std::to_string(sorted[i].start) + "," +
                           std::to_string(sorted[i].end) + ") overlaps another");
    }
  }

  Document doc;
  doc.mentions.reserve(spans.size());
  for (const Span &s : spans) {
    std::size_t b = *unicode::ByteOffset(text, s.start);
    std::size_t e = *unicode::ByteOffset(text, s.end);
    doc.mentions.push_back({s.start, s.end, text.substr(b, e - b)});
  }
  doc.text = std::move(text);
  return doc;
}

}  // namespace kblink
