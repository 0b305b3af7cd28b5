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

#ifndef KBLINK_DOCUMENT_H_
#define KBLINK_DOCUMENT_H_

#include <cstddef>
#include <string>
#include <vector>

namespace kblink {

// A span to link. Offsets count Unicode code points of the document text,
// end exclusive.
struct Mention {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;

  friend bool operator==(const Mention &, const Mention &) = default;
};

struct Document {
  std::string text;
  std::vector<Mention> mentions;
};

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span &, const Span &) = default;
};

// Validates spans against `text` and fills in the mention strings. Spans
// must satisfy start < end <= length and must not overlap once sorted.
// Throws CodedError("SPAN_INVALID").
Document MakeDocument(std::string text, const std::vector<Span> &spans);

}  // namespace kblink

#endif  // KBLINK_DOCUMENT_H_
