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

#ifndef KBLINK_WIRE_H_
#define KBLINK_WIRE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/disambiguation.h"
#include "kblink/document.h"
#include "kblink/linker.h"
#include "kblink/linker_config.h"

namespace kblink {

// JSON request body of POST /link and one line of a `link` input file:
//   {"text": "...", "mentions": [{"start": 0, "end": 3}, ...],
//    "language": "en", "configOverrides": {"sigma": 0.9, ...}}
// Offsets are code point offsets into text.
struct LinkRequest {
  std::string text;
  std::vector<Span> mentions;
  std::string language;  // empty = index language
  ConfigOverrides overrides;
};

// Throws CodedError("BAD_JSON") for syntax or shape errors and
// CodedError("SPAN_INVALID") for non-integral or negative offsets.
LinkRequest ParseLinkRequest(std::string_view json);

struct LinkResponse {
  std::vector<Assignment> assignments;
  int64_t timing_ms = 0;
  std::string index_version;
};

// Validates spans and language, resolves the config, links. Throws
// CodedError (SPAN_INVALID, LANGUAGE_MISMATCH, CONFIG_INVALID).
LinkResponse HandleLinkRequest(const Linker &linker, const LinkRequest &request,
                               const ConfigOverrides &file_config,
                               const ConfigOverrides &cli_config);

// {"assignments":[{"start","end","iri","emergent","score"}],
//  "timingMs", "indexVersion"} on one line.
std::string LinkResponseToJson(const LinkResponse &response);
// {"error":{"code","message"}} on one line.
std::string ErrorToJson(std::string_view code, std::string_view message);

}  // namespace kblink

#endif  // KBLINK_WIRE_H_
