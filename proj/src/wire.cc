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

#include "kblink/wire.h"

#include "json.hpp"
#include "kblink/error.h"

namespace kblink {
namespace {

using nlohmann::json;

[[noreturn]] void BadJson(const std::string &message) {
  throw CodedError("BAD_JSON", message);
}

std::size_t Offset(const json &v, const char *name) {
  if (!v.contains(name)) BadJson(std::string("mention without ") + name);
  const json &x = v.at(name);
  if (!x.is_number_integer()) {
    throw CodedError("SPAN_INVALID", std::string(name) + " is not an integer");
  }
  int64_t i = x.get<int64_t>();
  if (i < 0) throw CodedError("SPAN_INVALID", std::string(name) + " < 0");
  return static_cast<std::size_t>(i);
}

}  // namespace

LinkRequest ParseLinkRequest(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) BadJson("malformed JSON");
  if (!j.is_object()) BadJson("request must be a JSON object");
  LinkRequest request;
  if (!j.contains("text") || !j["text"].is_string()) {
    BadJson("\"text\" must be a string");
  }
  request.text = j["text"].get<std::string>();
  if (j.contains("mentions")) {
    const json &mentions = j["mentions"];
    if (!mentions.is_array()) BadJson("\"mentions\" must be an array");
    for (const json &m : mentions) {
      if (!m.is_object()) BadJson("mention must be an object");
      request.mentions.push_back({Offset(m, "start"), Offset(m, "end")});
    }
  }
  if (j.contains("language")) {
    if (!j["language"].is_string()) BadJson("\"language\" must be a string");
    request.language = j["language"].get<std::string>();
  }
  if (j.contains("configOverrides")) {
    const json &o = j["configOverrides"];
    if (!o.is_object()) BadJson("\"configOverrides\" must be an object");
    for (const auto &[key, value] : o.items()) {
      if (value.is_string()) {
        request.overrides[key] = value.get<std::string>();
      } else if (value.is_boolean() || value.is_number()) {
        request.overrides[key] = value.dump();
      } else {
        BadJson("override " + key + " must be a scalar");
      }
    }
  }
  return request;
}

LinkResponse HandleLinkRequest(const Linker &linker, const LinkRequest &request,
                               const ConfigOverrides &file_config,
                               const ConfigOverrides &cli_config) {
  const IndexBundle &index = linker.index();
  if (!request.language.empty() && request.language != index.manifest.language) {
    throw CodedError("LANGUAGE_MISMATCH",
                     "index language is " + index.manifest.language);
  }
  LinkerConfig config =
      ResolveConfig(file_config, request.overrides, cli_config);
  Document document = MakeDocument(request.text, request.mentions);
  LinkResponse response;
  response.assignments = linker.Link(document, config).assignments;
  response.index_version = index.manifest.index_version;
  return response;
}

std::string LinkResponseToJson(const LinkResponse &response) {
  nlohmann::ordered_json assignments = nlohmann::ordered_json::array();
  for (const Assignment &a : response.assignments) {
    nlohmann::ordered_json item;
    item["start"] = a.mention.start;
    item["end"] = a.mention.end;
    item["iri"] = a.iri;
    item["emergent"] = a.emergent;
    item["score"] = a.score;
    assignments.push_back(std::move(item));
  }
  nlohmann::ordered_json out;
  out["assignments"] = std::move(assignments);
  out["timingMs"] = response.timing_ms;
  out["indexVersion"] = response.index_version;
  return out.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string ErrorToJson(std::string_view code, std::string_view message) {
  nlohmann::ordered_json out;
  out["error"] = {{"code", code}, {"message", message}};
  return out.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace kblink
