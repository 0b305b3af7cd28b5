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

#include "kblink/linker_config.h"

#include <cctype>
#include <charconv>
#include <fstream>

#include "kblink/error.h"

namespace kblink {
namespace {

[[noreturn]] void Invalid(const std::string &message) {
  throw CodedError("CONFIG_INVALID", message);
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double ParseDouble(std::string_view key, std::string_view value) {
  std::string text(value);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    Invalid(std::string(key) + ": not a number: " + text);
  }
  return v;
}

long long ParseInt(std::string_view key, std::string_view value) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Invalid(std::string(key) + ": not an integer: " + std::string(value));
  }
  return v;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  Invalid(std::string(key) + ": not a boolean: " + std::string(value));
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kHits ? "hits" : "pagerank";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower == "hits") return Algorithm::kHits;
  if (lower == "pagerank") return Algorithm::kPageRank;
  return std::nullopt;
}

void LinkerConfig::Validate() const {
  if (!(sigma >= 0.0 && sigma <= 1.0)) Invalid("sigma must lie in [0,1]");
  if (depth < 0) Invalid("depth must be >= 0");
  if (candidate_cap < 1) Invalid("candidate_cap must be >= 1");
  if (widen_factor < 1) Invalid("widen_factor must be >= 1");
  if (hits_iterations < 1) Invalid("hits_iterations must be >= 1");
  if (pagerank_iterations < 1) Invalid("pagerank_iterations must be >= 1");
  if (!(pagerank_alpha > 0.0 && pagerank_alpha < 1.0)) {
    Invalid("pagerank_alpha must lie in (0,1)");
  }
  if (emergent_namespace.empty()) Invalid("emergent_namespace is empty");
}

std::string CanonicalConfigKey(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '_' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<std::string> ConfigFieldNames() {
  return {"sigma",           "depth",
          "algorithm",       "use_popularity",
          "use_acronyms",    "use_context_search",
          "use_coreference", "candidate_cap",
          "widen_factor",    "hits_iterations",
          "pagerank_iterations", "pagerank_alpha",
          "emergent_namespace"};
}

void ApplyOverride(LinkerConfig &config, std::string_view key,
                   std::string_view raw_value) {
  std::string k = CanonicalConfigKey(key);
  std::string value = Trim(raw_value);
  if (k == "sigma") {
    config.sigma = ParseDouble(key, value);
  } else if (k == "depth" || k == "d") {
    config.depth = static_cast<int>(ParseInt(key, value));
  } else if (k == "algorithm") {
    auto a = ParseAlgorithm(value);
    if (!a) Invalid("algorithm must be hits or pagerank");
    config.algorithm = *a;
  } else if (k == "usepopularity") {
    config.use_popularity = ParseBool(key, value);
  } else if (k == "useacronyms") {
    config.use_acronyms = ParseBool(key, value);
  } else if (k == "usecontextsearch") {
    config.use_context_search = ParseBool(key, value);
  } else if (k == "usecoreference") {
    config.use_coreference = ParseBool(key, value);
  } else if (k == "candidatecap") {
    long long v = ParseInt(key, value);
    if (v < 1) Invalid("candidate_cap must be >= 1");
    config.candidate_cap = static_cast<std::size_t>(v);
  } else if (k == "widenfactor") {
    long long v = ParseInt(key, value);
    if (v < 1) Invalid("widen_factor must be >= 1");
    config.widen_factor = static_cast<std::size_t>(v);
  } else if (k == "hitsiterations") {
    config.hits_iterations = static_cast<int>(ParseInt(key, value));
  } else if (k == "pagerankiterations") {
    config.pagerank_iterations = static_cast<int>(ParseInt(key, value));
  } else if (k == "pagerankalpha") {
    config.pagerank_alpha = ParseDouble(key, value);
  } else if (k == "emergentnamespace") {
    config.emergent_namespace = value;
  } else {
    Invalid("unknown config key: " + std::string(key));
  }
}

void ApplyOverrides(LinkerConfig &config, const ConfigOverrides &overrides) {
  for (const auto &[key, value] : overrides) ApplyOverride(config, key, value);
}

ConfigOverrides ParseConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path);
  ConfigOverrides out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      Invalid(path + ":" + std::to_string(number) + ": expected key=value");
    }
    // Later lines win, also across spellings of one key.
    out[CanonicalConfigKey(Trim(std::string_view(t).substr(0, eq)))] =
        Trim(std::string_view(t).substr(eq + 1));
  }
  LinkerConfig probe;
  ApplyOverrides(probe, out);  // reject unknown keys early
  return out;
}

LinkerConfig ResolveConfig(const ConfigOverrides &file,
                           const ConfigOverrides &request,
                           const ConfigOverrides &cli) {
  LinkerConfig config;
  ApplyOverrides(config, file);
  ApplyOverrides(config, request);
  ApplyOverrides(config, cli);
  config.Validate();
  return config;
}

}  // namespace kblink
