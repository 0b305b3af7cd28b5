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

#ifndef KBLINK_LINKER_CONFIG_H_
#define KBLINK_LINKER_CONFIG_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kblink {

enum class Algorithm { kHits, kPageRank };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct LinkerConfig {
  double sigma = 0.87;
  int depth = 2;
  Algorithm algorithm = Algorithm::kHits;
  bool use_popularity = true;
  bool use_acronyms = true;
  bool use_context_search = true;
  bool use_coreference = true;
  std::size_t candidate_cap = 100;
  // Raw hits fetched per tier before the popularity sort, as a multiple of
  // candidate_cap.
  std::size_t widen_factor = 5;
  int hits_iterations = 20;
  int pagerank_iterations = 50;
  double pagerank_alpha = 0.15;
  std::string emergent_namespace = "http://kblink.invalid/emergent/";

  // Throws CodedError("CONFIG_INVALID") when a field is out of range.
  void Validate() const;

  friend bool operator==(const LinkerConfig &,
                         const LinkerConfig &) = default;
};

// Field overrides by name. Keys are matched after lowercasing and dropping
// '_' and '-', so "use_context_search", "useContextSearch" and
// "use-context-search" name the same field.
using ConfigOverrides = std::map<std::string, std::string>;

std::string CanonicalConfigKey(std::string_view key);
std::vector<std::string> ConfigFieldNames();

// Throws CodedError("CONFIG_INVALID") on unknown keys or bad values.
void ApplyOverride(LinkerConfig &config, std::string_view key,
                   std::string_view value);
void ApplyOverrides(LinkerConfig &config, const ConfigOverrides &overrides);

// key=value lines, '#' comments.
ConfigOverrides ParseConfigFile(const std::string &path);

// Precedence, lowest first: defaults, config file, request, CLI flags.
LinkerConfig ResolveConfig(const ConfigOverrides &file,
                           const ConfigOverrides &request,
                           const ConfigOverrides &cli);

}  // namespace kblink

#endif  // KBLINK_LINKER_CONFIG_H_
