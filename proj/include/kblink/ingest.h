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

#ifndef KBLINK_INGEST_H_
#define KBLINK_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kblink/popularity.h"
#include "kblink/rdf.h"
#include "kblink/tagger.h"

namespace kblink {

inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsComment =
    "http://www.w3.org/2000/01/rdf-schema#comment";

// What to read out of a knowledge base. Loaded from a key=value file; list
// values are comma separated and relative paths resolve against the file.
struct IngestConfig {
  std::string kb_name = "kb";
  std::vector<std::string> label_predicates{std::string(kRdfsLabel)};
  std::vector<std::string> type_predicates{std::string(kRdfType)};
  std::vector<std::string> description_predicates{std::string(kRdfsComment)};
  std::vector<std::string> person_type_iris{
      "http://dbpedia.org/ontology/Person", "http://xmlns.com/foaf/0.1/Person"};
  // Preferred language tag of the principal reference.
  std::string primary_language = "en";
  // Language tags whose labels feed the surface index; empty accepts all.
  std::vector<std::string> label_languages;
  std::size_t max_name_tokens_for_permutation = 5;

  // Deployment language; selects stopwords, lexicon and stemmer table.
  std::string language = "en";
  std::string stopword_file;
  std::string lexicon_file;
  std::string stemmer_file;
  std::string acronym_file;  // optional ACRONYM<TAB>expansion TSV

  PopularityMethod popularity = PopularityMethod::kPageRank;
  ParseMode parse_mode = ParseMode::kLenient;

  // Throws kblink::Error when a predicate list is empty.
  void Validate() const;
};

// Shipped defaults with data files taken from `data_dir`.
IngestConfig DefaultIngestConfig(const std::string &data_dir);
IngestConfig LoadIngestConfig(const std::string &path,
                              const std::string &data_dir);

enum class SurfaceSource : uint8_t {
  kLabel = 0,
  kPersonPermutation = 1,
  kRareReference = 2,
};

std::string_view SurfaceSourceName(SurfaceSource source);

struct SurfaceFormRecord {
  Resource resource;
  std::string surface;
  bool is_principal = false;
  SurfaceSource source = SurfaceSource::kLabel;

  friend bool operator==(const SurfaceFormRecord &,
                         const SurfaceFormRecord &) = default;
};

// Resource IRI -> type IRIs, both sorted.
using TypeTable = std::map<std::string, std::set<std::string>>;

struct SurfaceExtraction {
  std::vector<SurfaceFormRecord> records;
  TypeTable types;
};

// One kLabel record per distinct (resource, label text) pair. The principal
// reference of a resource is its first label under the first label
// predicate, preferring the primary language tag.
SurfaceExtraction ExtractSurfaceForms(std::span<const Triple> triples,
                                      const IngestConfig &config);

// All orderings of all non-empty subsets of the name's tokens. Hyphenated
// tokens contribute their parts as extra tokens. Above `max_tokens` tokens
// only the full label and the single tokens are returned.
std::set<std::string> PersonNamePermutations(std::string_view name_label,
                                             std::size_t max_tokens);

using Stopwords = std::unordered_set<std::string>;
Stopwords LoadStopwords(const std::string &path);

// Token multiset (token -> count) of a resource context document.
using TokenCounts = std::map<std::string, uint32_t>;

// Tokens of `text` on Unicode word boundaries, lowercased, stopwords removed.
std::vector<std::string> ContextTokens(std::string_view text,
                                       const Stopwords &stopwords);

// Literals of every triple whose subject is `resource`, tokenized.
TokenCounts BuildContextDocument(std::span<const Triple> triples,
                                 const Resource &resource,
                                 const Stopwords &stopwords);

// Context documents of every subject in one pass; empty documents omitted.
std::map<std::string, TokenCounts> BuildContextDocuments(
    std::span<const Triple> triples, const Stopwords &stopwords);

// Surface records of all three kinds: labels, person-name permutations for
// resources typed with a person type, and rare references taken from the
// first sentence of description literals.
SurfaceExtraction ExtractAllSurfaceForms(std::span<const Triple> triples,
                                         const IngestConfig &config,
                                         const RuleTagger &tagger);

}  // namespace kblink

#endif  // KBLINK_INGEST_H_
