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

#ifndef KBLINK_INDEX_BUNDLE_H_
#define KBLINK_INDEX_BUNDLE_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kblink/acronym_index.h"
#include "kblink/context_index.h"
#include "kblink/ingest.h"
#include "kblink/kb_graph.h"
#include "kblink/popularity.h"
#include "kblink/rdf.h"
#include "kblink/stemmer.h"
#include "kblink/surface_index.h"

namespace kblink {

inline constexpr int kIndexFormatVersion = 1;

struct BundleCounts {
  uint64_t triples = 0;
  uint64_t skipped_lines = 0;
  uint64_t resources = 0;
  uint64_t edges = 0;
  uint64_t surface_records = 0;
  uint64_t surfaces = 0;
  uint64_t surface_postings = 0;
  uint64_t person_name_records = 0;
  uint64_t rare_reference_records = 0;
  uint64_t context_documents = 0;
  uint64_t context_terms = 0;
  uint64_t acronyms = 0;
  uint64_t acronym_expansions = 0;
  uint64_t typed_resources = 0;

  bool operator==(const BundleCounts &) const = default;
};

struct Manifest {
  int format_version = kIndexFormatVersion;
  std::string kb_name;
  std::string language;
  std::string primary_language;
  std::vector<std::string> label_predicates;
  std::vector<std::string> type_predicates;
  std::vector<std::string> description_predicates;
  std::vector<std::string> person_type_iris;
  std::vector<std::string> label_languages;
  uint64_t max_name_tokens = 0;
  PopularityMethod popularity = PopularityMethod::kPageRank;
  BundleCounts counts;
  // Digest of the index files; changes whenever any index content changes.
  std::string index_version;

  bool operator==(const Manifest &) const = default;
};

// The five indexes plus everything the online phase needs: KB graph,
// popularity, type table, stopwords and stemmer of the deployment language.
struct IndexBundle {
  Manifest manifest;
  KbGraph graph;
  PopularityTable popularity;
  SurfaceIndex surfaces;
  ContextIndex context;
  AcronymIndex acronyms;
  TypeTable types;
  Stopwords stopwords;
  StemmerSet stemmers;

  bool HasType(NodeId resource, std::span<const std::string> type_iris) const;
  bool IsPerson(NodeId resource) const {
    return HasType(resource, manifest.person_type_iris);
  }
};

// Throws kblink::Error("no triples ingested") on empty input.
IndexBundle BuildIndexBundle(std::span<const Triple> triples,
                             const IngestConfig &config,
                             const ParseStats &stats = {});

// Writes the bundle directory (created if missing). Sets
// bundle.manifest.index_version.
void SaveIndexBundle(IndexBundle &bundle, const std::string &dir);
IndexBundle LoadIndexBundle(const std::string &dir);

// Plain-text, deterministic rendering of every index.
void WriteDebugDump(const IndexBundle &bundle, std::ostream &out);

std::string ManifestToJson(const Manifest &manifest);
Manifest ManifestFromJson(const std::string &json);

// Number of resources o in `others` (o != resource) linked to `resource` by
// an edge in either direction.
std::size_t DirectLinkCount(const KbGraph &graph, NodeId resource,
                            std::span<const NodeId> others);

}  // namespace kblink

#endif  // KBLINK_INDEX_BUNDLE_H_
