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

#ifndef KBLINK_CANDIDATES_H_
#define KBLINK_CANDIDATES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/document.h"
#include "kblink/index_bundle.h"
#include "kblink/linker_config.h"

namespace kblink {

enum class CandidateOrigin { kAcronym, kLabel, kStemmedLabel, kContext };

std::string_view CandidateOriginName(CandidateOrigin origin);

struct Candidate {
  NodeId resource = 0;
  std::string iri;
  std::string matched_surface;  // surface text as stored in the index
  std::string query_text;       // string that was searched
  double trigram_score = 0;
  double popularity = 0;
  CandidateOrigin origin = CandidateOrigin::kLabel;

  friend bool operator==(const Candidate &, const Candidate &) = default;
};

// Which stage of the tiered search produced the result.
enum class SearchTier { kNone, kAcronym, kLabel, kStemmedLabel, kContext };

std::string_view SearchTierName(SearchTier tier);

struct CandidateResult {
  std::vector<Candidate> candidates;
  SearchTier tier = SearchTier::kNone;
  bool exact_principal = false;
  bool acronym = false;
  // Text the tiers searched: the raw acronym or the normalized mention.
  std::string query;
  // Context tier only: hits retrieved before the trigram filter, and how
  // many survivors had no direct link.
  std::size_t context_hits = 0;
  bool link_filter_fallback = false;
};

// Index of the mention each mention is grouped under. A mention is grouped
// under the longest other mention (earliest on ties) whose normalized token
// sequence strictly contains its own as a subsequence; otherwise it heads
// its own group.
std::vector<std::size_t> ResolveCoreferences(
    std::span<const std::string> mention_texts);

// Tiered candidate search for `text`, with `co_mentions` the other mention texts of the
// document (context tier query).
CandidateResult SearchCandidates(std::string_view text,
                                 std::span<const std::string> co_mentions,
                                 const IndexBundle &index,
                                 const LinkerConfig &config);

// Tiered candidate search for mention `mention_index` of `document`, including the
// co-reference head substitution when enabled.
CandidateResult GenerateCandidates(const Document &document,
                                   std::size_t mention_index,
                                   const IndexBundle &index,
                                   const LinkerConfig &config);

// Stable sort by (popularity desc, trigram score desc, IRI asc), truncated.
std::vector<Candidate> PopularityRerank(std::vector<Candidate> candidates,
                                        std::size_t cap);

}  // namespace kblink

#endif  // KBLINK_CANDIDATES_H_
