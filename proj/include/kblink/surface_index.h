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

#ifndef KBLINK_SURFACE_INDEX_H_
#define KBLINK_SURFACE_INDEX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/ingest.h"
#include "kblink/kb_graph.h"

namespace kblink {

using SurfaceId = uint32_t;

struct SurfacePosting {
  NodeId resource = 0;
  bool is_principal = false;
  SurfaceSource source = SurfaceSource::kLabel;
  std::string text;  // surface as harvested, before normalization

  friend bool operator==(const SurfacePosting &,
                         const SurfacePosting &) = default;
};

struct ScoredSurfaceHit {
  NodeId resource = 0;
  SurfaceId surface = 0;
  std::string text;
  double trigram_score = 0;
  bool is_principal = false;
  double popularity = 0;
};

struct SurfaceSearchResult {
  std::vector<ScoredSurfaceHit> hits;
  // True when an exact principal-reference match short-circuited the search.
  bool exact_principal = false;
};

// Surface forms keyed by SurfaceKey(), with trigram postings for fuzzy
// lookup. All three surface sources (labels, person names, rare references)
// share the key space; the source is kept on each posting.
class SurfaceIndex {
 public:
  SurfaceIndex() = default;

  // Records whose resource is not in `graph` are dropped.
  static SurfaceIndex Build(std::span<const SurfaceFormRecord> records,
                            const KbGraph &graph);

  std::size_t num_surfaces() const { return keys_.size(); }
  std::size_t num_postings() const { return postings_.size(); }
  const std::string &Key(SurfaceId id) const { return keys_[id]; }
  std::optional<SurfaceId> Find(std::string_view key) const;
  std::span<const SurfacePosting> Postings(SurfaceId id) const;
  std::span<const uint64_t> Trigrams(SurfaceId id) const;
  // Surfaces attached to a resource, ascending.
  std::span<const SurfaceId> SurfacesOf(NodeId resource) const;

  // Every (surface, resource) pair whose surface key has trigram similarity
  // >= sigma with SurfaceKey(text). With require_principal_exact, a principal
  // reference whose key equals the query key wins outright and is returned
  // alone (score 1.0). Digit-only surfaces are never returned. Ordered by
  // score desc, then resource IRI, then surface key.
  SurfaceSearchResult Search(std::string_view text, double sigma,
                             bool require_principal_exact,
                             std::span<const double> popularity) const;

  // Surface ids with similarity >= sigma against `query` trigram codes,
  // with their scores, in ascending id order.
  std::vector<std::pair<SurfaceId, double>> FuzzyMatch(
      std::span<const uint64_t> query, double sigma) const;

  void Save(const std::string &path) const;
  static SurfaceIndex Load(const std::string &path, std::size_t num_nodes);

  bool operator==(const SurfaceIndex &other) const;

 private:
  void BuildDerived(std::size_t num_nodes);

  std::vector<std::string> keys_;  // sorted, unique
  std::vector<uint32_t> posting_offsets_{0};
  std::vector<SurfacePosting> postings_;
  std::vector<uint32_t> trigram_offsets_{0};
  std::vector<uint64_t> trigram_codes_;
  std::vector<uint8_t> digits_only_;

  // Inverted trigram postings: code -> surface ids.
  std::vector<uint64_t> gram_keys_;
  std::vector<uint32_t> gram_offsets_{0};
  std::vector<SurfaceId> gram_surfaces_;

  // Resource -> surface ids, derived at load.
  std::vector<uint32_t> resource_offsets_{0};
  std::vector<SurfaceId> resource_surfaces_;
};

}  // namespace kblink

#endif  // KBLINK_SURFACE_INDEX_H_
