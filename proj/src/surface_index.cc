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

#include "kblink/surface_index.h"

#include <algorithm>
#include <map>

#include "binary_io.h"
#include "kblink/error.h"
#include "kblink/simd/kernels.h"
#include "kblink/text.h"
#include "kblink/trigram.h"

namespace kblink {
namespace {

constexpr std::string_view kMagic = "KBLSURF1";

}  // namespace

SurfaceIndex SurfaceIndex::Build(std::span<const SurfaceFormRecord> records,
                                 const KbGraph &graph) {
  std::map<std::string, std::map<NodeId, SurfacePosting>> grouped;
  for (const SurfaceFormRecord &r : records) {
    std::optional<NodeId> id = graph.Find(r.resource.iri());
    if (!id) continue;
    std::string key = SurfaceKey(r.surface);
    if (key.empty()) continue;
    auto [it, fresh] = grouped[key].try_emplace(
        *id, SurfacePosting{*id, r.is_principal, r.source, r.surface});
    if (!fresh) {
      SurfacePosting &p = it->second;
      p.is_principal = p.is_principal || r.is_principal;
      p.source = std::min(p.source, r.source);
    }
  }

  SurfaceIndex index;
  std::vector<std::pair<uint64_t, SurfaceId>> grams;
  for (auto &[key, by_resource] : grouped) {
    SurfaceId sid = static_cast<SurfaceId>(index.keys_.size());
    for (auto &[id, posting] : by_resource) {
      index.postings_.push_back(std::move(posting));
    }
    index.posting_offsets_.push_back(
        static_cast<uint32_t>(index.postings_.size()));
    std::vector<uint64_t> codes = TrigramCodes(key);
    for (uint64_t c : codes) grams.emplace_back(c, sid);
    index.trigram_codes_.insert(index.trigram_codes_.end(), codes.begin(),
                                codes.end());
    index.trigram_offsets_.push_back(
        static_cast<uint32_t>(index.trigram_codes_.size()));
    index.keys_.push_back(key);
  }

  std::sort(grams.begin(), grams.end());
  for (std::size_t i = 0; i < grams.size(); ++i) {
    if (i == 0 || grams[i].first != grams[i - 1].first) {
      if (i > 0) {
        index.gram_offsets_.push_back(
            static_cast<uint32_t>(index.gram_surfaces_.size()));
      }
      index.gram_keys_.push_back(grams[i].first);
    }
    index.gram_surfaces_.push_back(grams[i].second);
  }
  if (!grams.empty()) {
    index.gram_offsets_.push_back(
        static_cast<uint32_t>(index.gram_surfaces_.size()));
  }
  index.BuildDerived(graph.num_nodes());
  return index;
}

void SurfaceIndex::BuildDerived(std::size_t num_nodes) {
  digits_only_.assign(keys_.size(), 0);
  for (SurfaceId s = 0; s < keys_.size(); ++s) {
    digits_only_[s] = IsDigitsOnly(keys_[s]) ? 1 : 0;
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(postings_.size());
  for (SurfaceId s = 0; s < keys_.size(); ++s) {
    for (const SurfacePosting &p : Postings(s)) pairs.emplace_back(p.resource, s);
  }
  Csr csr = Csr::FromPairs(num_nodes, std::move(pairs));
  resource_offsets_ = std::move(csr.offsets);
  resource_surfaces_ = std::move(csr.targets);
}

std::optional<SurfaceId> SurfaceIndex::Find(std::string_view key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<SurfaceId>(it - keys_.begin());
}

std::span<const SurfacePosting> SurfaceIndex::Postings(SurfaceId id) const {
  return {postings_.data() + posting_offsets_[id],
          postings_.data() + posting_offsets_[id + 1]};
}

std::span<const uint64_t> SurfaceIndex::Trigrams(SurfaceId id) const {
  return {trigram_codes_.data() + trigram_offsets_[id],
          trigram_codes_.data() + trigram_offsets_[id + 1]};
}

std::span<const SurfaceId> SurfaceIndex::SurfacesOf(NodeId resource) const {
  if (resource + 1 >= resource_offsets_.size()) return {};
  return {resource_surfaces_.data() + resource_offsets_[resource],
          resource_surfaces_.data() + resource_offsets_[resource + 1]};
}

std::vector<std::pair<SurfaceId, double>> SurfaceIndex::FuzzyMatch(
    std::span<const uint64_t> query, double sigma) const {
  std::vector<std::pair<SurfaceId, double>> out;
  if (sigma <= 0) {
    // Everything qualifies, including surfaces sharing no trigram.
    for (SurfaceId s = 0; s < keys_.size(); ++s) {
      out.emplace_back(s, TrigramSimilarity(query, Trigrams(s)));
    }
    return out;
  }

  thread_local std::vector<uint32_t> counts;
  thread_local std::vector<SurfaceId> touched;
  if (counts.size() < keys_.size()) counts.resize(keys_.size());
  touched.clear();
  for (uint64_t code : query) {
    auto it = std::lower_bound(gram_keys_.begin(), gram_keys_.end(), code);
    if (it == gram_keys_.end() || *it != code) continue;
    std::size_t g = static_cast<std::size_t>(it - gram_keys_.begin());
    for (uint32_t k = gram_offsets_[g]; k < gram_offsets_[g + 1]; ++k) {
      SurfaceId s = gram_surfaces_[k];
      if (counts[s]++ == 0) touched.push_back(s);
    }
  }
  std::sort(touched.begin(), touched.end());
  for (SurfaceId s : touched) {
    std::size_t size = trigram_offsets_[s + 1] - trigram_offsets_[s];
    double score = JaccardFromCounts(counts[s], query.size(), size);
    counts[s] = 0;
    if (score >= sigma) out.emplace_back(s, score);
  }
  return out;
}

SurfaceSearchResult SurfaceIndex::Search(
    std::string_view text, double sigma, bool require_principal_exact,
    std::span<const double> popularity) const {
  SurfaceSearchResult result;
  std::string key = SurfaceKey(text);
  if (key.empty()) return result;
  auto pop = [&](NodeId id) {
    return id < popularity.size() ? popularity[id] : 0.0;
  };

  if (require_principal_exact) {
    if (std::optional<SurfaceId> s = Find(key); s && !digits_only_[*s]) {
      for (const SurfacePosting &p : Postings(*s)) {
        if (!p.is_principal) continue;
        result.hits.push_back(
            {p.resource, *s, p.text, 1.0, true, pop(p.resource)});
      }
      if (!result.hits.empty()) {
        result.exact_principal = true;
        return result;
      }
    }
  }

  std::vector<uint64_t> query = TrigramCodes(key);
  for (auto [s, score] : FuzzyMatch(query, sigma)) {
    if (digits_only_[s]) continue;
    for (const SurfacePosting &p : Postings(s)) {
      result.hits.push_back(
          {p.resource, s, p.text, score, p.is_principal, pop(p.resource)});
    }
  }
  std::sort(result.hits.begin(), result.hits.end(),
            [](const ScoredSurfaceHit &a, const ScoredSurfaceHit &b) {
              if (a.trigram_score != b.trigram_score) {
                return a.trigram_score > b.trigram_score;
              }
              if (a.resource != b.resource) return a.resource < b.resource;
              return a.surface < b.surface;
            });
  return result;
}

void SurfaceIndex::Save(const std::string &path) const {
  internal::BinaryWriter w(kMagic);
  w.PutStrings(keys_);
  w.PutVector(posting_offsets_);
  w.Put<uint64_t>(postings_.size());
  for (const SurfacePosting &p : postings_) {
    w.Put<uint32_t>(p.resource);
    w.Put<uint8_t>(p.is_principal ? 1 : 0);
    w.Put<uint8_t>(static_cast<uint8_t>(p.source));
    w.PutString(p.text);
  }
  w.PutVector(trigram_offsets_);
  w.PutVector(trigram_codes_);
  w.PutVector(gram_keys_);
  w.PutVector(gram_offsets_);
  w.PutVector(gram_surfaces_);
  w.WriteFile(path);
}

SurfaceIndex SurfaceIndex::Load(const std::string &path,
                                std::size_t num_nodes) {
  internal::BinaryReader r(path, kMagic);
  SurfaceIndex index;
  index.keys_ = r.GetStrings();
  index.posting_offsets_ = r.GetVector<uint32_t>();
  uint64_t n = r.Get<uint64_t>();
  for (uint64_t i = 0; i < n; ++i) {
    SurfacePosting p;
    p.resource = r.Get<uint32_t>();
    p.is_principal = r.Get<uint8_t>() != 0;
    uint8_t source = r.Get<uint8_t>();
    if (source > 2 || p.resource >= num_nodes) {
      throw IndexFormatError(path + ": bad posting");
    }
    p.source = static_cast<SurfaceSource>(source);
    p.text = r.GetString();
    index.postings_.push_back(std::move(p));
  }
  index.trigram_offsets_ = r.GetVector<uint32_t>();
  index.trigram_codes_ = r.GetVector<uint64_t>();
  index.gram_keys_ = r.GetVector<uint64_t>();
  index.gram_offsets_ = r.GetVector<uint32_t>();
  index.gram_surfaces_ = r.GetVector<uint32_t>();
  r.ExpectEnd();

  std::size_t s = index.keys_.size();
  bool ok = index.posting_offsets_.size() == s + 1 &&
            index.posting_offsets_.back() == index.postings_.size() &&
            index.trigram_offsets_.size() == s + 1 &&
            index.trigram_offsets_.back() == index.trigram_codes_.size() &&
            index.gram_offsets_.size() == index.gram_keys_.size() + 1 &&
            index.gram_offsets_.back() == index.gram_surfaces_.size();
  for (SurfaceId id : index.gram_surfaces_) ok = ok && id < s;
  if (!ok) throw IndexFormatError(path + ": inconsistent offsets");
  index.BuildDerived(num_nodes);
  return index;
}

bool SurfaceIndex::operator==(const SurfaceIndex &other) const {
  return keys_ == other.keys_ && posting_offsets_ == other.posting_offsets_ &&
         postings_ == other.postings_ &&
         trigram_codes_ == other.trigram_codes_ &&
         trigram_offsets_ == other.trigram_offsets_ &&
         gram_keys_ == other.gram_keys_ &&
         gram_offsets_ == other.gram_offsets_ &&
         gram_surfaces_ == other.gram_surfaces_;
}

}  // namespace kblink
