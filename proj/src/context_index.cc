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

#include "kblink/context_index.h"

#include <algorithm>
#include <cmath>

#include "binary_io.h"
#include "kblink/error.h"

namespace kblink {
namespace {

constexpr std::string_view kMagic = "KBLCTX01";

}  // namespace

TokenCounts BuildContextQueryTokens(const ContextQuery &query,
                                    const Stopwords &stopwords) {
  TokenCounts bag;
  for (const std::string &text : query.co_mention_texts) {
    for (std::string &token : ContextTokens(text, stopwords)) ++bag[token];
  }
  for (std::string &token : ContextTokens(query.mention_text, stopwords)) {
    bag[token] += 2;
  }
  return bag;
}

ContextIndex ContextIndex::Build(
    const std::map<std::string, TokenCounts> &documents, const KbGraph &graph) {
  std::map<std::string, std::vector<ContextPosting>> inverted;
  ContextIndex index;
  for (const auto &[iri, counts] : documents) {
    std::optional<NodeId> id = graph.Find(iri);
    if (!id || counts.empty()) continue;
    ++index.num_documents_;
    for (const auto &[term, tf] : counts) {
      inverted[term].push_back({*id, tf});
    }
  }
  for (auto &[term, postings] : inverted) {
    std::sort(postings.begin(), postings.end(),
              [](const ContextPosting &a, const ContextPosting &b) {
                return a.resource < b.resource;
              });
    index.terms_.push_back(term);
    index.postings_.insert(index.postings_.end(), postings.begin(),
                           postings.end());
    index.offsets_.push_back(static_cast<uint32_t>(index.postings_.size()));
  }
  return index;
}

std::size_t ContextIndex::DocumentFrequency(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return 0;
  return Postings(static_cast<std::size_t>(it - terms_.begin())).size();
}

double ContextIndex::Idf(std::string_view term) const {
  std::size_t df = DocumentFrequency(term);
  if (df == 0) return 0.0;
  return std::log(static_cast<double>(num_documents_) /
                  static_cast<double>(df));
}

std::vector<ContextHit> ContextIndex::Search(const TokenCounts &query,
                                             std::size_t top_k) const {
  std::map<NodeId, double> scores;
  for (const auto &[term, qtf] : query) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
    if (it == terms_.end() || *it != term) continue;
    auto postings = Postings(static_cast<std::size_t>(it - terms_.begin()));
    double idf = std::log(static_cast<double>(num_documents_) /
                          static_cast<double>(postings.size()));
    for (const ContextPosting &p : postings) {
      scores[p.resource] += static_cast<double>(qtf) * p.tf * idf;
    }
  }
  std::vector<ContextHit> hits;
  hits.reserve(scores.size());
  for (const auto &[id, score] : scores) hits.push_back({id, score});
  auto order = [](const ContextHit &a, const ContextHit &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.resource < b.resource;
  };
  if (hits.size() > top_k) {
    std::partial_sort(hits.begin(), hits.begin() + top_k, hits.end(), order);
    hits.resize(top_k);
  } else {
    std::sort(hits.begin(), hits.end(), order);
  }
  return hits;
}

void ContextIndex::Save(const std::string &path) const {
  internal::BinaryWriter w(kMagic);
  w.Put<uint64_t>(num_documents_);
  w.PutStrings(terms_);
  w.PutVector(offsets_);
  w.PutVector(postings_);
  w.WriteFile(path);
}

ContextIndex ContextIndex::Load(const std::string &path,
                                std::size_t num_nodes) {
  internal::BinaryReader r(path, kMagic);
  ContextIndex index;
  index.num_documents_ = r.Get<uint64_t>();
  index.terms_ = r.GetStrings();
  index.offsets_ = r.GetVector<uint32_t>();
  index.postings_ = r.GetVector<ContextPosting>();
  r.ExpectEnd();
  bool ok = index.offsets_.size() == index.terms_.size() + 1 &&
            index.offsets_.back() == index.postings_.size();
  for (const ContextPosting &p : index.postings_) {
    ok = ok && p.resource < num_nodes;
  }
  if (!ok) throw IndexFormatError(path + ": inconsistent postings");
  return index;
}

}  // namespace kblink
