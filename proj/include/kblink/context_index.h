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

#ifndef KBLINK_CONTEXT_INDEX_H_
#define KBLINK_CONTEXT_INDEX_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/ingest.h"
#include "kblink/kb_graph.h"

namespace kblink {

struct ContextQuery {
  std::string mention_text;
  std::vector<std::string> co_mention_texts;  // other mentions of the document
};

// Query bag: co-mention tokens once, mention tokens twice.
TokenCounts BuildContextQueryTokens(const ContextQuery &query,
                                    const Stopwords &stopwords);

struct ContextHit {
  NodeId resource = 0;
  double score = 0;

  friend bool operator==(const ContextHit &, const ContextHit &) = default;
};

struct ContextPosting {
  NodeId resource = 0;
  uint32_t tf = 0;

  friend bool operator==(const ContextPosting &,
                         const ContextPosting &) = default;
};

// TF-IDF over resource context documents: raw tf, idf = ln(N / df), no length
// normalization. A query term occurring q times contributes q * tf * idf.
class ContextIndex {
 public:
  ContextIndex() = default;

  // Documents of resources missing from `graph` are dropped.
  static ContextIndex Build(const std::map<std::string, TokenCounts> &documents,
                            const KbGraph &graph);

  std::size_t num_documents() const { return num_documents_; }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<std::string> &terms() const { return terms_; }
  std::span<const ContextPosting> Postings(std::size_t term) const {
    return {postings_.data() + offsets_[term],
            postings_.data() + offsets_[term + 1]};
  }
  // Document frequency of `term`, 0 if unknown.
  std::size_t DocumentFrequency(std::string_view term) const;
  double Idf(std::string_view term) const;

  // Every document sharing at least one term with the query, ranked by
  // descending score then ascending IRI, truncated to top_k.
  std::vector<ContextHit> Search(const TokenCounts &query,
                                 std::size_t top_k) const;

  void Save(const std::string &path) const;
  static ContextIndex Load(const std::string &path, std::size_t num_nodes);

  bool operator==(const ContextIndex &) const = default;

 private:
  std::size_t num_documents_ = 0;
  std::vector<std::string> terms_;  // sorted
  std::vector<uint32_t> offsets_{0};
  std::vector<ContextPosting> postings_;  // ascending resource per term
};

}  // namespace kblink

#endif  // KBLINK_CONTEXT_INDEX_H_
