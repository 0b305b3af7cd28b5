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

#include "kblink/candidates.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "kblink/stemmer.h"
#include "kblink/text.h"
#include "kblink/trigram.h"

namespace kblink {
namespace {

bool IsSubsequence(const std::vector<std::string> &needle,
                   const std::vector<std::string> &haystack) {
  std::size_t k = 0;
  for (const std::string &token : haystack) {
    if (k < needle.size() && token == needle[k]) ++k;
  }
  return k == needle.size();
}

// Orders hits by score, then IRI; keeps the best hit per resource.
void SortAndDedupe(std::vector<Candidate> &pool) {
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.trigram_score != b.trigram_score) {
                       return a.trigram_score > b.trigram_score;
                     }
                     return a.resource < b.resource;
                   });
  std::unordered_set<NodeId> seen;
  std::erase_if(pool, [&](const Candidate &c) {
    return !seen.insert(c.resource).second;
  });
}

void AppendHits(const SurfaceSearchResult &search, std::string_view query,
                CandidateOrigin origin, const KbGraph &graph,
                std::vector<Candidate> &pool) {
  for (const ScoredSurfaceHit &hit : search.hits) {
    pool.push_back({hit.resource, graph.Iri(hit.resource), hit.text,
                    std::string(query), hit.trigram_score, hit.popularity,
                    origin});
  }
}

// Best similarity between `query` and any contiguous token span of any
// surface of `resource`. Digit-only surfaces and spans never qualify.
struct SpanMatch {
  double score = -1;
  SurfaceId surface = 0;
};

SpanMatch BestSpanMatch(const SurfaceIndex &surfaces, NodeId resource,
                        std::span<const uint64_t> query) {
  SpanMatch best;
  std::set<std::string> tried;
  for (SurfaceId s : surfaces.SurfacesOf(resource)) {
    std::vector<std::string> tokens = SplitWhitespace(surfaces.Key(s));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string span;
      for (std::size_t j = i; j < tokens.size(); ++j) {
        if (j > i) span.push_back(' ');
        span += tokens[j];
        if (IsDigitsOnly(span) || !tried.insert(span).second) continue;
        std::vector<uint64_t> codes = TrigramCodes(span);
        double score = TrigramSimilarity(codes, query);
        if (score > best.score) best = {score, s};
      }
    }
  }
  return best;
}

const std::string &PostingText(const SurfaceIndex &surfaces, SurfaceId s,
                               NodeId resource) {
  auto postings = surfaces.Postings(s);
  auto it = std::lower_bound(
      postings.begin(), postings.end(), resource,
      [](const SurfacePosting &p, NodeId r) { return p.resource < r; });
  return it->text;
}

void ContextTier(const std::string &query,
                 std::span<const std::string> co_mentions,
                 const IndexBundle &index, const LinkerConfig &config,
                 std::size_t limit, CandidateResult &result,
                 std::vector<Candidate> &pool) {
  ContextQuery context_query{query, {co_mentions.begin(), co_mentions.end()}};
  std::vector<ContextHit> hits = index.context.Search(
      BuildContextQueryTokens(context_query, index.stopwords), limit);
  result.context_hits = hits.size();
  if (hits.empty()) return;

  std::vector<NodeId> hit_ids;
  hit_ids.reserve(hits.size());
  for (const ContextHit &h : hits) hit_ids.push_back(h.resource);

  std::vector<uint64_t> query_codes = TrigramCodes(SurfaceKey(query));
  std::vector<Candidate> survivors;
  for (const ContextHit &h : hits) {
    SpanMatch match = BestSpanMatch(index.surfaces, h.resource, query_codes);
    if (match.score < config.sigma || match.score < 0) continue;
    survivors.push_back(
        {h.resource, index.graph.Iri(h.resource),
         PostingText(index.surfaces, match.surface, h.resource), query,
         match.score, index.popularity.Score(h.resource),
         CandidateOrigin::kContext});
  }

  // Keep survivors linked to another context hit; if none is, keep all.
  std::vector<Candidate> linked;
  for (const Candidate &c : survivors) {
    if (DirectLinkCount(index.graph, c.resource, hit_ids) > 0) {
      linked.push_back(c);
    }
  }
  if (linked.empty()) {
    result.link_filter_fallback = !survivors.empty();
    pool = std::move(survivors);
  } else {
    pool = std::move(linked);
  }
}

}  // namespace

std::string_view CandidateOriginName(CandidateOrigin origin) {
  switch (origin) {
    case CandidateOrigin::kAcronym:
      return "acronym";
    case CandidateOrigin::kLabel:
      return "label";
    case CandidateOrigin::kStemmedLabel:
      return "stemmed_label";
    case CandidateOrigin::kContext:
      return "context";
  }
  return "?";
}

std::string_view SearchTierName(SearchTier tier) {
  switch (tier) {
    case SearchTier::kNone:
      return "none";
    case SearchTier::kAcronym:
      return "acronym";
    case SearchTier::kLabel:
      return "label";
    case SearchTier::kStemmedLabel:
      return "stemmed_label";
    case SearchTier::kContext:
      return "context";
  }
  return "?";
}

std::vector<std::size_t> ResolveCoreferences(
    std::span<const std::string> mention_texts) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(mention_texts.size());
  for (const std::string &text : mention_texts) {
    tokens.push_back(SplitWhitespace(Normalize(text)));
  }
  std::vector<std::size_t> head(mention_texts.size());
  for (std::size_t a = 0; a < tokens.size(); ++a) {
    head[a] = a;
    if (tokens[a].empty()) continue;
    for (std::size_t b = 0; b < tokens.size(); ++b) {
      if (tokens[b].size() <= tokens[a].size()) continue;
      if (head[a] != a && tokens[b].size() <= tokens[head[a]].size()) continue;
      if (IsSubsequence(tokens[a], tokens[b])) head[a] = b;
    }
  }
  return head;
}

std::vector<Candidate> PopularityRerank(std::vector<Candidate> candidates,
                                        std::size_t cap) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.popularity != b.popularity) {
                       return a.popularity > b.popularity;
                     }
                     if (a.trigram_score != b.trigram_score) {
                       return a.trigram_score > b.trigram_score;
                     }
                     return a.iri < b.iri;
                   });
  if (candidates.size() > cap) candidates.resize(cap);
  return candidates;
}

CandidateResult SearchCandidates(std::string_view text,
                                 std::span<const std::string> co_mentions,
                                 const IndexBundle &index,
                                 const LinkerConfig &config) {
  CandidateResult result;
  const std::size_t limit = config.use_popularity
                                ? config.candidate_cap * config.widen_factor
                                : config.candidate_cap;
  std::span<const double> popularity = index.popularity.scores;
  const SurfaceIndex &surfaces = index.surfaces;
  std::vector<Candidate> pool;

  result.acronym = IsAcronym(text);
  if (result.acronym) {
    // Acronyms skip normalization and stemming.
    result.query = std::string(text);
    if (config.use_acronyms) {
      std::vector<std::string> queries{result.query};
      for (const std::string &e : index.acronyms.Lookup(text)) {
        queries.push_back(e);
      }
      for (const std::string &q : queries) {
        SurfaceSearchResult search =
            surfaces.Search(q, config.sigma, true, popularity);
        result.exact_principal |= search.exact_principal;
        AppendHits(search, q, CandidateOrigin::kAcronym, index.graph, pool);
      }
      if (!pool.empty()) result.tier = SearchTier::kAcronym;
    } else {
      SurfaceSearchResult search =
          surfaces.Search(result.query, config.sigma, true, popularity);
      result.exact_principal = search.exact_principal;
      AppendHits(search, result.query, CandidateOrigin::kLabel, index.graph,
                 pool);
      if (!pool.empty()) result.tier = SearchTier::kLabel;
    }
  } else {
    result.query = Normalize(text);
    SurfaceSearchResult search =
        surfaces.Search(result.query, config.sigma, true, popularity);
    result.exact_principal = search.exact_principal;
    AppendHits(search, result.query, CandidateOrigin::kLabel, index.graph,
               pool);
    if (!pool.empty()) {
      result.tier = SearchTier::kLabel;
    } else {
      StemResult stem =
          StemMention(result.query, index.manifest.language, index.stemmers);
      if (!stem.text.empty() && stem.text != result.query) {
        SurfaceSearchResult stemmed =
            surfaces.Search(stem.text, config.sigma, true, popularity);
        result.exact_principal = stemmed.exact_principal;
        AppendHits(stemmed, stem.text, CandidateOrigin::kStemmedLabel,
                   index.graph, pool);
        if (!pool.empty()) result.tier = SearchTier::kStemmedLabel;
      }
    }
  }

  if (pool.empty() && config.use_context_search && !result.query.empty()) {
    ContextTier(result.query, co_mentions, index, config, limit, result,
                pool);
    if (!pool.empty()) result.tier = SearchTier::kContext;
  }

  SortAndDedupe(pool);
  if (pool.size() > limit) pool.resize(limit);
  if (config.use_popularity) {
    result.candidates = PopularityRerank(std::move(pool), config.candidate_cap);
  } else {
    if (pool.size() > config.candidate_cap) pool.resize(config.candidate_cap);
    result.candidates = std::move(pool);
  }
  return result;
}

CandidateResult GenerateCandidates(const Document &document,
                                   std::size_t mention_index,
                                   const IndexBundle &index,
                                   const LinkerConfig &config) {
  std::vector<std::string> texts;
  texts.reserve(document.mentions.size());
  for (const Mention &m : document.mentions) texts.push_back(m.text);
  std::size_t source = mention_index;
  if (config.use_coreference) source = ResolveCoreferences(texts)[mention_index];
  std::vector<std::string> co_mentions;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i != source) co_mentions.push_back(texts[i]);
  }
  return SearchCandidates(texts[source], co_mentions, index, config);
}

}  // namespace kblink
