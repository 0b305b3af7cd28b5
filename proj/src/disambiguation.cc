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

#include "kblink/disambiguation.h"

#include <algorithm>
#include <cstdio>
#include <map>

#include "kblink/text.h"

namespace kblink {
namespace {

std::string FormatScore(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::optional<uint32_t> DisambiguationGraph::Local(NodeId kb_id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), kb_id);
  if (it == nodes.end() || *it != kb_id) return std::nullopt;
  return static_cast<uint32_t>(it - nodes.begin());
}

Csr DisambiguationGraph::OutCsr() const {
  return Csr::FromPairs(nodes.size(), edges);
}

DisambiguationGraph BuildInitialGraph(
    std::vector<std::vector<NodeId>> candidates_per_mention) {
  DisambiguationGraph graph;
  for (const auto &list : candidates_per_mention) {
    graph.nodes.insert(graph.nodes.end(), list.begin(), list.end());
  }
  std::sort(graph.nodes.begin(), graph.nodes.end());
  graph.nodes.erase(std::unique(graph.nodes.begin(), graph.nodes.end()),
                    graph.nodes.end());
  graph.candidate_of = std::move(candidates_per_mention);
  return graph;
}

void BfsExpand(DisambiguationGraph &graph, const KbGraph &kb, int depth) {
  if (depth <= 0) return;
  std::vector<NodeId> frontier = graph.nodes;
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<NodeId> added;
    for (NodeId v : frontier) {
      for (NodeId w : kb.OutNeighbors(v)) {
        if (!std::binary_search(graph.nodes.begin(), graph.nodes.end(), w)) {
          added.push_back(w);
        }
      }
    }
    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());
    std::vector<NodeId> merged;
    merged.reserve(graph.nodes.size() + added.size());
    std::merge(graph.nodes.begin(), graph.nodes.end(), added.begin(),
               added.end(), std::back_inserter(merged));
    graph.nodes = std::move(merged);
    frontier = std::move(added);
  }
  // Every out-edge of a node present before the last step is already part
  // of the expansion; closing adds the rest, so the result is the induced
  // KB subgraph on the node set.
  graph.edges.clear();
  for (uint32_t i = 0; i < graph.nodes.size(); ++i) {
    for (NodeId w : kb.OutNeighbors(graph.nodes[i])) {
      if (std::optional<uint32_t> j = graph.Local(w)) {
        graph.edges.emplace_back(i, *j);
      }
    }
  }
}

void ScoreGraph(DisambiguationGraph &graph, const LinkerConfig &config) {
  std::size_t n = graph.nodes.size();
  graph.scores.assign(n, NodeScore{});
  if (n == 0) return;
  Csr out = graph.OutCsr();
  Csr in = out.Transposed(n);
  if (config.algorithm == Algorithm::kHits) {
    HitsScores hits = Hits(out, in, n, config.hits_iterations);
    for (std::size_t i = 0; i < n; ++i) {
      graph.scores[i].authority = hits.authority[i];
      graph.scores[i].hub = hits.hub[i];
    }
  } else {
    PageRankOptions options;
    options.iterations = config.pagerank_iterations;
    options.alpha = config.pagerank_alpha;
    std::vector<double> pr = PageRank(out, in, n, options);
    for (std::size_t i = 0; i < n; ++i) graph.scores[i].pagerank = pr[i];
  }
}

double RankingScore(const NodeScore &score, Algorithm algorithm) {
  return algorithm == Algorithm::kHits ? score.authority : score.pagerank;
}

std::vector<Assignment> SelectAssignments(const DisambiguationGraph &graph,
                                          std::span<const Mention> mentions,
                                          const KbGraph &kb,
                                          const LinkerConfig &config) {
  std::vector<Assignment> out;
  out.reserve(mentions.size());
  std::map<std::string, std::string> slug_owner;  // slug -> normalized text
  std::map<std::string, std::string> emergent_of;  // normalized text -> IRI

  for (std::size_t m = 0; m < mentions.size(); ++m) {
    Assignment a{mentions[m], "", false, 0.0};
    const std::vector<NodeId> &candidates = graph.candidate_of[m];
    std::optional<uint32_t> best;
    double best_score = 0;
    for (NodeId c : candidates) {
      std::optional<uint32_t> local = graph.Local(c);
      if (!local) continue;
      double s = *local < graph.scores.size()
                     ? RankingScore(graph.scores[*local], config.algorithm)
                     : 0.0;
      // Local order is IRI order, so the smaller index wins ties.
      if (!best || s > best_score || (s == best_score && *local < *best)) {
        best = local;
        best_score = s;
      }
    }
    if (best) {
      a.iri = kb.Iri(graph.nodes[*best]);
      a.score = best_score;
    } else {
      std::string normalized = Normalize(mentions[m].text);
      auto known = emergent_of.find(normalized);
      if (known == emergent_of.end()) {
        std::string base = Slug(normalized);
        if (base.empty()) base = "mention";
        std::string slug = base;
        for (int k = 2; slug_owner.contains(slug); ++k) {
          slug = base + "-" + std::to_string(k);
        }
        slug_owner[slug] = normalized;
        known =
            emergent_of.emplace(normalized, config.emergent_namespace + slug)
                .first;
      }
      a.iri = known->second;
      a.emergent = true;
    }
    out.push_back(std::move(a));
  }
  return out;
}

void WriteGraphDump(const DisambiguationGraph &graph,
                    std::span<const Mention> mentions, const KbGraph &kb,
                    std::ostream &out) {
  out << "# nodes: iri authority hub pagerank\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    NodeScore s = i < graph.scores.size() ? graph.scores[i] : NodeScore{};
    out << kb.Iri(graph.nodes[i]) << '\t' << FormatScore(s.authority) << '\t'
        << FormatScore(s.hub) << '\t' << FormatScore(s.pagerank) << '\n';
  }
  out << "# edges\n";
  for (auto [a, b] : graph.edges) {
    out << kb.Iri(graph.nodes[a]) << '\t' << kb.Iri(graph.nodes[b]) << '\n';
  }
  out << "# candidates: mention rank iri authority pagerank\n";
  for (std::size_t m = 0; m < graph.candidate_of.size(); ++m) {
    std::vector<std::pair<std::size_t, NodeScore>> ranked;
    for (NodeId c : graph.candidate_of[m]) {
      std::optional<uint32_t> local = graph.Local(c);
      if (!local) continue;
      ranked.emplace_back(*local, *local < graph.scores.size()
                                      ? graph.scores[*local]
                                      : NodeScore{});
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto &x, const auto &y) {
      double sx = std::max(x.second.authority, x.second.pagerank);
      double sy = std::max(y.second.authority, y.second.pagerank);
      if (sx != sy) return sx > sy;
      return x.first < y.first;
    });
    std::string label = m < mentions.size() ? mentions[m].text : "";
    if (ranked.empty()) out << label << "\t-\t(none)\n";
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      out << label << '\t' << r + 1 << '\t'
          << kb.Iri(graph.nodes[ranked[r].first]) << '\t'
          << FormatScore(ranked[r].second.authority) << '\t'
          << FormatScore(ranked[r].second.pagerank) << '\n';
    }
  }
}

}  // namespace kblink
