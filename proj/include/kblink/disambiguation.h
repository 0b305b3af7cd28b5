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

#ifndef KBLINK_DISAMBIGUATION_H_
#define KBLINK_DISAMBIGUATION_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kblink/document.h"
#include "kblink/graph_scoring.h"
#include "kblink/kb_graph.h"
#include "kblink/linker_config.h"

namespace kblink {

struct NodeScore {
  double authority = 0;
  double hub = 0;
  double pagerank = 0;

  friend bool operator==(const NodeScore &, const NodeScore &) = default;
};

// Per-document graph G_d. Nodes are KB node ids kept in ascending order, so
// the local index order is also IRI order. Edges are local index pairs.
struct DisambiguationGraph {
  std::vector<NodeId> nodes;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // sorted, unique
  std::vector<std::vector<NodeId>> candidate_of;      // per mention, KB ids
  std::vector<NodeScore> scores;                      // parallel to nodes

  std::optional<uint32_t> Local(NodeId kb_id) const;
  // Out/in adjacency over local indices.
  Csr OutCsr() const;
};

DisambiguationGraph BuildInitialGraph(
    std::vector<std::vector<NodeId>> candidates_per_mention);

// Applies the BFS operator d times: every node gains its KB out-neighbors
// together with the connecting edges. After the last application every KB
// edge between two present nodes is added as well.
void BfsExpand(DisambiguationGraph &graph, const KbGraph &kb, int depth);

// Fills graph.scores with HITS (authority, hub) or PageRank values. A graph
// without nodes is left unscored.
void ScoreGraph(DisambiguationGraph &graph, const LinkerConfig &config);

struct Assignment {
  Mention mention;
  std::string iri;
  bool emergent = false;
  double score = 0;

  friend bool operator==(const Assignment &, const Assignment &) = default;
};

// Score used to rank nodes under `algorithm`.
double RankingScore(const NodeScore &score, Algorithm algorithm);

// For every mention, the best-ranked node among its candidates (score desc,
// IRI asc). Mentions without candidates get an emergent IRI:
// namespace + slug of the normalized text, with "-2", "-3", ... appended
// when different texts share a slug within the document.
std::vector<Assignment> SelectAssignments(const DisambiguationGraph &graph,
                                          std::span<const Mention> mentions,
                                          const KbGraph &kb,
                                          const LinkerConfig &config);

// Nodes, edges, per-node scores and per-mention candidate ranks.
void WriteGraphDump(const DisambiguationGraph &graph,
                    std::span<const Mention> mentions, const KbGraph &kb,
                    std::ostream &out);

}  // namespace kblink

#endif  // KBLINK_DISAMBIGUATION_H_
