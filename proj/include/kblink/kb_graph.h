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

#ifndef KBLINK_KB_GRAPH_H_
#define KBLINK_KB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/rdf.h"

namespace kblink {

using NodeId = uint32_t;

// Compressed adjacency in both directions. Row r lists its neighbours in
// ascending order; offsets has num_nodes + 1 entries.
struct Csr {
  std::vector<uint32_t> offsets{0};
  std::vector<NodeId> targets;

  std::span<const NodeId> Row(NodeId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  std::size_t Degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }

  // Builds a CSR over `num_nodes` rows from (row, target) pairs. Pairs are
  // sorted and deduplicated.
  static Csr FromPairs(std::size_t num_nodes,
                       std::vector<std::pair<NodeId, NodeId>> pairs);
  Csr Transposed(std::size_t num_nodes) const;
};

// The directed resource graph of a knowledge base. Node ids follow ascending
// byte order of the IRIs, so comparing ids is comparing IRIs. Parallel edges
// are collapsed and self-loops dropped; the in-edge index is the exact
// transpose of the out-edge index.
class KbGraph {
 public:
  KbGraph() = default;
  KbGraph(std::vector<std::string> sorted_iris, Csr out);

  std::size_t num_nodes() const { return iris_.size(); }
  std::size_t num_edges() const { return out_.targets.size(); }
  bool empty() const { return iris_.empty(); }

  const std::string &Iri(NodeId id) const { return iris_[id]; }
  const std::vector<std::string> &iris() const { return iris_; }
  std::optional<NodeId> Find(std::string_view iri) const;

  std::span<const NodeId> OutNeighbors(NodeId v) const { return out_.Row(v); }
  std::span<const NodeId> InNeighbors(NodeId v) const { return in_.Row(v); }
  bool HasEdge(NodeId from, NodeId to) const;

  const Csr &out() const { return out_; }
  const Csr &in() const { return in_; }

 private:
  std::vector<std::string> iris_;
  Csr out_;
  Csr in_;
};

// Nodes are all subjects and resource objects; one edge per distinct
// (subject, resource object) pair.
KbGraph BuildKbGraph(std::span<const Triple> triples);

}  // namespace kblink

#endif  // KBLINK_KB_GRAPH_H_
