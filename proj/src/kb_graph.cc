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

#include "kblink/kb_graph.h"

#include <algorithm>

namespace kblink {

Csr Csr::FromPairs(std::size_t num_nodes,
                   std::vector<std::pair<NodeId, NodeId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Csr csr;
  csr.offsets.assign(num_nodes + 1, 0);
  csr.targets.reserve(pairs.size());
  for (const auto &[row, target] : pairs) {
    ++csr.offsets[row + 1];
    csr.targets.push_back(target);
  }
  for (std::size_t v = 0; v < num_nodes; ++v) {
    csr.offsets[v + 1] += csr.offsets[v];
  }
  return csr;
}

Csr Csr::Transposed(std::size_t num_nodes) const {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(targets.size());
  for (NodeId v = 0; v < num_nodes; ++v) {
    for (NodeId w : Row(v)) pairs.emplace_back(w, v);
  }
  return FromPairs(num_nodes, std::move(pairs));
}

KbGraph::KbGraph(std::vector<std::string> sorted_iris, Csr out)
    : iris_(std::move(sorted_iris)), out_(std::move(out)) {
  in_ = out_.Transposed(iris_.size());
}

std::optional<NodeId> KbGraph::Find(std::string_view iri) const {
  auto it = std::lower_bound(iris_.begin(), iris_.end(), iri,
                             [](const std::string &a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == iris_.end() || *it != iri) return std::nullopt;
  return static_cast<NodeId>(it - iris_.begin());
}

bool KbGraph::HasEdge(NodeId from, NodeId to) const {
  auto row = out_.Row(from);
  return std::binary_search(row.begin(), row.end(), to);
}

KbGraph BuildKbGraph(std::span<const Triple> triples) {
  std::vector<std::string> iris;
  iris.reserve(triples.size());
  for (const Triple &t : triples) {
    iris.push_back(t.subject.iri());
    if (t.HasResourceObject()) iris.push_back(t.ObjectResource().iri());
  }
  std::sort(iris.begin(), iris.end());
  iris.erase(std::unique(iris.begin(), iris.end()), iris.end());

  auto id_of = [&](const std::string &iri) {
    return static_cast<NodeId>(
        std::lower_bound(iris.begin(), iris.end(), iri) - iris.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const Triple &t : triples) {
    if (!t.HasResourceObject()) continue;
    NodeId from = id_of(t.subject.iri());
    NodeId to = id_of(t.ObjectResource().iri());
    if (from != to) edges.emplace_back(from, to);
  }
  std::size_t n = iris.size();
  Csr out = Csr::FromPairs(n, std::move(edges));
  return KbGraph(std::move(iris), std::move(out));
}

}  // namespace kblink
