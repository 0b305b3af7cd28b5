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

#include "kblink/popularity.h"

#include "kblink/error.h"
#include "kblink/graph_scoring.h"

namespace kblink {

std::string_view PopularityMethodName(PopularityMethod method) {
  return method == PopularityMethod::kPageRank ? "pagerank" : "degree";
}

std::optional<PopularityMethod> ParsePopularityMethod(std::string_view name) {
  if (name == "pagerank") return PopularityMethod::kPageRank;
  if (name == "degree") return PopularityMethod::kDegreeHeuristic;
  return std::nullopt;
}

PopularityTable ComputePopularity(const KbGraph &graph,
                                  PopularityMethod method) {
  if (graph.empty()) throw EmptyGraphError();
  PopularityTable table;
  table.method = method;
  const std::size_t n = graph.num_nodes();
  if (method == PopularityMethod::kPageRank) {
    PageRankOptions options;
    options.iterations = 50;
    options.alpha = 0.15;
    options.tolerance = 1e-8;
    table.scores = PageRank(graph.out(), graph.in(), n, options);
    return table;
  }

  table.scores.resize(n);
  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    table.scores[v] =
        static_cast<double>(graph.out().Degree(v) + graph.in().Degree(v));
    total += table.scores[v];
  }
  for (double &s : table.scores) {
    s = total > 0.0 ? s / total : 1.0 / static_cast<double>(n);
  }
  return table;
}

}  // namespace kblink
