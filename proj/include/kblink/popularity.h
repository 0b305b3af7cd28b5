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

#ifndef KBLINK_POPULARITY_H_
#define KBLINK_POPULARITY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "kblink/kb_graph.h"

namespace kblink {

enum class PopularityMethod { kPageRank, kDegreeHeuristic };

std::string_view PopularityMethodName(PopularityMethod method);
std::optional<PopularityMethod> ParsePopularityMethod(std::string_view name);

// KB-wide popularity, indexed by NodeId. Scores are non-negative and sum to 1.
struct PopularityTable {
  std::vector<double> scores;
  PopularityMethod method = PopularityMethod::kPageRank;

  double Score(NodeId id) const { return scores[id]; }
};

// kPageRank: damping 0.85, uniform teleport, 50 iterations or until the L1
// change drops below 1e-8. kDegreeHeuristic: (in + out degree) / total.
// Throws EmptyGraphError on a graph without nodes.
PopularityTable ComputePopularity(const KbGraph &graph, PopularityMethod method);

}  // namespace kblink

#endif  // KBLINK_POPULARITY_H_
