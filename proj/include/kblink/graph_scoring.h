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

#ifndef KBLINK_GRAPH_SCORING_H_
#define KBLINK_GRAPH_SCORING_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kblink/kb_graph.h"

namespace kblink {

// Called after every iteration with the 0-based iteration number and the
// freshly computed vectors.
using PageRankObserver =
    std::function<void(int iteration, std::span<const double> scores)>;
using HitsObserver =
    std::function<void(int iteration, std::span<const double> authority,
                       std::span<const double> hub)>;

struct PageRankOptions {
  int iterations = 50;
  double alpha = 0.15;  // teleport probability, 1 - damping
  // Stop early once the L1 change of an iteration falls below this value.
  std::optional<double> tolerance;
};

// Damped PageRank with uniform teleport; the mass of nodes without out-edges
// is spread uniformly. Starts from 1/n. Throws EmptyGraphError when n == 0.
std::vector<double> PageRank(const Csr &out, const Csr &in, std::size_t n,
                             const PageRankOptions &options,
                             const PageRankObserver &observer = {});

struct HitsScores {
  std::vector<double> authority;
  std::vector<double> hub;
};

// Runs exactly `iterations` rounds starting from all-ones vectors. Each round
// computes authority from the previous hubs, hub from the new authorities,
// then L2-normalizes both; an all-zero vector stays zero.
HitsScores Hits(const Csr &out, const Csr &in, std::size_t n, int iterations,
                const HitsObserver &observer = {});

}  // namespace kblink

#endif  // KBLINK_GRAPH_SCORING_H_
