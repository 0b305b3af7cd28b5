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

#include "kblink/graph_scoring.h"

#include <cmath>

#include "kblink/error.h"
#include "kblink/simd/kernels.h"

namespace kblink {

std::vector<double> PageRank(const Csr &out, const Csr &in, std::size_t n,
                             const PageRankOptions &options,
                             const PageRankObserver &observer) {
  if (n == 0) throw EmptyGraphError();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double damping = 1.0 - options.alpha;

  std::vector<double> inv_out_degree(n, 0.0);
  std::vector<uint32_t> dangling;
  for (NodeId v = 0; v < n; ++v) {
    std::size_t degree = out.Degree(v);
    if (degree == 0) {
      dangling.push_back(v);
    } else {
      inv_out_degree[v] = 1.0 / static_cast<double>(degree);
    }
  }

  std::vector<double> scores(n, inv_n);
  std::vector<double> next(n);
  std::vector<double> contribution(n);
  for (int it = 0; it < options.iterations; ++it) {
    simd::Multiply(scores, inv_out_degree, contribution);
    double dangling_mass = simd::GatherSum(scores, dangling);
    double base = options.alpha * inv_n + damping * dangling_mass * inv_n;
    for (NodeId v = 0; v < n; ++v) {
      next[v] = base + damping * simd::GatherSum(contribution, in.Row(v));
    }
    if (observer) observer(it, next);
    double delta = simd::L1Distance(next, scores);
    scores.swap(next);
    if (options.tolerance && delta < *options.tolerance) break;
  }
  return scores;
}

namespace {

void NormalizeL2(std::vector<double> &x) {
  double norm = std::sqrt(simd::SumSquares(x));
  if (norm > 0.0) simd::Scale(x, 1.0 / norm);
}

}  // namespace

HitsScores Hits(const Csr &out, const Csr &in, std::size_t n, int iterations,
                const HitsObserver &observer) {
  HitsScores s;
  s.authority.assign(n, 1.0);
  s.hub.assign(n, 1.0);
  std::vector<double> authority(n);
  for (int it = 0; it < iterations; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      authority[v] = simd::GatherSum(s.hub, in.Row(v));
    }
    s.authority.swap(authority);
    for (NodeId v = 0; v < n; ++v) {
      s.hub[v] = simd::GatherSum(s.authority, out.Row(v));
    }
    NormalizeL2(s.authority);
    NormalizeL2(s.hub);
    if (observer) observer(it, s.authority, s.hub);
  }
  return s;
}

}  // namespace kblink
