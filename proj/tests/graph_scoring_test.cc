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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "kblink/error.h"
#include "kblink/graph_scoring.h"
#include "oracles.h"

namespace kblink {
namespace {

using testing::DenseGraph;

struct Graph {
  std::size_t n;
  Csr out, in;
  DenseGraph dense;
};

Graph Make(std::size_t n, const std::vector<std::pair<NodeId, NodeId>> &edges) {
  Graph g{n, Csr::FromPairs(n, edges), {}, DenseGraph(n, std::vector<uint8_t>(n))};
  g.in = g.out.Transposed(n);
  for (auto [u, v] : edges) g.dense[u][v] = 1;
  return g;
}

Graph Random(std::mt19937_64 &rng, std::size_t max_nodes) {
  std::size_t n = 1 + rng() % max_nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  unsigned density = rng() % 60;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && rng() % 100 < density) edges.emplace_back(u, v);
    }
  }
  return Make(n, edges);
}

double Norm(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

TEST(HitsTest, SingleEdge) {
  Graph g = Make(2, {{0, 1}});
  HitsScores h = Hits(g.out, g.in, 2, 20);
  EXPECT_DOUBLE_EQ(h.authority[1], 1.0);
  EXPECT_DOUBLE_EQ(h.hub[0], 1.0);
  EXPECT_EQ(h.authority[0], 0.0);
  EXPECT_EQ(h.hub[1], 0.0);
  // The fixed point is reached after one iteration already.
  HitsScores once = Hits(g.out, g.in, 2, 1);
  EXPECT_EQ(once.authority, h.authority);
  EXPECT_EQ(once.hub, h.hub);
}

TEST(HitsTest, SymmetricCycle) {
  Graph g = Make(2, {{0, 1}, {1, 0}});
  HitsScores h = Hits(g.out, g.in, 2, 20);
  EXPECT_EQ(h.authority[0], h.authority[1]);
  EXPECT_EQ(h.hub[0], h.hub[1]);
}

TEST(HitsTest, EdgelessGraphIsAllZero) {
  Graph g = Make(3, {});
  HitsScores h = Hits(g.out, g.in, 3, 20);
  EXPECT_EQ(h.authority, std::vector<double>(3, 0.0));
  EXPECT_EQ(h.hub, std::vector<double>(3, 0.0));
}

TEST(HitsTest, UnitNormAfterEveryIteration) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    Graph g = Random(rng, 12);
    bool has_edges = !g.out.targets.empty();
    int calls = 0;
    Hits(g.out, g.in, g.n, 20,
         [&](int it, std::span<const double> a, std::span<const double> h) {
           EXPECT_EQ(it, calls++);
           for (auto v : {Norm(a), Norm(h)}) {
             if (has_edges) {
               EXPECT_NEAR(v, 1.0, 1e-9);
             } else {
               EXPECT_EQ(v, 0.0);
             }
           }
         });
    EXPECT_EQ(calls, 20);
  }
}

TEST(HitsTest, MatchesDenseOracle) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    Graph g = Random(rng, 12);
    int k = 1 + static_cast<int>(rng() % 25);
    HitsScores h = Hits(g.out, g.in, g.n, k);
    testing::DenseHitsResult o = testing::OracleHits(g.dense, k);
    for (std::size_t v = 0; v < g.n; ++v) {
      ASSERT_NEAR(h.authority[v], o.authority[v], 1e-9);
      ASSERT_NEAR(h.hub[v], o.hub[v], 1e-9);
    }
  }
}

TEST(PageRankTest, SingleNodeAndCycle) {
  Graph one = Make(1, {});
  EXPECT_DOUBLE_EQ(PageRank(one.out, one.in, 1, {})[0], 1.0);
  Graph cycle = Make(2, {{0, 1}, {1, 0}});
  std::vector<double> pr = PageRank(cycle.out, cycle.in, 2, {});
  EXPECT_DOUBLE_EQ(pr[0], 0.5);
  EXPECT_DOUBLE_EQ(pr[1], 0.5);
}

TEST(PageRankTest, StarMatchesMatrixPowerOracle) {
  // b -> a, c -> a with a = 0.
  Graph star = Make(3, {{1, 0}, {2, 0}});
  std::vector<double> pr = PageRank(star.out, star.in, 3, {});
  std::vector<double> oracle = testing::OraclePageRank(star.dense, 50, 0.15);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(pr[v], oracle[v], 1e-9);
  EXPECT_GT(pr[0], pr[1]);
  EXPECT_DOUBLE_EQ(pr[1], pr[2]);
}

TEST(PageRankTest, EmptyGraphThrows) {
  Csr empty;
  EXPECT_THROW(PageRank(empty, empty, 0, {}), EmptyGraphError);
}

TEST(PageRankTest, MassConservedEveryIteration) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    Graph g = Random(rng, 12);
    PageRank(g.out, g.in, g.n, {}, [&](int, std::span<const double> s) {
      double total = std::accumulate(s.begin(), s.end(), 0.0);
      EXPECT_NEAR(total, 1.0, 1e-6);
      for (double v : s) EXPECT_GE(v, 0.0);
    });
  }
}

TEST(PageRankTest, MatchesDenseOracle) {
  std::mt19937_64 rng(24);
  for (int round = 0; round < 100; ++round) {
    Graph g = Random(rng, 12);
    PageRankOptions options;
    options.iterations = 1 + static_cast<int>(rng() % 60);
    options.alpha = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000;
    std::vector<double> pr = PageRank(g.out, g.in, g.n, options);
    std::vector<double> oracle =
        testing::OraclePageRank(g.dense, options.iterations, options.alpha);
    for (std::size_t v = 0; v < g.n; ++v) ASSERT_NEAR(pr[v], oracle[v], 1e-9);
  }
}

TEST(PageRankTest, ToleranceStopsEarly) {
  Graph cycle = Make(2, {{0, 1}, {1, 0}});
  PageRankOptions options;
  options.tolerance = 1e-8;
  int calls = 0;
  PageRank(cycle.out, cycle.in, 2, options,
           [&](int, std::span<const double>) { ++calls; });
  EXPECT_EQ(calls, 1);  // the uniform start is already the fixed point
}

}  // namespace
}  // namespace kblink
