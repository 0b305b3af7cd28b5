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

#include <atomic>
#include <set>

#include <gtest/gtest.h>

#include "kblink/linker.h"
#include "oracles.h"
#include "synthetic.h"
#include "test_env.h"

namespace kblink {
namespace {

constexpr char kDbr[] = "http://dbpedia.org/resource/";

Document ActorSentence() {
  return testing::DocumentWithMentions(
      "Angelina, her father Jon, and her partner Brad never played together "
      "in the same movie.",
      {"Angelina", "Jon", "Brad"});
}

testing::DenseGraph Dense(const DisambiguationGraph &g) {
  testing::DenseGraph adj(g.nodes.size(),
                          std::vector<uint8_t>(g.nodes.size(), 0));
  for (auto [a, b] : g.edges) adj[a][b] = 1;
  return adj;
}

std::set<std::pair<uint32_t, uint32_t>> KbEdges(const KbGraph &kb) {
  std::set<std::pair<uint32_t, uint32_t>> out;
  for (NodeId v = 0; v < kb.num_nodes(); ++v) {
    for (NodeId w : kb.OutNeighbors(v)) out.emplace(v, w);
  }
  return out;
}

TEST(LinkerTest, ActorSentence) {
  Linker linker(testing::MiniKb());
  LinkOutput out = linker.Link(ActorSentence(), LinkerConfig{});
  ASSERT_EQ(out.assignments.size(), 3u);
  EXPECT_EQ(out.assignments[0].iri, std::string(kDbr) + "Angelina_Jolie");
  EXPECT_EQ(out.assignments[1].iri, std::string(kDbr) + "Jon_Voight");
  EXPECT_EQ(out.assignments[2].iri, std::string(kDbr) + "Brad_Pitt");
  for (const Assignment &a : out.assignments) EXPECT_FALSE(a.emergent);
  EXPECT_EQ(out.heads, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(LinkerTest, GraphIsTheBfsSubgraph) {
  const IndexBundle &kb = testing::MiniKb();
  Linker linker(kb);
  for (int depth = 0; depth <= 3; ++depth) {
    LinkerConfig config;
    config.depth = depth;
    LinkOutput out = linker.Link(ActorSentence(), config);
    std::set<uint32_t> initial;
    for (const CandidateResult &r : out.candidates) {
      for (const Candidate &c : r.candidates) initial.insert(c.resource);
    }
    testing::OracleSubgraph want =
        testing::OracleBfs(KbEdges(kb.graph), initial, depth);
    EXPECT_EQ(std::set<uint32_t>(out.graph.nodes.begin(), out.graph.nodes.end()),
              want.nodes);
    std::set<std::pair<uint32_t, uint32_t>> edges;
    for (auto [a, b] : out.graph.edges) {
      edges.emplace(out.graph.nodes[a], out.graph.nodes[b]);
    }
    EXPECT_EQ(edges, want.edges);
  }
}

TEST(LinkerTest, ScoresMatchDenseOracles) {
  Linker linker(testing::MiniKb());
  for (Algorithm algorithm : {Algorithm::kHits, Algorithm::kPageRank}) {
    LinkerConfig config;
    config.algorithm = algorithm;
    LinkOutput out = linker.Link(ActorSentence(), config);
    testing::DenseGraph adj = Dense(out.graph);
    std::vector<double> want =
        algorithm == Algorithm::kHits
            ? testing::OracleHits(adj, config.hits_iterations).authority
            : testing::OraclePageRank(adj, config.pagerank_iterations,
                                      config.pagerank_alpha);
    for (const Assignment &a : out.assignments) {
      NodeId id = *testing::MiniKb().graph.Find(a.iri);
      EXPECT_NEAR(a.score, want[*out.graph.Local(id)], 1e-12);
    }
    // No candidate of a mention outranks the chosen one.
    for (std::size_t m = 0; m < out.assignments.size(); ++m) {
      for (NodeId c : out.graph.candidate_of[m]) {
        EXPECT_LE(want[*out.graph.Local(c)], out.assignments[m].score + 1e-12);
      }
    }
  }
}

TEST(LinkerTest, NoMentions) {
  Linker linker(testing::MiniKb());
  LinkOutput out = linker.Link(MakeDocument("Nothing here.", {}), LinkerConfig{});
  EXPECT_TRUE(out.assignments.empty());
  EXPECT_TRUE(out.graph.nodes.empty());
}

TEST(LinkerTest, UnknownMentionIsEmergent) {
  Linker linker(testing::MiniKb());
  Document doc = testing::DocumentWithMentions("Zzyzx Qwer met Brad Pitt.",
                                               {"Zzyzx Qwer", "Brad Pitt"});
  LinkOutput out = linker.Link(doc, LinkerConfig{});
  EXPECT_TRUE(out.assignments[0].emergent);
  EXPECT_EQ(out.assignments[0].iri,
            LinkerConfig{}.emergent_namespace + "Zzyzx_Qwer");
  EXPECT_EQ(out.assignments[1].iri, std::string(kDbr) + "Brad_Pitt");
}

TEST(LinkerTest, CoreferenceGroupsShareTheHeadAnswer) {
  Linker linker(testing::MiniKb());
  Document doc = testing::DocumentWithMentions(
      "Barack Obama spoke. Obama left.", {"Barack Obama", "Obama"});
  LinkOutput out = linker.Link(doc, LinkerConfig{});
  EXPECT_EQ(out.heads, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(out.assignments[0].iri, out.assignments[1].iri);
  EXPECT_EQ(out.assignments[1].iri, std::string(kDbr) + "Barack_Obama");
}

// Identical mention texts get identical candidate lists and therefore the
// same answer, whether or not co-reference is on.
TEST(LinkerTest, IdenticalTextsResolveAlike) {
  IndexBundle kb = testing::BundleFromNTriples(
      testing::ReadFile(testing::FixturePath("michael_jordan.nt")));
  Linker linker(kb);
  Document doc = testing::DocumentWithMentions(
      "Michael Jordan won six titles with the Chicago Bulls, and Michael "
      "Jordan of UC Berkeley works on machine learning.",
      {"Michael Jordan", "Chicago Bulls", "Michael Jordan", "UC Berkeley",
       "machine learning"});
  for (bool coref : {true, false}) {
    LinkerConfig config;
    config.use_coreference = coref;
    LinkOutput out = linker.Link(doc, config);
    EXPECT_EQ(out.candidates[0].candidates, out.candidates[2].candidates);
    EXPECT_EQ(out.assignments[0].iri, out.assignments[2].iri);
  }
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  for (std::size_t n : {0u, 1u, 7u, 100u}) {
    for (std::size_t threads : {0u, 1u, 3u, 8u}) {
      std::vector<std::atomic<int>> hits(n);
      ParallelFor(n, threads, [&](std::size_t i) { hits[i]++; });
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(hits[i].load(), 1);
    }
  }
}

TEST(LinkerTest, DeterministicAcrossThreadCounts) {
  testing::SyntheticKb skb = testing::MakeSyntheticKb(4000, 31);
  IndexBundle kb = testing::BundleFromNTriples(skb.ntriples);
  GoldDataset docs = testing::MakeSyntheticDocuments(skb, 60, 32);
  Linker linker(kb);
  auto run = [&](std::size_t threads, Algorithm algorithm) {
    LinkerConfig config;
    config.algorithm = algorithm;
    std::vector<std::string> out(docs.documents.size());
    ParallelFor(out.size(), threads, [&](std::size_t i) {
      out[i] = testing::SerializeAssignments(
          linker.Link(testing::ToDocument(docs.documents[i]), config)
              .assignments);
    });
    return out;
  };
  for (Algorithm algorithm : {Algorithm::kHits, Algorithm::kPageRank}) {
    std::vector<std::string> serial = run(1, algorithm);
    EXPECT_EQ(serial, run(1, algorithm));
    EXPECT_EQ(serial, run(8, algorithm));
  }
}

}  // namespace
}  // namespace kblink
