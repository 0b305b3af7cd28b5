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
#include <random>

#include <gtest/gtest.h>

#include "kblink/acronym_index.h"
#include "kblink/context_index.h"
#include "kblink/error.h"
#include "kblink/index_bundle.h"
#include "oracles.h"
#include "test_env.h"

namespace kblink {
namespace {

using Docs = std::map<std::string, TokenCounts>;

KbGraph GraphOf(const Docs &docs) {
  std::vector<Triple> t;
  for (const auto &[iri, _] : docs) {
    t.push_back({Resource(iri), Resource("http://ex.org/p"),
                 Literal{"x", std::nullopt}});
  }
  return BuildKbGraph(t);
}

std::vector<std::string> Ranking(const ContextIndex &index, const KbGraph &g,
                                 const TokenCounts &query, std::size_t k) {
  std::vector<std::string> out;
  for (const ContextHit &h : index.Search(query, k)) out.push_back(g.Iri(h.resource));
  return out;
}

TEST(ContextSearchTest, NoSharedTokens) {
  Docs docs = {{"http://ex.org/a", {{"jolie", 1}}}};
  KbGraph g = GraphOf(docs);
  ContextIndex index = ContextIndex::Build(docs, g);
  EXPECT_TRUE(index.Search({{"pitt", 1}}, 10).empty());
}

TEST(ContextSearchTest, SingleDocument) {
  Docs docs = {{"http://ex.org/a", {{"jolie", 1}, {"actress", 2}}}};
  KbGraph g = GraphOf(docs);
  ContextIndex index = ContextIndex::Build(docs, g);
  // ln(1/1) = 0, but a document sharing a term is still a hit.
  EXPECT_EQ(Ranking(index, g, {{"jolie", 1}}, 5),
            std::vector<std::string>{"http://ex.org/a"});
}

TEST(ContextSearchTest, HandComputedTable) {
  // tf table          jolie actress pitt actor
  //   d1                2      1     .     .
  //   d2                1      .     1     .
  //   d3                .      .     3     1
  // df: jolie 2, pitt 2 -> idf ln(3/2) for both query terms.
  // Scores for {jolie, pitt}: d1 = 2 ln1.5, d2 = 2 ln1.5, d3 = 3 ln1.5.
  Docs docs = {{"http://ex.org/d1", {{"jolie", 2}, {"actress", 1}}},
               {"http://ex.org/d2", {{"jolie", 1}, {"pitt", 1}}},
               {"http://ex.org/d3", {{"pitt", 3}, {"actor", 1}}}};
  KbGraph g = GraphOf(docs);
  ContextIndex index = ContextIndex::Build(docs, g);
  std::vector<ContextHit> hits = index.Search({{"jolie", 1}, {"pitt", 1}}, 10);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(g.Iri(hits[0].resource), "http://ex.org/d3");
  EXPECT_EQ(g.Iri(hits[1].resource), "http://ex.org/d1");  // tie, IRI order
  EXPECT_EQ(g.Iri(hits[2].resource), "http://ex.org/d2");
  EXPECT_DOUBLE_EQ(hits[0].score, 3 * std::log(1.5));
  EXPECT_DOUBLE_EQ(hits[1].score, 2 * std::log(1.5));
  EXPECT_DOUBLE_EQ(hits[2].score, 2 * std::log(1.5));
  EXPECT_EQ(index.DocumentFrequency("pitt"), 2u);
  EXPECT_DOUBLE_EQ(index.Idf("actor"), std::log(3.0));
  // Query multiplicity scales the contribution.
  EXPECT_DOUBLE_EQ(index.Search({{"actor", 2}}, 1)[0].score, 2 * std::log(3.0));
  EXPECT_EQ(index.Search({{"jolie", 1}, {"pitt", 1}}, 1).size(), 1u);
}

TEST(ContextSearchTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    Docs docs;
    std::size_t n = 1 + rng() % 100;
    for (std::size_t d = 0; d < n; ++d) {
      TokenCounts doc;
      for (std::size_t k = 1 + rng() % 6; k > 0; --k) {
        doc["t" + std::to_string(rng() % 30)] += 1 + rng() % 3;
      }
      docs["http://ex.org/doc" + std::to_string(d)] = doc;
    }
    TokenCounts query;
    for (std::size_t k = 1 + rng() % 4; k > 0; --k) {
      query["t" + std::to_string(rng() % 35)] += 1 + rng() % 2;
    }
    KbGraph g = GraphOf(docs);
    ContextIndex index = ContextIndex::Build(docs, g);
    std::size_t top_k = 1 + rng() % 120;
    auto oracle = testing::OracleTfIdf(docs, query);
    std::vector<ContextHit> hits = index.Search(query, top_k);
    ASSERT_EQ(hits.size(), std::min(top_k, oracle.size()));
    for (std::size_t i = 0; i < hits.size(); ++i) {
      EXPECT_EQ(g.Iri(hits[i].resource), oracle[i].first);
      EXPECT_NEAR(hits[i].score, oracle[i].second, 1e-12);
      if (i > 0) EXPECT_GE(hits[i - 1].score, hits[i].score);
    }
  }
}

TEST(ContextSearchTest, SaveLoadRoundTrip) {
  const IndexBundle &b = testing::MiniKb();
  testing::TempDir dir;
  b.context.Save(dir.File("c.bin"));
  ContextIndex loaded = ContextIndex::Load(dir.File("c.bin"), b.graph.num_nodes());
  EXPECT_TRUE(loaded == b.context);
  TokenCounts q = {{"jon", 2}, {"angelina", 1}, {"brad", 1}};
  EXPECT_EQ(loaded.Search(q, 50), b.context.Search(q, 50));
}

TEST(ContextQueryTest, MentionCountsTwice) {
  ContextQuery q{"Jon", {"Angelina", "Brad"}};
  EXPECT_EQ(BuildContextQueryTokens(q, {}),
            (TokenCounts{{"angelina", 1}, {"brad", 1}, {"jon", 2}}));
  ContextQuery stop{"The Who", {"the band"}};
  EXPECT_EQ(BuildContextQueryTokens(stop, {"the"}),
            (TokenCounts{{"band", 1}, {"who", 2}}));
}

NodeId Node(const IndexBundle &b, const std::string &name) {
  return *b.graph.Find("http://dbpedia.org/resource/" + name);
}

TEST(DirectLinkCountTest, ActorKb) {
  const IndexBundle &b = testing::MiniKb();
  std::vector<NodeId> others = {Node(b, "Angelina_Jolie"), Node(b, "Brad_Pitt")};
  EXPECT_EQ(DirectLinkCount(b.graph, Node(b, "Jon_Voight"), others), 2u);
  EXPECT_EQ(DirectLinkCount(b.graph, Node(b, "Jon_Lovitz"), others), 0u);
  EXPECT_EQ(DirectLinkCount(b.graph, Node(b, "Jon_Voight"), {}), 0u);
}

TEST(DirectLinkCountTest, EitherDirectionCounts) {
  KbGraph g = BuildKbGraph(std::vector<Triple>{
      {Resource("http://ex.org/b"), Resource("http://ex.org/p"),
       Resource("http://ex.org/a")}});
  NodeId a = *g.Find("http://ex.org/a"), b = *g.Find("http://ex.org/b");
  std::vector<NodeId> others = {b};
  EXPECT_EQ(DirectLinkCount(g, a, others), 1u);
  std::vector<NodeId> self = {a};
  EXPECT_EQ(DirectLinkCount(g, a, self), 0u);
}

TEST(AcronymIndexTest, Lookup) {
  AcronymIndex index =
      AcronymIndex::LoadFile(testing::DataDir() + "/acronyms/en.tsv");
  auto psg = index.Lookup("PSG");
  ASSERT_EQ(psg.size(), 1u);
  EXPECT_EQ(psg[0], "Paris Saint-Germain");
  EXPECT_TRUE(index.Lookup("ZZZZZ").empty());
}

TEST(AcronymIndexTest, FileOrderAndDuplicates) {
  std::istringstream in(
      "# comment\nUN\tUnited Nations\nUN\tUniversity of Nebraska\n"
      "UN\tUnited Nations\n\nEU\tEuropean Union\n");
  AcronymIndex index = AcronymIndex::Parse(in);
  auto un = index.Lookup("UN");
  ASSERT_EQ(un.size(), 2u);
  EXPECT_EQ(un[0], "United Nations");
  EXPECT_EQ(un[1], "University of Nebraska");
  EXPECT_EQ(index.num_acronyms(), 2u);
  EXPECT_EQ(index.num_expansions(), 3u);
  std::stringstream s;
  index.Write(s);
  EXPECT_TRUE(AcronymIndex::Parse(s) == index);
}

TEST(AcronymIndexTest, MalformedLineRejected) {
  std::istringstream in("UN United Nations\n");
  EXPECT_THROW(AcronymIndex::Parse(in), Error);
}

}  // namespace
}  // namespace kblink
