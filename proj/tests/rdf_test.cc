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

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <zlib.h>

#include "kblink/error.h"
#include "kblink/rdf.h"
#include "test_env.h"

namespace kblink {
namespace {

Triple ParseOne(std::string_view line) {
  Triple t;
  std::string error;
  EXPECT_EQ(ParseNTriplesLine(line, &t, &error), LineKind::kTriple) << error;
  return t;
}

TEST(ResourceTest, RejectsEmptyAndWhitespace) {
  EXPECT_THROW(Resource(""), Error);
  EXPECT_THROW(Resource("http://ex.org/a b"), Error);
  EXPECT_EQ(Resource("http://ex.org/a"), Resource("http://ex.org/a"));
  EXPECT_NE(Resource("http://ex.org/a"), Resource("http://ex.org/A"));
}

TEST(ParseLineTest, ResourceObject) {
  Triple t = ParseOne("<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .");
  EXPECT_EQ(t.subject.iri(), "http://ex.org/a");
  EXPECT_EQ(t.predicate.iri(), "http://ex.org/p");
  ASSERT_TRUE(t.HasResourceObject());
  EXPECT_EQ(t.ObjectResource().iri(), "http://ex.org/b");
}

TEST(ParseLineTest, LanguageTaggedLiteral) {
  Triple t = ParseOne(
      "<http://ex.org/a> <http://www.w3.org/2000/01/rdf-schema#label> "
      "\"Berlin\"@de .");
  ASSERT_FALSE(t.HasResourceObject());
  EXPECT_EQ(t.ObjectLiteral().text, "Berlin");
  EXPECT_EQ(t.ObjectLiteral().language, "de");
}

TEST(ParseLineTest, EscapesAndDatatypes) {
  Triple t = ParseOne(
      R"(<http://ex.org/a> <http://ex.org/p> "say \"hi\"\né\U0001F600" .)");
  EXPECT_EQ(t.ObjectLiteral().text, "say \"hi\"\né\xF0\x9F\x98\x80");
  EXPECT_FALSE(t.ObjectLiteral().language.has_value());

  Triple typed = ParseOne(
      "<http://ex.org/a> <http://ex.org/p> "
      "\"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .");
  EXPECT_EQ(typed.ObjectLiteral().text, "42");

  Triple iri = ParseOne(R"(<http://ex.org/é> <http://ex.org/p> <http://ex.org/b> .)");
  EXPECT_EQ(iri.subject.iri(), "http://ex.org/é");
}

TEST(ParseLineTest, ClassifiesOtherLines) {
  Triple t;
  EXPECT_EQ(ParseNTriplesLine("", &t), LineKind::kEmpty);
  EXPECT_EQ(ParseNTriplesLine("   # comment", &t), LineKind::kEmpty);
  EXPECT_EQ(ParseNTriplesLine("_:b0 <http://ex.org/p> <http://ex.org/b> .", &t),
            LineKind::kBlankNode);
  EXPECT_EQ(ParseNTriplesLine("<http://ex.org/a> <http://ex.org/p> _:b1 .", &t),
            LineKind::kBlankNode);
  std::string error;
  EXPECT_EQ(ParseNTriplesLine("<http://ex.org/a> <http://ex.org/p> .", &t, &error),
            LineKind::kMalformed);
  EXPECT_FALSE(error.empty());
  EXPECT_EQ(ParseNTriplesLine("<http://ex.org/a> \"p\" <http://ex.org/b> .", &t),
            LineKind::kMalformed);
  EXPECT_EQ(ParseNTriplesLine("<http://ex.org/a> <http://ex.org/p> \"x", &t),
            LineKind::kMalformed);
  EXPECT_EQ(ParseNTriplesLine("<http://ex.org/a> <http://ex.org/p> <b> . x", &t),
            LineKind::kMalformed);
}

constexpr std::string_view kThreeGoodOneBad =
    "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
    "<http://ex.org/a> <http://ex.org/q> \"x\" .\n"
    "this is not a triple\n"
    "<http://ex.org/b> <http://ex.org/p> <http://ex.org/c> .\n";

TEST(ParseStreamTest, LenientSkipsAndCounts) {
  ParseStats stats;
  std::vector<Triple> triples =
      ParseNTriples(kThreeGoodOneBad, ParseMode::kLenient, &stats);
  EXPECT_EQ(triples.size(), 3u);
  EXPECT_EQ(stats.triples, 3u);
  EXPECT_EQ(stats.malformed_lines, 1u);
  EXPECT_EQ(stats.skipped(), 1u);
  EXPECT_EQ(stats.lines, 4u);
}

TEST(ParseStreamTest, StrictReportsLineNumber) {
  try {
    ParseNTriples(kThreeGoodOneBad, ParseMode::kStrict);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_FALSE(e.reason().empty());
  }
}

TEST(ParseStreamTest, BlankNodesSkippedInBothModes) {
  std::string text =
      "_:b <http://ex.org/p> <http://ex.org/b> .\n"
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n";
  ParseStats stats;
  EXPECT_EQ(ParseNTriples(text, ParseMode::kStrict, &stats).size(), 1u);
  EXPECT_EQ(stats.blank_node_lines, 1u);
  EXPECT_EQ(stats.skipped(), 1u);
}

TEST(ParseFileTest, ReadsGzipTransparently) {
  testing::TempDir dir;
  std::string plain = dir.File("kb.nt");
  std::string zipped = dir.File("kb.nt.gz");
  testing::WriteFile(plain, kThreeGoodOneBad);
  gzFile gz = gzopen(zipped.c_str(), "wb");
  ASSERT_NE(gz, nullptr);
  gzwrite(gz, kThreeGoodOneBad.data(),
          static_cast<unsigned>(kThreeGoodOneBad.size()));
  gzclose(gz);
  ParseStats a, b;
  EXPECT_EQ(ParseNTriplesFile(plain, ParseMode::kLenient, &a),
            ParseNTriplesFile(zipped, ParseMode::kLenient, &b));
  EXPECT_EQ(b.triples, 3u);
  EXPECT_EQ(b.malformed_lines, 1u);
}

TEST(ParseFileTest, MissingFileThrows) {
  EXPECT_THROW(ParseNTriplesFile("/nonexistent/kb.nt", ParseMode::kLenient),
               Error);
}

// Random triples over a nasty character repertoire.
std::vector<Triple> RandomTriples(std::mt19937_64 &rng, std::size_t n) {
  const std::vector<std::string> pieces = {
      "a", "Z", " ", "\"", "\\", "\n", "\t", "\r", "é", "日本", "😀", "<", ">",
      "'", "\x01", "\x7f", "#", "."};
  const std::vector<std::string> iris = {
      "http://ex.org/a", "http://ex.org/b%20c", "http://ex.org/é",
      "urn:x:1", "http://ex.org/p#q"};
  const std::vector<std::optional<std::string>> tags = {
      std::nullopt, "en", "de-CH", "zh-Hant-TW"};
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i) {
    Triple t{Resource(iris[rng() % iris.size()]),
             Resource(iris[rng() % iris.size()]), Resource("urn:x:0")};
    if (rng() % 2) {
      t.object = Resource(iris[rng() % iris.size()]);
    } else {
      Literal l;
      for (std::size_t k = rng() % 8; k > 0; --k) {
        l.text += pieces[rng() % pieces.size()];
      }
      l.language = tags[rng() % tags.size()];
      t.object = l;
    }
    out.push_back(std::move(t));
  }
  return out;
}

TEST(RoundTripTest, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    std::vector<Triple> triples = RandomTriples(rng, 50);
    std::string text;
    for (const Triple &t : triples) text += ToNTriples(t) + "\n";
    std::vector<Triple> again = ParseNTriples(text, ParseMode::kStrict);
    auto a = triples, b = again;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ASSERT_EQ(a, b);
    // A second cycle is byte-stable.
    std::string text2;
    for (const Triple &t : again) text2 += ToNTriples(t) + "\n";
    EXPECT_EQ(text, text2);
  }
}

}  // namespace
}  // namespace kblink
