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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "kblink/error.h"
#include "kblink/index_bundle.h"
#include "kblink/rdf.h"
#include "test_env.h"

namespace kblink {
namespace {

namespace fs = std::filesystem;

std::string Dump(const IndexBundle &b) {
  std::ostringstream s;
  WriteDebugDump(b, s);
  return s.str();
}

IndexBundle BuildMini() {
  ParseStats stats;
  auto triples = ParseNTriplesFile(testing::FixturePath("mini_kb.nt"),
                                   ParseMode::kStrict, &stats);
  return BuildIndexBundle(triples, testing::TestIngestConfig(), stats);
}

// Expected values are the hand counts listed in fixtures/README.md.
TEST(IndexBundleTest, FixtureCountsMatchHandEnumeration) {
  const BundleCounts &c = testing::MiniKb().manifest.counts;
  EXPECT_EQ(c.triples, 44u);
  EXPECT_EQ(c.skipped_lines, 0u);
  EXPECT_EQ(c.resources, 22u);
  EXPECT_EQ(c.edges, 23u);
  EXPECT_EQ(c.surface_records, 23u);
  EXPECT_EQ(c.person_name_records, 3u);
  EXPECT_EQ(c.rare_reference_records, 6u);
  EXPECT_EQ(c.surfaces, 22u);
  EXPECT_EQ(c.surface_postings, 23u);
  EXPECT_EQ(c.context_documents, 14u);
  EXPECT_EQ(c.typed_resources, 11u);
  EXPECT_EQ(c.acronyms, 12u);
  EXPECT_EQ(c.acronym_expansions, 13u);
}

TEST(IndexBundleTest, EmptyInputRejected) {
  try {
    BuildIndexBundle({}, testing::TestIngestConfig());
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_STREQ(e.what(), "no triples ingested");
  }
}

TEST(IndexBundleTest, RebuildIsByteIdentical) {
  IndexBundle a = BuildMini(), b = BuildMini();
  EXPECT_EQ(Dump(a), Dump(b));
  testing::TempDir dir;
  SaveIndexBundle(a, dir.File("a"));
  SaveIndexBundle(b, dir.File("b"));
  EXPECT_EQ(a.manifest.index_version, b.manifest.index_version);
  for (const auto &entry : fs::directory_iterator(dir.File("a"))) {
    std::string name = entry.path().filename().string();
    EXPECT_EQ(testing::ReadFile(entry.path().string()),
              testing::ReadFile(dir.File("b/" + name)))
        << name;
  }
}

TEST(IndexBundleTest, SaveLoadRoundTrip) {
  IndexBundle built = BuildMini();
  testing::TempDir dir;
  SaveIndexBundle(built, dir.File("idx"));
  IndexBundle loaded = LoadIndexBundle(dir.File("idx"));
  EXPECT_EQ(loaded.manifest, built.manifest);
  EXPECT_EQ(loaded.graph.iris(), built.graph.iris());
  EXPECT_EQ(loaded.graph.out().targets, built.graph.out().targets);
  EXPECT_EQ(loaded.popularity.scores, built.popularity.scores);
  EXPECT_TRUE(loaded.surfaces == built.surfaces);
  EXPECT_TRUE(loaded.context == built.context);
  EXPECT_TRUE(loaded.acronyms == built.acronyms);
  EXPECT_EQ(loaded.types, built.types);
  EXPECT_EQ(loaded.stopwords, built.stopwords);
  EXPECT_EQ(Dump(loaded), Dump(built));
}

TEST(IndexBundleTest, IndexVersionTracksContent) {
  IndexBundle a = BuildMini();
  std::string nt = testing::ReadFile(testing::FixturePath("mini_kb.nt")) +
                   "<http://ex.org/x> <http://www.w3.org/2000/01/rdf-schema#label> \"X\" .\n";
  IndexBundle b = testing::BundleFromNTriples(nt);
  testing::TempDir dir;
  SaveIndexBundle(a, dir.File("a"));
  SaveIndexBundle(b, dir.File("b"));
  EXPECT_NE(a.manifest.index_version, b.manifest.index_version);
  EXPECT_EQ(a.manifest.index_version.rfind("kb-", 0), 0u);
}

TEST(IndexBundleTest, CorruptIndexRejected) {
  IndexBundle b = BuildMini();
  testing::TempDir dir;
  SaveIndexBundle(b, dir.File("idx"));
  std::string graph = testing::ReadFile(dir.File("idx/graph.bin"));
  testing::WriteFile(dir.File("idx/graph.bin"), graph.substr(0, graph.size() / 2));
  EXPECT_THROW(LoadIndexBundle(dir.File("idx")), IndexFormatError);
  testing::WriteFile(dir.File("idx/graph.bin"), "XXXXXXXX" + graph.substr(8));
  EXPECT_THROW(LoadIndexBundle(dir.File("idx")), IndexFormatError);
  EXPECT_THROW(LoadIndexBundle(dir.File("missing")), Error);
}

TEST(IndexBundleTest, FormatVersionChecked) {
  IndexBundle b = BuildMini();
  testing::TempDir dir;
  SaveIndexBundle(b, dir.File("idx"));
  Manifest m = b.manifest;
  m.format_version = kIndexFormatVersion + 1;
  testing::WriteFile(dir.File("idx/manifest.json"), ManifestToJson(m));
  EXPECT_THROW(LoadIndexBundle(dir.File("idx")), IndexFormatError);
}

TEST(IndexBundleTest, ManifestJsonRoundTrip) {
  const Manifest &m = testing::MiniKb().manifest;
  EXPECT_EQ(ManifestFromJson(ManifestToJson(m)), m);
}

TEST(IndexBundleTest, PersonTypeLookup) {
  const IndexBundle &b = testing::MiniKb();
  EXPECT_TRUE(b.IsPerson(*b.graph.Find("http://dbpedia.org/resource/Barack_Obama")));
  EXPECT_FALSE(b.IsPerson(*b.graph.Find("http://dbpedia.org/resource/Jon_Voight")));
}

TEST(IndexBundleTest, DebugDumpListsEveryIndex) {
  std::string dump = Dump(testing::MiniKb());
  for (const char *section : {"# manifest", "# nodes", "# edges", "# surfaces",
                              "# context", "# acronyms", "# types"}) {
    EXPECT_NE(dump.find(section), std::string::npos) << section;
  }
}

}  // namespace
}  // namespace kblink
