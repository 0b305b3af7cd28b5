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

#include <random>

#include <gtest/gtest.h>

#include "kblink/trigram.h"
#include "oracles.h"

namespace kblink {
namespace {

using testing::OracleAlphabet;
using testing::OracleTrigramSet;
using testing::OracleTrigramSimilarity;

std::string RandomString(std::mt19937_64 &rng, std::size_t max_len) {
  const auto &alphabet = OracleAlphabet();
  std::size_t len = rng() % (max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
  return s;
}

TEST(TrigramSetTest, PaddedWindows) {
  std::string p(kTrigramSentinel);
  EXPECT_EQ(TrigramSet("ab"),
            (std::set<std::string>{p + p + "a", p + "ab", "ab" + p, "b" + p + p}));
  EXPECT_TRUE(TrigramSet("").empty());
  EXPECT_EQ(TrigramSet("abcd").size(), 6u);
  EXPECT_EQ(TrigramSet("ABCD"), TrigramSet("abcd"));
  // Repeated windows collapse: padded "␣␣aaaa␣␣" has 6 windows, 5 distinct.
  EXPECT_EQ(TrigramSet("aaaa").size(), 5u);
}

TEST(TrigramSimilarityTest, Examples) {
  EXPECT_EQ(TrigramSimilarity("New York", "New York"), 1.0);
  EXPECT_EQ(TrigramSimilarity("abc", "xyz"), 0.0);
  EXPECT_EQ(TrigramSimilarity("", ""), 1.0);
  EXPECT_EQ(TrigramSimilarity("", "a"), 0.0);
  // York: ␣␣y ␣yo yor ork rk␣ k␣␣; Yorks: ␣␣y ␣yo yor ork rks ks␣ s␣␣.
  // Shared 4, union 6 + 7 - 4 = 9.
  EXPECT_EQ(TrigramSimilarity("York", "Yorks"), 4.0 / 9.0);
  EXPECT_EQ(TrigramSimilarity("York", "Yorks"),
            OracleTrigramSimilarity("York", "Yorks"));
}

TEST(TrigramSimilarityTest, LeipzigVariants) {
  double s = OracleTrigramSimilarity("Leipzigg", "Leipzig");
  EXPECT_EQ(TrigramSimilarity("Leipzigg", "Leipzig"), s);
  // ␣␣l ␣le lei eip ipz pzi zig are shared; ig␣ g␣␣ vs igg gg␣ g␣␣.
  EXPECT_EQ(s, 8.0 / 11.0);
  EXPECT_LT(s, 0.87);
}

TEST(TrigramSimilarityTest, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string a = RandomString(rng, 12);
    std::string b = (i % 3 == 0) ? a + RandomString(rng, 2) : RandomString(rng, 12);
    ASSERT_EQ(TrigramSet(a), OracleTrigramSet(a)) << a;
    ASSERT_EQ(TrigramSimilarity(a, b), OracleTrigramSimilarity(a, b))
        << "'" << a << "' vs '" << b << "'";
  }
}

TEST(TrigramSimilarityTest, SymmetricReflexiveBounded) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::string a = RandomString(rng, 10);
    std::string b = RandomString(rng, 10);
    double ab = TrigramSimilarity(a, b);
    EXPECT_EQ(ab, TrigramSimilarity(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(TrigramSimilarity(a, a), 1.0);
  }
}

TEST(TrigramCodesTest, SortedUniqueAndSameCardinality) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    std::string a = RandomString(rng, 15);
    std::vector<uint64_t> codes = TrigramCodes(a);
    EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
    EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
    EXPECT_EQ(codes.size(), TrigramSet(a).size());
  }
}

}  // namespace
}  // namespace kblink
