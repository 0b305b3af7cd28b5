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

#include <functional>

#include <gtest/gtest.h>

#include "kblink/error.h"
#include "kblink/linker_config.h"
#include "test_env.h"

namespace kblink {
namespace {

std::string CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const CodedError &e) {
    return e.code();
  }
  return "";
}

struct Field {
  std::string name;
  std::vector<std::string> values;  // three distinct non-default values
  std::function<std::string(const LinkerConfig &)> get;
};

std::vector<Field> Fields() {
  auto num = [](auto v) { return std::to_string(v); };
  return {
      {"sigma", {"0.5", "0.6", "0.7"}, [=](auto &c) { return num(c.sigma); }},
      {"depth", {"0", "1", "3"}, [=](auto &c) { return num(c.depth); }},
      {"algorithm", {"pagerank", "hits", "PageRank"},
       [](auto &c) { return std::string(AlgorithmName(c.algorithm)); }},
      {"use_popularity", {"false", "true", "0"},
       [=](auto &c) { return num(c.use_popularity); }},
      {"use_acronyms", {"off", "on", "no"},
       [=](auto &c) { return num(c.use_acronyms); }},
      {"use_context_search", {"false", "yes", "false"},
       [=](auto &c) { return num(c.use_context_search); }},
      {"use_coreference", {"0", "1", "0"},
       [=](auto &c) { return num(c.use_coreference); }},
      {"candidate_cap", {"1", "7", "50"},
       [=](auto &c) { return num(c.candidate_cap); }},
      {"widen_factor", {"1", "2", "9"},
       [=](auto &c) { return num(c.widen_factor); }},
      {"hits_iterations", {"5", "6", "7"},
       [=](auto &c) { return num(c.hits_iterations); }},
      {"pagerank_iterations", {"5", "6", "7"},
       [=](auto &c) { return num(c.pagerank_iterations); }},
      {"pagerank_alpha", {"0.2", "0.3", "0.4"},
       [=](auto &c) { return num(c.pagerank_alpha); }},
      {"emergent_namespace", {"urn:a:", "urn:b:", "urn:c:"},
       [](auto &c) { return c.emergent_namespace; }},
  };
}

TEST(ConfigTest, Defaults) {
  LinkerConfig c;
  EXPECT_EQ(c.sigma, 0.87);
  EXPECT_EQ(c.depth, 2);
  EXPECT_EQ(c.algorithm, Algorithm::kHits);
  EXPECT_TRUE(c.use_popularity && c.use_acronyms && c.use_context_search &&
              c.use_coreference);
  EXPECT_EQ(c.candidate_cap, 100u);
  EXPECT_EQ(c.pagerank_alpha, 0.15);
  EXPECT_NO_THROW(c.Validate());
}

TEST(ConfigTest, FieldTableCoversEveryField) {
  std::vector<std::string> names;
  for (const Field &f : Fields()) names.push_back(f.name);
  EXPECT_EQ(names, ConfigFieldNames());
}

// For every field and every subset of layers, the highest layer present
// decides the value.
TEST(ConfigTest, PrecedenceOnEveryField) {
  for (const Field &f : Fields()) {
    for (int mask = 0; mask < 8; ++mask) {
      ConfigOverrides layers[3];
      int top = -1;
      for (int layer = 0; layer < 3; ++layer) {
        if (mask & (1 << layer)) {
          layers[layer][f.name] = f.values[layer];
          top = layer;
        }
      }
      LinkerConfig want;
      if (top >= 0) ApplyOverride(want, f.name, f.values[top]);
      LinkerConfig got = ResolveConfig(layers[0], layers[1], layers[2]);
      EXPECT_EQ(f.get(got), f.get(want)) << f.name << " mask " << mask;
      EXPECT_EQ(got, want) << f.name << " mask " << mask;
    }
  }
}

TEST(ConfigTest, LayersCombineAcrossFields) {
  LinkerConfig c = ResolveConfig({{"sigma", "0.5"}, {"depth", "1"}},
                                 {{"depth", "3"}, {"algorithm", "pagerank"}},
                                 {{"algorithm", "hits"}});
  EXPECT_EQ(c.sigma, 0.5);
  EXPECT_EQ(c.depth, 3);
  EXPECT_EQ(c.algorithm, Algorithm::kHits);
}

TEST(ConfigTest, KeySpellings) {
  EXPECT_EQ(CanonicalConfigKey("use_context_search"), "usecontextsearch");
  EXPECT_EQ(CanonicalConfigKey("useContextSearch"), "usecontextsearch");
  EXPECT_EQ(CanonicalConfigKey("use-context-search"), "usecontextsearch");
  for (const char *key : {"use_context_search", "useContextSearch",
                          "use-context-search", "USE_CONTEXT_SEARCH"}) {
    LinkerConfig c;
    ApplyOverride(c, key, "false");
    EXPECT_FALSE(c.use_context_search) << key;
  }
  LinkerConfig c;
  ApplyOverride(c, "d", "4");
  EXPECT_EQ(c.depth, 4);
}

TEST(ConfigTest, BadValuesAreRejected) {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"sigma", "high"},          {"sigma", "0.5x"},
      {"depth", "1.5"},           {"algorithm", "salsa"},
      {"use_popularity", "maybe"}, {"candidate_cap", "0"},
      {"widen_factor", "-1"},     {"no_such_key", "1"},
  };
  for (const auto &[key, value] : bad) {
    LinkerConfig c;
    EXPECT_EQ(CodeOf([&] { ApplyOverride(c, key, value); }), "CONFIG_INVALID")
        << key << "=" << value;
  }
}

TEST(ConfigTest, ValidateRanges) {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"sigma", "1.5"},          {"sigma", "-0.1"},
      {"depth", "-1"},           {"hits_iterations", "0"},
      {"pagerank_iterations", "0"}, {"pagerank_alpha", "0"},
      {"pagerank_alpha", "1"},   {"emergent_namespace", ""},
  };
  for (const auto &[key, value] : bad) {
    EXPECT_EQ(CodeOf([&] { ResolveConfig({}, {{key, value}}, {}); }),
              "CONFIG_INVALID")
        << key << "=" << value;
  }
  for (const char *sigma : {"0", "1", "0.87"}) {
    EXPECT_NO_THROW(ResolveConfig({}, {{"sigma", sigma}}, {}));
  }
}

TEST(ConfigTest, ConfigFile) {
  testing::TempDir dir;
  std::string path = dir.File("linker.conf");
  testing::WriteFile(path,
                     "# linker settings\n"
                     "\n"
                     "  sigma = 0.9  \n"
                     "algorithm=pagerank\n"
                     "useContextSearch = false\n"
                     "use_context_search = true\n");
  ConfigOverrides file = ParseConfigFile(path);
  LinkerConfig c = ResolveConfig(file, {}, {});
  EXPECT_EQ(c.sigma, 0.9);
  EXPECT_EQ(c.algorithm, Algorithm::kPageRank);
  EXPECT_TRUE(c.use_context_search);  // later line wins

  testing::WriteFile(path, "sigma 0.9\n");
  EXPECT_EQ(CodeOf([&] { ParseConfigFile(path); }), "CONFIG_INVALID");
  testing::WriteFile(path, "colour=blue\n");
  EXPECT_EQ(CodeOf([&] { ParseConfigFile(path); }), "CONFIG_INVALID");
  EXPECT_THROW(ParseConfigFile(dir.File("missing.conf")), Error);
}

}  // namespace
}  // namespace kblink
