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

#include "kblink/stemmer.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "kblink/error.h"
#include "kblink/text.h"
#include "kblink/unicode.h"

namespace kblink {

SuffixStemmer SuffixStemmer::Parse(std::istream &in) {
  std::vector<SuffixRule> rules;
  std::size_t min_stem = 3;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("@min_stem", 0) == 0) {
      min_stem = std::stoul(line.substr(9));
      continue;
    }
    std::size_t tab = line.find('\t');
    SuffixRule rule;
    rule.suffix = line.substr(0, tab);
    if (tab != std::string::npos) rule.replacement = line.substr(tab + 1);
    if (rule.suffix.empty()) continue;
    rules.push_back(std::move(rule));
  }
  return SuffixStemmer(std::move(rules), min_stem);
}

SuffixStemmer SuffixStemmer::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stemmer table " + path);
  return Parse(in);
}

std::string SuffixStemmer::StemToken(std::string_view token) const {
  std::u32string word = unicode::Decode(token);
  for (const SuffixRule &rule : rules_) {
    std::u32string suffix = unicode::Decode(rule.suffix);
    if (word.size() < suffix.size()) continue;
    if (word.compare(word.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    if (word.size() - suffix.size() < min_stem_) continue;
    std::u32string stem = word.substr(0, word.size() - suffix.size());
    return unicode::Encode(stem) + rule.replacement;
  }
  return std::string(token);
}

void SuffixStemmer::Write(std::ostream &out) const {
  out << "@min_stem " << min_stem_ << '\n';
  for (const SuffixRule &rule : rules_) {
    out << rule.suffix << '\t' << rule.replacement << '\n';
  }
}

StemResult StemMention(std::string_view text, std::string_view language,
                       const StemmerSet &stemmers) {
  StemResult result;
  std::vector<std::string> tokens = SplitWhitespace(SurfaceKey(text));
  auto it = stemmers.find(language);
  if (it == stemmers.end()) {
    result.language_supported = false;
    result.text = Normalize(text);
    return result;
  }
  for (std::string &token : tokens) token = it->second.StemToken(token);
  result.text = Normalize(JoinTokens(tokens));
  return result;
}

}  // namespace kblink
