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

#ifndef KBLINK_STEMMER_H_
#define KBLINK_STEMMER_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kblink {

struct SuffixRule {
  std::string suffix;
  std::string replacement;

  friend bool operator==(const SuffixRule &, const SuffixRule &) = default;
};

// Table-driven suffix stripper. Rules are tried in file order and the first
// rule whose suffix matches fires, provided at least `min_stem` code points
// remain. Identity rules ("ss" -> "ss") protect endings from later rules.
class SuffixStemmer {
 public:
  SuffixStemmer() = default;
  SuffixStemmer(std::vector<SuffixRule> rules, std::size_t min_stem)
      : rules_(std::move(rules)), min_stem_(min_stem) {}

  // File format: one "suffix<TAB>replacement" per line, '#' comments, and an
  // optional "@min_stem N" directive.
  static SuffixStemmer Parse(std::istream &in);
  static SuffixStemmer LoadFile(const std::string &path);

  // Stems one lowercase token.
  std::string StemToken(std::string_view token) const;

  const std::vector<SuffixRule> &rules() const { return rules_; }
  std::size_t min_stem() const { return min_stem_; }

  void Write(std::ostream &out) const;

 private:
  std::vector<SuffixRule> rules_;
  std::size_t min_stem_ = 3;
};

struct StemResult {
  std::string text;
  bool language_supported = true;
};

// Language -> stemmer table.
using StemmerSet = std::map<std::string, SuffixStemmer, std::less<>>;

// Stems every token of `text` and re-cases the result like Normalize().
// Unknown languages leave the text normalized but unstemmed and clear
// `language_supported`.
StemResult StemMention(std::string_view text, std::string_view language,
                       const StemmerSet &stemmers);

}  // namespace kblink

#endif  // KBLINK_STEMMER_H_
