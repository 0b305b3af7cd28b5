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

#ifndef KBLINK_TAGGER_H_
#define KBLINK_TAGGER_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kblink {

enum class PosTag {
  kNoun,
  kAdjective,
  kVerb,
  kDeterminer,
  kPreposition,
  kConjunction,
  kPronoun,
  kAdverb,
  kNumber,
  kOther,
};

std::optional<PosTag> ParsePosTag(std::string_view name);

// Word and suffix lexicon for the rule tagger. File format, one entry per
// line: "word<TAB>TAG" or "-suffix<TAB>TAG"; tags are NOUN, ADJ, VERB, DET,
// ADP, CONJ, PRON, ADV, NUM, X.
class Lexicon {
 public:
  static Lexicon Parse(std::istream &in);
  static Lexicon LoadFile(const std::string &path);

  void AddWord(std::string_view word, PosTag tag);
  void AddSuffix(std::string_view suffix, PosTag tag);

  std::optional<PosTag> LookupWord(std::string_view lowercase_word) const;
  // Longest matching suffix that leaves at least 3 code points.
  std::optional<PosTag> LookupSuffix(std::string_view lowercase_word) const;

  std::size_t size() const { return words_.size() + suffixes_.size(); }

 private:
  std::unordered_map<std::string, PosTag> words_;
  std::vector<std::pair<std::string, PosTag>> suffixes_;
};

struct TaggedToken {
  std::string word;        // token with surrounding punctuation stripped
  std::size_t begin = 0;   // byte span of `word` in the tagged text
  std::size_t end = 0;
  PosTag tag = PosTag::kOther;
  bool boundary_after = false;  // punctuation closes the phrase here
};

// Deterministic lexicon + rule tagger. Resolution order: numbers, lexicon
// words, capitalized words inside the sentence (NOUN), suffix rules, and
// NOUN as the open-class default.
class RuleTagger {
 public:
  explicit RuleTagger(const Lexicon &lexicon) : lexicon_(lexicon) {}

  std::vector<TaggedToken> Tag(std::string_view sentence) const;

 private:
  const Lexicon &lexicon_;
};

// Text up to the first ". " or line break, whichever comes first.
std::string_view FirstSentence(std::string_view text);

// Every maximal span ADJ (ADJ|NOUN)* NOUN of the first sentence, returned
// verbatim.
std::set<std::string> ExtractRareReferences(std::string_view description,
                                            const RuleTagger &tagger);

}  // namespace kblink

#endif  // KBLINK_TAGGER_H_
