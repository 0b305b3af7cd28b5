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

#include "kblink/tagger.h"

#include <fstream>
#include <istream>

#include "kblink/error.h"
#include "kblink/unicode.h"

namespace kblink {

std::optional<PosTag> ParsePosTag(std::string_view name) {
  if (name == "NOUN") return PosTag::kNoun;
  if (name == "ADJ") return PosTag::kAdjective;
  if (name == "VERB") return PosTag::kVerb;
  if (name == "DET") return PosTag::kDeterminer;
  if (name == "ADP") return PosTag::kPreposition;
  if (name == "CONJ") return PosTag::kConjunction;
  if (name == "PRON") return PosTag::kPronoun;
  if (name == "ADV") return PosTag::kAdverb;
  if (name == "NUM") return PosTag::kNumber;
  if (name == "X") return PosTag::kOther;
  return std::nullopt;
}

Lexicon Lexicon::Parse(std::istream &in) {
  Lexicon lexicon;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error("lexicon line " + std::to_string(number) + ": missing tab");
    }
    auto tag = ParsePosTag(std::string_view(line).substr(tab + 1));
    if (!tag) {
      throw Error("lexicon line " + std::to_string(number) + ": unknown tag");
    }
    std::string_view entry = std::string_view(line).substr(0, tab);
    if (entry.size() > 1 && entry[0] == '-') {
      lexicon.AddSuffix(entry.substr(1), *tag);
    } else {
      lexicon.AddWord(entry, *tag);
    }
  }
  return lexicon;
}

Lexicon Lexicon::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon " + path);
  return Parse(in);
}

void Lexicon::AddWord(std::string_view word, PosTag tag) {
  words_[unicode::Lowercase(word)] = tag;
}

void Lexicon::AddSuffix(std::string_view suffix, PosTag tag) {
  suffixes_.emplace_back(unicode::Lowercase(suffix), tag);
}

std::optional<PosTag> Lexicon::LookupWord(std::string_view word) const {
  auto it = words_.find(std::string(word));
  if (it == words_.end()) return std::nullopt;
  return it->second;
}

std::optional<PosTag> Lexicon::LookupSuffix(std::string_view word) const {
  std::size_t word_cps = unicode::CodepointCount(word);
  std::optional<PosTag> best;
  std::size_t best_len = 0;
  for (const auto &[suffix, tag] : suffixes_) {
    if (suffix.size() <= best_len || !word.ends_with(suffix)) continue;
    if (word_cps < unicode::CodepointCount(suffix) + 3) continue;
    best = tag;
    best_len = suffix.size();
  }
  return best;
}

namespace {

bool IsPunct(char32_t c) { return unicode::IsPunctuationOrSymbol(c); }

bool AllDigits(const std::u32string &word) {
  for (char32_t c : word) {
    if (!unicode::IsDigit(c)) return false;
  }
  return !word.empty();
}

}  // namespace

std::vector<TaggedToken> RuleTagger::Tag(std::string_view sentence) const {
  std::vector<TaggedToken> tokens;
  std::size_t pos = 0;
  bool first_word = true;
  while (pos < sentence.size()) {
    while (pos < sentence.size() &&
           (sentence[pos] == ' ' || sentence[pos] == '\t')) {
      ++pos;
    }
    if (pos >= sentence.size()) break;
    std::size_t raw_end = pos;
    while (raw_end < sentence.size() && sentence[raw_end] != ' ' &&
           sentence[raw_end] != '\t') {
      ++raw_end;
    }
    std::string_view raw = sentence.substr(pos, raw_end - pos);

    // Trim punctuation on both sides, tracking byte offsets.
    std::u32string cps = unicode::Decode(raw);
    std::size_t lead = 0, trail = cps.size();
    while (lead < trail && IsPunct(cps[lead])) ++lead;
    while (trail > lead && IsPunct(cps[trail - 1])) --trail;
    std::size_t lead_bytes = unicode::Encode(cps.substr(0, lead)).size();
    std::u32string core = cps.substr(lead, trail - lead);
    std::string word = unicode::Encode(core);

    if (lead > 0 && !tokens.empty()) tokens.back().boundary_after = true;

    TaggedToken token;
    token.word = word;
    token.begin = pos + lead_bytes;
    token.end = token.begin + word.size();
    token.boundary_after = trail < cps.size();
    if (core.empty()) {
      token.tag = PosTag::kOther;
    } else if (AllDigits(core)) {
      token.tag = PosTag::kNumber;
    } else {
      std::string lower = unicode::Lowercase(word);
      if (auto tag = lexicon_.LookupWord(lower)) {
        token.tag = *tag;
      } else if (!first_word && unicode::IsUpper(core[0])) {
        token.tag = PosTag::kNoun;
      } else if (auto suffix_tag = lexicon_.LookupSuffix(lower)) {
        token.tag = *suffix_tag;
      } else {
        token.tag = PosTag::kNoun;
      }
    }
    first_word = false;
    tokens.push_back(std::move(token));
    pos = raw_end;
  }
  return tokens;
}

std::string_view FirstSentence(std::string_view text) {
  std::size_t cut = text.size();
  if (std::size_t p = text.find(". "); p != std::string_view::npos) {
    cut = std::min(cut, p + 1);
  }
  if (std::size_t p = text.find_first_of("\r\n"); p != std::string_view::npos) {
    cut = std::min(cut, p);
  }
  return text.substr(0, cut);
}

std::set<std::string> ExtractRareReferences(std::string_view description,
                                            const RuleTagger &tagger) {
  std::string_view sentence = FirstSentence(description);
  std::vector<TaggedToken> tokens = tagger.Tag(sentence);
  std::set<std::string> spans;

  auto is_np = [](PosTag t) {
    return t == PosTag::kAdjective || t == PosTag::kNoun;
  };
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_np(tokens[i].tag)) {
      ++i;
      continue;
    }
    // Run of ADJ/NOUN tokens not interrupted by punctuation.
    std::size_t run_end = i;
    while (run_end + 1 < tokens.size() && !tokens[run_end].boundary_after &&
           is_np(tokens[run_end + 1].tag)) {
      ++run_end;
    }
    std::size_t first_adj = run_end + 1;
    for (std::size_t k = i; k <= run_end; ++k) {
      if (tokens[k].tag == PosTag::kAdjective) {
        first_adj = k;
        break;
      }
    }
    if (first_adj <= run_end) {
      for (std::size_t k = run_end; k > first_adj; --k) {
        if (tokens[k].tag == PosTag::kNoun) {
          spans.emplace(sentence.substr(
              tokens[first_adj].begin,
              tokens[k].end - tokens[first_adj].begin));
          break;
        }
      }
    }
    i = run_end + 1;
  }
  return spans;
}

}  // namespace kblink
