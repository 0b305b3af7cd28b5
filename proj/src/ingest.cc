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

#include "kblink/ingest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include "kblink/error.h"
#include "kblink/text.h"
#include "kblink/unicode.h"

namespace kblink {

namespace fs = std::filesystem;

void IngestConfig::Validate() const {
  if (label_predicates.empty()) throw Error("label_predicates is empty");
  if (type_predicates.empty()) throw Error("type_predicates is empty");
  if (description_predicates.empty()) {
    throw Error("description_predicates is empty");
  }
  if (max_name_tokens_for_permutation == 0) {
    throw Error("max_name_tokens must be positive");
  }
}

namespace {

std::string DataFile(const std::string &data_dir, const char *kind,
                     const std::string &language, const char *ext) {
  return (fs::path(data_dir) / kind / (language + ext)).string();
}

// Acronym tables are optional per language.
std::string OptionalAcronymFile(const std::string &data_dir,
                                const std::string &language) {
  std::string path = DataFile(data_dir, "acronyms", language, ".tsv");
  return fs::exists(path) ? path : "";
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    std::string_view item = value.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) items.emplace_back(item);
    start = comma + 1;
  }
  return items;
}

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

}  // namespace

IngestConfig DefaultIngestConfig(const std::string &data_dir) {
  IngestConfig config;
  config.stopword_file = DataFile(data_dir, "stopwords", config.language, ".txt");
  config.lexicon_file = DataFile(data_dir, "lexicon", config.language, ".tsv");
  config.stemmer_file = DataFile(data_dir, "stemmer", config.language, ".tsv");
  config.acronym_file = OptionalAcronymFile(data_dir, config.language);
  return config;
}

IngestConfig LoadIngestConfig(const std::string &path,
                              const std::string &data_dir) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ingest config " + path);
  IngestConfig config = DefaultIngestConfig(data_dir);
  fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string &value) {
    fs::path p(value);
    return p.is_absolute() ? value : (base / p).string();
  };
  bool stopwords_set = false, lexicon_set = false, stemmer_set = false;
  bool acronyms_set = false;

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error(path + ":" + std::to_string(number) + ": expected key=value");
    }
    std::string key = Trim(std::string_view(trimmed).substr(0, eq));
    std::string value = Trim(std::string_view(trimmed).substr(eq + 1));
    if (key == "kb_name") {
      config.kb_name = value;
    } else if (key == "label_predicates") {
      config.label_predicates = SplitList(value);
    } else if (key == "type_predicates") {
      config.type_predicates = SplitList(value);
    } else if (key == "description_predicates") {
      config.description_predicates = SplitList(value);
    } else if (key == "person_types") {
      config.person_type_iris = SplitList(value);
    } else if (key == "primary_language") {
      config.primary_language = value;
    } else if (key == "label_languages") {
      config.label_languages = SplitList(value);
    } else if (key == "max_name_tokens") {
      config.max_name_tokens_for_permutation = std::stoul(value);
    } else if (key == "language") {
      config.language = value;
    } else if (key == "stopwords") {
      config.stopword_file = value.empty() ? "" : resolve(value);
      stopwords_set = true;
    } else if (key == "lexicon") {
      config.lexicon_file = value.empty() ? "" : resolve(value);
      lexicon_set = true;
    } else if (key == "stemmer") {
      config.stemmer_file = value.empty() ? "" : resolve(value);
      stemmer_set = true;
    } else if (key == "acronyms") {
      config.acronym_file = value.empty() ? "" : resolve(value);
      acronyms_set = true;
    } else if (key == "popularity") {
      auto method = ParsePopularityMethod(value);
      if (!method) throw Error("unknown popularity method: " + value);
      config.popularity = *method;
    } else if (key == "parse_mode") {
      if (value == "strict") {
        config.parse_mode = ParseMode::kStrict;
      } else if (value == "lenient") {
        config.parse_mode = ParseMode::kLenient;
      } else {
        throw Error("unknown parse_mode: " + value);
      }
    } else {
      throw Error(path + ":" + std::to_string(number) + ": unknown key " + key);
    }
  }
  if (!stopwords_set) {
    config.stopword_file =
        DataFile(data_dir, "stopwords", config.language, ".txt");
  }
  if (!lexicon_set) {
    config.lexicon_file = DataFile(data_dir, "lexicon", config.language, ".tsv");
  }
  if (!stemmer_set) {
    config.stemmer_file = DataFile(data_dir, "stemmer", config.language, ".tsv");
  }
  if (!acronyms_set) {
    config.acronym_file = OptionalAcronymFile(data_dir, config.language);
  }
  config.Validate();
  return config;
}

std::string_view SurfaceSourceName(SurfaceSource source) {
  switch (source) {
    case SurfaceSource::kLabel:
      return "label";
    case SurfaceSource::kPersonPermutation:
      return "person";
    case SurfaceSource::kRareReference:
      return "rare";
  }
  return "label";
}

namespace {

bool Contains(const std::vector<std::string> &list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

bool LanguageAccepted(const IngestConfig &config, const Literal &literal) {
  if (config.label_languages.empty()) return true;
  return Contains(config.label_languages, literal.language.value_or(""));
}

bool NonBlank(std::string_view s) {
  for (char32_t c : unicode::Decode(s)) {
    if (!unicode::IsSpace(c)) return true;
  }
  return false;
}

}  // namespace

SurfaceExtraction ExtractSurfaceForms(std::span<const Triple> triples,
                                      const IngestConfig &config) {
  config.Validate();
  SurfaceExtraction out;
  const std::string &first_label = config.label_predicates.front();

  // Principal reference per resource: (index of record, primary-language?).
  std::unordered_map<std::string, std::pair<std::size_t, bool>> principal;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;

  for (const Triple &t : triples) {
    const std::string &p = t.predicate.iri();
    if (t.HasResourceObject()) {
      if (Contains(config.type_predicates, p)) {
        out.types[t.subject.iri()].insert(t.ObjectResource().iri());
      }
      continue;
    }
    if (!Contains(config.label_predicates, p)) continue;
    const Literal &literal = t.ObjectLiteral();
    if (!LanguageAccepted(config, literal) || !NonBlank(literal.text)) continue;

    auto [slot, fresh] =
        seen.try_emplace({t.subject.iri(), literal.text}, out.records.size());
    if (fresh) {
      out.records.push_back(
          {t.subject, literal.text, false, SurfaceSource::kLabel});
    }
    std::size_t index = slot->second;
    if (p != first_label) continue;
    bool primary = literal.language == config.primary_language;
    auto [it, inserted] =
        principal.try_emplace(t.subject.iri(), index, primary);
    if (!inserted && primary && !it->second.second) {
      it->second = {index, true};
    }
  }
  for (const auto &[iri, choice] : principal) {
    out.records[choice.first].is_principal = true;
  }
  return out;
}

std::set<std::string> PersonNamePermutations(std::string_view name_label,
                                             std::size_t max_tokens) {
  std::vector<std::string> words = SplitWhitespace(name_label);
  std::vector<std::string> tokens = words;
  for (const std::string &w : words) {
    if (w.find('-') == std::string::npos) continue;
    std::size_t start = 0;
    while (start <= w.size()) {
      std::size_t dash = w.find('-', start);
      if (dash == std::string::npos) dash = w.size();
      if (dash > start) tokens.push_back(w.substr(start, dash - start));
      start = dash + 1;
    }
  }

  std::set<std::string> out;
  if (tokens.empty()) return out;
  if (tokens.size() > max_tokens) {
    out.insert(JoinTokens(words));
    for (const std::string &t : tokens) out.insert(t);
    return out;
  }

  std::vector<bool> used(tokens.size(), false);
  std::vector<std::string> sequence;
  auto extend = [&](auto &&self) -> void {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      sequence.push_back(tokens[i]);
      out.insert(JoinTokens(sequence));
      self(self);
      sequence.pop_back();
      used[i] = false;
    }
  };
  extend(extend);
  return out;
}

Stopwords LoadStopwords(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword list " + path);
  Stopwords words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = Trim(line);
    if (word.empty() || word[0] == '#') continue;
    words.insert(unicode::Lowercase(word));
  }
  return words;
}

std::vector<std::string> ContextTokens(std::string_view text,
                                       const Stopwords &stopwords) {
  std::vector<std::string> tokens = unicode::WordTokens(text);
  std::erase_if(tokens,
                [&](const std::string &t) { return stopwords.contains(t); });
  return tokens;
}

TokenCounts BuildContextDocument(std::span<const Triple> triples,
                                 const Resource &resource,
                                 const Stopwords &stopwords) {
  TokenCounts counts;
  for (const Triple &t : triples) {
    if (t.subject != resource || t.HasResourceObject()) continue;
    for (std::string &token : ContextTokens(t.ObjectLiteral().text, stopwords)) {
      ++counts[std::move(token)];
    }
  }
  return counts;
}

std::map<std::string, TokenCounts> BuildContextDocuments(
    std::span<const Triple> triples, const Stopwords &stopwords) {
  std::map<std::string, TokenCounts> documents;
  for (const Triple &t : triples) {
    if (t.HasResourceObject()) continue;
    std::vector<std::string> tokens =
        ContextTokens(t.ObjectLiteral().text, stopwords);
    if (tokens.empty()) continue;
    TokenCounts &counts = documents[t.subject.iri()];
    for (std::string &token : tokens) ++counts[std::move(token)];
  }
  return documents;
}

SurfaceExtraction ExtractAllSurfaceForms(std::span<const Triple> triples,
                                         const IngestConfig &config,
                                         const RuleTagger &tagger) {
  SurfaceExtraction out = ExtractSurfaceForms(triples, config);

  std::set<std::string> persons;
  for (const auto &[iri, types] : out.types) {
    for (const std::string &type : config.person_type_iris) {
      if (types.contains(type)) {
        persons.insert(iri);
        break;
      }
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const SurfaceFormRecord &r : out.records) {
    seen.emplace(r.resource.iri(), r.surface);
  }
  std::vector<SurfaceFormRecord> extra;
  auto add = [&](const Resource &resource, std::string surface,
                 SurfaceSource source) {
    if (!NonBlank(surface)) return;
    if (!seen.emplace(resource.iri(), surface).second) return;
    extra.push_back({resource, std::move(surface), false, source});
  };

  for (const SurfaceFormRecord &r : out.records) {
    if (!persons.contains(r.resource.iri())) continue;
    for (const std::string &name : PersonNamePermutations(
             r.surface, config.max_name_tokens_for_permutation)) {
      add(r.resource, name, SurfaceSource::kPersonPermutation);
    }
  }
  for (const Triple &t : triples) {
    if (t.HasResourceObject()) continue;
    if (!Contains(config.description_predicates, t.predicate.iri())) continue;
    if (!LanguageAccepted(config, t.ObjectLiteral())) continue;
    for (const std::string &phrase :
         ExtractRareReferences(t.ObjectLiteral().text, tagger)) {
      add(t.subject, phrase, SurfaceSource::kRareReference);
    }
  }
  out.records.insert(out.records.end(),
                     std::make_move_iterator(extra.begin()),
                     std::make_move_iterator(extra.end()));
  return out;
}

}  // namespace kblink
