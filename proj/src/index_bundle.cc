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

#include "kblink/index_bundle.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "binary_io.h"
#include "json.hpp"
#include "kblink/error.h"
#include "kblink/tagger.h"

namespace kblink {
namespace fs = std::filesystem;
namespace {

constexpr std::string_view kGraphMagic = "KBLGRPH1";
constexpr std::string_view kPopularityMagic = "KBLPOP01";
constexpr std::string_view kTypesMagic = "KBLTYPE1";

constexpr const char *kManifestFile = "manifest.json";
constexpr const char *kGraphFile = "graph.bin";
constexpr const char *kPopularityFile = "popularity.bin";
constexpr const char *kSurfaceFile = "surfaces.bin";
constexpr const char *kContextFile = "context.bin";
constexpr const char *kAcronymFile = "acronyms.tsv";
constexpr const char *kTypesFile = "types.bin";
constexpr const char *kStopwordFile = "stopwords.txt";
constexpr const char *kStemmerFile = "stemmer.tsv";

std::string Path(const std::string &dir, const char *file) {
  return (fs::path(dir) / file).string();
}

std::string ReadWholeFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IndexFormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// FNV-1a, 64 bit.
void Fnv(std::string_view bytes, uint64_t *h) {
  for (unsigned char c : bytes) {
    *h ^= c;
    *h *= 1099511628211ull;
  }
}

std::string Hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

bool IndexBundle::HasType(NodeId resource,
                          std::span<const std::string> type_iris) const {
  auto it = types.find(graph.Iri(resource));
  if (it == types.end()) return false;
  for (const std::string &type : type_iris) {
    if (it->second.contains(type)) return true;
  }
  return false;
}

std::size_t DirectLinkCount(const KbGraph &graph, NodeId resource,
                            std::span<const NodeId> others) {
  std::size_t count = 0;
  for (NodeId o : others) {
    if (o == resource) continue;
    if (graph.HasEdge(resource, o) || graph.HasEdge(o, resource)) ++count;
  }
  return count;
}

IndexBundle BuildIndexBundle(std::span<const Triple> triples,
                             const IngestConfig &config,
                             const ParseStats &stats) {
  config.Validate();
  if (triples.empty()) throw Error("no triples ingested");

  IndexBundle bundle;
  bundle.graph = BuildKbGraph(triples);
  bundle.popularity = ComputePopularity(bundle.graph, config.popularity);

  Lexicon lexicon;
  if (!config.lexicon_file.empty()) {
    lexicon = Lexicon::LoadFile(config.lexicon_file);
  }
  RuleTagger tagger(lexicon);
  SurfaceExtraction extraction =
      ExtractAllSurfaceForms(triples, config, tagger);
  bundle.surfaces = SurfaceIndex::Build(extraction.records, bundle.graph);
  bundle.types = std::move(extraction.types);

  if (!config.stopword_file.empty()) {
    bundle.stopwords = LoadStopwords(config.stopword_file);
  }
  bundle.context = ContextIndex::Build(
      BuildContextDocuments(triples, bundle.stopwords), bundle.graph);

  if (!config.acronym_file.empty()) {
    bundle.acronyms = AcronymIndex::LoadFile(config.acronym_file);
  }
  if (!config.stemmer_file.empty()) {
    bundle.stemmers.emplace(config.language,
                            SuffixStemmer::LoadFile(config.stemmer_file));
  }

  Manifest &m = bundle.manifest;
  m.kb_name = config.kb_name;
  m.language = config.language;
  m.primary_language = config.primary_language;
  m.label_predicates = config.label_predicates;
  m.type_predicates = config.type_predicates;
  m.description_predicates = config.description_predicates;
  m.person_type_iris = config.person_type_iris;
  m.label_languages = config.label_languages;
  m.max_name_tokens = config.max_name_tokens_for_permutation;
  m.popularity = config.popularity;

  BundleCounts &c = m.counts;
  c.triples = triples.size();
  c.skipped_lines = stats.skipped();
  c.resources = bundle.graph.num_nodes();
  c.edges = bundle.graph.num_edges();
  c.surface_records = extraction.records.size();
  for (const SurfaceFormRecord &r : extraction.records) {
    if (r.source == SurfaceSource::kPersonPermutation) ++c.person_name_records;
    if (r.source == SurfaceSource::kRareReference) ++c.rare_reference_records;
  }
  c.surfaces = bundle.surfaces.num_surfaces();
  c.surface_postings = bundle.surfaces.num_postings();
  c.context_documents = bundle.context.num_documents();
  c.context_terms = bundle.context.num_terms();
  c.acronyms = bundle.acronyms.num_acronyms();
  c.acronym_expansions = bundle.acronyms.num_expansions();
  c.typed_resources = bundle.types.size();
  return bundle;
}

std::string ManifestToJson(const Manifest &m) {
  const BundleCounts &c = m.counts;
  nlohmann::ordered_json j;
  j["format_version"] = m.format_version;
  j["index_version"] = m.index_version;
  j["kb_name"] = m.kb_name;
  j["language"] = m.language;
  j["primary_language"] = m.primary_language;
  j["label_predicates"] = m.label_predicates;
  j["type_predicates"] = m.type_predicates;
  j["description_predicates"] = m.description_predicates;
  j["person_type_iris"] = m.person_type_iris;
  j["label_languages"] = m.label_languages;
  j["max_name_tokens_for_permutation"] = m.max_name_tokens;
  j["popularity"] = std::string(PopularityMethodName(m.popularity));
  j["trigram"] = "jaccard over lowercased code point trigrams, 2 sentinels";
  j["tfidf"] = "raw tf * ln(N/df), query term multiplicity, no length norm";
  j["counts"] = {
      {"triples", c.triples},
      {"skipped_lines", c.skipped_lines},
      {"resources", c.resources},
      {"edges", c.edges},
      {"surface_records", c.surface_records},
      {"person_name_records", c.person_name_records},
      {"rare_reference_records", c.rare_reference_records},
      {"surfaces", c.surfaces},
      {"surface_postings", c.surface_postings},
      {"context_documents", c.context_documents},
      {"context_terms", c.context_terms},
      {"acronyms", c.acronyms},
      {"acronym_expansions", c.acronym_expansions},
      {"typed_resources", c.typed_resources},
  };
  return j.dump(2) + "\n";
}

Manifest ManifestFromJson(const std::string &text) {
  Manifest m;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != kIndexFormatVersion) {
      throw IndexFormatError("unsupported index format version " +
                             std::to_string(m.format_version));
    }
    m.index_version = j.at("index_version").get<std::string>();
    m.kb_name = j.at("kb_name").get<std::string>();
    m.language = j.at("language").get<std::string>();
    m.primary_language = j.at("primary_language").get<std::string>();
    m.label_predicates = j.at("label_predicates").get<std::vector<std::string>>();
    m.type_predicates = j.at("type_predicates").get<std::vector<std::string>>();
    m.description_predicates =
        j.at("description_predicates").get<std::vector<std::string>>();
    m.person_type_iris = j.at("person_type_iris").get<std::vector<std::string>>();
    m.label_languages = j.at("label_languages").get<std::vector<std::string>>();
    m.max_name_tokens = j.at("max_name_tokens_for_permutation").get<uint64_t>();
    auto method = ParsePopularityMethod(j.at("popularity").get<std::string>());
    if (!method) throw IndexFormatError("unknown popularity method");
    m.popularity = *method;
    const nlohmann::json &c = j.at("counts");
    BundleCounts &k = m.counts;
    k.triples = c.at("triples").get<uint64_t>();
    k.skipped_lines = c.at("skipped_lines").get<uint64_t>();
    k.resources = c.at("resources").get<uint64_t>();
    k.edges = c.at("edges").get<uint64_t>();
    k.surface_records = c.at("surface_records").get<uint64_t>();
    k.person_name_records = c.at("person_name_records").get<uint64_t>();
    k.rare_reference_records = c.at("rare_reference_records").get<uint64_t>();
    k.surfaces = c.at("surfaces").get<uint64_t>();
    k.surface_postings = c.at("surface_postings").get<uint64_t>();
    k.context_documents = c.at("context_documents").get<uint64_t>();
    k.context_terms = c.at("context_terms").get<uint64_t>();
    k.acronyms = c.at("acronyms").get<uint64_t>();
    k.acronym_expansions = c.at("acronym_expansions").get<uint64_t>();
    k.typed_resources = c.at("typed_resources").get<uint64_t>();
  } catch (const nlohmann::json::exception &e) {
    throw IndexFormatError(std::string("manifest: ") + e.what());
  }
  return m;
}

void SaveIndexBundle(IndexBundle &bundle, const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir + ": " + ec.message());

  {
    internal::BinaryWriter w(kGraphMagic);
    w.PutStrings(bundle.graph.iris());
    w.PutVector(bundle.graph.out().offsets);
    w.PutVector(bundle.graph.out().targets);
    w.WriteFile(Path(dir, kGraphFile));
  }
  {
    internal::BinaryWriter w(kPopularityMagic);
    w.Put<uint8_t>(static_cast<uint8_t>(bundle.popularity.method));
    w.PutVector(bundle.popularity.scores);
    w.WriteFile(Path(dir, kPopularityFile));
  }
  {
    internal::BinaryWriter w(kTypesMagic);
    w.Put<uint64_t>(bundle.types.size());
    for (const auto &[iri, types] : bundle.types) {
      w.PutString(iri);
      w.PutStrings(std::vector<std::string>(types.begin(), types.end()));
    }
    w.WriteFile(Path(dir, kTypesFile));
  }
  bundle.surfaces.Save(Path(dir, kSurfaceFile));
  bundle.context.Save(Path(dir, kContextFile));
  {
    std::ofstream out(Path(dir, kAcronymFile), std::ios::binary);
    bundle.acronyms.Write(out);
    if (!out) throw Error("cannot write " + Path(dir, kAcronymFile));
  }
  {
    std::vector<std::string> words(bundle.stopwords.begin(),
                                   bundle.stopwords.end());
    std::sort(words.begin(), words.end());
    std::ofstream out(Path(dir, kStopwordFile), std::ios::binary);
    for (const std::string &w : words) out << w << '\n';
    if (!out) throw Error("cannot write " + Path(dir, kStopwordFile));
  }
  {
    std::ofstream out(Path(dir, kStemmerFile), std::ios::binary);
    auto it = bundle.stemmers.find(bundle.manifest.language);
    if (it != bundle.stemmers.end()) it->second.Write(out);
    if (!out) throw Error("cannot write " + Path(dir, kStemmerFile));
  }

  uint64_t digest = 14695981039346656037ull;
  for (const char *file : {kGraphFile, kPopularityFile, kTypesFile,
                           kSurfaceFile, kContextFile, kAcronymFile,
                           kStopwordFile, kStemmerFile}) {
    Fnv(file, &digest);
    Fnv(ReadWholeFile(Path(dir, file)), &digest);
  }
  bundle.manifest.index_version =
      bundle.manifest.kb_name + "-" + Hex(digest);

  std::ofstream out(Path(dir, kManifestFile), std::ios::binary);
  out << ManifestToJson(bundle.manifest);
  if (!out) throw Error("cannot write " + Path(dir, kManifestFile));
}

IndexBundle LoadIndexBundle(const std::string &dir) {
  IndexBundle bundle;
  bundle.manifest = ManifestFromJson(ReadWholeFile(Path(dir, kManifestFile)));
  {
    internal::BinaryReader r(Path(dir, kGraphFile), kGraphMagic);
    std::vector<std::string> iris = r.GetStrings();
    Csr out;
    out.offsets = r.GetVector<uint32_t>();
    out.targets = r.GetVector<NodeId>();
    r.ExpectEnd();
    bool ok = out.offsets.size() == iris.size() + 1 &&
              out.offsets.back() == out.targets.size() &&
              std::is_sorted(iris.begin(), iris.end());
    for (NodeId t : out.targets) ok = ok && t < iris.size();
    if (!ok) throw IndexFormatError(Path(dir, kGraphFile) + ": inconsistent");
    bundle.graph = KbGraph(std::move(iris), std::move(out));
  }
  std::size_t n = bundle.graph.num_nodes();
  {
    internal::BinaryReader r(Path(dir, kPopularityFile), kPopularityMagic);
    uint8_t method = r.Get<uint8_t>();
    bundle.popularity.method = static_cast<PopularityMethod>(method);
    bundle.popularity.scores = r.GetVector<double>();
    r.ExpectEnd();
    if (method > 1 || bundle.popularity.scores.size() != n) {
      throw IndexFormatError(Path(dir, kPopularityFile) + ": inconsistent");
    }
  }
  {
    internal::BinaryReader r(Path(dir, kTypesFile), kTypesMagic);
    uint64_t count = r.Get<uint64_t>();
    for (uint64_t i = 0; i < count; ++i) {
      std::string iri = r.GetString();
      std::vector<std::string> types = r.GetStrings();
      bundle.types[iri].insert(types.begin(), types.end());
    }
    r.ExpectEnd();
  }
  bundle.surfaces = SurfaceIndex::Load(Path(dir, kSurfaceFile), n);
  bundle.context = ContextIndex::Load(Path(dir, kContextFile), n);
  bundle.acronyms = AcronymIndex::LoadFile(Path(dir, kAcronymFile));
  bundle.stopwords = LoadStopwords(Path(dir, kStopwordFile));
  {
    SuffixStemmer stemmer = SuffixStemmer::LoadFile(Path(dir, kStemmerFile));
    if (!stemmer.rules().empty()) {
      bundle.stemmers.emplace(bundle.manifest.language, std::move(stemmer));
    }
  }
  if (bundle.manifest.counts.resources != n) {
    throw IndexFormatError(dir + ": manifest resource count mismatch");
  }
  return bundle;
}

void WriteDebugDump(const IndexBundle &bundle, std::ostream &out) {
  const KbGraph &g = bundle.graph;
  std::string manifest = ManifestToJson(bundle.manifest);
  out << "# manifest\n" << manifest;

  out << "# nodes: iri popularity\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out << g.Iri(v) << '\t' << FormatDouble(bundle.popularity.Score(v))
        << '\n';
  }
  out << "# edges\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId w : g.OutNeighbors(v)) {
      out << g.Iri(v) << '\t' << g.Iri(w) << '\n';
    }
  }
  out << "# surfaces: key iri principal source text\n";
  for (SurfaceId s = 0; s < bundle.surfaces.num_surfaces(); ++s) {
    for (const SurfacePosting &p : bundle.surfaces.Postings(s)) {
      out << bundle.surfaces.Key(s) << '\t' << g.Iri(p.resource) << '\t'
          << (p.is_principal ? 1 : 0) << '\t' << SurfaceSourceName(p.source)
          << '\t' << p.text << '\n';
    }
  }
  out << "# context: term df postings\n";
  const ContextIndex &ctx = bundle.context;
  for (std::size_t t = 0; t < ctx.num_terms(); ++t) {
    auto postings = ctx.Postings(t);
    out << ctx.terms()[t] << '\t' << postings.size();
    for (const ContextPosting &p : postings) {
      out << '\t' << g.Iri(p.resource) << ':' << p.tf;
    }
    out << '\n';
  }
  out << "# acronyms\n";
  bundle.acronyms.Write(out);
  out << "# types\n";
  for (const auto &[iri, types] : bundle.types) {
    for (const std::string &type : types) out << iri << '\t' << type << '\n';
  }
}

}  // namespace kblink
