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

#include "kblink/evaluation.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "kblink/error.h"
#include "kblink/unicode.h"

namespace kblink {
namespace {

using nlohmann::json;

std::string Fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Signed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.4f", v);
  return buf;
}

}  // namespace

GoldDataset ParseGoldDataset(std::istream &in, std::string name) {
  GoldDataset dataset;
  dataset.name = std::move(name);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = "dataset line " + std::to_string(number) + ": ";
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("text") ||
        !j["text"].is_string()) {
      throw CodedError("BAD_JSON", where + "expected {\"text\", \"gold\"}");
    }
    GoldDocument doc;
    doc.text = j["text"].get<std::string>();
    if (j.contains("language") && j["language"].is_string() &&
        dataset.language.empty()) {
      dataset.language = j["language"].get<std::string>();
    }
    std::size_t length = unicode::CodepointCount(doc.text);
    if (j.contains("gold")) {
      if (!j["gold"].is_array()) throw CodedError("BAD_JSON", where + "gold");
      for (const json &g : j["gold"]) {
        if (!g.is_object() || !g.contains("start") || !g.contains("end") ||
            !g["start"].is_number_integer() || !g["end"].is_number_integer()) {
          throw CodedError("BAD_JSON", where + "gold mention needs start/end");
        }
        int64_t start = g["start"].get<int64_t>();
        int64_t end = g["end"].get<int64_t>();
        if (start < 0 || end <= start || static_cast<std::size_t>(end) > length) {
          throw CodedError("SPAN_INVALID", where + "gold span out of bounds");
        }
        GoldMention mention{static_cast<std::size_t>(start),
                            static_cast<std::size_t>(end),
                            std::string(kEmergentGold)};
        if (g.contains("iri") && g["iri"].is_string()) {
          mention.iri = g["iri"].get<std::string>();
        }
        doc.gold.push_back(std::move(mention));
      }
    }
    dataset.documents.push_back(std::move(doc));
  }
  return dataset;
}

GoldDataset LoadGoldDataset(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset " + path);
  return ParseGoldDataset(in, std::filesystem::path(path).stem().string());
}

std::string NormalizeIri(std::string_view iri) {
  std::size_t b = 0, e = iri.size();
  while (b < e && std::isspace(static_cast<unsigned char>(iri[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(iri[e - 1]))) --e;
  if (e - b >= 2 && iri[b] == '<' && iri[e - 1] == '>') {
    ++b;
    --e;
  }
  std::string out(iri.substr(b, e - b));
  for (std::size_t i = 0; i + 2 < out.size(); ++i) {
    if (out[i] == '%' && std::isxdigit(static_cast<unsigned char>(out[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(out[i + 2]))) {
      out[i + 1] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i + 1])));
      out[i + 2] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i + 2])));
    }
  }
  return out;
}

double Counts::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double Counts::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double Counts::f1() const {
  double p = precision(), r = recall();
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

Counts &Counts::operator+=(const Counts &other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

Counts CountOutcome(const MentionOutcome &o) {
  Counts c;
  if (o.gold_emergent()) {
    if (!o.system_emergent()) c.fp = 1;
  } else if (o.system_emergent()) {
    c.fn = 1;
  } else if (o.system_iri == o.gold_iri) {
    c.tp = 1;
  } else {
    c.fp = 1;
    c.fn = 1;
  }
  return c;
}

Counts CountOutcomes(std::span<const MentionOutcome> outcomes) {
  Counts total;
  for (const MentionOutcome &o : outcomes) total += CountOutcome(o);
  return total;
}

std::vector<MentionOutcome> AlignOutcomes(
    const GoldDataset &gold,
    const std::vector<std::vector<Assignment>> &predicted) {
  if (predicted.size() != gold.documents.size()) {
    throw CodedError("MENTION_MISMATCH", "document count differs from gold");
  }
  std::vector<MentionOutcome> outcomes;
  for (std::size_t d = 0; d < gold.documents.size(); ++d) {
    const auto &g = gold.documents[d].gold;
    const auto &p = predicted[d];
    if (g.size() != p.size()) {
      throw CodedError("MENTION_MISMATCH",
                       "document " + std::to_string(d) + ": mention count");
    }
    for (std::size_t m = 0; m < g.size(); ++m) {
      if (g[m].start != p[m].mention.start || g[m].end != p[m].mention.end) {
        throw CodedError("MENTION_MISMATCH",
                         "document " + std::to_string(d) + ": span " +
                             std::to_string(m) + " differs");
      }
      MentionOutcome o;
      if (g[m].iri != kEmergentGold) o.gold_iri = NormalizeIri(g[m].iri);
      if (!p[m].emergent) o.system_iri = NormalizeIri(p[m].iri);
      outcomes.push_back(std::move(o));
    }
  }
  return outcomes;
}

EvalReport ReportFor(std::span<const MentionOutcome> outcomes) {
  EvalReport report;
  report.counts = CountOutcomes(outcomes);
  report.mentions = outcomes.size();
  report.precision = report.counts.precision();
  report.recall = report.counts.recall();
  report.f1 = report.counts.f1();
  return report;
}

EvalReport ScoreD2kb(const GoldDataset &gold,
                     const std::vector<std::vector<Assignment>> &predicted) {
  return ReportFor(AlignOutcomes(gold, predicted));
}

std::vector<MentionOutcome> FilterPersons(
    std::span<const MentionOutcome> outcomes, const IndexBundle &index) {
  if (index.types.empty()) {
    throw CodedError("TYPES_UNAVAILABLE", "index has no type table");
  }
  std::vector<MentionOutcome> out;
  for (const MentionOutcome &o : outcomes) {
    if (o.gold_emergent()) continue;
    std::optional<NodeId> id = index.graph.Find(o.gold_iri);
    if (id && index.IsPerson(*id)) out.push_back(o);
  }
  return out;
}

std::string_view PopularityBinName(PopularityBin bin) {
  switch (bin) {
    case PopularityBin::kTop10:
      return "pr10";
    case PopularityBin::kMid10To55:
      return "pr10-55";
    case PopularityBin::kBottom55To100:
      return "pr55-100";
  }
  return "?";
}

std::optional<PopularityBin> ParsePopularityBin(std::string_view name) {
  if (name == "pr10") return PopularityBin::kTop10;
  if (name == "pr10-55") return PopularityBin::kMid10To55;
  if (name == "pr55-100") return PopularityBin::kBottom55To100;
  return std::nullopt;
}

std::vector<uint32_t> PopularityRanks(const PopularityTable &popularity) {
  std::vector<NodeId> order(popularity.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return popularity.scores[a] > popularity.scores[b];
  });
  std::vector<uint32_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<uint32_t>(i + 1);
  }
  return rank;
}

PopularityBin BinOfRank(uint32_t rank, std::size_t n) {
  // Integer comparisons of rank/n against 10/100 and 55/100.
  uint64_t r100 = static_cast<uint64_t>(rank) * 100;
  if (r100 <= 10 * static_cast<uint64_t>(n)) return PopularityBin::kTop10;
  if (r100 <= 55 * static_cast<uint64_t>(n)) return PopularityBin::kMid10To55;
  return PopularityBin::kBottom55To100;
}

std::vector<MentionOutcome> FilterPopularityBin(
    std::span<const MentionOutcome> outcomes, const IndexBundle &index,
    PopularityBin bin) {
  std::vector<uint32_t> ranks = PopularityRanks(index.popularity);
  std::vector<MentionOutcome> out;
  for (const MentionOutcome &o : outcomes) {
    if (o.gold_emergent()) continue;
    std::optional<NodeId> id = index.graph.Find(o.gold_iri);
    PopularityBin b = id ? BinOfRank(ranks[*id], ranks.size())
                         : PopularityBin::kBottom55To100;
    if (b == bin) out.push_back(o);
  }
  return out;
}

std::vector<std::vector<Assignment>> LinkDataset(const Linker &linker,
                                                 const GoldDataset &gold,
                                                 const LinkerConfig &config,
                                                 std::size_t threads) {
  std::vector<std::vector<Assignment>> predicted(gold.documents.size());
  ParallelFor(gold.documents.size(), threads, [&](std::size_t d) {
    const GoldDocument &g = gold.documents[d];
    std::vector<Span> spans;
    for (const GoldMention &m : g.gold) spans.push_back({m.start, m.end});
    predicted[d] = linker.Link(MakeDocument(g.text, spans), config).assignments;
  });
  return predicted;
}

EvalReport Evaluate(const Linker &linker, const GoldDataset &gold,
                    const LinkerConfig &config,
                    std::span<const std::string> filters,
                    std::size_t threads) {
  std::vector<MentionOutcome> outcomes =
      AlignOutcomes(gold, LinkDataset(linker, gold, config, threads));
  EvalReport report = ReportFor(outcomes);
  for (const std::string &filter : filters) {
    std::vector<MentionOutcome> kept;
    if (filter == "persons") {
      kept = FilterPersons(outcomes, linker.index());
    } else if (auto bin = ParsePopularityBin(filter)) {
      kept = FilterPopularityBin(outcomes, linker.index(), *bin);
    } else {
      throw CodedError("FILTER_UNKNOWN", "unknown filter " + filter);
    }
    report.per_filter[filter] = {CountOutcomes(kept), kept.size()};
  }
  return report;
}

std::vector<GridVariant> ParseGrid(std::istream &in) {
  std::vector<GridVariant> grid;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string word;
    if (!(words >> word) || word[0] == '#') continue;
    GridVariant variant{word, {}};
    while (words >> word) {
      std::size_t eq = word.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw CodedError("CONFIG_INVALID", "grid line " +
                                               std::to_string(number) +
                                               ": expected key=value");
      }
      variant.overrides[word.substr(0, eq)] = word.substr(eq + 1);
    }
    LinkerConfig probe;
    ApplyOverrides(probe, variant.overrides);
    grid.push_back(std::move(variant));
  }
  return grid;
}

std::vector<GridVariant> LoadGrid(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grid " + path);
  return ParseGrid(in);
}

std::vector<AblationRow> RunAblation(const Linker &linker,
                                     const GoldDataset &gold,
                                     std::span<const GridVariant> grid,
                                     const ConfigOverrides &file_config,
                                     const ConfigOverrides &cli_config,
                                     std::size_t threads) {
  std::vector<AblationRow> rows;
  for (const GridVariant &variant : grid) {
    AblationRow row;
    row.name = variant.name;
    row.config = ResolveConfig(file_config, variant.overrides, cli_config);
    row.report = Evaluate(linker, gold, row.config, {}, threads);
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteReportTable(std::span<const AblationRow> rows, std::ostream &out) {
  std::size_t width = 7;
  for (const AblationRow &row : rows) width = std::max(width, row.name.size());
  auto pad = [&](const std::string &s) {
    return s + std::string(width - std::min(width, s.size()), ' ');
  };
  out << pad("variant") << "  precision  recall     f1         tp     fp     fn"
      << "     delta_f1\n";
  double base = rows.empty() ? 0.0 : rows.front().report.f1;
  for (const AblationRow &row : rows) {
    const EvalReport &r = row.report;
    char counts[64];
    std::snprintf(counts, sizeof(counts), "%6llu %6llu %6llu",
                  static_cast<unsigned long long>(r.counts.tp),
                  static_cast<unsigned long long>(r.counts.fp),
                  static_cast<unsigned long long>(r.counts.fn));
    out << pad(row.name) << "  " << Fixed(r.precision) << "     "
        << Fixed(r.recall) << "     " << Fixed(r.f1) << "     " << counts
        << "     " << Signed(r.f1 - base) << '\n';
    for (const auto &[name, f] : r.per_filter) {
      out << pad("  " + name) << "  " << Fixed(f.counts.precision()) << "     "
          << Fixed(f.counts.recall()) << "     " << Fixed(f.counts.f1())
          << "     (" << f.mentions << " mentions)\n";
    }
  }
}

void WriteReportCsv(std::span<const AblationRow> rows, std::ostream &out) {
  out << "variant,algorithm,sigma,depth,use_popularity,use_acronyms,"
         "use_context_search,use_coreference,precision,recall,f1,tp,fp,fn,"
         "delta_f1,filter,filter_f1,filter_mentions\n";
  double base = rows.empty() ? 0.0 : rows.front().report.f1;
  for (const AblationRow &row : rows) {
    const LinkerConfig &c = row.config;
    const EvalReport &r = row.report;
    std::ostringstream prefix;
    prefix << row.name << ',' << AlgorithmName(c.algorithm) << ','
           << c.sigma << ',' << c.depth << ',' << c.use_popularity << ','
           << c.use_acronyms << ',' << c.use_context_search << ','
           << c.use_coreference << ',' << Fixed(r.precision, 6) << ','
           << Fixed(r.recall, 6) << ',' << Fixed(r.f1, 6) << ','
           << r.counts.tp << ',' << r.counts.fp << ',' << r.counts.fn << ','
           << Fixed(r.f1 - base, 6);
    out << prefix.str() << ",,,\n";
    for (const auto &[name, f] : r.per_filter) {
      out << prefix.str() << ',' << name << ',' << Fixed(f.counts.f1(), 6)
          << ',' << f.mentions << '\n';
    }
  }
}

}  // namespace kblink
