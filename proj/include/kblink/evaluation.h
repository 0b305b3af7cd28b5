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

#ifndef KBLINK_EVALUATION_H_
#define KBLINK_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/disambiguation.h"
#include "kblink/index_bundle.h"
#include "kblink/linker.h"
#include "kblink/linker_config.h"

namespace kblink {

// Gold marker for out-of-KB entities.
inline constexpr std::string_view kEmergentGold = "EMERGENT";

struct GoldMention {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string iri;  // kEmergentGold for the empty answer
};

struct GoldDocument {
  std::string text;
  std::vector<GoldMention> gold;
};

struct GoldDataset {
  std::string name;
  std::string language;
  std::vector<GoldDocument> documents;
};

// JSON lines: {"text": ..., "gold": [{"start", "end", "iri"}], "language"?}.
// A null or "EMERGENT" iri is the empty answer. Throws CodedError
// ("BAD_JSON", "SPAN_INVALID") with the line number in the message.
GoldDataset ParseGoldDataset(std::istream &in, std::string name);
GoldDataset LoadGoldDataset(const std::string &path);

// Trims whitespace and angle brackets and upper-cases percent escapes.
std::string NormalizeIri(std::string_view iri);

// One gold mention paired with the system answer for it.
struct MentionOutcome {
  std::string gold_iri;  // normalized; empty when gold is the empty answer
  std::string system_iri;  // normalized; empty when the system answered ε
  bool gold_emergent() const { return gold_iri.empty(); }
  bool system_emergent() const { return system_iri.empty(); }
};

struct Counts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;

  double precision() const;
  double recall() const;
  double f1() const;

  Counts &operator+=(const Counts &other);
  friend bool operator==(const Counts &, const Counts &) = default;
};

// Micro D2KB counting: equal IRIs are a tp; a wrong IRI is one fp and one
// fn; a system answer for gold ε is an fp; ε for a gold IRI is an fn; two ε
// answers count nothing.
Counts CountOutcome(const MentionOutcome &outcome);
Counts CountOutcomes(std::span<const MentionOutcome> outcomes);

// Pairs gold mentions with system assignments of the same document. Throws
// CodedError("MENTION_MISMATCH") when counts or spans differ.
std::vector<MentionOutcome> AlignOutcomes(
    const GoldDataset &gold,
    const std::vector<std::vector<Assignment>> &predicted);

struct FilterResult {
  Counts counts;
  std::size_t mentions = 0;
};

struct EvalReport {
  Counts counts;
  std::size_t mentions = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::map<std::string, FilterResult> per_filter;
};

EvalReport ScoreD2kb(const GoldDataset &gold,
                     const std::vector<std::vector<Assignment>> &predicted);
EvalReport ReportFor(std::span<const MentionOutcome> outcomes);

// Keeps mentions whose gold resource carries a person type. Throws
// CodedError("TYPES_UNAVAILABLE") when the index has no type table.
std::vector<MentionOutcome> FilterPersons(
    std::span<const MentionOutcome> outcomes, const IndexBundle &index);

enum class PopularityBin { kTop10, kMid10To55, kBottom55To100 };

std::string_view PopularityBinName(PopularityBin bin);
std::optional<PopularityBin> ParsePopularityBin(std::string_view name);

// 1-based rank of every node by popularity desc, then IRI asc.
std::vector<uint32_t> PopularityRanks(const PopularityTable &popularity);
// Bin of rank r out of n: r/n <= 10% top, <= 55% mid, else bottom.
PopularityBin BinOfRank(uint32_t rank, std::size_t n);

// Drops gold-ε mentions; gold resources absent from the KB fall in the
// bottom bin.
std::vector<MentionOutcome> FilterPopularityBin(
    std::span<const MentionOutcome> outcomes, const IndexBundle &index,
    PopularityBin bin);

// Links every document of `gold` at its gold spans.
std::vector<std::vector<Assignment>> LinkDataset(const Linker &linker,
                                                 const GoldDataset &gold,
                                                 const LinkerConfig &config,
                                                 std::size_t threads);

// Full run: link, score, and fill per_filter for the named filters
// ("persons", "pr10", "pr10-55", "pr55-100").
EvalReport Evaluate(const Linker &linker, const GoldDataset &gold,
                    const LinkerConfig &config,
                    std::span<const std::string> filters, std::size_t threads);

struct GridVariant {
  std::string name;
  ConfigOverrides overrides;
};

// One variant per line: `name key=value key=value ...`; '#' comments.
std::vector<GridVariant> ParseGrid(std::istream &in);
std::vector<GridVariant> LoadGrid(const std::string &path);

struct AblationRow {
  std::string name;
  LinkerConfig config;
  EvalReport report;
};

// Each variant's overrides sit between the config file and the CLI flags.
std::vector<AblationRow> RunAblation(const Linker &linker,
                                     const GoldDataset &gold,
                                     std::span<const GridVariant> grid,
                                     const ConfigOverrides &file_config,
                                     const ConfigOverrides &cli_config,
                                     std::size_t threads);

void WriteReportTable(std::span<const AblationRow> rows, std::ostream &out);
void WriteReportCsv(std::span<const AblationRow> rows, std::ostream &out);

}  // namespace kblink

#endif  // KBLINK_EVALUATION_H_
