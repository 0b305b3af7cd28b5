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

// kblink command line: build-index, link, serve, eval.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kblink/error.h"
#include "kblink/evaluation.h"
#include "kblink/index_bundle.h"
#include "kblink/ingest.h"
#include "kblink/linker.h"
#include "kblink/linker_config.h"
#include "kblink/rdf.h"
#include "kblink/service.h"
#include "kblink/simd/kernels.h"
#include "kblink/wire.h"

namespace {

using namespace kblink;

// Linker flags; only the ones given on the command line become overrides.
struct LinkerFlags {
  std::string config_file;
  std::optional<double> sigma;
  std::optional<int> depth;
  std::optional<std::string> algorithm;
  bool no_popularity = false;
  bool no_acronyms = false;
  bool no_context = false;
  bool no_coref = false;
  std::optional<std::size_t> candidate_cap;
  std::optional<int> hits_iterations;
  std::optional<int> pagerank_iterations;
  std::optional<double> pagerank_alpha;
  std::optional<std::string> emergent_namespace;

  void Register(CLI::App *app) {
    app->add_option("--config", config_file, "Linker key=value config file");
    app->add_option("--sigma", sigma, "Trigram similarity threshold");
    app->add_option("--depth", depth, "BFS expansion depth");
    app->add_option("--algorithm", algorithm, "hits or pagerank");
    app->add_flag("--no-popularity", no_popularity, "Disable popularity sort");
    app->add_flag("--no-acronyms", no_acronyms, "Disable acronym expansion");
    app->add_flag("--no-context", no_context, "Disable context search");
    app->add_flag("--no-coref", no_coref, "Disable co-reference grouping");
    app->add_option("--candidate-cap", candidate_cap, "Candidates per mention");
    app->add_option("--hits-iterations", hits_iterations, "HITS iterations");
    app->add_option("--pagerank-iterations", pagerank_iterations, "PageRank iterations");
    app->add_option("--pagerank-alpha", pagerank_alpha, "PageRank teleport probability");
    app->add_option("--emergent-namespace", emergent_namespace, "IRI prefix for unlinked mentions");
  }

  ConfigOverrides File() const {
    return config_file.empty() ? ConfigOverrides{}
                               : ParseConfigFile(config_file);
  }

  ConfigOverrides Cli() const {
    ConfigOverrides o;
    auto num = [](double v) {
      std::ostringstream s;
      s.precision(17);
      s << v;
      return s.str();
    };
    if (sigma) o["sigma"] = num(*sigma);
    if (depth) o["depth"] = std::to_string(*depth);
    if (algorithm) o["algorithm"] = *algorithm;
    if (no_popularity) o["use_popularity"] = "false";
    if (no_acronyms) o["use_acronyms"] = "false";
    if (no_context) o["use_context_search"] = "false";
    if (no_coref) o["use_coreference"] = "false";
    if (candidate_cap) o["candidate_cap"] = std::to_string(*candidate_cap);
    if (hits_iterations) o["hits_iterations"] = std::to_string(*hits_iterations);
    if (pagerank_iterations) {
      o["pagerank_iterations"] = std::to_string(*pagerank_iterations);
    }
    if (pagerank_alpha) o["pagerank_alpha"] = num(*pagerank_alpha);
    if (emergent_namespace) o["emergent_namespace"] = *emergent_namespace;
    return o;
  }
};

std::string DefaultIndexDir() {
  const char *env = std::getenv("KBLINK_INDEX");
  return env ? env : "";
}

std::string RequireIndexDir(const std::string &flag) {
  if (!flag.empty()) return flag;
  throw Error("no index directory: pass --index or set KBLINK_INDEX");
}

int BuildIndex(const std::vector<std::string> &inputs,
               const std::string &config_path, const std::string &data_dir,
               const std::string &out_dir, bool strict,
               const std::string &dump_path) {
  IngestConfig config = config_path.empty()
                            ? DefaultIngestConfig(data_dir)
                            : LoadIngestConfig(config_path, data_dir);
  if (strict) config.parse_mode = ParseMode::kStrict;

  std::vector<Triple> triples;
  ParseStats total;
  for (const std::string &path : inputs) {
    ParseStats stats;
    std::vector<Triple> part = ParseNTriplesFile(path, config.parse_mode, &stats);
    triples.insert(triples.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    total.lines += stats.lines;
    total.triples += stats.triples;
    total.blank_node_lines += stats.blank_node_lines;
    total.malformed_lines += stats.malformed_lines;
  }
  if (total.skipped() > 0) {
    std::cerr << "skipped " << total.skipped() << " lines ("
              << total.malformed_lines << " malformed, "
              << total.blank_node_lines << " blank-node)\n";
  }
  IndexBundle bundle = BuildIndexBundle(triples, config, total);
  SaveIndexBundle(bundle, out_dir);
  const BundleCounts &c = bundle.manifest.counts;
  std::cout << "resources " << c.resources << "\n"
            << "edges " << c.edges << "\n"
            << "surfaces " << c.surfaces << "\n"
            << "surface_records " << c.surface_records << "\n"
            << "context_documents " << c.context_documents << "\n"
            << "acronyms " << c.acronyms << "\n"
            << "index_version " << bundle.manifest.index_version << "\n";
  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    WriteDebugDump(bundle, dump);
    if (!dump) throw Error("cannot write " + dump_path);
  }
  return 0;
}

int Link(const std::string &index_dir, const std::string &input,
         const std::string &output, const LinkerFlags &flags,
         std::size_t threads, const std::string &graph_dump) {
  IndexBundle index = LoadIndexBundle(index_dir);
  Linker linker(index);
  ConfigOverrides file = flags.File();
  ConfigOverrides cli = flags.Cli();
  ResolveConfig(file, {}, cli);  // fail fast on bad flags

  std::ifstream file_in;
  std::istream *in = &std::cin;
  if (input != "-") {
    file_in.open(input);
    if (!file_in) throw Error("cannot open " + input);
    in = &file_in;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(*in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      lines.push_back(line);
    }
  }

  std::vector<std::string> results(lines.size());
  std::vector<std::string> dumps(graph_dump.empty() ? 0 : lines.size());
  ParallelFor(lines.size(), threads, [&](std::size_t i) {
    try {
      LinkRequest request = ParseLinkRequest(lines[i]);
      if (!dumps.empty()) {
        LinkerConfig config = ResolveConfig(file, request.overrides, cli);
        Document doc = MakeDocument(request.text, request.mentions);
        LinkOutput out = linker.Link(doc, config);
        std::ostringstream s;
        s << "## document " << i + 1 << "\n";
        WriteGraphDump(out.graph, doc.mentions, index.graph, s);
        dumps[i] = s.str();
      }
      // timingMs stays 0 so repeated runs are byte-identical.
      results[i] =
          LinkResponseToJson(HandleLinkRequest(linker, request, file, cli));
    } catch (const CodedError &e) {
      results[i] = ErrorToJson(e.code(), e.what());
    }
  });

  std::ofstream file_out;
  std::ostream *out = &std::cout;
  if (!output.empty() && output != "-") {
    file_out.open(output);
    if (!file_out) throw Error("cannot write " + output);
    out = &file_out;
  }
  for (const std::string &r : results) *out << r << '\n';
  if (!graph_dump.empty()) {
    std::ofstream dump(graph_dump);
    for (const std::string &d : dumps) dump << d;
  }
  return 0;
}

LinkService *g_service = nullptr;

void HandleSignal(int) {
  if (g_service) g_service->Stop();
}

int Serve(const std::string &index_dir, const std::string &host, int port,
          const LinkerFlags &flags) {
  ConfigOverrides cli = flags.Cli();
  ConfigOverrides file = flags.File();
  ResolveConfig(file, {}, cli);
  LinkService service(file, cli);
  int bound = service.Bind(host, port);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  std::cerr << "listening on " << host << ":" << bound << "\n";

  // The index loads in the background; requests get 503 until it is ready.
  std::thread loader([&service, index_dir] {
    try {
      service.SetIndex(
          std::make_shared<const IndexBundle>(LoadIndexBundle(index_dir)));
      std::cerr << "index loaded from " << index_dir << "\n";
    } catch (const std::exception &e) {
      std::cerr << "index load failed: " << e.what() << "\n";
      service.Stop();
    }
  });
  g_service = &service;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  bool ok = service.Run();
  loader.join();
  g_service = nullptr;
  return ok && service.ready() ? 0 : 1;
}

int Eval(const std::string &index_dir, const std::string &dataset_path,
         const std::vector<std::string> &filters, const std::string &grid_path,
         const std::string &csv_path, const LinkerFlags &flags,
         std::size_t threads) {
  IndexBundle index = LoadIndexBundle(index_dir);
  Linker linker(index);
  GoldDataset dataset = LoadGoldDataset(dataset_path);
  ConfigOverrides file = flags.File();
  ConfigOverrides cli = flags.Cli();

  std::vector<AblationRow> rows;
  if (grid_path.empty()) {
    AblationRow row;
    row.name = "default";
    row.config = ResolveConfig(file, {}, cli);
    row.report = Evaluate(linker, dataset, row.config, filters, threads);
    rows.push_back(std::move(row));
  } else {
    std::vector<GridVariant> grid = LoadGrid(grid_path);
    rows = RunAblation(linker, dataset, grid, file, cli, threads);
    for (AblationRow &row : rows) {
      if (!filters.empty()) {
        row.report = Evaluate(linker, dataset, row.config, filters, threads);
      }
    }
  }
  std::cout << "dataset " << dataset.name << " (" << dataset.documents.size()
            << " documents)\n";
  WriteReportTable(rows, std::cout);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    WriteReportCsv(rows, csv);
    if (!csv) throw Error("cannot write " + csv_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"kblink: knowledge-base-agnostic entity linking"};
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "Kernel set: scalar or avx2 (default: best)");

  // build-index
  auto *build = app.add_subcommand("build-index", "Build the index bundle");
  std::vector<std::string> inputs;
  std::string ingest_config, out_dir, dump_path;
  std::string data_dir = KBLINK_DATA_DIR;
  bool strict = false;
  build->add_option("kb", inputs, "N-Triples files (.nt or .nt.gz)")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--ingest-config", ingest_config, "Ingest key=value file");
  build->add_option("--data-dir", data_dir, "Stopword/lexicon/stemmer data");
  build->add_option("--out", out_dir, "Output directory")->required();
  build->add_flag("--strict", strict, "Abort on the first malformed line");
  build->add_option("--dump", dump_path, "Write a plain-text debug dump");

  // link
  auto *link = app.add_subcommand("link", "Link documents (JSON lines)");
  std::string index_dir = DefaultIndexDir();
  std::string input, output, graph_dump;
  std::size_t threads = 1;
  LinkerFlags link_flags;
  link->add_option("--index", index_dir, "Index directory (env KBLINK_INDEX)");
  link->add_option("--input", input, "Documents, one JSON object per line")
      ->required();
  link->add_option("--output", output, "Output file (default stdout)");
  link->add_option("--threads", threads, "Worker threads, 0 = all cores");
  link->add_option("--graph-dump", graph_dump,
                   "Write disambiguation graphs as text");
  link_flags.Register(link);

  // serve
  auto *serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string host = "127.0.0.1";
  int port = 8080;
  LinkerFlags serve_flags;
  serve->add_option("--index", index_dir, "Index directory (env KBLINK_INDEX)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "TCP port, 0 picks a free one");
  serve_flags.Register(serve);

  // eval
  auto *eval = app.add_subcommand("eval", "Score D2KB against a gold dataset");
  std::string dataset, grid, csv;
  std::vector<std::string> filters;
  LinkerFlags eval_flags;
  eval->add_option("--index", index_dir, "Index directory (env KBLINK_INDEX)");
  eval->add_option("--dataset", dataset, "Gold JSON lines")->required();
  eval->add_option("--filter", filters, "persons, pr10, pr10-55, pr55-100");
  eval->add_option("--grid", grid, "Ablation grid file");
  eval->add_option("--csv", csv, "Write results as CSV");
  eval->add_option("--threads", threads, "Worker threads, 0 = all cores");
  eval_flags.Register(eval);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!simd.empty()) {
      auto isa = simd::ParseIsa(simd);
      if (!isa || !simd::ForceIsa(*isa)) {
        throw Error("kernel set unavailable: " + simd);
      }
    }
    if (build->parsed()) {
      return BuildIndex(inputs, ingest_config, data_dir, out_dir, strict,
                        dump_path);
    }
    if (link->parsed()) {
      return Link(RequireIndexDir(index_dir), input, output, link_flags,
                  threads, graph_dump);
    }
    if (serve->parsed()) {
      return Serve(RequireIndexDir(index_dir), host, port, serve_flags);
    }
    if (eval->parsed()) {
      return Eval(RequireIndexDir(index_dir), dataset, filters, grid, csv,
                  eval_flags, threads);
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
