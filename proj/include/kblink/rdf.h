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

#ifndef KBLINK_RDF_H_
#define KBLINK_RDF_H_

#include <cstddef>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kblink {

// A KB resource identified by an absolute IRI (without angle brackets).
class Resource {
 public:
  Resource() = default;
  // Throws kblink::Error if the IRI is empty or contains whitespace.
  explicit Resource(std::string iri);

  const std::string &iri() const { return iri_; }

  friend bool operator==(const Resource &, const Resource &) = default;
  friend auto operator<=>(const Resource &, const Resource &) = default;

 private:
  std::string iri_;
};

struct Literal {
  std::string text;
  std::optional<std::string> language;

  friend bool operator==(const Literal &, const Literal &) = default;
  friend auto operator<=>(const Literal &, const Literal &) = default;
};

struct Triple {
  Resource subject;
  Resource predicate;
  std::variant<Resource, Literal> object;

  bool HasResourceObject() const {
    return std::holds_alternative<Resource>(object);
  }
  const Resource &ObjectResource() const { return std::get<Resource>(object); }
  const Literal &ObjectLiteral() const { return std::get<Literal>(object); }

  friend bool operator==(const Triple &, const Triple &) = default;
  friend auto operator<=>(const Triple &, const Triple &) = default;
};

enum class ParseMode { kLenient, kStrict };

struct ParseStats {
  std::size_t lines = 0;
  std::size_t triples = 0;
  std::size_t blank_node_lines = 0;  // legal but skipped statements
  std::size_t malformed_lines = 0;

  std::size_t skipped() const { return blank_node_lines + malformed_lines; }
};

// Outcome of parsing a single N-Triples line.
enum class LineKind { kTriple, kEmpty, kBlankNode, kMalformed };

// Parses one statement. On kMalformed, `error` (if given) receives the reason.
LineKind ParseNTriplesLine(std::string_view line, Triple *triple,
                           std::string *error = nullptr);

// Streaming reader over an N-Triples byte stream. In strict mode malformed
// lines throw ParseError; blank-node statements are skipped in both modes.
class NTriplesReader {
 public:
  NTriplesReader(std::istream &in, ParseMode mode);

  // Returns false at end of input.
  bool Next(Triple *triple);

  const ParseStats &stats() const { return stats_; }

 private:
  std::istream &in_;
  ParseMode mode_;
  ParseStats stats_;
  std::string line_;
};

std::vector<Triple> ParseNTriples(std::istream &in, ParseMode mode,
                                  ParseStats *stats = nullptr);
std::vector<Triple> ParseNTriples(std::string_view text, ParseMode mode,
                                  ParseStats *stats = nullptr);

// Reads a file, transparently decompressing gzip input.
std::vector<Triple> ParseNTriplesFile(const std::string &path, ParseMode mode,
                                      ParseStats *stats = nullptr);

// Serializes one triple as a canonical N-Triples line (no trailing newline).
std::string ToNTriples(const Triple &triple);

}  // namespace kblink

#endif  // KBLINK_RDF_H_
