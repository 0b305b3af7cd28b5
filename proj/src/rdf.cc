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

#include "kblink/rdf.h"

#include <zlib.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <streambuf>

#include "kblink/error.h"
#include "kblink/unicode.h"

namespace kblink {

Resource::Resource(std::string iri) : iri_(std::move(iri)) {
  if (iri_.empty()) throw Error("empty IRI");
  for (char c : iri_) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw Error("IRI contains whitespace: " + iri_);
    }
  }
}

namespace {

class LineParser {
 public:
  explicit LineParser(std::string_view line) : s_(line) {}

  LineKind Parse(Triple *triple, std::string *error) {
    SkipSpace();
    if (AtEnd() || Peek() == '#') return LineKind::kEmpty;

    bool blank = false;
    std::string subject;
    if (!ParseNode(&subject, &blank)) return Fail(error);
    if (!RequireSpace()) return Fail(error);

    std::string predicate;
    bool predicate_blank = false;
    if (Peek() != '<' || !ParseNode(&predicate, &predicate_blank)) {
      if (reason_.empty()) reason_ = "predicate must be an IRI";
      return Fail(error);
    }
    if (!RequireSpace()) return Fail(error);

    std::variant<Resource, Literal> object;
    if (Peek() == '"') {
      Literal literal;
      if (!ParseLiteral(&literal)) return Fail(error);
      object = std::move(literal);
    } else {
      std::string iri;
      if (!ParseNode(&iri, &blank)) return Fail(error);
      if (!blank) object = Resource(std::move(iri));
    }

    SkipSpace();
    if (AtEnd() || Peek() != '.') {
      reason_ = "expected '.'";
      return Fail(error);
    }
    ++pos_;
    SkipSpace();
    if (!AtEnd() && Peek() != '#') {
      reason_ = "trailing characters after '.'";
      return Fail(error);
    }

    if (blank) return LineKind::kBlankNode;
    triple->subject = Resource(std::move(subject));
    triple->predicate = Resource(std::move(predicate));
    triple->object = std::move(object);
    return LineKind::kTriple;
  }

 private:
  bool AtEnd() const { return pos_ >= s_.size(); }
  char Peek() const { return s_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r')) {
      ++pos_;
    }
  }

  bool RequireSpace() {
    std::size_t before = pos_;
    SkipSpace();
    if (pos_ == before && !AtEnd() && Peek() != '"' && Peek() != '<') {
      reason_ = "expected whitespace";
      return false;
    }
    if (AtEnd()) {
      reason_ = "unexpected end of line";
      return false;
    }
    return true;
  }

  LineKind Fail(std::string *error) {
    if (error != nullptr) {
      *error = reason_.empty() ? "malformed statement" : reason_;
    }
    return LineKind::kMalformed;
  }

  // IRI reference or blank node label.
  bool ParseNode(std::string *out, bool *blank) {
    if (AtEnd()) {
      reason_ = "unexpected end of line";
      return false;
    }
    if (Peek() == '_' && pos_ + 1 < s_.size() && s_[pos_ + 1] == ':') {
      pos_ += 2;
      std::size_t start = pos_;
      while (!AtEnd() && Peek() != ' ' && Peek() != '\t' && Peek() != '.') {
        ++pos_;
      }
      // A label may contain '.', but not as its last character.
      while (!AtEnd() && Peek() == '.' && pos_ + 1 < s_.size() &&
             s_[pos_ + 1] != ' ' && s_[pos_ + 1] != '\t') {
        ++pos_;
        while (!AtEnd() && Peek() != ' ' && Peek() != '\t' && Peek() != '.') {
          ++pos_;
        }
      }
      if (pos_ == start) {
        reason_ = "empty blank node label";
        return false;
      }
      *blank = true;
      return true;
    }
    if (Peek() != '<') {
      reason_ = "expected IRI or blank node";
      return false;
    }
    ++pos_;
    out->clear();
    while (!AtEnd() && Peek() != '>') {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`') {
        reason_ = "invalid character in IRI";
        return false;
      }
      if (c == '\\') {
        if (!ParseEscape(out, /*allow_short=*/false)) return false;
        continue;
      }
      out->push_back(c);
      ++pos_;
    }
    if (AtEnd()) {
      reason_ = "unterminated IRI";
      return false;
    }
    ++pos_;
    if (out->empty()) {
      reason_ = "empty IRI";
      return false;
    }
    if (out->find_first_of(" \t\n\r") != std::string::npos) {
      reason_ = "whitespace in IRI";
      return false;
    }
    return true;
  }

  bool ParseHex(std::size_t digits, std::string *out) {
    if (pos_ + digits > s_.size()) {
      reason_ = "truncated unicode escape";
      return false;
    }
    uint32_t value = 0;
    for (std::size_t k = 0; k < digits; ++k) {
      char h = s_[pos_ + k];
      value <<= 4;
      if (h >= '0' && h <= '9') {
        value |= static_cast<uint32_t>(h - '0');
      } else if (h >= 'a' && h <= 'f') {
        value |= static_cast<uint32_t>(h - 'a' + 10);
      } else if (h >= 'A' && h <= 'F') {
        value |= static_cast<uint32_t>(h - 'A' + 10);
      } else {
        reason_ = "invalid hex digit in escape";
        return false;
      }
    }
    if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      reason_ = "escape is not a Unicode scalar value";
      return false;
    }
    pos_ += digits;
    unicode::AppendUtf8(static_cast<char32_t>(value), out);
    return true;
  }

  bool ParseEscape(std::string *out, bool allow_short) {
    ++pos_;  // backslash
    if (AtEnd()) {
      reason_ = "dangling backslash";
      return false;
    }
    char e = Peek();
    ++pos_;
    if (e == 'u') return ParseHex(4, out);
    if (e == 'U') return ParseHex(8, out);
    if (allow_short) {
      switch (e) {
        case 't': out->push_back('\t'); return true;
        case 'b': out->push_back('\b'); return true;
        case 'n': out->push_back('\n'); return true;
        case 'r': out->push_back('\r'); return true;
        case 'f': out->push_back('\f'); return true;
        case '"': out->push_back('"'); return true;
        case '\'': out->push_back('\''); return true;
        case '\\': out->push_back('\\'); return true;
        default: break;
      }
    }
    reason_ = "invalid escape sequence";
    return false;
  }

  bool ParseLiteral(Literal *literal) {
    ++pos_;  // opening quote
    literal->text.clear();
    while (!AtEnd() && Peek() != '"') {
      if (Peek() == '\\') {
        if (!ParseEscape(&literal->text, /*allow_short=*/true)) return false;
        continue;
      }
      literal->text.push_back(Peek());
      ++pos_;
    }
    if (AtEnd()) {
      reason_ = "unterminated literal";
      return false;
    }
    ++pos_;
    if (!AtEnd() && Peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      bool subtag = false;
      while (!AtEnd()) {
        char c = Peek();
        bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        bool digit = c >= '0' && c <= '9';
        if (alpha || (subtag && digit)) {
          ++pos_;
        } else if (c == '-' && pos_ > start) {
          subtag = true;
          ++pos_;
        } else {
          break;
        }
      }
      if (pos_ == start || s_[pos_ - 1] == '-') {
        reason_ = "invalid language tag";
        return false;
      }
      literal->language = std::string(s_.substr(start, pos_ - start));
    } else if (pos_ + 1 < s_.size() && Peek() == '^' && s_[pos_ + 1] == '^') {
      pos_ += 2;
      std::string datatype;
      bool blank = false;
      if (AtEnd() || Peek() != '<' || !ParseNode(&datatype, &blank)) {
        if (reason_.empty()) reason_ = "datatype must be an IRI";
        return false;
      }
    }
    return true;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::string reason_;
};

// Minimal input buffer over zlib's gzFile; plain files pass through.
class GzStreamBuf : public std::streambuf {
 public:
  explicit GzStreamBuf(const std::string &path)
      : file_(gzopen(path.c_str(), "rb")) {
    if (file_ != nullptr) gzbuffer(file_, 1 << 17);
  }
  ~GzStreamBuf() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzStreamBuf(const GzStreamBuf &) = delete;
  GzStreamBuf &operator=(const GzStreamBuf &) = delete;

  bool ok() const { return file_ != nullptr; }

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
    if (n <= 0) return traits_type::eof();
    setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  std::array<char, 1 << 16> buffer_{};
};

void AppendEscapedIri(const std::string &iri, std::string *out) {
  out->push_back('<');
  for (char32_t c : unicode::Decode(iri)) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[11];
      std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(c));
      out->append(buf);
    } else {
      unicode::AppendUtf8(c, out);
    }
  }
  out->push_back('>');
}

void AppendEscapedLiteral(const std::string &text, std::string *out) {
  out->push_back('"');
  for (char c : text) {
    switch (c) {
      case '"': out->append("\\\""); break;
      case '\\': out->append("\\\\"); break;
      case '\n': out->append("\\n"); break;
      case '\r': out->append("\\r"); break;
      case '\t': out->append("\\t"); break;
      case '\b': out->append("\\b"); break;
      case '\f': out->append("\\f"); break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[7];
          std::snprintf(buf, sizeof(buf), "\\u%04X",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out->append(buf);
        } else {
          out->push_back(c);
        }
    }
  }
  out->push_back('"');
}

}  // namespace

LineKind ParseNTriplesLine(std::string_view line, Triple *triple,
                           std::string *error) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  LineParser parser(line);
  return parser.Parse(triple, error);
}

NTriplesReader::NTriplesReader(std::istream &in, ParseMode mode)
    : in_(in), mode_(mode) {}

bool NTriplesReader::Next(Triple *triple) {
  while (std::getline(in_, line_)) {
    ++stats_.lines;
    std::string reason;
    switch (ParseNTriplesLine(line_, triple, &reason)) {
      case LineKind::kTriple:
        ++stats_.triples;
        return true;
      case LineKind::kEmpty:
        break;
      case LineKind::kBlankNode:
        ++stats_.blank_node_lines;
        break;
      case LineKind::kMalformed:
        if (mode_ == ParseMode::kStrict) throw ParseError(stats_.lines, reason);
        ++stats_.malformed_lines;
        break;
    }
  }
  return false;
}

std::vector<Triple> ParseNTriples(std::istream &in, ParseMode mode,
                                  ParseStats *stats) {
  NTriplesReader reader(in, mode);
  std::vector<Triple> triples;
  Triple triple;
  while (reader.Next(&triple)) triples.push_back(std::move(triple));
  if (stats != nullptr) *stats = reader.stats();
  return triples;
}

std::vector<Triple> ParseNTriples(std::string_view text, ParseMode mode,
                                  ParseStats *stats) {
  std::istringstream in{std::string(text)};
  return ParseNTriples(in, mode, stats);
}

std::vector<Triple> ParseNTriplesFile(const std::string &path, ParseMode mode,
                                      ParseStats *stats) {
  GzStreamBuf buf(path);
  if (!buf.ok()) throw Error("cannot open " + path);
  std::istream in(&buf);
  return ParseNTriples(in, mode, stats);
}

std::string ToNTriples(const Triple &triple) {
  std::string out;
  AppendEscapedIri(triple.subject.iri(), &out);
  out.push_back(' ');
  AppendEscapedIri(triple.predicate.iri(), &out);
  out.push_back(' ');
  if (triple.HasResourceObject()) {
    AppendEscapedIri(triple.ObjectResource().iri(), &out);
  } else {
    const Literal &literal = triple.ObjectLiteral();
    AppendEscapedLiteral(literal.text, &out);
    if (literal.language) {
      out.push_back('@');
      out.append(*literal.language);
    }
  }
  out.append(" .");
  return out;
}

}  // namespace kblink
