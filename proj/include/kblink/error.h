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

#ifndef KBLINK_ERROR_H_
#define KBLINK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kblink {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Strict-mode N-Triples failure. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Raised by graph scoring on a graph without nodes.
class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("graph has no nodes") {}
};

// Corrupt, missing or version-mismatched index directory.
class IndexFormatError : public Error {
 public:
  using Error::Error;
};

// Error with a stable machine-readable code, used by the service and the
// evaluation harness (e.g. SPAN_INVALID, TYPES_UNAVAILABLE).
class CodedError : public Error {
 public:
  CodedError(std::string code, const std::string &message)
      : Error(message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace kblink

#endif  // KBLINK_ERROR_H_
