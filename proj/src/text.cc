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

#include "kblink/text.h"

#include <cstdio>

#include "kblink/unicode.h"

namespace kblink {

bool IsAcronym(std::string_view text) {
  std::u32string cps = unicode::Decode(text);
  if (cps.size() < 2 || cps.size() > 5) return false;
  for (char32_t c : cps) {
    if (!unicode::IsLetter(c) || !unicode::IsUpper(c)) return false;
  }
  return true;
}

std::string Normalize(std::string_view text) {
  std::u32string in = unicode::Decode(text);
  std::u32string spaced;
  spaced.reserve(in.size() + 4);
  for (std::size_t i = 0; i < in.size(); ++i) {
    char32_t c = in[i];
    if (i > 0 && unicode::IsLower(in[i - 1]) && unicode::IsUpper(c)) {
      spaced.push_back(U' ');
    }
    if (unicode::IsPunctuationOrSymbol(c) || c < 0x20) c = U' ';
    spaced.push_back(c);
  }

  std::string out;
  bool token_start = true;
  for (char32_t c : spaced) {
    if (unicode::IsSpace(c)) {
      token_start = true;
      continue;
    }
    if (token_start) {
      if (!out.empty()) out.push_back(' ');
      unicode::AppendUtf8(unicode::ToTitle(unicode::ToLower(c)), &out);
      token_start = false;
    } else {
      unicode::AppendUtf8(unicode::ToLower(c), &out);
    }
  }
  return out;
}

std::string SurfaceKey(std::string_view text) {
  return unicode::Lowercase(Normalize(text));
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t c : unicode::Decode(text)) {
    if (unicode::IsSpace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      unicode::AppendUtf8(c, &current);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string JoinTokens(const std::vector<std::string> &tokens,
                       std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(tokens[i]);
  }
  return out;
}

bool IsDigitsOnly(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string Slug(std::string_view text) {
  std::string joined = JoinTokens(SplitWhitespace(Normalize(text)), "_");
  std::string out;
  for (char c : joined) {
    auto u = static_cast<unsigned char>(c);
    bool safe = u >= 0x80 || (c >= 'a' && c <= 'z') ||
                (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_' || c == '-' || c == '.' || c == '~';
    if (safe) {
      out.push_back(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "%%%02X", u);
      out.append(buf);
    }
  }
  return out.empty() ? "mention" : out;
}

}  // namespace kblink
