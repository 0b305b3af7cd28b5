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

#include "kblink/acronym_index.h"

#include <algorithm>
#include <fstream>

#include "kblink/error.h"

namespace kblink {

AcronymIndex AcronymIndex::Parse(std::istream &in) {
  AcronymIndex index;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error("acronym line " + std::to_string(number) +
                  ": expected ACRONYM<TAB>expansion");
    }
    index.Add(std::string_view(line).substr(0, tab),
              std::string_view(line).substr(tab + 1));
  }
  return index;
}

AcronymIndex AcronymIndex::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open acronym file " + path);
  return Parse(in);
}

void AcronymIndex::Add(std::string_view acronym, std::string_view expansion) {
  auto it = entries_.find(acronym);
  if (it == entries_.end()) {
    it = entries_.emplace(std::string(acronym), std::vector<std::string>{})
             .first;
  }
  std::vector<std::string> &list = it->second;
  if (std::find(list.begin(), list.end(), expansion) == list.end()) {
    list.emplace_back(expansion);
  }
}

std::span<const std::string> AcronymIndex::Lookup(
    std::string_view acronym) const {
  auto it = entries_.find(acronym);
  if (it == entries_.end()) return {};
  return it->second;
}

std::size_t AcronymIndex::num_expansions() const {
  std::size_t n = 0;
  for (const auto &[key, list] : entries_) n += list.size();
  return n;
}

void AcronymIndex::Write(std::ostream &out) const {
  for (const auto &[key, list] : entries_) {
    for (const std::string &expansion : list) {
      out << key << '\t' << expansion << '\n';
    }
  }
}

}  // namespace kblink
