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

#ifndef KBLINK_ACRONYM_INDEX_H_
#define KBLINK_ACRONYM_INDEX_H_

#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kblink {

// Acronym -> expansions, read from `ACRONYM<TAB>expansion` lines. Expansions
// keep file order; repeated lines are ignored.
class AcronymIndex {
 public:
  static AcronymIndex Parse(std::istream &in);
  static AcronymIndex LoadFile(const std::string &path);

  void Add(std::string_view acronym, std::string_view expansion);
  // Exact key lookup; empty for unknown acronyms.
  std::span<const std::string> Lookup(std::string_view acronym) const;

  std::size_t num_acronyms() const { return entries_.size(); }
  std::size_t num_expansions() const;
  void Write(std::ostream &out) const;

  bool operator==(const AcronymIndex &) const = default;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

}  // namespace kblink

#endif  // KBLINK_ACRONYM_INDEX_H_
