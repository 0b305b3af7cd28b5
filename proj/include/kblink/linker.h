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

#ifndef KBLINK_LINKER_H_
#define KBLINK_LINKER_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "kblink/candidates.h"
#include "kblink/disambiguation.h"
#include "kblink/document.h"
#include "kblink/index_bundle.h"
#include "kblink/linker_config.h"

namespace kblink {

struct LinkOutput {
  std::vector<Assignment> assignments;      // one per mention, input order
  std::vector<CandidateResult> candidates;  // per mention (heads' results)
  std::vector<std::size_t> heads;           // co-reference head per mention
  DisambiguationGraph graph;
};

// Full online pipeline over an immutable index: candidate generation per
// co-reference group, graph construction, BFS expansion, scoring and
// selection. Stateless; safe to call from many threads.
class Linker {
 public:
  explicit Linker(const IndexBundle &index) : index_(index) {}

  LinkOutput Link(const Document &document, const LinkerConfig &config) const;

  const IndexBundle &index() const { return index_; }

 private:
  const IndexBundle &index_;
};

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Results must be written to per-index slots.
void ParallelFor(std::size_t n, std::size_t threads,
                 const std::function<void(std::size_t)> &fn);

}  // namespace kblink

#endif  // KBLINK_LINKER_H_
