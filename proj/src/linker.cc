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

#include "kblink/linker.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace kblink {

LinkOutput Linker::Link(const Document &document,
                        const LinkerConfig &config) const {
  const std::size_t n = document.mentions.size();
  LinkOutput out;
  std::vector<std::string> texts;
  texts.reserve(n);
  for (const Mention &m : document.mentions) texts.push_back(m.text);

  out.heads.resize(n);
  if (config.use_coreference) {
    out.heads = ResolveCoreferences(texts);
  } else {
    for (std::size_t i = 0; i < n; ++i) out.heads[i] = i;
  }

  out.candidates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.heads[i] != i) continue;
    std::vector<std::string> co_mentions;
    co_mentions.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) co_mentions.push_back(texts[j]);
    }
    out.candidates[i] = SearchCandidates(texts[i], co_mentions, index_, config);
  }
  std::vector<std::vector<NodeId>> candidate_ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.heads[i] != i) out.candidates[i] = out.candidates[out.heads[i]];
    for (const Candidate &c : out.candidates[i].candidates) {
      candidate_ids[i].push_back(c.resource);
    }
  }

  out.graph = BuildInitialGraph(std::move(candidate_ids));
  BfsExpand(out.graph, index_.graph, config.depth);
  ScoreGraph(out.graph, config);
  out.assignments =
      SelectAssignments(out.graph, document.mentions, index_.graph, config);
  for (std::size_t i = 0; i < n; ++i) {
    const Assignment &head = out.assignments[out.heads[i]];
    out.assignments[i].iri = head.iri;
    out.assignments[i].emergent = head.emergent;
    out.assignments[i].score = head.score;
  }
  return out;
}

void ParallelFor(std::size_t n, std::size_t threads,
                 const std::function<void(std::size_t)> &fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread &w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kblink
