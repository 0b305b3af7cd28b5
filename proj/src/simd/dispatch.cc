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

#include <atomic>
#include <cstdlib>

#include "kblink/simd/kernels.h"

namespace kblink::simd {
namespace {

bool CpuHasAvx2() {
#if defined(KBLINK_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa DetectIsa() {
  if (const char *env = std::getenv("KBLINK_SIMD")) {
    if (auto isa = ParseIsa(env); isa && IsaAvailable(*isa)) return *isa;
  }
  return CpuHasAvx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa> &ActiveSlot() {
  static std::atomic<Isa> active{DetectIsa()};
  return active;
}

}  // namespace

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return CpuHasAvx2();
  }
  return false;
}

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

std::optional<Isa> ParseIsa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  return std::nullopt;
}

Isa ActiveIsa() { return ActiveSlot().load(std::memory_order_relaxed); }

bool ForceIsa(Isa isa) {
  if (!IsaAvailable(isa)) return false;
  ActiveSlot().store(isa, std::memory_order_relaxed);
  return true;
}

const KernelTable &KernelsFor(Isa isa) {
#if defined(KBLINK_HAVE_AVX2)
  if (isa == Isa::kAvx2 && IsaAvailable(Isa::kAvx2)) return avx2::Kernels();
#endif
  return scalar::Kernels();
}

const KernelTable &ActiveKernels() { return KernelsFor(ActiveIsa()); }

}  // namespace kblink::simd
