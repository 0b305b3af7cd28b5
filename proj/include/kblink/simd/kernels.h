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

#ifndef KBLINK_SIMD_KERNELS_H_
#define KBLINK_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Data-parallel inner loops used by trigram matching and the iterative graph
// scorers. Every kernel has a scalar reference implementation; wider variants
// are selected once at startup from the CPU features and must agree with the
// scalar kernels (exactly for integer kernels, to rounding for the
// floating-point reductions).
namespace kblink::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  // Number of common elements of two strictly increasing sequences.
  std::size_t (*intersect_count_u64)(const uint64_t *a, std::size_t na,
                                     const uint64_t *b, std::size_t nb);
  double (*sum)(const double *x, std::size_t n);
  double (*sum_squares)(const double *x, std::size_t n);
  void (*scale)(double *x, std::size_t n, double factor);
  // sum_i |a_i - b_i|
  double (*l1_distance)(const double *a, const double *b, std::size_t n);
  // sum_i values[index_i]
  double (*gather_sum)(const double *values, const uint32_t *index,
                       std::size_t n);
  // out_i = a_i * b_i
  void (*multiply)(const double *a, const double *b, double *out,
                   std::size_t n);
};

namespace scalar {
const KernelTable &Kernels();
}
namespace avx2 {
// Only valid when IsaAvailable(Isa::kAvx2).
const KernelTable &Kernels();
}

bool IsaAvailable(Isa isa);
std::string_view IsaName(Isa isa);
std::optional<Isa> ParseIsa(std::string_view name);

// Best available ISA, unless KBLINK_SIMD=scalar|avx2 pins one.
Isa ActiveIsa();

// Pins the dispatch target; unavailable targets are ignored and false is
// returned. Intended for tests and benchmarks.
bool ForceIsa(Isa isa);

const KernelTable &ActiveKernels();
const KernelTable &KernelsFor(Isa isa);

inline std::size_t IntersectCount(std::span<const uint64_t> a,
                                  std::span<const uint64_t> b) {
  return ActiveKernels().intersect_count_u64(a.data(), a.size(), b.data(),
                                             b.size());
}
inline double Sum(std::span<const double> x) {
  return ActiveKernels().sum(x.data(), x.size());
}
inline double SumSquares(std::span<const double> x) {
  return ActiveKernels().sum_squares(x.data(), x.size());
}
inline void Scale(std::span<double> x, double factor) {
  ActiveKernels().scale(x.data(), x.size(), factor);
}
inline double L1Distance(std::span<const double> a, std::span<const double> b) {
  return ActiveKernels().l1_distance(a.data(), b.data(), a.size());
}
inline double GatherSum(std::span<const double> values,
                        std::span<const uint32_t> index) {
  return ActiveKernels().gather_sum(values.data(), index.data(), index.size());
}
inline void Multiply(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
  ActiveKernels().multiply(a.data(), b.data(), out.data(), out.size());
}

}  // namespace kblink::simd

#endif  // KBLINK_SIMD_KERNELS_H_
