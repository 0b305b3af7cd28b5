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

// Compiled with -mavx2; only reached through the runtime dispatcher after a
// CPU feature check.

#include <immintrin.h>

#include <cmath>

#include "kblink/simd/kernels.h"

namespace kblink::simd::avx2 {
namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

// Block-wise 4x4 all-pairs compare. Both inputs are strictly increasing, so
// every lane of `a` matches at most one lane of `b`.
std::size_t IntersectCountU64(const uint64_t *a, std::size_t na,
                              const uint64_t *b, std::size_t nb) {
  std::size_t i = 0, j = 0, count = 0;
  while (i + 4 <= na && j + 4 <= nb) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + j));
    __m256i m0 = _mm256_cmpeq_epi64(va, vb);
    __m256i m1 = _mm256_cmpeq_epi64(
        va, _mm256_permute4x64_epi64(vb, _MM_SHUFFLE(0, 3, 2, 1)));
    __m256i m2 = _mm256_cmpeq_epi64(
        va, _mm256_permute4x64_epi64(vb, _MM_SHUFFLE(1, 0, 3, 2)));
    __m256i m3 = _mm256_cmpeq_epi64(
        va, _mm256_permute4x64_epi64(vb, _MM_SHUFFLE(2, 1, 0, 3)));
    __m256i any = _mm256_or_si256(_mm256_or_si256(m0, m1),
                                  _mm256_or_si256(m2, m3));
    count += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_pd(_mm256_castsi256_pd(any))));
    uint64_t amax = a[i + 3];
    uint64_t bmax = b[j + 3];
    if (amax <= bmax) i += 4;
    if (bmax <= amax) j += 4;
  }
  while (i < na && j < nb) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

double Sum(const double *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = HorizontalSum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double SumSquares(const double *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double s = HorizontalSum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void Scale(double *x, std::size_t n, double factor) {
  __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), f));
  }
  for (; i < n; ++i) x[i] *= factor;
}

double L1Distance(const double *a, const double *b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double s = HorizontalSum(acc);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double GatherSum(const double *values, const uint32_t *index, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i idx =
        _mm_loadu_si128(reinterpret_cast<const __m128i *>(index + i));
    acc = _mm256_add_pd(acc, _mm256_i32gather_pd(values, idx, 8));
  }
  double s = HorizontalSum(acc);
  for (; i < n; ++i) s += values[index[i]];
  return s;
}

void Multiply(const double *a, const double *b, double *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                   _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

const KernelTable kTable = {
    IntersectCountU64, Sum, SumSquares, Scale, L1Distance, GatherSum, Multiply,
};

}  // namespace

const KernelTable &Kernels() { return kTable; }

}  // namespace kblink::simd::avx2
