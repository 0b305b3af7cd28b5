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

#include <cmath>

#include "kblink/simd/kernels.h"

namespace kblink::simd::scalar {
namespace {

std::size_t IntersectCountU64(const uint64_t *a, std::size_t na,
                              const uint64_t *b, std::size_t nb) {
  std::size_t i = 0, j = 0, count = 0;
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
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double SumSquares(const double *x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void Scale(double *x, std::size_t n, double factor) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= factor;
}

double L1Distance(const double *a, const double *b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double GatherSum(const double *values, const uint32_t *index, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += values[index[i]];
  return s;
}

void Multiply(const double *a, const double *b, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

const KernelTable kTable = {
    IntersectCountU64, Sum, SumSquares, Scale, L1Distance, GatherSum, Multiply,
};

}  // namespace

const KernelTable &Kernels() { return kTable; }

}  // namespace kblink::simd::scalar
