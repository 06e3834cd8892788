// Copyright 2026 The hcconv Authors.
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "hcconv/tensor.hpp"

namespace hcconv::detail {

struct NoCount {
  void multiplies(std::uint64_t) {}
};

struct MultiplyCounter {
  std::uint64_t count = 0;
  void multiplies(std::uint64_t n) { count += n; }
};

// Three-way recursion over the leading axis. `dest` holds 3^D cells, `x` and
// `y` hold 2^D cells each and are only read. The row marginals x[0] + x[1]
// and y[0] + y[1] of each level go to the front of `xw` / `yw`, and deeper
// levels use the rest, so each workspace needs 2^D - 1 cells. Every step pairs
// contiguous blocks, a half of each operand against a third of dest.
//
// The marginals cannot be formed in place over x[0]: the two outer
// sub-convolutions would already have overwritten the sub-blocks they read.
//
// T needs +, -= and *; the result is exact whenever (a + b) - a == b holds for
// every intermediate value, which is always true for integer types.
template <typename T, unsigned D>
struct HypercubeKernel {
  template <typename Counter>
  static void apply(T* __restrict__ dest, const T* __restrict__ x,
                    const T* __restrict__ y, T* __restrict__ xw,
                    T* __restrict__ yw, Counter& counter) {
    constexpr std::size_t half = std::size_t{1} << (D - 1);
    constexpr std::size_t third = pow3(D - 1);

    // dest[0] = x[0] * y[0]
    HypercubeKernel<T, D - 1>::apply(dest, x, y, xw, yw, counter);
    // dest[2] = x[1] * y[1]
    HypercubeKernel<T, D - 1>::apply(dest + 2 * third, x + half, y + half, xw,
                                     yw, counter);

    for (std::size_t k = 0; k < half; ++k) xw[k] = x[k] + x[k + half];
    for (std::size_t k = 0; k < half; ++k) yw[k] = y[k] + y[k + half];

    // dest[1] = (x[0] + x[1]) * (y[0] + y[1]) - dest[0] - dest[2]
    T* middle = dest + third;
    HypercubeKernel<T, D - 1>::apply(middle, xw, yw, xw + half, yw + half,
                                     counter);
    for (std::size_t k = 0; k < third; ++k) middle[k] -= dest[k];
    for (std::size_t k = 0; k < third; ++k) middle[k] -= dest[k + 2 * third];
  }
};

template <typename T>
struct HypercubeKernel<T, 1> {
  template <typename Counter>
  static void apply(T* __restrict__ dest, const T* __restrict__ x,
                    const T* __restrict__ y, T*, T*, Counter& counter) {
    dest[0] = x[0] * y[0];
    dest[1] = x[1] * y[0] + x[0] * y[1];
    dest[2] = x[1] * y[1];
    counter.multiplies(3);
  }
};

template <typename T, typename Counter, unsigned... Ds>
void dispatch_kernel(unsigned dim, T* dest, const T* x, const T* y, T* xw,
                     T* yw, Counter& counter,
                     std::integer_sequence<unsigned, Ds...>) {
  // Ds runs 0..kMaxDim-1; entry d handles dimension d + 1.
  (void)((dim == Ds + 1 &&
          (HypercubeKernel<T, Ds + 1>::apply(dest, x, y, xw, yw, counter),
           true)) ||
         ...);
}

// Runtime entry point; no size checks, callers validate. xw and yw need
// 2^dim - 1 cells each.
template <typename T, typename Counter>
void run_kernel(unsigned dim, T* dest, const T* x, const T* y, T* xw, T* yw,
                Counter& counter) {
  dispatch_kernel(dim, dest, x, y, xw, yw, counter,
                  std::make_integer_sequence<unsigned, kMaxDim>{});
}

}  // namespace hcconv::detail
