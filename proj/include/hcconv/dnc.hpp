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

#include <cstdint>
#include <span>

#include "hcconv/tensor.hpp"

namespace hcconv {

/// Exact divide-and-conquer hypercube convolution.
///
/// Each level splits both operands along the leading axis and performs three
/// convolutions of dimension D - 1: the two outer slabs directly and the
/// middle slab as the convolution of the row marginals minus both outer
/// slabs. Runtime is O(3^D * D), i.e. O(N^log2(3) log N) for N = 2^D.
///
/// Besides the result, one workspace of 2 * 2^D values is allocated for the
/// marginals; the inputs are only read. The result equals naive_convolve()
/// bit-for-bit whenever every intermediate sum is exactly representable
/// (e.g. moderate integers).
ResultTensor dnc_convolve(const Hypercube& x, const Hypercube& y);

/// Same as dnc_convolve() and also reports the number of scalar multiplies
/// performed, which is 3^D.
ResultTensor dnc_convolve_counted(const Hypercube& x, const Hypercube& y,
                                  std::uint64_t& multiplies);

/// Number of doubles dnc_convolve_into() needs as workspace.
constexpr std::size_t dnc_workspace_size(unsigned dim) {
  return 2 * static_cast<std::size_t>(pow2(dim));
}

/// Raw kernel over caller-owned blocks: `dest` holds 3^dim cells, `x` and
/// `y` 2^dim cells, `workspace` at least dnc_workspace_size(dim) cells. No
/// allocation happens. Throws ContractError on size mismatch or overlapping
/// blocks.
void dnc_convolve_into(std::span<double> dest, std::span<const double> x,
                       std::span<const double> y, unsigned dim,
                       std::span<double> workspace);

/// As above with an internally allocated workspace.
void dnc_convolve_into(std::span<double> dest, std::span<const double> x,
                       std::span<const double> y, unsigned dim);

}  // namespace hcconv
