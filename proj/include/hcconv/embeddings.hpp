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
#include <vector>

#include "hcconv/tensor.hpp"

namespace hcconv {

// Reinterprets a length-2^D vector as a D-dimensional hypercube. Because
// axis 1 is the most significant bit, the flat data is unchanged and vector
// position i sits at the multi-index given by the bits of i.
Hypercube embed_vector(std::span<const double> v);

// 1D convolution of two vectors where index addition is bitwise without
// carries: u[i] * v[j] accumulates at the ternary cell whose digits are the
// digit-wise sum of the bits of i and j.
class CarryFreeResult {
 public:
  explicit CarryFreeResult(ResultTensor tensor)
      : dim_(tensor.dim()), tensor_(std::move(tensor)) {}

  unsigned dim() const { return dim_; }
  const ResultTensor& tensor() const { return tensor_; }

 private:
  unsigned dim_;
  ResultTensor tensor_;
};

CarryFreeResult carry_free_convolve(std::span<const double> u,
                                    std::span<const double> v);

// Collapses every ternary cell (k_1..k_D) onto sum_a k_a 2^(D-a), which
// recovers the ordinary 1D convolution of length 2 * 2^D - 1.
std::vector<double> apply_carries(const CarryFreeResult& r);

struct PNormConfig {
  double p = 1.0;                // >= 1
  std::uint64_t value_bound = 1;  // only used by the exact-integer path
};

// Approximate max-convolution max_{i+j=k} x[i] y[j] through the p-norm
// (sum (x[i] y[j])^p)^(1/p). Inputs must be non-negative. For each cell the
// estimate e and the true maximum m satisfy m <= e <= m * n_k^(1/p), where
// n_k = 2^(number of digits of k equal to 1) is the number of contributing
// pairs. Throws OverflowError (carrying a suggested maximum p) when x^p or the
// convolution of the powers would leave the double range.
ResultTensor max_convolve_pnorm(const Hypercube& x, const Hypercube& y,
                                const PNormConfig& cfg);

// Number of (i, j) pairs contributing to a result cell.
std::uint64_t pair_count(std::uint64_t ternary_flat, unsigned dim);

// Relative error bound 1 - n^(-1/p) of a p-norm estimate, given the pair
// count n.
double pnorm_relative_bound(std::uint64_t pairs, double p);

// Smallest power of two p for which value_bound^2 * (2^(dim/p) - 1) < 0.5,
// i.e. rounding any p-norm estimate on [0, value_bound] integer inputs lands
// on the true maximum.
std::uint64_t exact_int_exponent(unsigned dim, std::uint64_t value_bound);

// Exact max-convolution of integer hypercubes with entries in
// [0, value_bound]: a p-norm estimate with p = exact_int_exponent(), rounded
// to the nearest integer. Powers are carried in arbitrary-precision integers
// so neither overflow nor the middle-slab subtraction loses anything. Throws
// InfeasibleError when the powered values would not fit in the memory cap.
ResultTensor max_convolve_exact_int(const Hypercube& x, const Hypercube& y,
                                    std::uint64_t value_bound);

}  // namespace hcconv
