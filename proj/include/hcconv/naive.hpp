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

#include "hcconv/tensor.hpp"

namespace hcconv {

// Above this dimension the quadratic oracle takes seconds to minutes; callers
// may warn but it still runs.
inline constexpr unsigned kNaivePracticalMaxDim = 13;

// Cartesian-product convolution: every x[i] * y[j] lands on the ternary cell
// i + j. Accumulation runs over i in the outer loop and j in the inner loop,
// so the result is reproducible bit-for-bit.
ResultTensor naive_convolve(const Hypercube& x, const Hypercube& y);

}  // namespace hcconv
