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


#include "hcconv/naive.hpp"

#include <vector>

namespace hcconv {

ResultTensor naive_convolve(const Hypercube& x, const Hypercube& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
  }
  const unsigned dim = x.dim();
  check_capacity(dim, pow3(dim) * sizeof(double));

  const std::size_t n = x.size();
  std::vector<std::uint64_t> spread(n);
  for (std::size_t i = 0; i < n; ++i) spread[i] = spread_to_ternary(i, dim);

  std::vector<double> z(pow3(dim), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const std::uint64_t base = spread[i];
    for (std::size_t j = 0; j < n; ++j) z[base + spread[j]] += xi * y[j];
  }
  return ResultTensor(dim, std::move(z));
}

}  // namespace hcconv
