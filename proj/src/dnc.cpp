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


#include "hcconv/dnc.hpp"

#include <algorithm>
#include <vector>

#include "dnc_kernel.hpp"

namespace hcconv {

namespace {

bool overlaps(const double* a, std::size_t na, const double* b,
              std::size_t nb) {
  return a < b + nb && b < a + na;
}

void check_blocks(std::span<double> dest, std::span<const double> x,
                  std::span<const double> y, unsigned dim,
                  std::span<double> workspace) {
  if (dim == 0 || dim > kMaxDim) {
    throw ContractError("dimension " + std::to_string(dim) +
                        " outside [1, " + std::to_string(kMaxDim) + "]");
  }
  if (dest.size() != pow3(dim) || x.size() != pow2(dim) ||
      y.size() != pow2(dim) || workspace.size() < dnc_workspace_size(dim)) {
    throw ContractError("block sizes do not match dimension " +
                        std::to_string(dim) + ": dest " +
                        std::to_string(dest.size()) + ", x " +
                        std::to_string(x.size()) + ", y " +
                        std::to_string(y.size()) + ", workspace " +
                        std::to_string(workspace.size()));
  }
  const double* d = dest.data();
  const double* w = workspace.data();
  if (overlaps(d, dest.size(), x.data(), x.size()) ||
      overlaps(d, dest.size(), y.data(), y.size()) ||
      overlaps(d, dest.size(), w, workspace.size()) ||
      overlaps(w, workspace.size(), x.data(), x.size()) ||
      overlaps(w, workspace.size(), y.data(), y.size())) {
    throw ContractError("dest, operands and workspace must not overlap");
  }
}

template <typename Counter>
void run(std::span<double> dest, std::span<const double> x,
         std::span<const double> y, unsigned dim, std::span<double> workspace,
         Counter& counter) {
  const std::size_t n = pow2(dim);
  detail::run_kernel(dim, dest.data(), x.data(), y.data(), workspace.data(),
                     workspace.data() + n, counter);
}

template <typename Counter>
ResultTensor convolve_alloc(const Hypercube& x, const Hypercube& y,
                            Counter& counter) {
  if (x.dim() != y.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
  }
  const unsigned dim = x.dim();
  check_capacity(dim, (pow3(dim) + dnc_workspace_size(dim)) * sizeof(double));

  std::vector<double> workspace(dnc_workspace_size(dim));
  std::vector<double> dest(pow3(dim));
  run(dest, x.data(), y.data(), dim, workspace, counter);
  return ResultTensor(dim, std::move(dest));
}

}  // namespace

ResultTensor dnc_convolve(const Hypercube& x, const Hypercube& y) {
  detail::NoCount counter;
  return convolve_alloc(x, y, counter);
}

ResultTensor dnc_convolve_counted(const Hypercube& x, const Hypercube& y,
                                  std::uint64_t& multiplies) {
  detail::MultiplyCounter counter;
  ResultTensor z = convolve_alloc(x, y, counter);
  multiplies = counter.count;
  return z;
}

void dnc_convolve_into(std::span<double> dest, std::span<const double> x,
                       std::span<const double> y, unsigned dim,
                       std::span<double> workspace) {
  check_blocks(dest, x, y, dim, workspace);
  detail::NoCount counter;
  run(dest, x, y, dim, workspace, counter);
}

void dnc_convolve_into(std::span<double> dest, std::span<const double> x,
                       std::span<const double> y, unsigned dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw ContractError("dimension " + std::to_string(dim) +
                        " outside [1, " + std::to_string(kMaxDim) + "]");
  }
  std::vector<double> workspace(dnc_workspace_size(dim));
  dnc_convolve_into(dest, x, y, dim, workspace);
}

}  // namespace hcconv
