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

#include <complex>
#include <vector>

#include "hcconv/tensor.hpp"

namespace hcconv {

// Numerical baseline: zero-pad to 3^D, transform every axis with a direct
// 3-point DFT, multiply pointwise, invert. Deliberately strided and
// cache-unfriendly; its error grows with D.

// 3^D complex cells, same ternary layout as ResultTensor.
class ComplexTensor {
 public:
  ComplexTensor(unsigned dim, std::vector<std::complex<double>> data);

  unsigned dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<std::complex<double>>& data() const { return data_; }
  std::vector<std::complex<double>>& mutable_data() { return data_; }

 private:
  unsigned dim_;
  std::vector<std::complex<double>> data_;
};

enum class DftDirection { kForward, kInverse };

ComplexTensor pad_to_ternary(const Hypercube& x);

// Forward uses w = exp(-2 pi i / 3); inverse uses conj(w) and divides the
// whole tensor by 3^D once at the end. Axes are processed from the last to
// the first.
ComplexTensor dft3_along_all_axes(ComplexTensor t, DftDirection direction);

ResultTensor dft_convolve(const Hypercube& x, const Hypercube& y);

// Largest |imag| left after the inverse transform of dft_convolve; a
// diagnostic, the main path discards it.
double dft_convolve_max_imag(const Hypercube& x, const Hypercube& y);

}  // namespace hcconv
