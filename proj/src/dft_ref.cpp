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


#include "hcconv/dft_ref.hpp"

#include <algorithm>
#include <cmath>

namespace hcconv {

namespace {

using cplx = std::complex<double>;

// -1/2 - i sqrt(3)/2
constexpr double kHalf = 0.5;
const double kSinThird = std::sqrt(3.0) / 2.0;

void check_same_dim(const Hypercube& x, const Hypercube& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
  }
}

void transform_axis(std::vector<cplx>& data, std::size_t stride,
                    const cplx w) {
  const cplx w2 = w * w;
  const std::size_t block = 3 * stride;
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      cplx& a = data[base + off];
      cplx& b = data[base + off + stride];
      cplx& c = data[base + off + 2 * stride];
      const cplx a0 = a, b0 = b, c0 = c;
      a = a0 + b0 + c0;
      b = a0 + w * b0 + w2 * c0;
      c = a0 + w2 * b0 + w * c0;
    }
  }
}

ComplexTensor product_spectrum(const Hypercube& x, const Hypercube& y) {
  check_same_dim(x, y);
  // Two complex tensors live at once.
  check_capacity(x.dim(), 2 * pow3(x.dim()) * sizeof(cplx));
  ComplexTensor fx = dft3_along_all_axes(pad_to_ternary(x),
                                         DftDirection::kForward);
  ComplexTensor fy = dft3_along_all_axes(pad_to_ternary(y),
                                         DftDirection::kForward);
  auto& a = fx.mutable_data();
  const auto& b = fy.data();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] *= b[k];
  return dft3_along_all_axes(std::move(fx), DftDirection::kInverse);
}

}  // namespace

ComplexTensor::ComplexTensor(unsigned dim, std::vector<cplx> data)
    : dim_(dim), data_(std::move(data)) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " outside [1, " + std::to_string(kMaxDim) + "]");
  }
  if (data_.size() != pow3(dim)) {
    throw ShapeError("complex tensor of dimension " + std::to_string(dim) +
                     " needs " + std::to_string(pow3(dim)) + " values, got " +
                     std::to_string(data_.size()));
  }
}

ComplexTensor pad_to_ternary(const Hypercube& x) {
  const unsigned dim = x.dim();
  check_capacity(dim, pow3(dim) * sizeof(cplx));
  std::vector<cplx> data(pow3(dim));
  for (std::size_t i = 0; i < x.size(); ++i) {
    data[spread_to_ternary(i, dim)] = cplx(x[i], 0.0);
  }
  return ComplexTensor(dim, std::move(data));
}

ComplexTensor dft3_along_all_axes(ComplexTensor t, DftDirection direction) {
  const cplx w = direction == DftDirection::kForward
                     ? cplx(-kHalf, -kSinThird)
                     : cplx(-kHalf, kSinThird);
  auto& data = t.mutable_data();
  // Axis D has stride 1, axis 1 has stride 3^(D-1).
  std::size_t stride = 1;
  for (unsigned axis = t.dim(); axis >= 1; --axis) {
    transform_axis(data, stride, w);
    stride *= 3;
  }
  if (direction == DftDirection::kInverse) {
    const double n = static_cast<double>(data.size());
    for (auto& v : data) v /= n;
  }
  return t;
}

ResultTensor dft_convolve(const Hypercube& x, const Hypercube& y) {
  ComplexTensor z = product_spectrum(x, y);
  std::vector<double> real(z.size());
  for (std::size_t k = 0; k < real.size(); ++k) real[k] = z.data()[k].real();
  return ResultTensor(z.dim(), std::move(real));
}

double dft_convolve_max_imag(const Hypercube& x, const Hypercube& y) {
  ComplexTensor z = product_spectrum(x, y);
  double worst = 0.0;
  for (const auto& v : z.data()) worst = std::max(worst, std::abs(v.imag()));
  return worst;
}

}  // namespace hcconv
