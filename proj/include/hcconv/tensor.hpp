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
#include <iosfwd>
#include <span>
#include <vector>

#include "hcconv/errors.hpp"

namespace hcconv {

// Largest dimension any operation accepts. 3^20 doubles is already ~28 GB.
inline constexpr unsigned kMaxDim = 20;

// Process-wide allocation ceiling checked before any tensor allocation.
inline constexpr std::uint64_t kDefaultMemoryCapBytes = 8ull << 30;
void set_memory_cap_bytes(std::uint64_t bytes);
std::uint64_t memory_cap_bytes();

// Throws CapacityError if dim is outside [1, kMaxDim] or if `bytes` exceeds
// the configured cap.
void check_capacity(unsigned dim, std::uint64_t bytes);

constexpr std::uint64_t pow2(unsigned d) { return std::uint64_t{1} << d; }
constexpr std::uint64_t pow3(unsigned d) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < d; ++i) r *= 3;
  return r;
}

// A {0,1}^D tensor stored row-major: axis 1 is the most significant bit of
// the flat index.
class Hypercube {
 public:
  Hypercube(unsigned dim, std::vector<double> data);

  // All-zero hypercube of the given dimension.
  static Hypercube zeros(unsigned dim);

  unsigned dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  std::span<const double> data() const { return data_; }
  double operator[](std::size_t flat) const { return data_[flat]; }

  friend bool operator==(const Hypercube&, const Hypercube&) = default;

 private:
  unsigned dim_;
  std::vector<double> data_;
};

// A {0,1,2}^D tensor stored row-major, axis 1 most significant.
class ResultTensor {
 public:
  ResultTensor(unsigned dim, std::vector<double> data);

  unsigned dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }
  std::span<const double> data() const { return data_; }
  double operator[](std::size_t flat) const { return data_[flat]; }

  friend bool operator==(const ResultTensor&, const ResultTensor&) = default;

 private:
  unsigned dim_;
  std::vector<double> data_;
};

// Digits in {0,1,2}, axis 1 first.
struct TernaryIndex {
  std::vector<std::uint8_t> digits;

  friend bool operator==(const TernaryIndex&, const TernaryIndex&) = default;
};

std::uint64_t hypercube_flat_index(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> hypercube_unflatten(std::uint64_t flat, unsigned dim);

std::uint64_t ternary_flat_index(const TernaryIndex& t);
TernaryIndex ternary_unflatten(std::uint64_t flat, unsigned dim);

// Maps a binary flat index onto the ternary flat index with the same digits.
// The digit-wise sum of two bit vectors never carries in base 3, so
// spread(i) + spread(j) is the flat index of i + j.
std::uint64_t spread_to_ternary(std::uint64_t binary_flat, unsigned dim);

// HCUBE / TCUBE / VEC text formats. Doubles are written in shortest
// round-trip form.
Hypercube read_hypercube(std::istream& in);
ResultTensor read_result(std::istream& in);
std::vector<double> read_vec(std::istream& in);

void write_hypercube(const Hypercube& x, std::ostream& out);
void write_result(const ResultTensor& z, std::ostream& out);
void write_vec(std::span<const double> v, std::ostream& out);

}  // namespace hcconv
