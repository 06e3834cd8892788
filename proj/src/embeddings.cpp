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


#include "hcconv/embeddings.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "dnc_kernel.hpp"
#include "hcconv/dnc.hpp"

namespace hcconv {

namespace {

// Largest exponent exact_int_exponent() may return.
constexpr std::uint64_t kMaxExactExponent = std::uint64_t{1} << 30;

void check_same_dim(const Hypercube& x, const Hypercube& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
  }
}

void check_non_negative(const Hypercube& x, const char* name) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || std::isinf(x[i])) {
      throw DomainError(std::string(name) + "[" + std::to_string(i) +
                        "] = " + std::to_string(x[i]) +
                        " is not a finite non-negative value");
    }
  }
}

double max_entry(const Hypercube& x) {
  return *std::max_element(x.data().begin(), x.data().end());
}

bool is_power_of_two(double p) {
  if (p < 1.0 || p > 0x1p62 || p != std::floor(p)) return false;
  return std::has_single_bit(static_cast<std::uint64_t>(p));
}

double power(double v, double p) {
  if (v == 0.0) return 0.0;
  if (is_power_of_two(p)) {
    for (auto e = static_cast<std::uint64_t>(p); e > 1; e >>= 1) v *= v;
    return v;
  }
  return std::pow(v, p);
}

// Largest p keeping a * exp(p * log_base) below DBL_MAX, where `log_a` is
// log(a). Infinite when log_base <= 0.
double max_exponent(double log_base, double log_a) {
  if (log_base <= 0.0) return std::numeric_limits<double>::infinity();
  return (std::log(DBL_MAX) - log_a) / log_base;
}

}  // namespace

Hypercube embed_vector(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw ShapeError("vector length " + std::to_string(n) +
                     " is not a power of two >= 2");
  }
  const auto dim = static_cast<unsigned>(std::countr_zero(n));
  if (dim > kMaxDim) {
    throw CapacityError("vector length " + std::to_string(n) +
                        " exceeds the supported maximum dimension");
  }
  return Hypercube(dim, std::vector<double>(v.begin(), v.end()));
}

CarryFreeResult carry_free_convolve(std::span<const double> u,
                                    std::span<const double> v) {
  if (u.size() != v.size()) {
    throw ShapeError("vector lengths differ: " + std::to_string(u.size()) +
                     " vs " + std::to_string(v.size()));
  }
  return CarryFreeResult(dnc_convolve(embed_vector(u), embed_vector(v)));
}

std::vector<double> apply_carries(const CarryFreeResult& r) {
  const unsigned dim = r.dim();
  // carried[k] = sum_a digit_a(k) * 2^(D-a), built one axis at a time.
  std::vector<std::uint64_t> carried{0};
  for (unsigned d = 0; d < dim; ++d) {
    std::vector<std::uint64_t> next(carried.size() * 3);
    for (std::size_t t = 0; t < carried.size(); ++t) {
      for (std::uint64_t digit = 0; digit < 3; ++digit) {
        next[3 * t + digit] = 2 * carried[t] + digit;
      }
    }
    carried = std::move(next);
  }
  std::vector<double> out(2 * pow2(dim) - 1, 0.0);
  const auto cells = r.tensor().data();
  for (std::size_t k = 0; k < cells.size(); ++k) out[carried[k]] += cells[k];
  return out;
}

std::uint64_t pair_count(std::uint64_t ternary_flat, unsigned dim) {
  std::uint64_t n = 1;
  for (unsigned a = 0; a < dim; ++a) {
    if (ternary_flat % 3 == 1) n *= 2;
    ternary_flat /= 3;
  }
  return n;
}

double pnorm_relative_bound(std::uint64_t pairs, double p) {
  return -std::expm1(-std::log(static_cast<double>(pairs)) / p);
}

ResultTensor max_convolve_pnorm(const Hypercube& x, const Hypercube& y,
                                const PNormConfig& cfg) {
  check_same_dim(x, y);
  if (!(cfg.p >= 1.0) || std::isinf(cfg.p)) {
    throw DomainError("p must be a finite value >= 1, got " +
                      std::to_string(cfg.p));
  }
  check_non_negative(x, "x");
  check_non_negative(y, "y");
  const unsigned dim = x.dim();
  const double p = cfg.p;

  // Every value the kernel touches is bounded by (sum x^p) (sum y^p) <=
  // 4^D (max x max y)^p; the powered operands alone by 2^D max^p.
  const double log_mx = std::log(max_entry(x));
  const double log_my = std::log(max_entry(y));
  const double log2d = dim * std::log(2.0);
  const double limit = std::min({max_exponent(log_mx + log_my, 2 * log2d),
                                 max_exponent(log_mx, log2d),
                                 max_exponent(log_my, log2d)});
  if (p > limit) {
    throw OverflowError("p = " + std::to_string(p) +
                            " overflows the double range for these inputs; "
                            "use p <= " + std::to_string(limit),
                        limit);
  }

  if (p == 1.0) return dnc_convolve(x, y);

  const std::size_t n = x.size();
  check_capacity(dim, (pow3(dim) + 2 * n + dnc_workspace_size(dim)) *
                          sizeof(double));
  std::vector<double> scratch(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    scratch[i] = power(x[i], p);
    scratch[n + i] = power(y[i], p);
  }
  std::vector<double> dest(pow3(dim));
  dnc_convolve_into(dest, std::span(scratch).first(n),
                    std::span(scratch).subspan(n), dim);

  const double inv_p = 1.0 / p;
  for (double& c : dest) {
    // Cancellation in the middle slab can leave tiny negative residue.
    c = c > 0.0 ? std::pow(c, inv_p) : 0.0;
  }
  return ResultTensor(dim, std::move(dest));
}

std::uint64_t exact_int_exponent(unsigned dim, std::uint64_t value_bound) {
  if (value_bound == 0) throw DomainError("value_bound must be positive");
  const double b2 = static_cast<double>(value_bound) *
                    static_cast<double>(value_bound);
  // Need 2^(dim/p) < 1 + 0.5 / b2.
  const double p_min = dim / std::log2(1.0 + 0.5 / b2);
  auto satisfied = [&](double p) {
    return b2 * std::expm1(dim * std::log(2.0) / p) < 0.5;
  };
  if (!(p_min < static_cast<double>(kMaxExactExponent))) {
    throw InfeasibleError("value_bound " + std::to_string(value_bound) +
                              " needs p > " + std::to_string(p_min) +
                              ", above the limit " +
                              std::to_string(kMaxExactExponent),
                          static_cast<double>(kMaxExactExponent));
  }
  std::uint64_t p = std::bit_ceil(
      static_cast<std::uint64_t>(std::max(1.0, std::floor(p_min))));
  while (!satisfied(static_cast<double>(p))) p *= 2;
  if (p > kMaxExactExponent) {
    throw InfeasibleError("required p = " + std::to_string(p) +
                              " exceeds the limit " +
                              std::to_string(kMaxExactExponent),
                          static_cast<double>(kMaxExactExponent));
  }
  return p;
}

ResultTensor max_convolve_exact_int(const Hypercube& x, const Hypercube& y,
                                    std::uint64_t value_bound) {
  check_same_dim(x, y);
  if (value_bound == 0) throw DomainError("value_bound must be positive");
  for (const Hypercube* h : {&x, &y}) {
    for (std::size_t i = 0; i < h->size(); ++i) {
      const double v = (*h)[i];
      if (!(v >= 0.0) || v != std::floor(v) ||
          v > static_cast<double>(value_bound)) {
        throw DomainError((h == &x ? std::string("x[") : std::string("y[")) +
                          std::to_string(i) + "] = " + std::to_string(v) +
                          " is not an integer in [0, " +
                          std::to_string(value_bound) + "]");
      }
    }
  }
  const unsigned dim = x.dim();
  const std::uint64_t p = exact_int_exponent(dim, value_bound);

  // Each cell is at most 4^D value_bound^(2p).
  const double cell_bits =
      2.0 * static_cast<double>(p) * std::log2(static_cast<double>(value_bound)) +
      2.0 * dim + 64.0;
  const double total_bytes =
      static_cast<double>(pow3(dim) + 4 * pow2(dim)) * cell_bits / 8.0;
  if (total_bytes > static_cast<double>(memory_cap_bytes())) {
    throw InfeasibleError(
        "exact max-convolution with p = " + std::to_string(p) + " needs ~" +
            std::to_string(static_cast<std::uint64_t>(total_bytes)) +
            " bytes, above the memory cap",
        static_cast<double>(memory_cap_bytes()));
  }
  check_capacity(dim, (pow3(dim) + 2 * pow2(dim)) * sizeof(double));

  const std::size_t n = x.size();
  std::vector<mpz_class> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_ui_pow_ui(xs[i].get_mpz_t(), static_cast<unsigned long>(x[i]), p);
    mpz_ui_pow_ui(ys[i].get_mpz_t(), static_cast<unsigned long>(y[i]), p);
  }
  std::vector<mpz_class> dest(pow3(dim)), xw(n), yw(n);
  detail::NoCount counter;
  detail::run_kernel(dim, dest.data(), xs.data(), ys.data(), xw.data(),
                     yw.data(), counter);

  std::vector<double> out(dest.size());
  mpz_class root, lhs, rhs;
  for (std::size_t k = 0; k < dest.size(); ++k) {
    mpz_root(root.get_mpz_t(), dest[k].get_mpz_t(), p);
    // Round to nearest: bump when (root + 1/2)^p <= cell, i.e.
    // (2 root + 1)^p <= 2^p cell.
    lhs = 2 * root + 1;
    mpz_pow_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), p);
    mpz_mul_2exp(rhs.get_mpz_t(), dest[k].get_mpz_t(), p);
    if (lhs <= rhs) ++root;
    out[k] = root.get_d();
  }
  return ResultTensor(dim, std::move(out));
}

}  // namespace hcconv
