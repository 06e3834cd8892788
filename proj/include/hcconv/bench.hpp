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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcconv/tensor.hpp"

namespace hcconv {

enum class ConvMethod { kNaive, kDnc, kDft };

std::string_view method_name(ConvMethod m);
// Accepts "naive", "dnc" and "dft" (also "dft_ref"); nullopt otherwise.
std::optional<ConvMethod> parse_method(std::string_view name);

// Runs the selected engine.
ResultTensor convolve(ConvMethod m, const Hypercube& x, const Hypercube& y);

// Bytes an engine allocates for a dimension-`dim` convolution.
std::uint64_t method_memory_bytes(ConvMethod m, unsigned dim);

enum class BenchStatus { kOk, kSkippedMemory, kSkippedPracticality };

std::string_view status_name(BenchStatus s);

struct BenchReport {
  ConvMethod method = ConvMethod::kDnc;
  unsigned dim = 1;
  unsigned runs = 1;
  double median_seconds = 0.0;
  double rel_error_at_min = 0.0;
  std::uint64_t peak_result_cells = 0;
  BenchStatus status = BenchStatus::kOk;
};

// Accuracy probe: both operands have flat data 1, 2, ..., 2^D, so the
// smallest result cell is exactly 1 at the all-zero index.
std::pair<Hypercube, Hypercube> make_probe(unsigned dim);

// |z[0] - 1|
double rel_error_at_smallest(const ResultTensor& z);

struct BenchOptions {
  // The naive engine is skipped above this dimension.
  unsigned naive_max_dim = 13;
};

// For each (method, dim): one untimed warmup, then `runs` timed executions of
// the convolution alone. Cells that would exceed the memory cap or the naive
// practicality threshold produce skip records. Strictly sequential.
std::vector<BenchReport> run_benchmark(const std::vector<ConvMethod>& methods,
                                       unsigned dim_min, unsigned dim_max,
                                       unsigned runs,
                                       const BenchOptions& options = {});

// median(D) / median(D - 1) for consecutive ok dnc reports. Throws
// ContractError on fewer than two reports, gaps, other methods or skips.
std::vector<double> scaling_check(const std::vector<BenchReport>& reports);

// True when every ratio lies in [lo, hi].
bool ratios_within(const std::vector<double>& ratios, double lo = 2.3,
                   double hi = 4.0);

// CSV with header method,dim,runs,median_seconds,rel_error_at_min,status.
// Skip rows leave the two numeric fields empty.
void write_report_csv(const std::vector<BenchReport>& reports,
                      std::ostream& out);
std::vector<BenchReport> read_report_csv(std::istream& in);

}  // namespace hcconv
