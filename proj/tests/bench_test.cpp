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


#include "hcconv/bench.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "hcconv/dnc.hpp"
#include "hcconv/naive.hpp"

namespace hcconv {
namespace {

TEST(MakeProbe, FlatRamp) {
  const auto [x1, y1] = make_probe(1);
  EXPECT_EQ(x1, Hypercube(1, {1, 2}));
  EXPECT_EQ(y1, Hypercube(1, {1, 2}));
  const auto [x2, y2] = make_probe(2);
  EXPECT_EQ(x2, Hypercube(2, {1, 2, 3, 4}));
  EXPECT_EQ(y2, x2);
  EXPECT_THROW(make_probe(0), DimensionError);
}

TEST(RelErrorAtSmallest, Definition) {
  EXPECT_EQ(rel_error_at_smallest(ResultTensor(1, {1.0, 5, 6})), 0.0);
  EXPECT_NEAR(rel_error_at_smallest(ResultTensor(1, {1.00000001, 5, 6})), 1e-8,
              1e-15);
  EXPECT_EQ(rel_error_at_smallest(ResultTensor(1, {0.5, 5, 6})), 0.5);
}

TEST(RunBenchmark, DncProbeIsExact) {
  const auto reports = run_benchmark({ConvMethod::kDnc}, 11, 11, 3);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].status, BenchStatus::kOk);
  EXPECT_EQ(reports[0].rel_error_at_min, 0.0);
  EXPECT_EQ(reports[0].runs, 3u);
  EXPECT_GE(reports[0].median_seconds, 0.0);
  EXPECT_EQ(reports[0].peak_result_cells, pow3(11));
}

TEST(RunBenchmark, DftProbeHasError) {
  const auto reports = run_benchmark({ConvMethod::kDft}, 11, 11, 1);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_GT(reports[0].rel_error_at_min, 0.0);
}

TEST(RunBenchmark, NaiveAndDncAgreeOnProbe) {
  const auto reports =
      run_benchmark({ConvMethod::kNaive, ConvMethod::kDnc}, 1, 8, 1);
  ASSERT_EQ(reports.size(), 16u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, BenchStatus::kOk);
    EXPECT_EQ(r.rel_error_at_min, 0.0);
  }
  for (unsigned dim = 1; dim <= 8; ++dim) {
    const auto [x, y] = make_probe(dim);
    EXPECT_EQ(naive_convolve(x, y), dnc_convolve(x, y)) << "dim " << dim;
  }
}

TEST(RunBenchmark, NaiveSlowerThanDncFromD8) {
  const auto reports =
      run_benchmark({ConvMethod::kNaive, ConvMethod::kDnc}, 8, 11, 3);
  ASSERT_EQ(reports.size(), 8u);
  for (unsigned i = 0; i < 4; ++i) {
    const BenchReport& naive = reports[i];
    const BenchReport& dnc = reports[i + 4];
    ASSERT_EQ(naive.dim, dnc.dim);
    EXPECT_GT(naive.median_seconds, dnc.median_seconds) << "dim " << dnc.dim;
  }
}

// Probe error of the DFT baseline grows with D: positive everywhere and a
// positive least-squares slope of log10(error) over D = 11..15.
TEST(RunBenchmark, DftErrorTrendsUpward) {
  const auto reports = run_benchmark({ConvMethod::kDft}, 11, 15, 1);
  ASSERT_EQ(reports.size(), 5u);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : reports) {
    ASSERT_EQ(r.status, BenchStatus::kOk);
    ASSERT_GT(r.rel_error_at_min, 0.0) << "dim " << r.dim;
    const double lx = r.dim, ly = std::log10(r.rel_error_at_min);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(reports.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  EXPECT_GT(slope, 0.0);
}

TEST(RunBenchmark, SkipRecords) {
  const auto naive = run_benchmark({ConvMethod::kNaive}, 14, 14, 1);
  ASSERT_EQ(naive.size(), 1u);
  EXPECT_EQ(naive[0].status, BenchStatus::kSkippedPracticality);

  const auto saved = memory_cap_bytes();
  set_memory_cap_bytes(1 << 20);
  const auto big = run_benchmark({ConvMethod::kDnc, ConvMethod::kDft}, 12, 12,
                                 1);
  set_memory_cap_bytes(saved);
  ASSERT_EQ(big.size(), 2u);
  EXPECT_EQ(big[0].status, BenchStatus::kSkippedMemory);
  EXPECT_EQ(big[1].status, BenchStatus::kSkippedMemory);

  const auto beyond = run_benchmark({ConvMethod::kDnc}, kMaxDim + 1,
                                    kMaxDim + 1, 1);
  EXPECT_EQ(beyond[0].status, BenchStatus::kSkippedMemory);
}

TEST(RunBenchmark, InvalidArguments) {
  EXPECT_THROW(run_benchmark({ConvMethod::kDnc}, 1, 2, 0), ContractError);
  EXPECT_THROW(run_benchmark({ConvMethod::kDnc}, 0, 2, 1), ContractError);
  EXPECT_THROW(run_benchmark({ConvMethod::kDnc}, 5, 4, 1), ContractError);
}

BenchReport synthetic(unsigned dim, double seconds) {
  BenchReport r;
  r.method = ConvMethod::kDnc;
  r.dim = dim;
  r.median_seconds = seconds;
  return r;
}

TEST(ScalingCheck, Ratios) {
  // Published single-core timings at D = 16..18.
  const auto published = scaling_check(
      {synthetic(16, 0.444), synthetic(17, 1.39), synthetic(18, 4.56)});
  ASSERT_EQ(published.size(), 2u);
  EXPECT_NEAR(published[0], 3.13, 0.01);
  EXPECT_NEAR(published[1], 3.28, 0.01);
  EXPECT_TRUE(ratios_within(published));

  const auto ideal = scaling_check({synthetic(13, 1.0), synthetic(14, 3.0)});
  EXPECT_DOUBLE_EQ(ideal[0], 3.0);
  EXPECT_TRUE(ratios_within(ideal));

  const auto bad = scaling_check({synthetic(14, 1.0), synthetic(15, 10.0)});
  EXPECT_FALSE(ratios_within(bad));
}

TEST(ScalingCheck, InsufficientData) {
  EXPECT_THROW(scaling_check({}), ContractError);
  EXPECT_THROW(scaling_check({synthetic(13, 1.0)}), ContractError);
  EXPECT_THROW(scaling_check({synthetic(13, 1.0), synthetic(15, 9.0)}),
               ContractError);
  BenchReport other = synthetic(14, 3.0);
  other.method = ConvMethod::kDft;
  EXPECT_THROW(scaling_check({synthetic(13, 1.0), other}), ContractError);
}

TEST(ReportCsv, RoundTrip) {
  std::vector<BenchReport> reports{synthetic(3, 0.125), synthetic(4, 1e-7)};
  reports[1].rel_error_at_min = 3.0000000000000004e-9;
  BenchReport skip;
  skip.method = ConvMethod::kNaive;
  skip.dim = 14;
  skip.runs = 3;
  skip.status = BenchStatus::kSkippedPracticality;
  reports.push_back(skip);

  std::stringstream s;
  write_report_csv(reports, s);
  EXPECT_EQ(s.str().substr(0, s.str().find('\n')),
            "method,dim,runs,median_seconds,rel_error_at_min,status");
  EXPECT_NE(s.str().find("naive,14,3,,,skipped-practicality"),
            std::string::npos);

  const auto back = read_report_csv(s);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[1].median_seconds, 1e-7);
  EXPECT_EQ(back[1].rel_error_at_min, 3.0000000000000004e-9);
  EXPECT_EQ(back[2].status, BenchStatus::kSkippedPracticality);
  EXPECT_EQ(back[2].method, ConvMethod::kNaive);
}

TEST(ParseMethod, Names) {
  EXPECT_EQ(parse_method("naive"), ConvMethod::kNaive);
  EXPECT_EQ(parse_method("dnc"), ConvMethod::kDnc);
  EXPECT_EQ(parse_method("dft"), ConvMethod::kDft);
  EXPECT_FALSE(parse_method("fftw").has_value());
}

}  // namespace
}  // namespace hcconv
