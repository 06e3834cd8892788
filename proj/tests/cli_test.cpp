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


// Drives the hcconv binary end to end through its file formats.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hcconv/bench.hpp"
#include "hcconv/tensor.hpp"
#include "oracles.hpp"

namespace hcconv {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcconv_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string write_cube(const std::string& name, const Hypercube& h) {
    std::ofstream out(path(name));
    write_hypercube(h, out);
    return path(name);
  }

  std::string write_text(const std::string& name, const std::string& text) {
    std::ofstream out(path(name));
    out << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI; stderr goes to err.txt.
  int run(const std::string& args) {
    const std::string cmd = std::string(HCCONV_CLI_PATH) + " " + args +
                            " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string err() const { return slurp(path("err.txt")); }

  fs::path dir_;
};

TEST_F(CliTest, ConvolveBaseCase) {
  const auto x = write_cube("x.hcube", Hypercube(1, {2, 3}));
  const auto y = write_cube("y.hcube", Hypercube(1, {4, 1}));
  ASSERT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("z") +
                " --method dnc"),
            0);
  EXPECT_EQ(slurp(path("z")), "TCUBE 1\n8 14 3\n");
}

TEST_F(CliTest, ConvolveDimensionMismatch) {
  const auto x = write_cube("x.hcube", Hypercube(1, {2, 3}));
  const auto y = write_cube("y.hcube", Hypercube(2, {1, 2, 3, 4}));
  EXPECT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("z")), 1);
  EXPECT_NE(err().find("dimension 1"), std::string::npos) << err();
  EXPECT_NE(err().find("dimension 2"), std::string::npos) << err();
}

TEST_F(CliTest, ConvolveFormatError) {
  const auto x = write_text("x.hcube", "HCUBE 1\n1 2 3\n");
  const auto y = write_cube("y.hcube", Hypercube(1, {4, 1}));
  EXPECT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("z")), 1);
  EXPECT_NE(err().find("expected 2 values, found 3"), std::string::npos);
}

TEST_F(CliTest, ConvolveCapacityError) {
  const auto x = write_cube("x.hcube", Hypercube::zeros(10));
  EXPECT_EQ(run("--memory-cap-gib 0.0001 convolve --x " + x + " --y " + x +
                " --out " + path("z")),
            2);
}

TEST_F(CliTest, NaiveAndDncByteIdentical) {
  std::mt19937_64 rng(41);
  const auto x = write_cube("x.hcube", testing::random_int_cube(rng, 6, 0, 1023));
  const auto y = write_cube("y.hcube", testing::random_int_cube(rng, 6, 0, 1023));
  ASSERT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("n") +
                " --method naive"),
            0);
  ASSERT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("d") +
                " --method dnc"),
            0);
  ASSERT_EQ(run("convolve --x " + x + " --y " + y + " --out " + path("d2") +
                " --method dnc"),
            0);
  EXPECT_EQ(slurp(path("n")), slurp(path("d")));
  EXPECT_EQ(slurp(path("d")), slurp(path("d2")));
}

TEST_F(CliTest, CarryFree) {
  std::vector<double> u(8, 0.0), v(8, 0.0);
  u[7] = 1;
  v[5] = 1;
  const auto uf = write_cube("u.hcube", Hypercube(3, u));
  const auto vf = write_cube("v.hcube", Hypercube(3, v));
  ASSERT_EQ(run("carryfree --u " + uf + " --v " + vf + " --out " + path("cf")),
            0);
  std::ifstream cf(path("cf"));
  const ResultTensor z = read_result(cf);
  for (std::size_t k = 0; k < z.size(); ++k) {
    EXPECT_EQ(z[k], k == 23 ? 1.0 : 0.0);
  }

  ASSERT_EQ(run("carryfree --with-carries --u " + uf + " --v " + vf +
                " --out " + path("vec")),
            0);
  std::ifstream vec_in(path("vec"));
  const auto vec = read_vec(vec_in);
  ASSERT_EQ(vec.size(), 15u);
  for (std::size_t m = 0; m < vec.size(); ++m) {
    EXPECT_EQ(vec[m], m == 12 ? 1.0 : 0.0);
  }

  const auto ones = write_cube("ones.hcube", Hypercube(1, {1, 1}));
  ASSERT_EQ(run("carryfree --with-carries --u " + ones + " --v " + ones +
                " --out " + path("vec1")),
            0);
  EXPECT_EQ(slurp(path("vec1")), "VEC 3\n1\n2\n1\n");
}

TEST_F(CliTest, MaxConv) {
  const auto x = write_cube("x.hcube", Hypercube(1, {2, 3}));
  const auto y = write_cube("y.hcube", Hypercube(1, {4, 1}));
  ASSERT_EQ(run("maxconv --x " + x + " --y " + y + " --exact-bound 4 --out " +
                path("m")),
            0);
  EXPECT_EQ(slurp(path("m")), "TCUBE 1\n8 12 3\n");

  std::mt19937_64 rng(42);
  const auto a = write_cube("a.hcube", testing::random_unit_cube(rng, 5));
  const auto b = write_cube("b.hcube", testing::random_unit_cube(rng, 5));
  ASSERT_EQ(run("maxconv --x " + a + " --y " + b + " --p 1 --out " +
                path("p1")),
            0);
  ASSERT_EQ(run("convolve --x " + a + " --y " + b + " --method dnc --out " +
                path("c")),
            0);
  EXPECT_EQ(slurp(path("p1")), slurp(path("c")));

  const auto neg = write_cube("neg.hcube", Hypercube(1, {-1, 3}));
  EXPECT_EQ(run("maxconv --x " + neg + " --y " + y + " --p 4 --out " +
                path("n")),
            1);
  EXPECT_EQ(run("maxconv --x " + x + " --y " + y + " --out " + path("n")), 1);

  const auto huge = write_cube("huge.hcube", Hypercube(1, {1e100, 1}));
  EXPECT_EQ(run("maxconv --x " + huge + " --y " + huge + " --p 64 --out " +
                path("h")),
            2);
  EXPECT_NE(err().find("p <="), std::string::npos) << err();
  const auto wide = write_cube("wide.hcube", Hypercube(1, {0, 1}));
  EXPECT_EQ(run("maxconv --x " + wide + " --y " + wide +
                " --exact-bound 100000000 --out " + path("w")),
            2);
}

TEST_F(CliTest, Bench) {
  ASSERT_EQ(run("bench --methods dnc --dim-min 11 --dim-max 13 --runs 3 --out " +
                path("r.csv")),
            0);
  std::ifstream in(path("r.csv"));
  const auto reports = read_report_csv(in);
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, BenchStatus::kOk);
    EXPECT_EQ(r.rel_error_at_min, 0.0);
    EXPECT_EQ(r.runs, 3u);
  }

  ASSERT_EQ(run("bench --methods naive --dim-min 14 --dim-max 14 --out " +
                path("s.csv")),
            0);
  EXPECT_NE(slurp(path("s.csv")).find("naive,14,3,,,skipped-practicality"),
            std::string::npos);

  EXPECT_EQ(run("bench --methods dnc --runs 0 --out " + path("x.csv")), 1);
  EXPECT_EQ(run("bench --methods dnc --dim-min 5 --dim-max 4 --out " +
                path("x.csv")),
            1);
  EXPECT_EQ(run("bench --methods fftw --out " + path("x.csv")), 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("convolve --x nowhere.hcube --y nowhere.hcube"), 1);
  EXPECT_EQ(run("convolve --method fft --x a --y b"), 1);
}

}  // namespace
}  // namespace hcconv
