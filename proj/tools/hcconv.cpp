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


// hcconv: hypercube convolution from the command line.
//
//   hcconv convolve  --x a.hcube --y b.hcube --out z.tcube [--method dnc]
//   hcconv carryfree --u a.hcube --v b.hcube --out z.tcube [--with-carries]
//   hcconv maxconv   --x a.hcube --y b.hcube --out z.tcube (--p P | --exact-bound B)
//   hcconv bench     --methods dnc,dft --dim-min 11 --dim-max 13 --runs 3 --out r.csv
//
// Exit codes: 0 ok, 1 usage/format/domain errors, 2 capacity/infeasibility.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcconv/bench.hpp"
#include "hcconv/dnc.hpp"
#include "hcconv/embeddings.hpp"
#include "hcconv/naive.hpp"
#include "hcconv/tensor.hpp"

namespace {

using namespace hcconv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;

Hypercube load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return read_hypercube(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

// "-" writes to standard output.
void emit(const std::string& path,
          const std::function<void(std::ostream&)>& writer) {
  if (path == "-") {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  writer(out);
  out.close();
  if (!out) throw Error("write to '" + path + "' failed");
}

void require_same_dim(const Hypercube& x, const Hypercube& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("dimension mismatch: x has dimension " +
                         std::to_string(x.dim()) + ", y has dimension " +
                         std::to_string(y.dim()));
  }
}

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const CapacityError& e) {
    std::cerr << "hcconv: capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const OverflowError& e) {
    std::cerr << "hcconv: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InfeasibleError& e) {
    std::cerr << "hcconv: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ContractError& e) {
    std::cerr << "hcconv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "hcconv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "hcconv: out of memory\n";
    return kExitCapacity;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sub-quadratic convolution of {0,1}^D hypercubes"};
  app.require_subcommand(1);

  double memory_cap_gib = static_cast<double>(kDefaultMemoryCapBytes) /
                          static_cast<double>(1ull << 30);
  app.add_option("--memory-cap-gib", memory_cap_gib,
                 "Refuse allocations above this many GiB")
      ->check(CLI::PositiveNumber);

  std::map<std::string, ConvMethod> method_map{{"naive", ConvMethod::kNaive},
                                               {"dnc", ConvMethod::kDnc},
                                               {"dft", ConvMethod::kDft}};

  // convolve
  auto* conv = app.add_subcommand("convolve", "Convolve two HCUBE files");
  std::string conv_x, conv_y, conv_out = "-";
  ConvMethod conv_method = ConvMethod::kDnc;
  conv->add_option("--x", conv_x, "First operand (HCUBE)")->required();
  conv->add_option("--y", conv_y, "Second operand (HCUBE)")->required();
  conv->add_option("-o,--out", conv_out, "Output TCUBE path, '-' for stdout");
  conv->add_option("-m,--method", conv_method, "naive, dnc or dft")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));

  // carryfree
  auto* cf = app.add_subcommand("carryfree",
                                "Carry-free 1D convolution of two vectors");
  std::string cf_u, cf_v, cf_out = "-";
  bool with_carries = false;
  cf->add_option("--u", cf_u, "First vector (HCUBE)")->required();
  cf->add_option("--v", cf_v, "Second vector (HCUBE)")->required();
  cf->add_option("-o,--out", cf_out, "Output path, '-' for stdout");
  cf->add_flag("--with-carries", with_carries,
               "Apply carries and write the ordinary convolution as VEC");

  // maxconv
  auto* mc = app.add_subcommand("maxconv", "p-norm max-convolution");
  std::string mc_x, mc_y, mc_out = "-";
  double mc_p = 0.0;
  std::uint64_t mc_bound = 0;
  mc->add_option("--x", mc_x, "First operand (HCUBE)")->required();
  mc->add_option("--y", mc_y, "Second operand (HCUBE)")->required();
  mc->add_option("-o,--out", mc_out, "Output TCUBE path, '-' for stdout");
  auto* p_opt = mc->add_option("--p", mc_p, "Norm exponent (approximate)");
  auto* bound_opt = mc->add_option("--exact-bound", mc_bound,
                                   "Integer value bound (exact result)");
  p_opt->excludes(bound_opt);
  bound_opt->excludes(p_opt);

  // bench
  auto* bench = app.add_subcommand("bench", "Runtime and probe-error table");
  std::vector<std::string> bench_methods{"dnc"};
  unsigned dim_min = 1, dim_max = 12;
  int runs = 3;
  unsigned naive_max_dim = kNaivePracticalMaxDim;
  std::string bench_out = "-";
  bench->add_option("--methods", bench_methods, "naive, dnc, dft")
      ->delimiter(',');
  bench->add_option("--dim-min", dim_min, "Smallest dimension");
  bench->add_option("--dim-max", dim_max, "Largest dimension");
  bench->add_option("--runs", runs, "Timed repetitions per cell");
  bench->add_option("--naive-max-dim", naive_max_dim,
                    "Skip the naive engine above this dimension");
  bench->add_option("-o,--out", bench_out, "Output CSV path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  set_memory_cap_bytes(static_cast<std::uint64_t>(
      memory_cap_gib * static_cast<double>(1ull << 30)));

  if (*conv) {
    return run_guarded([&] {
      const Hypercube x = load(conv_x);
      const Hypercube y = load(conv_y);
      require_same_dim(x, y);
      if (conv_method == ConvMethod::kNaive &&
          x.dim() > kNaivePracticalMaxDim) {
        std::cerr << "hcconv: warning: naive convolution at dimension "
                  << x.dim() << " is quadratic and may take a long time\n";
      }
      const ResultTensor z = convolve(conv_method, x, y);
      emit(conv_out, [&](std::ostream& out) { write_result(z, out); });
    });
  }

  if (*cf) {
    return run_guarded([&] {
      const Hypercube u = load(cf_u);
      const Hypercube v = load(cf_v);
      require_same_dim(u, v);
      const CarryFreeResult r = carry_free_convolve(u.data(), v.data());
      if (with_carries) {
        const std::vector<double> carried = apply_carries(r);
        emit(cf_out, [&](std::ostream& out) { write_vec(carried, out); });
      } else {
        emit(cf_out,
             [&](std::ostream& out) { write_result(r.tensor(), out); });
      }
    });
  }

  if (*mc) {
    if (p_opt->count() == 0 && bound_opt->count() == 0) {
      std::cerr << "hcconv: maxconv needs --p or --exact-bound\n";
      return kExitUsage;
    }
    return run_guarded([&] {
      const Hypercube x = load(mc_x);
      const Hypercube y = load(mc_y);
      require_same_dim(x, y);
      ResultTensor z = bound_opt->count()
                           ? max_convolve_exact_int(x, y, mc_bound)
                           : max_convolve_pnorm(x, y, PNormConfig{mc_p, 1});
      emit(mc_out, [&](std::ostream& out) { write_result(z, out); });
    });
  }

  if (*bench) {
    return run_guarded([&] {
      if (runs < 1) throw ContractError("--runs must be at least 1");
      if (dim_min < 1 || dim_min > dim_max) {
        throw ContractError("invalid dimension range " +
                            std::to_string(dim_min) + ".." +
                            std::to_string(dim_max));
      }
      std::vector<ConvMethod> methods;
      for (const std::string& name : bench_methods) {
        const auto m = parse_method(name);
        if (!m) throw ContractError("unknown method '" + name + "'");
        methods.push_back(*m);
      }
      BenchOptions options;
      options.naive_max_dim = naive_max_dim;
      const auto reports = run_benchmark(methods, dim_min, dim_max,
                                         static_cast<unsigned>(runs), options);
      emit(bench_out,
           [&](std::ostream& out) { write_report_csv(reports, out); });
    });
  }
  return kExitUsage;
}
