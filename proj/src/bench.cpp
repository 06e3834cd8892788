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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "hcconv/dft_ref.hpp"
#include "hcconv/dnc.hpp"
#include "hcconv/naive.hpp"

namespace hcconv {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename Num>
Num parse_field(const std::string& s, std::size_t line_no) {
  Num v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("report line " + std::to_string(line_no) +
                      ": bad numeric field '" + s + "'");
  }
  return v;
}

// glibc raises its mmap threshold after a large block is freed, up to 32 MiB,
// so mid-sized result buffers get recycled from the heap while larger ones
// always arrive as fresh pages. Pin the threshold so every D >= 12 buffer is
// obtained the same way and runtime ratios between dimensions stay comparable.
void pin_allocator() {
#if defined(__GLIBC__)
  static const bool pinned = mallopt(M_MMAP_THRESHOLD, 4 << 20) == 1;
  (void)pinned;
#endif
}

}  // namespace

std::string_view method_name(ConvMethod m) {
  switch (m) {
    case ConvMethod::kNaive: return "naive";
    case ConvMethod::kDnc: return "dnc";
    case ConvMethod::kDft: return "dft";
  }
  return "unknown";
}

std::optional<ConvMethod> parse_method(std::string_view name) {
  if (name == "naive") return ConvMethod::kNaive;
  if (name == "dnc") return ConvMethod::kDnc;
  if (name == "dft" || name == "dft_ref") return ConvMethod::kDft;
  return std::nullopt;
}

ResultTensor convolve(ConvMethod m, const Hypercube& x, const Hypercube& y) {
  switch (m) {
    case ConvMethod::kNaive: return naive_convolve(x, y);
    case ConvMethod::kDnc: return dnc_convolve(x, y);
    case ConvMethod::kDft: return dft_convolve(x, y);
  }
  throw ContractError("unknown convolution method");
}

std::uint64_t method_memory_bytes(ConvMethod m, unsigned dim) {
  const std::uint64_t cells = pow3(dim);
  switch (m) {
    case ConvMethod::kNaive:
      return cells * sizeof(double) + pow2(dim) * sizeof(std::uint64_t);
    case ConvMethod::kDnc:
      return (cells + 2 * pow2(dim)) * sizeof(double);
    case ConvMethod::kDft:
      // Two spectra plus the real result.
      return 2 * cells * sizeof(std::complex<double>) + cells * sizeof(double);
  }
  return 0;
}

std::string_view status_name(BenchStatus s) {
  switch (s) {
    case BenchStatus::kOk: return "ok";
    case BenchStatus::kSkippedMemory: return "skipped-memory";
    case BenchStatus::kSkippedPracticality: return "skipped-practicality";
  }
  return "unknown";
}

std::pair<Hypercube, Hypercube> make_probe(unsigned dim) {
  check_capacity(dim, 2 * pow2(dim) * sizeof(double));
  std::vector<double> flat(pow2(dim));
  for (std::size_t i = 0; i < flat.size(); ++i) {
    flat[i] = static_cast<double>(i + 1);
  }
  Hypercube x(dim, flat);
  return {x, Hypercube(dim, std::move(flat))};
}

double rel_error_at_smallest(const ResultTensor& z) {
  return std::abs(z[0] - 1.0) / 1.0;
}

std::vector<BenchReport> run_benchmark(const std::vector<ConvMethod>& methods,
                                       unsigned dim_min, unsigned dim_max,
                                       unsigned runs,
                                       const BenchOptions& options) {
  if (runs == 0) throw ContractError("runs must be at least 1");
  if (dim_min == 0 || dim_min > dim_max) {
    throw ContractError("invalid dimension range " + std::to_string(dim_min) +
                        ".." + std::to_string(dim_max));
  }
  using clock = std::chrono::steady_clock;
  pin_allocator();

  std::vector<BenchReport> reports;
  for (ConvMethod m : methods) {
    for (unsigned dim = dim_min; dim <= dim_max; ++dim) {
      BenchReport rep;
      rep.method = m;
      rep.dim = dim;
      rep.runs = runs;
      rep.peak_result_cells = dim <= kMaxDim ? pow3(dim) : 0;

      if (m == ConvMethod::kNaive && dim > options.naive_max_dim) {
        rep.status = BenchStatus::kSkippedPracticality;
        reports.push_back(rep);
        continue;
      }
      if (dim > kMaxDim || method_memory_bytes(m, dim) > memory_cap_bytes()) {
        rep.status = BenchStatus::kSkippedMemory;
        reports.push_back(rep);
        continue;
      }

      const auto [x, y] = make_probe(dim);
      (void)convolve(m, x, y);  // warmup

      std::vector<double> seconds;
      seconds.reserve(runs);
      for (unsigned r = 0; r < runs; ++r) {
        const auto start = clock::now();
        ResultTensor z = convolve(m, x, y);
        const auto stop = clock::now();
        seconds.push_back(std::chrono::duration<double>(stop - start).count());
        if (r + 1 == runs) rep.rel_error_at_min = rel_error_at_smallest(z);
      }
      rep.median_seconds = median(std::move(seconds));
      reports.push_back(rep);
    }
  }
  return reports;
}

std::vector<double> scaling_check(const std::vector<BenchReport>& reports) {
  if (reports.size() < 2) {
    throw ContractError("scaling check needs at least two reports");
  }
  std::vector<double> ratios;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const BenchReport& r = reports[i];
    if (r.method != ConvMethod::kDnc || r.status != BenchStatus::kOk) {
      throw ContractError("scaling check needs ok dnc reports only");
    }
    if (i == 0) continue;
    if (r.dim != reports[i - 1].dim + 1) {
      throw ContractError("scaling check needs consecutive dimensions");
    }
    if (!(reports[i - 1].median_seconds > 0.0)) {
      throw ContractError("zero runtime at dimension " +
                          std::to_string(reports[i - 1].dim));
    }
    ratios.push_back(r.median_seconds / reports[i - 1].median_seconds);
  }
  return ratios;
}

bool ratios_within(const std::vector<double>& ratios, double lo, double hi) {
  return std::all_of(ratios.begin(), ratios.end(),
                     [&](double r) { return r >= lo && r <= hi; });
}

void write_report_csv(const std::vector<BenchReport>& reports,
                      std::ostream& out) {
  out << "method,dim,runs,median_seconds,rel_error_at_min,status\n";
  for (const BenchReport& r : reports) {
    out << method_name(r.method) << ',' << r.dim << ',' << r.runs << ',';
    if (r.status == BenchStatus::kOk) {
      out << format_double(r.median_seconds) << ','
          << format_double(r.rel_error_at_min);
    } else {
      out << ',';
    }
    out << ',' << status_name(r.status) << '\n';
  }
  if (!out) throw Error("write failed");
}

std::vector<BenchReport> read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "method,dim,runs,median_seconds,rel_error_at_min,status") {
    throw FormatError("report line 1: missing or wrong CSV header");
  }
  std::vector<BenchReport> reports;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 6) {
      throw FormatError("report line " + std::to_string(line_no) +
                        ": expected 6 fields");
    }
    BenchReport r;
    const auto m = parse_method(f[0]);
    if (!m) {
      throw FormatError("report line " + std::to_string(line_no) +
                        ": unknown method '" + f[0] + "'");
    }
    r.method = *m;
    r.dim = parse_field<unsigned>(f[1], line_no);
    r.runs = parse_field<unsigned>(f[2], line_no);
    r.peak_result_cells = r.dim <= kMaxDim ? pow3(r.dim) : 0;
    if (f[5] == "ok") {
      r.status = BenchStatus::kOk;
      r.median_seconds = parse_field<double>(f[3], line_no);
      r.rel_error_at_min = parse_field<double>(f[4], line_no);
    } else if (f[5] == "skipped-memory") {
      r.status = BenchStatus::kSkippedMemory;
    } else if (f[5] == "skipped-practicality") {
      r.status = BenchStatus::kSkippedPracticality;
    } else {
      throw FormatError("report line " + std::to_string(line_no) +
                        ": unknown status '" + f[5] + "'");
    }
    reports.push_back(r);
  }
  return reports;
}

}  // namespace hcconv
