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

#include "hcconv/tensor.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>

namespace hcconv {

namespace {

std::atomic<std::uint64_t> g_memory_cap{kDefaultMemoryCapBytes};

void check_dim(unsigned dim) {
  if (dim == 0) throw DimensionError("dimension must be at least 1");
  if (dim > kMaxDim) {
    throw CapacityError("dimension " + std::to_string(dim) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxDim));
  }
}

// Whitespace tokenizer that remembers the line each token started on.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in)
      : text_(std::istreambuf_iterator<char>(in),
              std::istreambuf_iterator<char>()) {}

  bool next(std::string_view& tok) {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    tok = std::string_view(text_).substr(start, pos_ - start);
    tok_line_ = line_;
    tok_offset_ = start;
    return true;
  }

  std::string where() const {
    return "line " + std::to_string(tok_line_) + " (offset " +
           std::to_string(tok_offset_) + ")";
  }
  std::size_t line() const { return line_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t tok_line_ = 1;
  std::size_t tok_offset_ = 0;
};

double parse_double(std::string_view tok, const Tokenizer& tz) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(tz.where() + ": cannot parse number '" +
                      std::string(tok) + "'");
  }
  return v;
}

// Reads "<magic> <count-or-dim>" and returns the integer; the header must sit
// on the first line.
std::uint64_t parse_header(Tokenizer& tz, std::string_view magic) {
  std::string_view tok;
  if (!tz.next(tok)) throw FormatError("empty input, expected '" +
                                       std::string(magic) + " <n>' header");
  if (tok != magic) {
    throw FormatError(tz.where() + ": expected header '" + std::string(magic) +
                      "', found '" + std::string(tok) + "'");
  }
  if (!tz.next(tok) || tz.line() != 1) {
    throw FormatError("line 1: header is missing its size field");
  }
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(tz.where() + ": bad header size '" + std::string(tok) +
                      "'");
  }
  return n;
}

std::vector<double> parse_values(Tokenizer& tz, std::uint64_t expected) {
  std::vector<double> values;
  values.reserve(expected);
  std::string_view tok;
  while (tz.next(tok)) {
    if (values.size() == expected) {
      // Count the surplus so the message is useful.
      std::uint64_t found = expected + 1;
      std::string at = tz.where();
      while (tz.next(tok)) ++found;
      throw FormatError(at + ": expected " + std::to_string(expected) +
                        " values, found " + std::to_string(found));
    }
    values.push_back(parse_double(tok, tz));
  }
  if (values.size() != expected) {
    throw FormatError("line " + std::to_string(tz.line()) + ": expected " +
                      std::to_string(expected) + " values, found " +
                      std::to_string(values.size()));
  }
  return values;
}

unsigned header_dim(std::uint64_t d) {
  if (d == 0) throw FormatError("line 1: dimension must be at least 1");
  if (d > kMaxDim) {
    throw FormatError("line 1: dimension " + std::to_string(d) +
                      " exceeds the supported maximum of " +
                      std::to_string(kMaxDim));
  }
  return static_cast<unsigned>(d);
}

void write_double(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, ptr - buf);
}

void write_values(std::ostream& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.put(' ');
    write_double(out, values[i]);
  }
  out.put('\n');
  if (!out) throw Error("write failed");
}

}  // namespace

void set_memory_cap_bytes(std::uint64_t bytes) { g_memory_cap.store(bytes); }
std::uint64_t memory_cap_bytes() { return g_memory_cap.load(); }

void check_capacity(unsigned dim, std::uint64_t bytes) {
  check_dim(dim);
  const std::uint64_t cap = memory_cap_bytes();
  if (bytes > cap) {
    throw CapacityError("dimension " + std::to_string(dim) + " needs " +
                        std::to_string(bytes) + " bytes, above the cap of " +
                        std::to_string(cap) + " bytes");
  }
}

Hypercube::Hypercube(unsigned dim, std::vector<double> data)
    : dim_(dim), data_(std::move(data)) {
  check_dim(dim);
  if (data_.size() != pow2(dim)) {
    throw ShapeError("hypercube of dimension " + std::to_string(dim) +
                     " needs " + std::to_string(pow2(dim)) + " values, got " +
                     std::to_string(data_.size()));
  }
}

Hypercube Hypercube::zeros(unsigned dim) {
  check_dim(dim);
  return Hypercube(dim, std::vector<double>(pow2(dim), 0.0));
}

ResultTensor::ResultTensor(unsigned dim, std::vector<double> data)
    : dim_(dim), data_(std::move(data)) {
  check_dim(dim);
  if (data_.size() != pow3(dim)) {
    throw ShapeError("result tensor of dimension " + std::to_string(dim) +
                     " needs " + std::to_string(pow3(dim)) + " values, got " +
                     std::to_string(data_.size()));
  }
}

std::uint64_t hypercube_flat_index(std::span<const std::uint8_t> bits) {
  if (bits.size() > 63) throw IndexError("multi-index too long");
  std::uint64_t flat = 0;
  for (std::size_t a = 0; a < bits.size(); ++a) {
    if (bits[a] > 1) {
      throw IndexError("hypercube index digit " + std::to_string(a) +
                       " is " + std::to_string(bits[a]) + ", expected 0 or 1");
    }
    flat = (flat << 1) | bits[a];
  }
  return flat;
}

std::vector<std::uint8_t> hypercube_unflatten(std::uint64_t flat,
                                              unsigned dim) {
  if (dim == 0 || dim > 63 || flat >= pow2(dim)) {
    throw IndexError("flat index " + std::to_string(flat) +
                     " out of range for dimension " + std::to_string(dim));
  }
  std::vector<std::uint8_t> bits(dim);
  for (unsigned a = dim; a-- > 0;) {
    bits[a] = static_cast<std::uint8_t>(flat & 1);
    flat >>= 1;
  }
  return bits;
}

std::uint64_t ternary_flat_index(const TernaryIndex& t) {
  if (t.digits.size() > 40) throw IndexError("ternary index too long");
  std::uint64_t flat = 0;
  for (std::size_t a = 0; a < t.digits.size(); ++a) {
    if (t.digits[a] > 2) {
      throw IndexError("ternary index digit " + std::to_string(a) + " is " +
                       std::to_string(t.digits[a]) + ", expected 0, 1 or 2");
    }
    flat = flat * 3 + t.digits[a];
  }
  return flat;
}

TernaryIndex ternary_unflatten(std::uint64_t flat, unsigned dim) {
  if (dim == 0 || dim > 40 || flat >= pow3(dim)) {
    throw IndexError("flat index " + std::to_string(flat) +
                     " out of range for dimension " + std::to_string(dim));
  }
  TernaryIndex t{std::vector<std::uint8_t>(dim)};
  for (unsigned a = dim; a-- > 0;) {
    t.digits[a] = static_cast<std::uint8_t>(flat % 3);
    flat /= 3;
  }
  return t;
}

std::uint64_t spread_to_ternary(std::uint64_t binary_flat, unsigned dim) {
  std::uint64_t flat = 0;
  for (unsigned a = dim; a-- > 0;) {
    flat = flat * 3 + ((binary_flat >> a) & 1);
  }
  return flat;
}

Hypercube read_hypercube(std::istream& in) {
  Tokenizer tz(in);
  const unsigned dim = header_dim(parse_header(tz, "HCUBE"));
  return Hypercube(dim, parse_values(tz, pow2(dim)));
}

ResultTensor read_result(std::istream& in) {
  Tokenizer tz(in);
  const unsigned dim = header_dim(parse_header(tz, "TCUBE"));
  check_capacity(dim, pow3(dim) * sizeof(double));
  return ResultTensor(dim, parse_values(tz, pow3(dim)));
}

std::vector<double> read_vec(std::istream& in) {
  Tokenizer tz(in);
  const std::uint64_t n = parse_header(tz, "VEC");
  return parse_values(tz, n);
}

void write_hypercube(const Hypercube& x, std::ostream& out) {
  out << "HCUBE " << x.dim() << '\n';
  write_values(out, x.data());
}

void write_result(const ResultTensor& z, std::ostream& out) {
  out << "TCUBE " << z.dim() << '\n';
  write_values(out, z.data());
}

// One value per line.
void write_vec(std::span<const double> v, std::ostream& out) {
  out << "VEC " << v.size() << '\n';
  for (double value : v) {
    write_double(out, value);
    out.put('\n');
  }
  if (!out) throw Error("write failed");
}

}  // namespace hcconv
