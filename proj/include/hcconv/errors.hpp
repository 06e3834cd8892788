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

#include <stdexcept>
#include <string>

namespace hcconv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Broken caller contract (wrong buffer sizes, insufficient data).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Requested dimension or allocation is beyond the configured limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// p-norm exponent pushes values outside the representable range.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double suggested_max_p)
      : Error(what), suggested_max_p_(suggested_max_p) {}
  double suggested_max_p() const { return suggested_max_p_; }

 private:
  double suggested_max_p_;
};

// No exponent inside the supported limit makes exact rounding possible.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double limit)
      : Error(what), limit_(limit) {}
  double limit() const { return limit_; }

 private:
  double limit_;
};

}  // namespace hcconv
