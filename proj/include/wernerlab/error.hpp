// Copyright 2026 The wernerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wernerlab {

enum class ErrorKind {
  kNonHermitian,
  kNotDensityMatrix,
  kDimensionMismatch,
  kDimensionOverflow,
  kInvalidDimension,
  kInvalidParameter,
  kNotUnitary,
  kSupportMismatch,
  kOverflow,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonHermitian: return "NonHermitian";
    case ErrorKind::kNotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDimensionOverflow: return "DimensionOverflow";
    case ErrorKind::kInvalidDimension: return "InvalidDimension";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kNotUnitary: return "NotUnitary";
    case ErrorKind::kSupportMismatch: return "SupportMismatch";
    case ErrorKind::kOverflow: return "Overflow";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as an Error carrying
/// its kind, so callers (and tests) can dispatch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace detail
}  // namespace wernerlab
