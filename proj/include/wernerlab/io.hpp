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

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wernerlab/discrimination.hpp"
#include "wernerlab/error.hpp"

namespace wernerlab {

/// Shortest decimal that parses back to the same double; "inf", "-inf", "nan"
/// for non-finite values.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

inline double parse_double(std::string_view text) {
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  if (text == "nan") return std::nan("");
  double x = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  detail::require(ec == std::errc() && end == text.data() + text.size(), ErrorKind::kInvalidParameter,
                  "not a number: '" + std::string(text) + "'");
  return x;
}

inline constexpr std::string_view kCurvesHeader = "zeta,n,eta,lower,qcb_upper,fid_upper,helstrom_block";

inline void write_curves_csv(std::ostream& os, const std::vector<DiscriminationBounds>& rows) {
  os << kCurvesHeader << '\n';
  for (const DiscriminationBounds& r : rows) {
    os << format_double(r.zeta) << ',' << r.n << ',' << format_double(r.eta) << ',' << format_double(r.lower) << ','
       << format_double(r.qcb_upper) << ',' << format_double(r.fid_upper) << ',' << format_double(r.helstrom_block)
       << '\n';
  }
}

/// Inverse of write_curves_csv. The dimension is not part of the schema (no
/// bound depends on it) and is restored as `d`.
inline std::vector<DiscriminationBounds> read_curves_csv(std::istream& is, int d = 2) {
  std::string line;
  detail::require(static_cast<bool>(std::getline(is, line)) && line == kCurvesHeader, ErrorKind::kInvalidParameter,
                  "missing curves header");
  std::vector<DiscriminationBounds> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    detail::require(fields.size() == 7, ErrorKind::kInvalidParameter, "expected 7 fields: " + line);
    int n = 0;
    const auto [end, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), n);
    detail::require(ec == std::errc() && end == fields[1].data() + fields[1].size(), ErrorKind::kInvalidParameter,
                    "bad n: " + line);
    rows.push_back(DiscriminationBounds{parse_double(fields[2]), parse_double(fields[0]), d, n,
                                        parse_double(fields[3]), parse_double(fields[4]), parse_double(fields[5]),
                                        parse_double(fields[6])});
  }
  return rows;
}

}  // namespace wernerlab
