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

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "wernerlab/analytic.hpp"
#include "wernerlab/error.hpp"

namespace wernerlab {

/// Error-probability bounds for n-use discrimination of two HW channels.
/// helstrom_block is the exact error of the non-adaptive strategy that feeds
/// half of a maximally entangled state into each use.
struct DiscriminationBounds {
  double eta;
  double zeta;
  int d;
  int n;
  double lower;           // (1 - sqrt(min{1 - F^{2n}, nS})) / 2
  double qcb_upper;       // Q^n / 2
  double fid_upper;       // F^n / 2
  double helstrom_block;  // ½(1 - D(W_η^{⊗n}, W_ζ^{⊗n}))

  /// lower <= helstrom_block <= qcb_upper <= fid_upper, all within [0, 1/2].
  bool ordered(double slack = 1e-10) const {
    auto in_range = [&](double x) { return x >= -slack && x <= 0.5 + slack; };
    return in_range(lower) && in_range(helstrom_block) && in_range(qcb_upper) && in_range(fid_upper) &&
           lower <= helstrom_block + slack && helstrom_block <= qcb_upper + slack && qcb_upper <= fid_upper + slack;
  }
};

/// The min{...} picks 1 - F^{2n} whenever S is infinite (a channel at η = ±1).
inline DiscriminationBounds bounds(double eta, double zeta, int d, int n) {
  detail::require(n >= 1, ErrorKind::kInvalidParameter, "n must be >= 1");
  const double f = fidelity_werner(eta, zeta);
  const double s = s_quantity(eta, zeta);
  const double q = qcb_werner(eta, zeta).q;
  const double fn = std::pow(f, n);
  const double radicand = std::min(1.0 - fn * fn, static_cast<double>(n) * s);
  const double lower = 0.5 * (1.0 - std::sqrt(std::clamp(radicand, 0.0, 1.0)));
  return DiscriminationBounds{eta,           zeta,     d,
                              n,             lower,    0.5 * std::pow(q, n),
                              0.5 * fn,      helstrom_multicopy_werner(eta, zeta, d, n)};
}

/// Rows for η = -1, -1 + step, ..., 1, one block per entry of n_list, sorted
/// by (n, η). The step must divide 2 so that η = ±1 (and any ζ on the lattice)
/// are hit exactly.
inline std::vector<DiscriminationBounds> curve_grid(double zeta, std::span<const int> n_list, double eta_step,
                                                    int d = 2) {
  detail::require(eta_step > 0.0 && eta_step <= 2.0, ErrorKind::kInvalidParameter, "eta step must be in (0, 2]");
  const double intervals = std::round(2.0 / eta_step);
  detail::require(std::abs(intervals * eta_step - 2.0) <= 1e-9, ErrorKind::kInvalidParameter,
                  "eta step must divide 2");
  const int count = static_cast<int>(intervals);
  std::vector<int> ns(n_list.begin(), n_list.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<DiscriminationBounds> rows;
  rows.reserve(ns.size() * static_cast<std::size_t>(count + 1));
  for (int n : ns)
    for (int i = 0; i <= count; ++i) {
      const double eta = (2.0 * i - count) / count;
      rows.push_back(bounds(eta, zeta, d, n));
    }
  return rows;
}

/// Upper bounds for n-use discrimination of two depolarizing channels.
struct IsotropicBounds {
  double alpha;
  double beta;
  int d;
  int n;
  double q;
  double qcb_upper;  // Q^n / 2
  double fid_upper;  // F(Ω_α, Ω_β)^n / 2
};

inline IsotropicBounds bounds_isotropic(double alpha, double beta, int d, int n) {
  detail::require(n >= 1, ErrorKind::kInvalidParameter, "n must be >= 1");
  const double q = qcb_isotropic(alpha, beta, d).q;
  const double f = fidelity_isotropic(alpha, beta, d);
  return IsotropicBounds{alpha, beta, d, n, q, 0.5 * std::pow(q, n), 0.5 * std::pow(f, n)};
}

}  // namespace wernerlab
