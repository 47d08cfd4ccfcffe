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
#include <cstdint>
#include <string>
#include <vector>

#include "wernerlab/analytic.hpp"
#include "wernerlab/discrimination.hpp"
#include "wernerlab/metrics.hpp"
#include "wernerlab/metrology.hpp"
#include "wernerlab/parallel.hpp"
#include "wernerlab/random.hpp"
#include "wernerlab/telesim.hpp"
#include "wernerlab/werner.hpp"

// Cross-checks every closed form against its matrix oracle. Each check
// reports the worst discrepancy it saw next to the limit it must stay under.

namespace wernerlab {

struct VerifyOptions {
  double grid_step = 0.1;
  std::vector<int> dims = {2, 3, 4, 5, 6};
  std::uint64_t seed = 20180;
  /// Multiplies every numeric tolerance; tiny values make the suite fail on
  /// round-off alone.
  double tolerance_scale = 1.0;
  long long estimation_copies = 1000;
  long long estimation_trials = 10000;
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  double measured;  // worst value observed
  double limit;     // pass iff measured <= limit (strict < when `strict`)
  bool strict = false;
  bool passed = false;
};

namespace detail {

inline CheckResult make_check(std::string name, double measured, double limit, bool strict = false) {
  const bool ok = !std::isnan(measured) && (strict ? measured < limit : measured <= limit);
  return CheckResult{std::move(name), measured, limit, strict, ok};
}

/// -1, -1 + step, ..., 1 with the endpoints hit exactly.
inline std::vector<double> eta_grid(double step) {
  require(step > 0.0 && step <= 2.0, ErrorKind::kInvalidParameter, "grid step must be in (0, 2]");
  const double intervals = std::round(2.0 / step);
  require(std::abs(intervals * step - 2.0) <= 1e-9, ErrorKind::kInvalidParameter, "grid step must divide 2");
  const int count = static_cast<int>(intervals);
  std::vector<double> out;
  for (int i = 0; i <= count; ++i) out.push_back((2.0 * i - count) / count);
  return out;
}

inline bool interior(double x) { return std::abs(x) < 1.0; }

// Endpoint QCB cases are compared against Q_s on the matrices just inside the
// open interval.
inline constexpr double kEndpointProbe = 1e-9;

struct PairIndex {
  std::size_t i;
  std::size_t j;
};

inline std::vector<PairIndex> all_pairs(std::size_t n) {
  std::vector<PairIndex> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back({i, j});
  return out;
}

inline double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);  // NaN propagates as "not greater", caught below
  for (double x : v)
    if (std::isnan(x)) return x;
  return m;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  using detail::make_check;
  const double tol = opt.tolerance_scale;
  const std::vector<double> grid = detail::eta_grid(opt.grid_step);
  const auto pairs = detail::all_pairs(grid.size());
  std::vector<CheckResult> results;

  // Werner states and their spectra, once per dimension.
  double fid_err = 0.0, td_err = 0.0, re_err = 0.0, q_err = 0.0, s_err = 0.0;
  for (int d : opt.dims) {
    std::vector<DensityMatrix> states;
    std::vector<EigenDecomposition> spectra;
    for (double eta : grid) {
      states.push_back(werner_state(WernerParams(eta, d)));
      spectra.push_back(ChernoffKernel::psd_spectrum(states.back()));
    }
    std::vector<double> fe(pairs.size()), te(pairs.size()), re(pairs.size()), qe(pairs.size()), se(pairs.size());
    parallel_for(
        pairs.size(),
        [&](std::size_t k) {
          const auto [i, j] = pairs[k];
          const double eta = grid[i], zeta = grid[j];
          fe[k] = std::abs(fidelity_werner(eta, zeta) - bures_fidelity_numeric(states[i], states[j]));
          te[k] = std::abs(0.5 * std::abs(eta - zeta) - trace_distance_numeric(states[i], states[j]));
          const double ra = relative_entropy_werner(eta, zeta);
          const double rn = relative_entropy_numeric(states[i], states[j]);
          re[k] = (std::isinf(ra) || std::isinf(rn)) ? (std::isinf(ra) && std::isinf(rn) ? 0.0 : kPosInfinity)
                                                      : std::abs(ra - rn);
          const QcbResult analytic = qcb_werner(eta, zeta);
          const ChernoffKernel kernel(spectra[i], spectra[j]);
          switch (analytic.s_kind) {
            case SKind::kLeftLimit:
              qe[k] = std::abs(analytic.q - kernel(detail::kEndpointProbe));
              break;
            case SKind::kRightLimit:
              qe[k] = std::abs(analytic.q - kernel(1.0 - detail::kEndpointProbe));
              break;
            case SKind::kDegenerateHalf:
              qe[k] = std::abs(analytic.q - qcb_numeric(kernel).q);
              break;
            case SKind::kInterior: {
              const NumericQcb numeric = qcb_numeric(kernel);
              qe[k] = std::abs(analytic.q - numeric.q);
              se[k] = std::abs(analytic.s_star - numeric.s_star);
              break;
            }
          }
        },
        opt.threads);
    fid_err = std::max(fid_err, detail::max_of(fe));
    td_err = std::max(td_err, detail::max_of(te));
    re_err = std::max(re_err, detail::max_of(re));
    q_err = std::max(q_err, detail::max_of(qe));
    s_err = std::max(s_err, detail::max_of(se));
  }
  results.push_back(make_check("fidelity_oracle", fid_err, 1e-9 * tol));
  results.push_back(make_check("trace_distance_oracle", td_err, 1e-10 * tol));
  results.push_back(make_check("relative_entropy_oracle", re_err, 1e-9 * tol));
  results.push_back(make_check("qcb_oracle_q", q_err, 1e-6 * tol));
  results.push_back(make_check("qcb_oracle_s", s_err, 1e-4 * tol));

  // Isotropic QCB on d <= 4, with α on the image of the η grid.
  {
    double iq = 0.0, is = 0.0;
    for (int d : opt.dims) {
      if (d > 4) continue;
      std::vector<double> alphas;
      std::vector<EigenDecomposition> spectra;
      for (double eta : grid) {
        alphas.push_back(std::clamp(0.5 * d * (1.0 + eta), 0.0, static_cast<double>(d)));
        spectra.push_back(ChernoffKernel::psd_spectrum(isotropic_state(IsotropicParams(alphas.back(), d))));
      }
      std::vector<double> qe(pairs.size()), se(pairs.size());
      parallel_for(
          pairs.size(),
          [&](std::size_t k) {
            const auto [i, j] = pairs[k];
            const QcbResult analytic = qcb_isotropic(alphas[i], alphas[j], d);
            const ChernoffKernel kernel(spectra[i], spectra[j]);
            if (analytic.s_kind == SKind::kLeftLimit) {
              qe[k] = std::abs(analytic.q - kernel(detail::kEndpointProbe));
            } else if (analytic.s_kind == SKind::kRightLimit) {
              qe[k] = std::abs(analytic.q - kernel(1.0 - detail::kEndpointProbe));
            } else {
              const NumericQcb numeric = qcb_numeric(kernel);
              qe[k] = std::abs(analytic.q - numeric.q);
              if (analytic.s_kind == SKind::kInterior) se[k] = std::abs(analytic.s_star - numeric.s_star);
            }
          },
          opt.threads);
      iq = std::max(iq, detail::max_of(qe));
      is = std::max(is, detail::max_of(se));
    }
    results.push_back(make_check("qcb_isotropic_oracle_q", iq, 1e-6 * tol));
    results.push_back(make_check("qcb_isotropic_oracle_s", is, 1e-4 * tol));
  }

  // Stationary-point identities on the interior grid.
  {
    double mirror = 0.0, outside = 0.0, not_minimum = 0.0, substitution = 0.0;
    for (const auto& [i, j] : pairs) {
      const double eta = grid[i], zeta = grid[j];
      if (!detail::interior(eta) || !detail::interior(zeta) || i == j) continue;
      const double s = werner_chernoff_s(eta, zeta);
      mirror = std::max(mirror, std::abs(s + werner_chernoff_s(zeta, eta) - 1.0));
      if (!(s > 0.0 && s < 1.0)) outside += 1.0;
      const double qs = werner_chernoff_qs(eta, zeta, s);
      if (!(werner_chernoff_qs(eta, zeta, s - 1e-3) > qs && werner_chernoff_qs(eta, zeta, s + 1e-3) > qs))
        not_minimum += 1.0;
      for (int d : opt.dims) {
        const double alpha = 0.5 * d * (1.0 + eta), beta = 0.5 * d * (1.0 + zeta);
        const double s_iso = isotropic_chernoff_s(alpha, beta, d);
        const double s_sub = werner_chernoff_s((2.0 * alpha - d) / d, (2.0 * beta - d) / d);
        substitution = std::max(substitution, std::abs(s_iso - s_sub));
      }
    }
    results.push_back(make_check("s_mirror_sum", mirror, 1e-12 * tol));
    results.push_back(make_check("s_interior_violations", outside, 0.0));
    results.push_back(make_check("s_local_minimum_violations", not_minimum, 0.0));
    results.push_back(make_check("isotropic_s_substitution", substitution, 1e-12 * tol));
  }

  {
    double worst = -kPosInfinity;
    for (double eta : detail::eta_grid(0.05))
      for (double zeta : detail::eta_grid(0.05)) {
        if (!detail::interior(eta) || !detail::interior(zeta) || !(std::abs(eta) > std::abs(zeta))) continue;
        worst = std::max(worst, delta_s(eta, zeta));
      }
    results.push_back(make_check("delta_s_negative", worst, 0.0, /*strict=*/true));
  }

  {
    double worst = 0.0;
    for (int k = -9; k <= 9; ++k) {
      const double eta = k / 10.0;
      const double exact = 1.0 / (1.0 - eta * eta);
      worst = std::max(worst, std::abs(qfi_finite_difference(eta, 1e-4) - exact) / exact);
    }
    results.push_back(make_check("qfi_finite_difference", worst, 1e-3 * tol));
  }

  {
    double saturation = 0.0, bias = 0.0;
    const double etas[] = {-0.6, 0.0, 0.3, 0.9};
    for (std::size_t k = 0; k < std::size(etas); ++k) {
      const EstimationReport r =
          simulate_estimation(etas[k], opt.estimation_copies, opt.estimation_trials, opt.seed + k, opt.threads);
      saturation = std::max(saturation, std::abs(r.empirical_variance * r.qfi - 1.0));
      bias = std::max(bias, std::abs(r.empirical_mean - r.eta_true) /
                                std::sqrt(r.empirical_variance / static_cast<double>(r.trials)));
    }
    results.push_back(make_check("qcrb_saturation", saturation, 0.05 * tol));
    results.push_back(make_check("estimator_bias_sigmas", bias, 4.0));
  }

  {
    double identity = 0.0, covariance = 0.0, choi = 0.0;
    const double etas[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int d : {2, 3}) {
      Rng rng = make_rng(opt.seed, 1000 + static_cast<std::uint64_t>(d));
      for (double eta : etas) {
        const WernerParams params(eta, d);
        const DensityMatrix resource = werner_state(params);
        choi = std::max(choi, max_abs_diff(choi_matrix([&](const DensityMatrix& r) { return hw_channel_apply(params, r); }, d)
                                               .matrix(),
                                           resource.matrix()));
        for (int t = 0; t < 20; ++t) {
          const DensityMatrix rho = random_density_matrix(static_cast<std::size_t>(d), rng);
          identity = std::max(identity, trace_distance_numeric(teleport_channel(resource, rho), hw_channel_apply(params, rho)));
          const ComplexMatrix u = random_unitary(static_cast<std::size_t>(d), rng);
          covariance = std::max(covariance, covariance_check(params, u, rho));
        }
      }
    }
    results.push_back(make_check("choi_of_hw_channel", choi, 1e-12 * tol));
    results.push_back(make_check("teleportation_simulation", identity, 1e-10 * tol));
    results.push_back(make_check("teleportation_covariance", covariance, 1e-10 * tol));
  }

  {
    std::vector<double> violation(pairs.size());
    parallel_for(
        pairs.size(),
        [&](std::size_t k) {
          const auto [i, j] = pairs[k];
          double worst = 0.0;
          for (int n = 1; n <= 20; ++n) {
            const DiscriminationBounds b = bounds(grid[i], grid[j], 2, n);
            worst = std::max({worst, b.lower - b.helstrom_block, b.helstrom_block - b.qcb_upper,
                              b.qcb_upper - b.fid_upper, -b.lower, b.fid_upper - 0.5});
          }
          violation[k] = worst;
        },
        opt.threads);
    results.push_back(make_check("discrimination_sandwich", detail::max_of(violation), 1e-10 * tol));
  }

  {
    // 64 x 64 explicit three-copy states on a coarse grid.
    const std::vector<double> coarse = detail::eta_grid(0.5);
    const auto coarse_pairs = detail::all_pairs(coarse.size());
    std::vector<double> err(coarse_pairs.size());
    parallel_for(
        coarse_pairs.size(),
        [&](std::size_t k) {
          const auto [i, j] = coarse_pairs[k];
          const DensityMatrix a = werner_state(WernerParams(coarse[i], 2));
          const DensityMatrix b = werner_state(WernerParams(coarse[j], 2));
          DensityMatrix an = a, bn = b;
          double worst = 0.0;
          for (int n = 1; n <= 3; ++n) {
            if (n > 1) {
              an = tensor_product(an, a);
              bn = tensor_product(bn, b);
            }
            const double explicit_error = 0.5 * (1.0 - trace_distance_numeric(an, bn));
            worst = std::max(worst, std::abs(explicit_error - helstrom_multicopy_werner(coarse[i], coarse[j], 2, n)));
          }
          err[k] = worst;
        },
        opt.threads);
    results.push_back(make_check("helstrom_explicit_copies", detail::max_of(err), 1e-10 * tol));
  }

  return results;
}

}  // namespace wernerlab
