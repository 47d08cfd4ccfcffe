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

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wernerlab/analytic.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/parallel.hpp"
#include "wernerlab/random.hpp"

namespace wernerlab {

/// Optimal adaptive QFI for n uses of the HW channel: n / (1 - η²), +inf at η = ±1.
inline double qfi_werner(double eta, long long n) {
  detail::require_eta(eta, "eta");
  detail::require(n >= 1, ErrorKind::kInvalidParameter, "n must be >= 1");
  const double gap = 1.0 - eta * eta;
  return gap == 0.0 ? kPosInfinity : static_cast<double>(n) / gap;
}

/// Cramér-Rao floor on Var(η̂): 1 / qfi, i.e. (1 - η²) / n.
inline double qcrb_variance(double eta, long long n) { return 1.0 / qfi_werner(eta, n); }

/// Single-copy QFI from the fidelity: 8 [1 - F(W_η, W_{η+δ})] / δ². The
/// one-sided difference carries an O(δ) error.
inline double qfi_finite_difference(double eta, double delta) {
  detail::require(std::abs(eta) < 1.0, ErrorKind::kInvalidParameter, "|eta| must be < 1");
  detail::require(delta > 0.0 && std::abs(eta + delta) <= 1.0, ErrorKind::kInvalidParameter,
                  "need delta > 0 and |eta + delta| <= 1");
  return 8.0 * (1.0 - fidelity_werner(eta, eta + delta)) / (delta * delta);
}

/// Probability that one copy of W_η lands in the symmetric subspace,
/// Tr(W_η (I + F)/2) = (1 + η)/2 for every d.
inline double symmetric_outcome_probability(double eta) {
  detail::require_eta(eta, "eta");
  return 0.5 * (1.0 + eta);
}

struct EstimationReport {
  double eta_true;
  long long n;
  double qfi;
  double qcrb_variance;
  long long trials;
  double empirical_mean;
  double empirical_variance;
  std::uint64_t seed;
};

/// Monte-Carlo run of the block protocol: each trial measures n copies of
/// W_η with the symmetric/antisymmetric projectors and reports
/// η̂ = 2k/n - 1 for k symmetric outcomes. The k are drawn as
/// Binomial(n, (1+η)/2) from a per-trial stream seeded by (seed, trial), so
/// the report depends only on the arguments.
inline EstimationReport simulate_estimation(double eta, long long n, long long trials, std::uint64_t seed,
                                            unsigned threads = 0) {
  detail::require(std::abs(eta) < 1.0, ErrorKind::kInvalidParameter, "|eta| must be < 1");
  detail::require(n >= 1 && trials >= 1, ErrorKind::kInvalidParameter, "n and trials must be >= 1");
  const double p = symmetric_outcome_probability(eta);
  std::vector<double> estimates(static_cast<std::size_t>(trials));
  parallel_for(
      estimates.size(),
      [&](std::size_t t) {
        Rng rng = make_rng(seed, t);
        std::binomial_distribution<long long> draw(n, p);
        const long long k = draw(rng);
        estimates[t] = 2.0 * static_cast<double>(k) / static_cast<double>(n) - 1.0;
      },
      threads);

  double mean = 0.0;
  for (double x : estimates) mean += x;
  mean /= static_cast<double>(trials);
  double ss = 0.0;
  for (double x : estimates) ss += (x - mean) * (x - mean);
  const double variance = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;

  return EstimationReport{eta, n, qfi_werner(eta, n), qcrb_variance(eta, n), trials, mean, variance, seed};
}

}  // namespace wernerlab
