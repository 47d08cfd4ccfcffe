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

#include <cmath>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "wernerlab/metrology.hpp"
#include "wernerlab/werner.hpp"

namespace wernerlab {
namespace {

TEST(Qfi, Examples) {
  EXPECT_EQ(qfi_werner(0.0, 100), 100.0);
  EXPECT_NEAR(qcrb_variance(0.6, 10), 0.064, 1e-15);
  EXPECT_TRUE(std::isinf(qfi_werner(1.0, 5)));
  EXPECT_EQ(qcrb_variance(-1.0, 5), 0.0);
  EXPECT_THROW(qfi_werner(0.0, 0), Error);
  EXPECT_THROW(qfi_werner(1.2, 3), Error);
}

TEST(Qfi, LinearInCopies) {
  for (double eta : testing::interior_grid(10))
    for (long long n : {1LL, 7LL, 1000LL}) EXPECT_NEAR(qfi_werner(eta, n), n * qfi_werner(eta, 1), 1e-9 * n);
}

TEST(QfiFiniteDifference, Examples) {
  EXPECT_NEAR(qfi_finite_difference(0.0, 1e-4), 1.0, 1e-3);
  EXPECT_NEAR(qfi_finite_difference(0.9, 1e-5), 1.0 / (1.0 - 0.81), 1e-3 / (1.0 - 0.81));
}

TEST(QfiFiniteDifference, GridAgreement) {
  for (int k = -9; k <= 9; ++k) {
    const double eta = k / 10.0;
    const double exact = 1.0 / (1.0 - eta * eta);
    EXPECT_LE(std::abs(qfi_finite_difference(eta, 1e-4) - exact) / exact, 1e-3) << eta;
  }
}

TEST(QfiFiniteDifference, FirstOrderConvergence) {
  const double exact = 1.0 / 0.75;
  const double e1 = std::abs(qfi_finite_difference(0.5, 1e-3) - exact);
  const double e2 = std::abs(qfi_finite_difference(0.5, 5e-4) - exact);
  EXPECT_NEAR(e1 / e2, 2.0, 0.05);
  EXPECT_THROW(qfi_finite_difference(0.95, 0.1), Error);
}

TEST(SymmetricOutcome, MatchesProjectorExpectation) {
  for (int d = 2; d <= 4; ++d)
    for (double eta : testing::eta_grid(10)) {
      const std::size_t n = static_cast<std::size_t>(d * d);
      const ComplexMatrix proj = (ComplexMatrix::identity(n) + flip_operator(d)) * 0.5;
      const double expected = (werner_state(WernerParams(eta, d)).matrix() * proj).trace().real();
      EXPECT_NEAR(symmetric_outcome_probability(eta), expected, 1e-14);
    }
}

TEST(Estimation, Example) {
  // Binomial oracle: Var(2k/n - 1) = 4 p (1-p) / n = (1 - η²)/n = 9.1e-4.
  const EstimationReport r = simulate_estimation(0.3, 1000, 10000, 20180);
  EXPECT_NEAR(r.empirical_variance, 9.1e-4, 0.05 * 9.1e-4);
  EXPECT_EQ(r.qfi, qfi_werner(0.3, 1000));
  EXPECT_EQ(r.trials, 10000);
}

TEST(Estimation, NearDeterministicLimit) {
  const EstimationReport r = simulate_estimation(0.999, 1000, 10000, 3);
  EXPECT_NEAR(r.empirical_variance, (1.0 - 0.999 * 0.999) / 1000.0, 0.1 * (1.0 - 0.999 * 0.999) / 1000.0);
  EXPECT_LT(r.empirical_variance, 0.01 / 1000.0);
}

TEST(Estimation, Saturation) {
  for (double eta : {-0.6, 0.0, 0.3, 0.9}) {
    const EstimationReport r = simulate_estimation(eta, 1000, 10000, 77);
    EXPECT_GE(r.empirical_variance * r.qfi, 0.95) << eta;
    EXPECT_LE(r.empirical_variance * r.qfi, 1.05) << eta;
  }
}

TEST(Estimation, Unbiased) {
  for (double eta : {-0.8, -0.2, 0.4, 0.7}) {
    const EstimationReport r = simulate_estimation(eta, 500, 20000, 101);
    const double sigma = std::sqrt(r.qcrb_variance / static_cast<double>(r.trials));
    EXPECT_LE(std::abs(r.empirical_mean - eta), 4.0 * sigma) << eta;
  }
}

TEST(Estimation, StandardQuantumLimitScaling) {
  const EstimationReport a = simulate_estimation(0.2, 100, 20000, 9);
  const EstimationReport b = simulate_estimation(0.2, 1000, 20000, 9);
  EXPECT_NEAR(a.empirical_variance / b.empirical_variance, 10.0, 0.5);
}

TEST(Estimation, DeterministicAcrossThreadCounts) {
  const EstimationReport one = simulate_estimation(0.3, 200, 5000, 42, 1);
  const EstimationReport four = simulate_estimation(0.3, 200, 5000, 42, 4);
  EXPECT_EQ(one.empirical_mean, four.empirical_mean);
  EXPECT_EQ(one.empirical_variance, four.empirical_variance);
  const EstimationReport other = simulate_estimation(0.3, 200, 5000, 43, 1);
  EXPECT_NE(one.empirical_mean, other.empirical_mean);
}

TEST(Estimation, Errors) {
  EXPECT_THROW(simulate_estimation(1.0, 10, 10, 1), Error);
  EXPECT_THROW(simulate_estimation(0.0, 0, 10, 1), Error);
  EXPECT_THROW(simulate_estimation(0.0, 10, 0, 1), Error);
}

}  // namespace
}  // namespace wernerlab
