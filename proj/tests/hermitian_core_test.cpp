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

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "wernerlab/density.hpp"
#include "wernerlab/eigen.hpp"
#include "wernerlab/metrics.hpp"
#include "wernerlab/random.hpp"
#include "wernerlab/werner.hpp"

namespace wernerlab {
namespace {

using testing::basis_projector;

DensityMatrix werner(double eta, int d) { return werner_state(WernerParams(eta, d)); }

// ---------------------------------------------------------------- eigh

TEST(Eigh, IdentityAndDiagonal) {
  const EigenDecomposition id = eigh(ComplexMatrix::identity(2));
  EXPECT_EQ(id.eigenvalues, (std::vector<double>{1.0, 1.0}));

  const std::vector<double> diag = {3.0, 1.0};
  const EigenDecomposition e = eigh(ComplexMatrix::diagonal(diag));
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{1.0, 3.0}));
}

TEST(Eigh, SwapOperatorSpectrum) {
  // The two-qubit swap fixes |00>, |11>, |01>+|10> and negates |01>-|10>:
  // characteristic polynomial (λ-1)^3 (λ+1).
  const EigenDecomposition e = eigh(flip_operator(2));
  const std::vector<double> expected = {-1.0, 1.0, 1.0, 1.0};
  ASSERT_EQ(e.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(e.eigenvalues[i], expected[i], 1e-14);
}

TEST(Eigh, RejectsNonHermitian) {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  try {
    eigh(m);
    FAIL() << "expected NonHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonHermitian);
  }
}

TEST(Eigh, ComplexEntries) {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  ComplexMatrix m(2);
  m(0, 0) = 2.0;
  m(1, 1) = 2.0;
  m(0, 1) = Complex(0, 1);
  m(1, 0) = Complex(0, -1);
  const EigenDecomposition e = eigh(m);
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 3.0, 1e-15);
  EXPECT_LE(max_abs_diff(e.reconstruct(), m), 1e-14);
}

TEST(Eigh, RandomHermitianReconstructionProperty) {
  Rng rng = make_rng(7);
  for (std::size_t dim = 2; dim <= 36; ++dim) {
    for (int rep = 0; rep < 2; ++rep) {
      const ComplexMatrix a = random_hermitian(dim, rng);
      const EigenDecomposition e = eigh(a);
      EXPECT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
      EXPECT_LE(max_abs_diff(e.reconstruct(), a), 1e-10) << "dim " << dim;
      EXPECT_LE(unitarity_defect(e.eigenvectors), 1e-10) << "dim " << dim;
    }
  }
}

TEST(Eigh, Deterministic) {
  Rng rng = make_rng(11);
  const ComplexMatrix a = random_hermitian(9, rng);
  const EigenDecomposition x = eigh(a);
  const EigenDecomposition y = eigh(a);
  EXPECT_EQ(x.eigenvalues, y.eigenvalues);
  EXPECT_EQ(x.eigenvectors, y.eigenvectors);
}

// ---------------------------------------------------------------- tensor product

TEST(TensorProduct, Basics) {
  EXPECT_EQ(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  const std::vector<double> a = {1.0, 0.0}, b = {0.0, 1.0}, ab = {0.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(tensor_product(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b)), ComplexMatrix::diagonal(ab));
}

TEST(TensorProduct, IndexConvention) {
  Rng rng = make_rng(3);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix ab = tensor_product(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(ab(i * 3 + k, j * 3 + l), a(i, j) * b(k, l));
}

TEST(TensorProduct, WernerSquareSpectrum) {
  // d = 2, η = 0.2: a+ = 1.2/6 = 0.2 (x3), a- = 0.8/2 = 0.4 (x1), so the
  // two-copy spectrum is 0.04 (x9), 0.08 (x6), 0.16 (x1).
  const DensityMatrix w = werner(0.2, 2);
  const EigenDecomposition e = eigh(tensor_product(w, w).matrix());
  std::vector<double> expected(9, 0.04);
  expected.insert(expected.end(), 6, 0.08);
  expected.push_back(0.16);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(e.eigenvalues[i], expected[i], 1e-14);

  // At η = 0.5 the qubit Werner state is I/4 and every class collapses to 1/16.
  const DensityMatrix half = werner(0.5, 2);
  for (double x : eigh(tensor_product(half, half).matrix()).eigenvalues) EXPECT_NEAR(x, 1.0 / 16.0, 1e-15);
}

TEST(TensorProduct, DimensionCap) {
  try {
    tensor_product(ComplexMatrix::identity(64), ComplexMatrix::identity(65));
    FAIL() << "expected DimensionOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionOverflow);
  }
  EXPECT_EQ(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2), 4).dim(), 4u);
  EXPECT_THROW(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3), 4), Error);
}

// ---------------------------------------------------------------- partial transpose

TEST(PartialTranspose, ProductState) {
  Rng rng = make_rng(5);
  const DensityMatrix rho = random_density_matrix(3, rng);
  const DensityMatrix sigma = random_density_matrix(3, rng);
  const ComplexMatrix expected = tensor_product(rho.matrix(), sigma.matrix().transpose());
  EXPECT_LE(max_abs_diff(partial_transpose(tensor_product(rho, sigma), 3), expected), 1e-15);
}

TEST(PartialTranspose, FlipMapsToMaxEntangledOperator) {
  for (int d = 2; d <= 5; ++d) {
    // <ik| F |jl> = δ_il δ_kj; after transposing the second factor the entry
    // <ik|·|jl> reads <il| F |jk> = δ_ik δ_jl, which is M.
    const std::size_t n = static_cast<std::size_t>(d);
    ComplexMatrix m(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l) m(i * n + k, j * n + l) = (i == k && j == l) ? 1.0 : 0.0;
    EXPECT_EQ(partial_transpose(flip_operator(d), n), m);
    EXPECT_EQ(max_entangled_operator(d), m);
  }
}

TEST(PartialTranspose, WernerToIsotropic) {
  for (int d = 2; d <= 5; ++d)
    for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
      const ComplexMatrix pt = partial_transpose(werner(alpha, d), static_cast<std::size_t>(d));
      EXPECT_LE(max_abs_diff(pt, isotropic_state(IsotropicParams(alpha, d)).matrix()), 1e-12);
    }
}

TEST(PartialTranspose, InvolutionProperty) {
  Rng rng = make_rng(13);
  for (std::size_t d = 2; d <= 6; ++d) {
    const ComplexMatrix a = random_hermitian(d * d, rng);
    EXPECT_LE(max_abs_diff(partial_transpose(partial_transpose(a, d), d), a), 1e-14);
  }
}

TEST(PartialTranspose, DimensionMismatch) {
  try {
    partial_transpose(ComplexMatrix::identity(6), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

// ---------------------------------------------------------------- density matrix

TEST(DensityMatrix, RejectsInvalid) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), Error);  // trace 2
  const std::vector<double> neg = {1.5, -0.5};
  try {
    DensityMatrix{ComplexMatrix::diagonal(neg)};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotDensityMatrix);
  }
  // Round-off sized negatives are accepted.
  const std::vector<double> tiny = {1.0 + 1e-13, -1e-13};
  EXPECT_NO_THROW(DensityMatrix{ComplexMatrix::diagonal(tiny)});
}

// ---------------------------------------------------------------- fidelity

TEST(BuresFidelity, Examples) {
  Rng rng = make_rng(17);
  const DensityMatrix rho = random_density_matrix(4, rng);
  EXPECT_NEAR(bures_fidelity_numeric(rho, rho), 1.0, 1e-12);

  const DensityMatrix zero = DensityMatrix(basis_projector(2, 0));
  const DensityMatrix one = DensityMatrix(basis_projector(2, 1));
  EXPECT_NEAR(bures_fidelity_numeric(zero, one), 0.0, 1e-15);

  const double closed = (std::sqrt(1.5) + std::sqrt(0.5)) / 2.0;
  EXPECT_NEAR(bures_fidelity_numeric(werner(0.5, 3), werner(0.0, 3)), closed, 1e-12);
  EXPECT_NEAR(closed, 0.965926, 1e-6);
}

TEST(BuresFidelity, SymmetricOnRandomPairs) {
  Rng rng = make_rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rep % 5);
    const DensityMatrix a = random_density_matrix(dim, rng, 1 + static_cast<std::size_t>(rep % 3));
    const DensityMatrix b = random_density_matrix(dim, rng);
    EXPECT_NEAR(bures_fidelity_numeric(a, b), bures_fidelity_numeric(b, a), 1e-10);
  }
}

TEST(BuresFidelity, DimensionMismatch) {
  EXPECT_THROW(bures_fidelity_numeric(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(3)), Error);
}

// ---------------------------------------------------------------- trace distance

TEST(TraceDistance, Examples) {
  Rng rng = make_rng(23);
  const DensityMatrix rho = random_density_matrix(3, rng);
  EXPECT_NEAR(trace_distance_numeric(rho, rho), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance_numeric(DensityMatrix(basis_projector(2, 0)), DensityMatrix(basis_projector(2, 1))), 1.0,
              1e-15);
}

TEST(TraceDistance, WernerPairsMatchClassSum) {
  // ½(m+|Δa+| + m-|Δa-|) = ½(|η-ζ|/2 + |η-ζ|/2) = |η-ζ|/2.
  for (int d = 2; d <= 5; ++d)
    for (double eta : testing::eta_grid(4))
      for (double zeta : testing::eta_grid(4))
        EXPECT_NEAR(trace_distance_numeric(werner(eta, d), werner(zeta, d)), std::abs(eta - zeta) / 2.0, 1e-12);
}

TEST(DistanceMeasures, FuchsVanDeGraafProperty) {
  Rng rng = make_rng(29);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rep % 4);
    const DensityMatrix a = random_density_matrix(dim, rng, 1 + static_cast<std::size_t>(rep % dim));
    const DensityMatrix b = random_density_matrix(dim, rng);
    const double f = bures_fidelity_numeric(a, b);
    const double dist = trace_distance_numeric(a, b);
    EXPECT_LE(1.0 - f, dist + 1e-12);
    EXPECT_LE(dist, std::sqrt(1.0 - f * f) + 1e-12);
  }
}

// ---------------------------------------------------------------- relative entropy

TEST(RelativeEntropy, Examples) {
  Rng rng = make_rng(31);
  const DensityMatrix rho = random_density_matrix(3, rng);
  EXPECT_NEAR(relative_entropy_numeric(rho, rho), 0.0, 1e-12);

  const double expected = 0.75 * std::log2(1.5) + 0.25 * std::log2(0.5);
  for (int d = 2; d <= 5; ++d) EXPECT_NEAR(relative_entropy_numeric(werner(0.5, d), werner(0.0, d)), expected, 1e-12);
  EXPECT_NEAR(expected, 0.188722, 1e-6);

  for (int d = 2; d <= 4; ++d) EXPECT_TRUE(std::isinf(relative_entropy_numeric(werner(0.0, d), werner(1.0, d))));
  // The reverse direction is finite: supp W_1 sits inside the full-rank W_0.
  EXPECT_NEAR(relative_entropy_numeric(werner(1.0, 3), werner(0.0, 3)), 1.0, 1e-12);
}

// ---------------------------------------------------------------- QCB

TEST(QcbNumeric, Examples) {
  const DensityMatrix w = werner(0.3, 4);
  const NumericQcb same = qcb_numeric(w, w);
  EXPECT_NEAR(same.q, 1.0, 1e-12);
  const ChernoffKernel kernel(w, w);
  for (int k = 1; k < 200; ++k) EXPECT_NEAR(kernel(k * 0.005), 1.0, 1e-12);

  // Equal-magnitude pair: s = 1/2 and Q = sqrt(0.75 * 0.25) * 2 = sqrt(0.75).
  const NumericQcb r = qcb_numeric(werner(0.5, 2), werner(-0.5, 2));
  EXPECT_NEAR(r.q, std::sqrt(0.75), 1e-9);
  EXPECT_NEAR(r.s_star, 0.5, 1e-6);
  EXPECT_NEAR(r.q, 0.866025, 1e-6);
}

TEST(QcbNumeric, MirrorSymmetryProperty) {
  Rng rng = make_rng(37);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rep % 4);
    const DensityMatrix a = random_density_matrix(dim, rng);
    const DensityMatrix b = random_density_matrix(dim, rng);
    const NumericQcb ab = qcb_numeric(a, b);
    const NumericQcb ba = qcb_numeric(b, a);
    EXPECT_NEAR(ab.q, ba.q, 1e-7);
    EXPECT_NEAR(ab.s_star + ba.s_star, 1.0, 1e-6);
    EXPECT_GT(ab.s_star, 0.0);
    EXPECT_LT(ab.s_star, 1.0);
  }
}

TEST(QcbNumeric, RankDeficientUsesZeroPowerConvention) {
  // W_{1,3} has a zero class; Q_s = ((1+ζ)/2)^{1-s} for ζ = 0 as long as 0^s = 0.
  const ChernoffKernel kernel(werner(1.0, 3), werner(0.0, 3));
  for (double s : {0.01, 0.3, 0.9}) EXPECT_NEAR(kernel(s), std::pow(0.5, 1.0 - s), 1e-12);
  EXPECT_THROW(kernel(0.0), Error);
  EXPECT_THROW(kernel(1.0), Error);
}

}  // namespace
}  // namespace wernerlab
