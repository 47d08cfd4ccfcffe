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
#include <span>
#include <string>
#include <utility>

#include "wernerlab/eigen.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/matrix.hpp"

namespace wernerlab {

inline constexpr double kTraceTolerance = 1e-12;
/// Eigenvalues in [-kNegativeEigenvalueTolerance, 0) are round-off and clamp to 0.
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) { validate(m_); }

  /// Skips validation; for results that are density matrices by construction
  /// (tensor products, channel outputs of valid inputs).
  static DensityMatrix assume_valid(ComplexMatrix m) { return DensityMatrix(std::move(m), Unchecked{}); }

  /// |ψ><ψ|/<ψ|ψ>
  static DensityMatrix pure(std::span<const Complex> psi) {
    double norm2 = 0.0;
    for (const Complex z : psi) norm2 += std::norm(z);
    detail::require(norm2 > 0.0, ErrorKind::kInvalidParameter, "zero state vector");
    ComplexMatrix m = ComplexMatrix::outer(psi);
    m *= 1.0 / norm2;
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return assume_valid(std::move(m));
  }

  /// Throws unless m satisfies the density-matrix invariants.
  static void validate(const ComplexMatrix& m) {
    detail::require(m.dim() > 0, ErrorKind::kNotDensityMatrix, "empty matrix");
    const double defect = m.hermiticity_defect();
    detail::require(defect <= kHermitianTolerance, ErrorKind::kNonHermitian,
                    "hermiticity defect " + std::to_string(defect));
    const Complex tr = m.trace();
    detail::require(std::abs(tr - 1.0) <= kTraceTolerance, ErrorKind::kNotDensityMatrix,
                    "trace " + std::to_string(tr.real()));
    const double min_eig = eigh(m).eigenvalues.front();
    detail::require(min_eig >= -kNegativeEigenvalueTolerance, ErrorKind::kNotDensityMatrix,
                    "negative eigenvalue " + std::to_string(min_eig));
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

inline DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b,
                                    std::size_t dimension_cap = kDefaultDimensionCap) {
  return DensityMatrix::assume_valid(tensor_product(a.matrix(), b.matrix(), dimension_cap));
}

/// Transpose on the second factor; the result need not be positive.
inline ComplexMatrix partial_transpose(const DensityMatrix& state, std::size_t d) {
  return partial_transpose(state.matrix(), d);
}

}  // namespace wernerlab
