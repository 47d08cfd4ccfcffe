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
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "wernerlab/error.hpp"
#include "wernerlab/matrix.hpp"

namespace wernerlab {

/// Hermiticity tolerance accepted by eigh, max |A_ij - conj(A_ji)|.
inline constexpr double kHermitianTolerance = 1e-12;

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below this fraction of ‖A‖_F.
  double off_diagonal_threshold = 1e-13;
  int max_sweeps = 100;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, eigenvectors are the columns

  std::vector<Complex> column(std::size_t j) const {
    std::vector<Complex> v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, j);
    return v;
  }

  /// V diag(f(λ)) V†
  ComplexMatrix apply(const std::function<double(double)>& f) const {
    const std::size_t n = eigenvectors.dim();
    std::vector<double> fl(n);
    std::transform(eigenvalues.begin(), eigenvalues.end(), fl.begin(), f);
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (fl[k] == 0.0) continue;
          acc += eigenvectors(i, k) * fl[k] * std::conj(eigenvectors(j, k));
        }
        out(i, j) = acc;
        out(j, i) = std::conj(acc);
      }
    for (std::size_t i = 0; i < n; ++i) out(i, i) = out(i, i).real();
    return out;
  }

  ComplexMatrix reconstruct() const {
    return apply([](double x) { return x; });
  }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary J = [[c, s e], [-s conj(e), c]] on
// columns p and q, where e = a(p,q)/|a(p,q)|: a <- J† a J, v <- v J.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex e = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex se = s * e;
  const Complex sec = s * std::conj(e);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sec * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = sec * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sec * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Eigenvalues come back ascending; ties keep their column order,
/// so the output is a deterministic function of the input.
inline EigenDecomposition eigh(const ComplexMatrix& matrix, const JacobiOptions& options = {}) {
  const double defect = matrix.hermiticity_defect();
  detail::require(defect <= kHermitianTolerance, ErrorKind::kNonHermitian,
                  "hermiticity defect " + std::to_string(defect));
  const std::size_t n = matrix.dim();
  ComplexMatrix a = matrix;
  // Work on the exactly Hermitian part.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = detail::frobenius_norm(a);
  const double stop = options.off_diagonal_threshold * scale;

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace wernerlab
