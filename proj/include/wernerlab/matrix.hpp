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
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wernerlab/error.hpp"

namespace wernerlab {

using Complex = std::complex<double>;

/// Largest dimension a tensor product may produce unless the caller raises it.
inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Dense square complex matrix, row-major. Two-qudit operators use the
/// computational ordering |ij> -> i*d + j throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    detail::require(data_.size() == dim_ * dim_, ErrorKind::kDimensionMismatch,
                    "entry count " + std::to_string(data_.size()) + " is not " + std::to_string(dim_) + "^2");
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  /// |v><v| for a (not necessarily normalized) vector.
  static ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * dim_ + col]; }

  Complex trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix out(dim_);
    std::transform(data_.begin(), data_.end(), out.data_.begin(), [](Complex z) { return std::conj(z); });
    return out;
  }

  /// Largest |A_ij - conj(A_ji)|.
  double hermiticity_defect() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
    check_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
    check_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex scale) noexcept {
    for (auto& z : data_) z *= scale;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
    detail::require(v.size() == a.dim_, ErrorKind::kDimensionMismatch, "matrix-vector size mismatch");
    std::vector<Complex> out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_same_dim(const ComplexMatrix& other) const {
    detail::require(dim_ == other.dim_, ErrorKind::kDimensionMismatch,
                    std::to_string(dim_) + " vs " + std::to_string(other.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// max_ij |A_ij - B_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require(a.dim() == b.dim(), ErrorKind::kDimensionMismatch, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

/// (a ⊗ b)[(i*db + k), (j*db + l)] = a[i][j] * b[k][l]
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                                    std::size_t dimension_cap = kDefaultDimensionCap) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  detail::require(db == 0 || da <= dimension_cap / db, ErrorKind::kDimensionOverflow,
                  std::to_string(da) + "*" + std::to_string(db) + " exceeds cap " + std::to_string(dimension_cap));
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

inline std::vector<Complex> tensor_product(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const Complex x : a)
    for (const Complex y : b) out.push_back(x * y);
  return out;
}

namespace detail {

inline std::size_t checked_local_dim(std::size_t total, std::size_t d) {
  require(d >= 1 && total == d * d, ErrorKind::kDimensionMismatch,
          "operator of dimension " + std::to_string(total) + " is not on two qudits of dimension " + std::to_string(d));
  return d;
}

}  // namespace detail

/// Transpose on the second tensor factor of a d^2-dimensional operator.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d) {
  detail::checked_local_dim(m.dim(), d);
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) out(i * d + k, j * d + l) = m(i * d + l, j * d + k);
  return out;
}

/// Trace over the first factor of an operator on C^{d_first} ⊗ C^{d_second}.
inline ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t d_first, std::size_t d_second) {
  detail::require(m.dim() == d_first * d_second, ErrorKind::kDimensionMismatch, "partial_trace_first");
  ComplexMatrix out(d_second);
  for (std::size_t i = 0; i < d_first; ++i)
    for (std::size_t k = 0; k < d_second; ++k)
      for (std::size_t l = 0; l < d_second; ++l) out(k, l) += m(i * d_second + k, i * d_second + l);
  return out;
}

/// Trace over the second factor of an operator on C^{d_first} ⊗ C^{d_second}.
inline ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d_first, std::size_t d_second) {
  detail::require(m.dim() == d_first * d_second, ErrorKind::kDimensionMismatch, "partial_trace_second");
  ComplexMatrix out(d_first);
  for (std::size_t i = 0; i < d_first; ++i)
    for (std::size_t j = 0; j < d_first; ++j)
      for (std::size_t k = 0; k < d_second; ++k) out(i, j) += m(i * d_second + k, j * d_second + k);
  return out;
}

/// Largest entry of U†U - I.
inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

}  // namespace wernerlab
