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
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <type_traits>
#include <string>
#include <vector>

#include "wernerlab/density.hpp"
#include "wernerlab/eigen.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/matrix.hpp"

namespace wernerlab {

namespace detail {

inline void require_local_dim(int d) {
  require(d >= 2, ErrorKind::kInvalidDimension, "local dimension " + std::to_string(d) + " < 2");
}

}  // namespace detail

/// Werner state parameters: eta = Tr(W F) in [-1, 1], local dimension d >= 2.
struct WernerParams {
  double eta;
  int d;

  WernerParams(double eta_, int d_) : eta(eta_), d(d_) {
    detail::require_local_dim(d);
    detail::require(eta >= -1.0 && eta <= 1.0, ErrorKind::kInvalidParameter,
                    "eta = " + std::to_string(eta) + " outside [-1, 1]");
  }
};

/// Isotropic state parameters: alpha = Tr(Ω M) in [0, d], d >= 2.
struct IsotropicParams {
  double alpha;
  int d;

  IsotropicParams(double alpha_, int d_) : alpha(alpha_), d(d_) {
    detail::require_local_dim(d);
    detail::require(alpha >= 0.0 && alpha <= d, ErrorKind::kInvalidParameter,
                    "alpha = " + std::to_string(alpha) + " outside [0, d]");
  }

  /// Weight of the maximally mixed part in Ω = p I/d² + (1 - p)|Φ><Φ|.
  double p() const { return d * (d - alpha) / (static_cast<double>(d) * d - 1.0); }

  static IsotropicParams from_p(double p, int d) {
    detail::require_local_dim(d);
    return IsotropicParams(d - p * (static_cast<double>(d) * d - 1.0) / d, d);
  }
};

struct SpectralClass {
  double eigenvalue;
  int multiplicity;
};

/// Spectrum of a two-class commuting family. Zero-eigenvalue classes are kept.
struct SpectrumPair {
  std::array<SpectralClass, 2> classes;

  int total_multiplicity() const { return classes[0].multiplicity + classes[1].multiplicity; }
  double total_weight() const {
    return classes[0].multiplicity * classes[0].eigenvalue + classes[1].multiplicity * classes[1].eigenvalue;
  }
  /// Eigenvalues with multiplicity, ascending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const SpectralClass& c : classes) out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), c.eigenvalue);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// F = Σ |ij><ji|
inline ComplexMatrix flip_operator(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix f(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i * n + j, j * n + i) = 1.0;
  return f;
}

/// M = Σ |ii><jj| = d |Φ><Φ|
inline ComplexMatrix max_entangled_operator(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i * n + i, j * n + j) = 1.0;
  return m;
}

/// |Φ> = d^{-1/2} Σ |ii>
inline std::vector<Complex> max_entangled_vector(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  std::vector<Complex> phi(n * n);
  for (std::size_t i = 0; i < n; ++i) phi[i * n + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return phi;
}

/// W = [(d - η) I + (dη - 1) F] / (d³ - d)
inline DensityMatrix werner_state(const WernerParams& params) {
  const double d = params.d;
  ComplexMatrix w = ComplexMatrix::identity(static_cast<std::size_t>(params.d * params.d)) * (d - params.eta) +
                    flip_operator(params.d) * (d * params.eta - 1.0);
  w *= 1.0 / (d * d * d - d);
  return DensityMatrix(std::move(w));
}

/// Symmetric class ((1+η)/[d(d+1)], d(d+1)/2) then antisymmetric class
/// ((1-η)/[d(d-1)], d(d-1)/2).
inline SpectrumPair werner_spectrum(const WernerParams& params) {
  const int d = params.d;
  const double dd = d;
  return SpectrumPair{{SpectralClass{(1.0 + params.eta) / (dd * (dd + 1.0)), d * (d + 1) / 2},
                       SpectralClass{(1.0 - params.eta) / (dd * (dd - 1.0)), d * (d - 1) / 2}}};
}

/// Ω = [(d - α) I + (dα - 1) M] / (d³ - d)
inline DensityMatrix isotropic_state(const IsotropicParams& params) {
  const double d = params.d;
  ComplexMatrix w = ComplexMatrix::identity(static_cast<std::size_t>(params.d * params.d)) * (d - params.alpha) +
                    max_entangled_operator(params.d) * (d * params.alpha - 1.0);
  w *= 1.0 / (d * d * d - d);
  return DensityMatrix(std::move(w));
}

/// Ω = p I/d² + (1 - p)|Φ><Φ|, the alternative parametrization.
inline DensityMatrix isotropic_state_from_p(double p, int d) {
  detail::require_local_dim(d);
  const double dd = d;
  detail::require(p >= 0.0 && p <= dd * dd / (dd * dd - 1.0), ErrorKind::kInvalidParameter,
                  "p = " + std::to_string(p) + " outside [0, d²/(d²-1)]");
  const std::vector<Complex> phi = max_entangled_vector(d);
  ComplexMatrix w = ComplexMatrix::identity(static_cast<std::size_t>(d * d)) * (p / (dd * dd)) +
                    ComplexMatrix::outer(phi) * (1.0 - p);
  return DensityMatrix(std::move(w));
}

/// Maximally entangled class (α/d, 1) then its complement ((d-α)/[d(d²-1)], d²-1).
///
/// Note: the eigenvalue on |Φ> is α/d. It is sometimes quoted as η/d, which
/// only agrees under the identification η = α; the constructed-matrix tests
/// pin the α/d form.
inline SpectrumPair isotropic_spectrum(const IsotropicParams& params) {
  const int d = params.d;
  const double dd = d;
  return SpectrumPair{{SpectralClass{params.alpha / dd, 1},
                       SpectralClass{(dd - params.alpha) / (dd * (dd * dd - 1.0)), d * d - 1}}};
}

/// True when the partial transpose has no eigenvalue below -1e-10.
inline bool has_positive_partial_transpose(const DensityMatrix& state, int d) {
  detail::require_local_dim(d);
  return eigh(partial_transpose(state, static_cast<std::size_t>(d))).eigenvalues.front() >=
         -kNegativeEigenvalueTolerance;
}

inline DensityMatrix transpose(const DensityMatrix& rho) { return DensityMatrix::assume_valid(rho.matrix().transpose()); }

namespace detail {

inline void require_input_dim(const DensityMatrix& rho, int d) {
  require(rho.dim() == static_cast<std::size_t>(d), ErrorKind::kDimensionMismatch,
          "input of dimension " + std::to_string(rho.dim()) + " for a channel on dimension " + std::to_string(d));
}

// [(d - x) I + (dx - 1) X] / (d² - 1)
inline DensityMatrix twirl_mix(double x, int d, const ComplexMatrix& m) {
  const double dd = d;
  ComplexMatrix out = ComplexMatrix::identity(static_cast<std::size_t>(d)) * (dd - x) + m * (dd * x - 1.0);
  out *= 1.0 / (dd * dd - 1.0);
  return DensityMatrix::assume_valid(std::move(out));
}

}  // namespace detail

/// Holevo-Werner channel: ρ -> [(d - η) I + (dη - 1) ρ^T] / (d² - 1).
inline DensityMatrix hw_channel_apply(const WernerParams& params, const DensityMatrix& rho) {
  detail::require_input_dim(rho, params.d);
  return detail::twirl_mix(params.eta, params.d, rho.matrix().transpose());
}

/// Depolarizing channel: ρ -> [(d - α) I + (dα - 1) ρ] / (d² - 1).
inline DensityMatrix depolarizing_apply(const IsotropicParams& params, const DensityMatrix& rho) {
  detail::require_input_dim(rho, params.d);
  return detail::twirl_mix(params.alpha, params.d, rho.matrix());
}

template <typename F>
concept Channel = std::invocable<const F&, const DensityMatrix&> &&
                  std::convertible_to<std::invoke_result_t<const F&, const DensityMatrix&>, DensityMatrix>;

/// (I ⊗ E)(|Φ><Φ|) for a channel on dimension d, given only its action on
/// density matrices. Off-diagonal inputs |i><j| are recovered by
/// polarization: |i><j| = ½[A + iB - (1+i)(|i><i| + |j><j|)] with
/// A = (|i>+|j>)(<i|+<j|) and B = (|i>+i|j>)(<i|-i<j|).
template <Channel E>
DensityMatrix choi_matrix(const E& channel, int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  auto apply = [&](const std::vector<Complex>& psi) {
    const DensityMatrix out = channel(DensityMatrix::pure(psi));
    detail::require(out.dim() == n, ErrorKind::kDimensionMismatch, "channel output dimension");
    return out.matrix();
  };
  auto basis = [&](std::size_t i) {
    std::vector<Complex> e(n);
    e[i] = 1.0;
    return e;
  };

  std::vector<ComplexMatrix> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(apply(basis(i)));

  ComplexMatrix choi(n * n);
  auto place = [&](std::size_t i, std::size_t j, const ComplexMatrix& block) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) choi(i * n + k, j * n + l) = block(k, l) / static_cast<double>(d);
  };
  const Complex I{0.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    place(i, i, diag[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Complex> a = basis(i);
      a[j] = 1.0;
      std::vector<Complex> b = basis(i);
      b[j] = I;
      // pure() normalizes, so restore the factor |a|² = |b|² = 2.
      ComplexMatrix ij = (apply(a) * 2.0 + apply(b) * (2.0 * I) - (diag[i] + diag[j]) * (1.0 + I)) * 0.5;
      place(i, j, ij);
      place(j, i, ij.adjoint());
    }
  }
  return DensityMatrix(std::move(choi));
}

}  // namespace wernerlab
