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
#include <limits>
#include <string>
#include <vector>

#include "wernerlab/density.hpp"
#include "wernerlab/eigen.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/matrix.hpp"

// Distance measures computed directly from matrices. These are the oracles
// the closed forms in analytic.hpp are checked against, so nothing here may
// assume the inputs commute or have any Werner structure.

namespace wernerlab {

/// Eigenvalues at or below this count as exact zeros (supports, 0^s := 0).
inline constexpr double kSupportThreshold = 1e-12;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require(rho.dim() == sigma.dim(), ErrorKind::kDimensionMismatch,
          std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()));
}

inline double clamp_eigenvalue(double lambda) {
  require(lambda >= -kNegativeEigenvalueTolerance, ErrorKind::kNotDensityMatrix,
          "negative eigenvalue " + std::to_string(lambda));
  return lambda <= kSupportThreshold ? 0.0 : lambda;
}

inline EigenDecomposition psd_eigh(const ComplexMatrix& m) {
  EigenDecomposition e = eigh(m);
  for (double& x : e.eigenvalues) x = clamp_eigenvalue(x);
  return e;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

inline double log2_or_zero(double x) { return x > 0.0 ? std::log2(x) : 0.0; }

}  // namespace detail

/// Bures fidelity Tr sqrt(sqrt(σ) ρ sqrt(σ)).
inline double bures_fidelity_numeric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma);
  const ComplexMatrix root_sigma =
      detail::psd_eigh(sigma.matrix()).apply([](double x) { return std::sqrt(x); });
  const ComplexMatrix sandwich = detail::hermitian_part(root_sigma * rho.matrix() * root_sigma);
  double f = 0.0;
  for (double lambda : eigh(sandwich).eigenvalues) {
    if (lambda > kSupportThreshold) f += std::sqrt(lambda);
  }
  return std::clamp(f, 0.0, 1.0);
}

/// ½ Σ |λ_i(ρ - σ)|
inline double trace_distance_numeric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma);
  double sum = 0.0;
  for (double lambda : eigh(rho.matrix() - sigma.matrix()).eigenvalues) sum += std::abs(lambda);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

/// Tr ρ(log2 ρ - log2 σ), or +inf when supp ρ ⊄ supp σ.
inline double relative_entropy_numeric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma);
  const EigenDecomposition er = detail::psd_eigh(rho.matrix());
  const EigenDecomposition es = detail::psd_eigh(sigma.matrix());
  const std::size_t n = rho.dim();

  double entropy_term = 0.0;
  for (double p : er.eigenvalues) entropy_term += p * detail::log2_or_zero(p);

  double cross_term = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // <v_j| ρ |v_j>
    const std::vector<Complex> v = es.column(j);
    const std::vector<Complex> rv = rho.matrix() * std::span<const Complex>(v);
    double weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) weight += (std::conj(v[i]) * rv[i]).real();
    const double q = es.eigenvalues[j];
    if (q == 0.0) {
      if (weight > kSupportThreshold) return kInfinity;
      continue;
    }
    cross_term += weight * std::log2(q);
  }
  return std::max(0.0, entropy_term - cross_term);
}

/// Precomputed spectral data for Q_s = Tr(ρ^s σ^{1-s}) = Σ_ij p_i^s q_j^{1-s} |<u_i|v_j>|².
class ChernoffKernel {
 public:
  ChernoffKernel(const DensityMatrix& rho, const DensityMatrix& sigma)
      : ChernoffKernel((detail::require_same_dim(rho, sigma), psd_spectrum(rho)), psd_spectrum(sigma)) {}

  /// From decompositions already passed through psd_spectrum.
  ChernoffKernel(const EigenDecomposition& er, const EigenDecomposition& es) {
    const std::size_t n = er.eigenvalues.size();
    detail::require(es.eigenvalues.size() == n, ErrorKind::kDimensionMismatch, "ChernoffKernel");
    const ComplexMatrix overlap = er.eigenvectors.adjoint() * es.eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
      if (er.eigenvalues[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (es.eigenvalues[j] == 0.0) continue;
        const double w = std::norm(overlap(i, j));
        if (w == 0.0) continue;
        terms_.push_back({std::log(er.eigenvalues[i]), std::log(es.eigenvalues[j]), w});
      }
    }
  }

  /// Eigendecomposition with round-off negatives and sub-threshold values set to 0.
  static EigenDecomposition psd_spectrum(const DensityMatrix& rho) { return detail::psd_eigh(rho.matrix()); }

  /// Q_s for s in the open interval (0, 1).
  double operator()(double s) const {
    detail::require(s > 0.0 && s < 1.0, ErrorKind::kInvalidParameter, "s must lie in (0,1)");
    double q = 0.0;
    for (const Term& t : terms_) q += t.weight * std::exp(s * t.log_p + (1.0 - s) * t.log_q);
    return q;
  }

 private:
  struct Term {
    double log_p;
    double log_q;
    double weight;
  };
  std::vector<Term> terms_;
};

/// Q_s = Tr(ρ^s σ^{1-s}) for 0 < s < 1, with 0^s := 0.
inline double chernoff_trace(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  return ChernoffKernel(rho, sigma)(s);
}

struct NumericQcb {
  double q;
  double s_star;
};

/// inf over the open interval of Q_s: a coarse grid s = 0.005, ..., 0.995,
/// then golden-section refinement around the best grid point down to a
/// bracket of 1e-8. Endpoint limits are not considered.
inline NumericQcb qcb_numeric(const ChernoffKernel& qs) {
  constexpr int kGridPoints = 199;
  constexpr double kGridStep = 0.005;
  constexpr double kBracket = 1e-8;

  int best = 1;
  double best_q = qs(kGridStep);
  for (int k = 2; k <= kGridPoints; ++k) {
    const double q = qs(k * kGridStep);
    if (q < best_q) {
      best_q = q;
      best = k;
    }
  }
  double best_s = best * kGridStep;

  double lo = std::max(0.0, best_s - kGridStep);
  double hi = std::min(1.0, best_s + kGridStep);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = qs(x1);
  double f2 = qs(x2);
  while (hi - lo > kBracket) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = qs(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = qs(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double q_mid = qs(mid);
  if (q_mid <= best_q) {
    best_q = q_mid;
    best_s = mid;
  }
  return {std::min(best_q, 1.0), best_s};
}

inline NumericQcb qcb_numeric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return qcb_numeric(ChernoffKernel(rho, sigma));
}

}  // namespace wernerlab
