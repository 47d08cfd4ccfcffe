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
#include <numbers>
#include <string>
#include <string_view>

#include "wernerlab/error.hpp"
#include "wernerlab/werner.hpp"

// Closed forms for pairs of Werner (and isotropic) states. Two Werner states
// of the same dimension commute, and every quantity here reduces to the two
// class weights (1 ± η)/2, which is why none of them depends on d.

namespace wernerlab {

inline constexpr double kPosInfinity = std::numeric_limits<double>::infinity();

/// Gap below which η and ζ are treated as equal (the interior s formula is 0/0 there).
inline constexpr double kDegenerateGap = 1e-14;

enum class SKind { kInterior, kLeftLimit, kRightLimit, kDegenerateHalf };

inline std::string_view to_string(SKind kind) {
  switch (kind) {
    case SKind::kInterior: return "interior";
    case SKind::kLeftLimit: return "left_limit";
    case SKind::kRightLimit: return "right_limit";
    case SKind::kDegenerateHalf: return "degenerate_half";
  }
  return "unknown";
}

struct QcbResult {
  double q;
  double s_star;
  SKind s_kind;
};

namespace detail {

inline void require_eta(double x, std::string_view name) {
  require(x >= -1.0 && x <= 1.0, ErrorKind::kInvalidParameter,
          std::string(name) + " = " + std::to_string(x) + " outside [-1, 1]");
}

inline void require_alpha(double x, int d, std::string_view name) {
  require_local_dim(d);
  require(x >= 0.0 && x <= d, ErrorKind::kInvalidParameter,
          std::string(name) + " = " + std::to_string(x) + " outside [0, d]");
}

// x log2(x / y) with 0 log(0/y) = 0 and x log(x/0) = +inf for x > 0.
inline double kl_term(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return kPosInfinity;
  return x * std::log2(x / y);
}

// Interior minimizer of k P^s + (1-k) M^s given ln P, ln M and k = weight of the P branch.
inline double two_class_argmin(double log_p, double log_m, double k_plus, double k_minus) {
  return std::log(-k_minus * log_m / (k_plus * log_p)) / (log_p - log_m);
}

}  // namespace detail

namespace detail {

struct Compensated {
  double hi;
  double lo;
};

// sqrt(x*y) as hi + lo, with the product and root residuals recovered by fma.
inline Compensated sqrt_product(double x, double y) {
  const double p = x * y;
  if (p <= 0.0) return {0.0, 0.0};
  const double p_lo = std::fma(x, y, -p);
  const double r = std::sqrt(p);
  return {r, (std::fma(-r, r, p) + p_lo) / (2.0 * r)};
}

// (a.hi + a.lo) + (b.hi + b.lo) rounded once.
inline double compensated_sum(Compensated a, Compensated b) {
  const double s = a.hi + b.hi;
  const double bb = s - a.hi;
  const double err = (a.hi - (s - bb)) + (b.hi - bb);
  return s + (err + a.lo + b.lo);
}

}  // namespace detail

/// F(W_η, W_ζ) = [sqrt((1+η)(1+ζ)) + sqrt((1-η)(1-ζ))] / 2, evaluated with
/// compensated arithmetic so the result is (almost always) correctly rounded.
inline double fidelity_werner(double eta, double zeta) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  const double f = 0.5 * detail::compensated_sum(detail::sqrt_product(1.0 + eta, 1.0 + zeta),
                                                 detail::sqrt_product(1.0 - eta, 1.0 - zeta));
  return std::min(1.0, f);
}

/// F(Ω_α, Ω_β) = [sqrt(αβ) + sqrt((d-α)(d-β))] / d
inline double fidelity_isotropic(double alpha, double beta, int d) {
  detail::require_alpha(alpha, d, "alpha");
  detail::require_alpha(beta, d, "beta");
  return std::min(1.0, (std::sqrt(alpha * beta) + std::sqrt((d - alpha) * (d - beta))) / d);
}

/// S(W_η || W_ζ) in bits; +inf when ζ = ±1 and η ≠ ζ.
inline double relative_entropy_werner(double eta, double zeta) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  if (eta == zeta) return 0.0;
  const double plus = detail::kl_term(0.5 * (1.0 + eta), 0.5 * (1.0 + zeta));
  const double minus = detail::kl_term(0.5 * (1.0 - eta), 0.5 * (1.0 - zeta));
  return std::max(0.0, plus + minus);
}

/// ΔS = S(W_η||W_ζ) - S(W_ζ||W_η), both parameters strictly inside (-1, 1).
inline double delta_s(double eta, double zeta) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  detail::require(std::abs(eta) < 1.0 && std::abs(zeta) < 1.0, ErrorKind::kSupportMismatch,
                  "delta_s needs full-rank states, got an endpoint parameter");
  const double mean = 0.5 * (eta + zeta);
  return (1.0 + mean) * std::log2((1.0 + eta) / (1.0 + zeta)) + (1.0 - mean) * std::log2((1.0 - eta) / (1.0 - zeta));
}

/// (ln √2) min{S(W_η||W_ζ), S(W_ζ||W_η)}, always the true minimum.
inline double s_quantity(double eta, double zeta) {
  const double forward = relative_entropy_werner(eta, zeta);
  const double backward = relative_entropy_werner(zeta, eta);
  return std::log(std::numbers::sqrt2) * std::min(forward, backward);
}

/// The same quantity selected by magnitude: the forward direction when
/// |η| >= |ζ|, else the backward one. Agrees with s_quantity wherever ΔS has
/// the sign that selection assumes.
inline double s_quantity_piecewise(double eta, double zeta) {
  const double bits = std::abs(eta) >= std::abs(zeta) ? relative_entropy_werner(eta, zeta)
                                                      : relative_entropy_werner(zeta, eta);
  return std::log(std::numbers::sqrt2) * bits;
}

/// Q_s for Werner states: (1+ζ)/2 P^s + (1-ζ)/2 M^s with P = (1+η)/(1+ζ),
/// M = (1-η)/(1-ζ); 0 < s < 1 and 0^s = 0.
inline double werner_chernoff_qs(double eta, double zeta, double s) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  detail::require(s > 0.0 && s < 1.0, ErrorKind::kInvalidParameter, "s must lie in (0,1)");
  // Σ p^s q^{1-s} over the two classes, written in the class weights.
  auto term = [s](double p, double q) { return (p == 0.0 || q == 0.0) ? 0.0 : std::pow(p, s) * std::pow(q, 1.0 - s); };
  return term(0.5 * (1.0 + eta), 0.5 * (1.0 + zeta)) + term(0.5 * (1.0 - eta), 0.5 * (1.0 - zeta));
}

/// Interior stationary point s_{η,ζ} of Q_s, for η ≠ ζ with both in (-1, 1).
inline double werner_chernoff_s(double eta, double zeta) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  detail::require(std::abs(eta) < 1.0 && std::abs(zeta) < 1.0 && std::abs(eta - zeta) > kDegenerateGap,
                  ErrorKind::kInvalidParameter, "interior s needs eta != zeta, both inside (-1, 1)");
  const double log_p = std::log1p(eta) - std::log1p(zeta);
  const double log_m = std::log1p(-eta) - std::log1p(-zeta);
  return detail::two_class_argmin(log_p, log_m, 0.5 * (1.0 + zeta), 0.5 * (1.0 - zeta));
}

/// Quantum Chernoff bound between W_η and W_ζ with the infimum located exactly:
/// s = 1/2 when η = ζ, s -> 0+ when η = ±1, s -> 1- when ζ = ±1, otherwise
/// the interior stationary point.
inline QcbResult qcb_werner(double eta, double zeta) {
  detail::require_eta(eta, "eta");
  detail::require_eta(zeta, "zeta");
  if (std::abs(eta - zeta) <= kDegenerateGap) return {1.0, 0.5, SKind::kDegenerateHalf};
  // Only the class where W_η is supported survives as s -> 0+.
  if (eta == 1.0) return {0.5 * (1.0 + zeta), 0.0, SKind::kLeftLimit};
  if (eta == -1.0) return {0.5 * (1.0 - zeta), 0.0, SKind::kLeftLimit};
  if (zeta == 1.0) return {0.5 * (1.0 + eta), 1.0, SKind::kRightLimit};
  if (zeta == -1.0) return {0.5 * (1.0 - eta), 1.0, SKind::kRightLimit};
  const double s = werner_chernoff_s(eta, zeta);
  return {std::min(1.0, werner_chernoff_qs(eta, zeta, s)), s, SKind::kInterior};
}

/// Q_s for isotropic states: (β/d)(α/β)^s + ((d-β)/d)((d-α)/(d-β))^s.
inline double isotropic_chernoff_qs(double alpha, double beta, int d, double s) {
  detail::require_alpha(alpha, d, "alpha");
  detail::require_alpha(beta, d, "beta");
  detail::require(s > 0.0 && s < 1.0, ErrorKind::kInvalidParameter, "s must lie in (0,1)");
  auto term = [s](double p, double q) { return (p == 0.0 || q == 0.0) ? 0.0 : std::pow(p, s) * std::pow(q, 1.0 - s); };
  return term(alpha / d, beta / d) + term((d - alpha) / d, (d - beta) / d);
}

/// Interior stationary point s^Ω_{α,β}, written directly in α, β and d.
inline double isotropic_chernoff_s(double alpha, double beta, int d) {
  detail::require_alpha(alpha, d, "alpha");
  detail::require_alpha(beta, d, "beta");
  detail::require(alpha > 0.0 && alpha < d && beta > 0.0 && beta < d && std::abs(alpha - beta) > kDegenerateGap,
                  ErrorKind::kInvalidParameter, "interior s needs alpha != beta, both inside (0, d)");
  const double dd = d;
  const double log_p = std::log(alpha / beta);
  const double log_m = std::log((dd - alpha) / (dd - beta));
  return std::log((beta - dd) / beta * log_m / log_p) / std::log(alpha * (dd - beta) / (beta * (dd - alpha)));
}

/// Quantum Chernoff bound between Ω_α and Ω_β with the same case structure
/// as qcb_werner (α ∈ {0, d} plays the role of η = ±1).
inline QcbResult qcb_isotropic(double alpha, double beta, int d) {
  detail::require_alpha(alpha, d, "alpha");
  detail::require_alpha(beta, d, "beta");
  const double dd = d;
  if (std::abs(alpha - beta) <= kDegenerateGap) return {1.0, 0.5, SKind::kDegenerateHalf};
  if (alpha == 0.0) return {(dd - beta) / dd, 0.0, SKind::kLeftLimit};
  if (alpha == dd) return {beta / dd, 0.0, SKind::kLeftLimit};
  if (beta == 0.0) return {(dd - alpha) / dd, 1.0, SKind::kRightLimit};
  if (beta == dd) return {alpha / dd, 1.0, SKind::kRightLimit};
  const double s = isotropic_chernoff_s(alpha, beta, d);
  return {std::min(1.0, isotropic_chernoff_qs(alpha, beta, d, s)), s, SKind::kInterior};
}

/// Largest copy count helstrom_multicopy_werner accepts.
inline constexpr int kMaxHelstromCopies = 1000;

/// Exact Helstrom error ½(1 - ½‖W_η^{⊗n} - W_ζ^{⊗n}‖₁), summing over the
/// n + 1 joint eigenvalue classes of the commuting n-copy states.
inline double helstrom_multicopy_werner(double eta, double zeta, int d, int n) {
  detail::require(n >= 1, ErrorKind::kInvalidParameter, "n must be >= 1");
  detail::require(n <= kMaxHelstromCopies, ErrorKind::kOverflow,
                  "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxHelstromCopies));
  const SpectrumPair se = werner_spectrum(WernerParams(eta, d));
  const SpectrumPair sz = werner_spectrum(WernerParams(zeta, d));
  const double m_plus = se.classes[0].multiplicity;
  const double m_minus = se.classes[1].multiplicity;

  double sum = 0.0;
  if (n <= 50) {
    double binom = 1.0;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
      const double x = std::pow(se.classes[0].eigenvalue, k) * std::pow(se.classes[1].eigenvalue, n - k);
      const double y = std::pow(sz.classes[0].eigenvalue, k) * std::pow(sz.classes[1].eigenvalue, n - k);
      sum += binom * std::pow(m_plus, k) * std::pow(m_minus, n - k) * std::abs(x - y);
      binom = binom * (n - k) / (k + 1);
    }
  } else {
    // k log a with 0 log 0 = 0.
    auto klog = [](double a, int k) { return k == 0 ? 0.0 : (a == 0.0 ? -kPosInfinity : k * std::log(a)); };
    for (int k = 0; k <= n; ++k) {
      const double log_weight = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                                klog(m_plus, k) + klog(m_minus, n - k);
      const double lx = klog(se.classes[0].eigenvalue, k) + klog(se.classes[1].eigenvalue, n - k);
      const double ly = klog(sz.classes[0].eigenvalue, k) + klog(sz.classes[1].eigenvalue, n - k);
      sum += std::abs(std::exp(log_weight + lx) - std::exp(log_weight + ly));
    }
  }
  return std::clamp(0.5 * (1.0 - 0.5 * sum), 0.0, 0.5);
}

}  // namespace wernerlab
