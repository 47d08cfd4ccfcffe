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
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wernerlab/density.hpp"
#include "wernerlab/error.hpp"
#include "wernerlab/matrix.hpp"
#include "wernerlab/metrics.hpp"
#include "wernerlab/werner.hpp"

// d-dimensional teleportation with explicit Bell projectors: no sampling, the
// channel it realises is computed exactly as the outcome-weighted average.

namespace wernerlab {

/// Label of the Heisenberg-Weyl unitary U_ab = X^a Z^b, X|j> = |j+1>, Z|j> = ω^j |j>.
struct HeisenbergWeylLabel {
  int a;
  int b;

  friend bool operator==(const HeisenbergWeylLabel&, const HeisenbergWeylLabel&) = default;
};

inline ComplexMatrix shift_operator(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix x(n);
  for (std::size_t j = 0; j < n; ++j) x((j + 1) % n, j) = 1.0;
  return x;
}

inline ComplexMatrix clock_operator(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix z(n);
  for (std::size_t j = 0; j < n; ++j) z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / d);
  return z;
}

/// X^a Z^b
inline ComplexMatrix heisenberg_weyl(HeisenbergWeylLabel label, int d) {
  detail::require_local_dim(d);
  detail::require(label.a >= 0 && label.a < d && label.b >= 0 && label.b < d, ErrorKind::kInvalidParameter,
                  "Heisenberg-Weyl label out of range");
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix u(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int phase = static_cast<int>((static_cast<long>(label.b) * static_cast<long>(j)) % d);
    u((j + static_cast<std::size_t>(label.a)) % n, j) = std::polar(1.0, 2.0 * std::numbers::pi * phase / d);
  }
  return u;
}

/// |Φ_ab> = (U_ab ⊗ I)|Φ>, listed in the order index = a*d + b.
inline std::vector<std::vector<Complex>> bell_basis(int d) {
  detail::require_local_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::vector<Complex>> basis;
  basis.reserve(n * n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const ComplexMatrix u = heisenberg_weyl({a, b}, d);
      std::vector<Complex> v(n * n);
      // (U ⊗ I) Σ_i |ii> = Σ_i U|i> ⊗ |i>
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) v[r * n + i] = u(r, i) * amp;
      basis.push_back(std::move(v));
    }
  return basis;
}

/// Correction applied to the receiver's half after outcome (a, b).
enum class Correction {
  kConjugate,  // V = U_ab*, the output unitary of the HW covariance relation
  kDirect,     // V = U_ab, standard teleportation and Pauli-covariant channels
};

struct TeleportationOutcome {
  HeisenbergWeylLabel label;
  double probability;
  DensityMatrix post_state;  // after correction; maximally mixed if probability is 0
};

/// Every branch of the protocol: Bell measurement of input ⊗ (first half of
/// resource), then the selected correction on the resource's second half.
inline std::vector<TeleportationOutcome> teleport_outcomes(const DensityMatrix& resource, const DensityMatrix& input,
                                                           Correction correction = Correction::kConjugate) {
  const std::size_t n = input.dim();
  detail::require(n >= 2 && resource.dim() == n * n, ErrorKind::kDimensionMismatch,
                  "resource of dimension " + std::to_string(resource.dim()) + " for input of dimension " +
                      std::to_string(n));
  const int d = static_cast<int>(n);
  const ComplexMatrix& rho = input.matrix();
  const ComplexMatrix& chi = resource.matrix();
  const auto basis = bell_basis(d);

  std::vector<TeleportationOutcome> outcomes;
  outcomes.reserve(basis.size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const std::vector<Complex>& v = basis[static_cast<std::size_t>(a * d + b)];
      // <Φ_ab|_{AB} (ρ_A ⊗ χ_{BC}) |Φ_ab>_{AB}
      ComplexMatrix branch(n);
      for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t b1 = 0; b1 < n; ++b1) {
          const Complex left = std::conj(v[a1 * n + b1]);
          if (left == Complex{}) continue;
          for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t b2 = 0; b2 < n; ++b2) {
              const Complex w = left * rho(a1, a2) * v[a2 * n + b2];
              if (w == Complex{}) continue;
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) branch(k, l) += w * chi(b1 * n + k, b2 * n + l);
            }
        }
      const double p = std::max(0.0, branch.trace().real());
      const ComplexMatrix u = heisenberg_weyl({a, b}, d);
      const ComplexMatrix fix = correction == Correction::kConjugate ? u.conjugate() : u;
      if (p > 0.0) {
        branch *= 1.0 / p;
        branch = fix * branch * fix.adjoint();
        outcomes.push_back({{a, b}, p, DensityMatrix::assume_valid(std::move(branch))});
      } else {
        outcomes.push_back({{a, b}, 0.0, DensityMatrix::maximally_mixed(n)});
      }
    }
  return outcomes;
}

/// Channel realised by teleporting `input` through `resource`: the
/// probability-weighted average of the corrected branch outputs.
inline DensityMatrix teleport_channel(const DensityMatrix& resource, const DensityMatrix& input,
                                      Correction correction = Correction::kConjugate) {
  ComplexMatrix out(input.dim());
  for (const TeleportationOutcome& o : teleport_outcomes(resource, input, correction)) {
    if (o.probability > 0.0) out += o.post_state.matrix() * o.probability;
  }
  return DensityMatrix::assume_valid(std::move(out));
}

/// Trace distance between W(UρU†) and U* W(ρ) U^T; zero when the HW channel
/// is covariant under U with output unitary U*.
inline double covariance_check(const WernerParams& params, const ComplexMatrix& unitary, const DensityMatrix& rho) {
  detail::require(unitary.dim() == static_cast<std::size_t>(params.d), ErrorKind::kDimensionMismatch,
                  "unitary dimension");
  const double defect = unitarity_defect(unitary);
  detail::require(defect <= 1e-10, ErrorKind::kNotUnitary, "U†U - I defect " + std::to_string(defect));
  const DensityMatrix rotated = DensityMatrix::assume_valid(unitary * rho.matrix() * unitary.adjoint());
  const DensityMatrix lhs = hw_channel_apply(params, rotated);
  const ComplexMatrix v = unitary.conjugate();
  const DensityMatrix rhs = DensityMatrix::assume_valid(v * hw_channel_apply(params, rho).matrix() * v.adjoint());
  return trace_distance_numeric(lhs, rhs);
}

}  // namespace wernerlab
