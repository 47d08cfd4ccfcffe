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
#include <vector>

#include "wernerlab/density.hpp"
#include "wernerlab/matrix.hpp"

namespace wernerlab {

/// All randomness in the library comes from std::mt19937_64. Independent
/// substreams are seeded from (seed, stream) through a SplitMix64 mix, so a
/// result depends only on those two numbers and never on scheduling.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

inline Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline ComplexMatrix ginibre_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (Complex& z : g.entries()) z = complex_gaussian(rng);
  return g;
}

/// Haar-distributed unitary: Gram-Schmidt on the columns of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix u = ginibre_matrix(dim, rng);
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(u(i, k)) * u(i, j);
        for (std::size_t i = 0; i < dim; ++i) u(i, j) -= proj * u(i, k);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(u(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) *= inv;
  }
  return u;
}

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(dim, rng);
  return 0.5 * (g + g.adjoint());
}

/// G G† / Tr(G G†) with G a dim x rank Ginibre matrix.
inline DensityMatrix random_density_matrix(std::size_t dim, Rng& rng, std::size_t rank = 0) {
  if (rank == 0 || rank > dim) rank = dim;
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) g(i, k) = complex_gaussian(rng);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(std::move(rho));
}

inline std::vector<Complex> random_pure_vector(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (Complex& z : v) {
    z = complex_gaussian(rng);
    norm2 += std::norm(z);
  }
  for (Complex& z : v) z /= std::sqrt(norm2);
  return v;
}

}  // namespace wernerlab
