// Copyright 2026 The Riordan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "riordan/formal_map.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"
#include "riordan/verde_star.hpp"

namespace riordan {

/// Seed mixer; trial i of a campaign with base seed s uses splitmix64(s + i).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seeded source for the element generators. Bounded draws are done by
/// rejection on raw 64-bit output, so streams are identical on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform in [-3, 3].
Coeff random_coeff(Rng& rng, const Ring& ring);
/// A unit of K: 1 over the integers, a nonzero value in [-3, 3] otherwise.
Coeff random_unit(Rng& rng, const Ring& ring);
/// Up to `max_terms` terms of degree in [min_degree, k], coefficients in [-3, 3].
Series random_sparse(Rng& rng, std::size_t dim, int k, const Ring& ring, int min_degree, int max_terms);
/// random_unit() + up to 5 sparse terms.
Series random_unit_series(Rng& rng, std::size_t dim, int k, const Ring& ring);
/// A unimodular linear part from elementary row operations and unit
/// diagonal scalings.
LinearPart random_unimodular(Rng& rng, std::size_t dim, const Ring& ring);
/// A linear part of rank < dim.
LinearPart random_singular(Rng& rng, std::size_t dim, const Ring& ring);
/// Invertible formal map: unimodular linear part plus sparse higher terms.
FormalMap random_invertible_map(Rng& rng, std::size_t dim, int k, const Ring& ring);
/// Formal map with a singular linear part plus sparse higher terms.
FormalMap random_singular_map(Rng& rng, std::size_t dim, int k, const Ring& ring);
/// Group element (unit f, invertible g).
RiordanElement random_invertible_element(Rng& rng, std::size_t dim, int k, const Ring& ring);
/// Semigroup element with f in M and a singular linear part.
RiordanElement random_semigroup_element(Rng& rng, std::size_t dim, int k, const Ring& ring);

/// Tuple of unit series, i.e. a K-element x*h.
StarTuple random_star_unit(Rng& rng, std::size_t dim, int k, const Ring& ring);
/// Laurent series with vertex in [-1, 1]^d and body terms of degree at most
/// `max_degree` (-1: the accuracy). When `unit` is false the leading
/// coefficient is drawn from the non-units.
LaurentSeries random_laurent(Rng& rng, std::size_t dim, int accuracy, const Ring& ring, bool unit,
                             int max_degree = -1);
/// Random unit f and h, sparse terms limited to degree `max_degree`.
VSRElement random_vsr_element(Rng& rng, std::size_t dim, int accuracy, const Ring& ring, int max_degree = -1);

}  // namespace riordan
