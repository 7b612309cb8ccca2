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

#include "riordan/random.hpp"

#include <algorithm>

#include "riordan/error.hpp"

namespace riordan {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

Coeff random_coeff(Rng& rng, const Ring& ring) { return ring.from_int(rng.uniform(-3, 3)); }

Coeff random_unit(Rng& rng, const Ring& ring) {
  if (!ring.is_field()) return ring.one();
  while (true) {
    Coeff c = ring.from_int(rng.uniform(-3, 3));
    if (!c.is_zero()) return c;
  }
}

Series random_sparse(Rng& rng, std::size_t dim, int k, const Ring& ring, int min_degree, int max_terms) {
  Series out(dim, k, ring);
  if (min_degree > k) return out;
  const auto& basis = *MonomialBasis::get(dim, k);
  const std::size_t first = min_degree <= 0 ? 0 : basis.prefix_size(min_degree - 1);
  const auto count = rng.uniform(0, max_terms);
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(first),
                                                          static_cast<std::int64_t>(basis.size()) - 1));
    terms.emplace_back(basis.monomial(idx), random_coeff(rng, ring));
  }
  return Series::from_terms(dim, k, ring, terms);
}

Series random_unit_series(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  return Series::constant(dim, k, random_unit(rng, ring)) + random_sparse(rng, dim, k, ring, 1, 5);
}

LinearPart random_unimodular(Rng& rng, std::size_t dim, const Ring& ring) {
  LinearPart t = LinearPart::identity(dim, ring);
  if (dim > 1) {
    const auto ops = rng.uniform(1, static_cast<std::int64_t>(2 * dim));
    for (std::int64_t op = 0; op < ops; ++op) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 1));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 2));
      if (j >= i) ++j;
      const Coeff c = ring.from_int(rng.uniform(-2, 2));
      for (std::size_t col = 0; col < dim; ++col) t(i, col).add_mul(c, t(j, col));
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Coeff u = ring.is_field() ? random_unit(rng, ring) : ring.from_int(rng.coin() ? 1 : -1);
    for (std::size_t col = 0; col < dim; ++col) t(i, col) *= u;
  }
  return t;
}

LinearPart random_singular(Rng& rng, std::size_t dim, const Ring& ring) {
  LinearPart t(dim, ring);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) t(i, j) = random_coeff(rng, ring);
  }
  // Make one row a multiple of another (or zero), so rank < dim.
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 1));
  if (dim == 1) {
    t(0, 0) = ring.zero();
  } else {
    auto s = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dim) - 2));
    if (s >= r) ++s;
    const Coeff c = random_coeff(rng, ring);
    for (std::size_t j = 0; j < dim; ++j) t(r, j) = c * t(s, j);
  }
  return t;
}

namespace {

FormalMap with_higher_terms(Rng& rng, const LinearPart& t, int k, const Ring& ring) {
  const std::size_t dim = t.size();
  const FormalMap linear = FormalMap::linear(t, k);
  std::vector<Series> comps;
  comps.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(linear[i] + random_sparse(rng, dim, k, ring, 2, 3));
  return FormalMap::from_components(std::move(comps));
}

}  // namespace

FormalMap random_invertible_map(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  return with_higher_terms(rng, random_unimodular(rng, dim, ring), k, ring);
}

FormalMap random_singular_map(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  return with_higher_terms(rng, random_singular(rng, dim, ring), k, ring);
}

RiordanElement random_invertible_element(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  Series f = random_unit_series(rng, dim, k, ring);
  FormalMap g = random_invertible_map(rng, dim, k, ring);
  return RiordanElement::make(std::move(f), std::move(g));
}

RiordanElement random_semigroup_element(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  Series f = random_sparse(rng, dim, k, ring, 1, 5);
  FormalMap g = random_singular_map(rng, dim, k, ring);
  return RiordanElement::make(std::move(f), std::move(g));
}

StarTuple random_star_unit(Rng& rng, std::size_t dim, int k, const Ring& ring) {
  std::vector<Series> comps;
  comps.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(random_unit_series(rng, dim, k, ring));
  return StarTuple::from_components(std::move(comps));
}

namespace {

// Sparse terms of degree 1..top, re-expressed at truncation k >= top.
Series lift_sparse(Rng& rng, std::size_t dim, int top, int k, const Ring& ring) {
  const Series low = random_sparse(rng, dim, top, ring, 1, 5);
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (const auto& t : low.terms()) terms.emplace_back(low.monomial_of(t), t.coeff);
  return Series::from_terms(dim, k, ring, terms);
}

}  // namespace

LaurentSeries random_laurent(Rng& rng, std::size_t dim, int accuracy, const Ring& ring, bool unit, int max_degree) {
  const int top = max_degree < 0 ? accuracy : std::min(max_degree, accuracy);
  std::vector<std::int32_t> v(dim);
  for (auto& e : v) e = static_cast<std::int32_t>(rng.uniform(-1, 1));
  Coeff lead = ring.zero();
  if (unit) {
    lead = random_unit(rng, ring);
  } else if (!ring.is_field() && rng.coin()) {
    lead = ring.from_int(rng.coin() ? 2 : -3);
  }
  Series body = Series::constant(dim, accuracy, lead) + lift_sparse(rng, dim, top, accuracy, ring);
  return LaurentSeries::from_parts(SignedMonomial(std::move(v)), body);
}

VSRElement random_vsr_element(Rng& rng, std::size_t dim, int accuracy, const Ring& ring, int max_degree) {
  const int top = max_degree < 0 ? accuracy : std::min(max_degree, accuracy);
  LaurentSeries f = random_laurent(rng, dim, accuracy, ring, true, top);
  std::vector<Series> comps;
  comps.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    comps.push_back(Series::constant(dim, accuracy, random_unit(rng, ring)) + lift_sparse(rng, dim, top, accuracy, ring));
  }
  StarTuple h = StarTuple::from_components(std::move(comps));
  return VSRElement::make(std::move(f), std::move(h));
}

}  // namespace riordan
