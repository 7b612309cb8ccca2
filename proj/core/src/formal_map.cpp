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

#include "riordan/formal_map.hpp"

#include "riordan/error.hpp"

namespace riordan {
namespace {

Coeff cofactor_det(const std::vector<Coeff>& a, std::size_t n, const Ring& ring) {
  if (n == 0) return ring.one();
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  Coeff det = ring.zero();
  std::vector<Coeff> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col].is_zero()) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t c2 = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[(i - 1) * (n - 1) + c2++] = a[i * n + j];
      }
    }
    Coeff term = a[col] * cofactor_det(minor, n - 1, ring);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Fraction-free Gaussian elimination; every division is exact over a domain.
Coeff bareiss_det(std::vector<Coeff> a, std::size_t n, const Ring& ring) {
  Coeff sign = ring.one();
  Coeff prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k].is_zero()) ++swap_row;
      if (swap_row == n) return ring.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Coeff v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = v.exact_div(prev);
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

Coeff determinant_of(const std::vector<Coeff>& a, std::size_t n, const Ring& ring) {
  return n <= 4 ? cofactor_det(a, n, ring) : bareiss_det(a, n, ring);
}

}  // namespace

LinearPart::LinearPart(std::size_t n, Ring ring) : n_(n), ring_(ring), entries_(n * n, ring.zero()) {}

LinearPart LinearPart::identity(std::size_t n, Ring ring) {
  LinearPart out(n, ring);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ring.one();
  return out;
}

Coeff LinearPart::determinant() const { return determinant_of(entries_, n_, ring_); }

LinearPart LinearPart::adjugate() const {
  LinearPart out(n_, ring_);
  if (n_ == 1) {
    out(0, 0) = ring_.one();
    return out;
  }
  std::vector<Coeff> minor((n_ - 1) * (n_ - 1));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (j != c) minor[idx++] = (*this)(i, j);
        }
      }
      Coeff cof = determinant_of(minor, n_ - 1, ring_);
      out(c, r) = (r + c) % 2 == 0 ? cof : -cof;
    }
  }
  return out;
}

LinearPart LinearPart::inverse() const {
  Coeff det = determinant();
  if (!det.is_unit()) {
    raise(Errc::not_invertible, "linear part has determinant " + det.to_string() + ", not a unit of " + ring_.tag());
  }
  LinearPart out = adjugate();
  Coeff inv = det.inverse();
  for (auto& e : out.entries_) e *= inv;
  return out;
}

LinearPart operator*(const LinearPart& a, const LinearPart& b) {
  if (a.n_ != b.n_ || !(a.ring_ == b.ring_)) raise(Errc::context_mismatch, "linear parts of different shape or ring");
  LinearPart out(a.n_, a.ring_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j).add_mul(a(i, k), b(k, j));
    }
  }
  return out;
}

FormalMap FormalMap::identity(std::size_t dim, int trunc, Ring ring) {
  std::vector<Series> comps;
  comps.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) comps.push_back(Series::variable(dim, j, trunc, ring));
  return FormalMap(std::move(comps));
}

FormalMap FormalMap::from_components(std::vector<Series> components) {
  if (components.empty()) raise(Errc::dimension_mismatch, "a formal map needs at least one component");
  const std::size_t d = components.size();
  for (std::size_t i = 0; i < d; ++i) {
    const auto& c = components[i];
    if (c.dim() != d) {
      raise(Errc::dimension_mismatch, "component " + std::to_string(i + 1) + " is a series in " +
                                          std::to_string(c.dim()) + " variables, expected " + std::to_string(d));
    }
    components.front().check_context(c);
    if (!c.in_max_ideal()) {
      raise(Errc::not_in_max_ideal, "component " + std::to_string(i + 1) + " has nonzero constant term " +
                                        c.constant_term().to_string());
    }
  }
  return FormalMap(std::move(components));
}

FormalMap FormalMap::linear(const LinearPart& t, int trunc) {
  const std::size_t d = t.size();
  std::vector<Series> comps;
  comps.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::pair<Monomial, Coeff>> terms;
    for (std::size_t j = 0; j < d; ++j) terms.emplace_back(Monomial::variable(d, j), t(i, j));
    comps.push_back(Series::from_terms(d, trunc, t.ring(), terms));
  }
  return FormalMap(std::move(comps));
}

FormalMap FormalMap::lower_truncation(int j) const {
  std::vector<Series> comps;
  comps.reserve(dim());
  for (const auto& c : components_) comps.push_back(c.lower_truncation(j));
  return FormalMap(std::move(comps));
}

void FormalMap::check_context(const FormalMap& other) const {
  if (dim() != other.dim()) raise(Errc::dimension_mismatch, "formal maps of different dimension");
  components_.front().check_context(other.components_.front());
}

FormalMap operator+(const FormalMap& a, const FormalMap& b) {
  a.check_context(b);
  std::vector<Series> comps;
  for (std::size_t i = 0; i < a.dim(); ++i) comps.push_back(a[i] + b[i]);
  return FormalMap(std::move(comps));
}

FormalMap operator-(const FormalMap& a, const FormalMap& b) {
  a.check_context(b);
  std::vector<Series> comps;
  for (std::size_t i = 0; i < a.dim(); ++i) comps.push_back(a[i] - b[i]);
  return FormalMap(std::move(comps));
}

MonomialImages::MonomialImages(const FormalMap& g)
    : g_(g), images_(MonomialBasis::get(g.dim(), g.trunc())->size()) {}

const Series& MonomialImages::image(std::size_t index) {
  auto& slot = images_[index];
  if (slot) return *slot;
  if (index == 0) {
    slot = Series::one(g_.dim(), g_.trunc(), g_.ring());
    return *slot;
  }
  const auto& basis = g_[0].basis();
  const auto& m = basis.monomial(index);
  std::size_t var = 0;
  while (m[var] == 0) ++var;
  const std::size_t prev = basis.divide_by_variable(index, var);
  const Series& base = image(prev);
  slot = base * g_[var];
  return *slot;
}

Series MonomialImages::compose(const Series& f) {
  if (f.dim() != g_.dim()) raise(Errc::dimension_mismatch, "composing a series with a map of another dimension");
  f.check_context(g_[0]);
  SeriesAccumulator acc(f.dim(), f.trunc(), f.ring());
  for (const auto& t : f.terms()) acc.add_scaled(t.coeff, image(t.index));
  return std::move(acc).finish();
}

Series compose_monomial(const Monomial& m, const FormalMap& g) {
  if (m.dim() != g.dim()) raise(Errc::dimension_mismatch, "monomial and map dimensions differ");
  Series out = Series::one(g.dim(), g.trunc(), g.ring());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] > 0) out = out * g[j].pow(static_cast<std::uint64_t>(m[j]));
  }
  return out;
}

Series compose_series(const Series& f, const FormalMap& g) {
  MonomialImages images(g);
  return images.compose(f);
}

FormalMap compose_maps(const FormalMap& f, const FormalMap& g) {
  f.check_context(g);
  MonomialImages images(g);
  std::vector<Series> comps;
  comps.reserve(f.dim());
  for (const auto& c : f.components()) comps.push_back(images.compose(c));
  return FormalMap::from_components(std::move(comps));
}

LinearPart linear_part(const FormalMap& g) {
  if (g.trunc() < 1) {
    raise(Errc::truncation_exceeded, "linear part of a map truncated at degree 0");
  }
  const std::size_t d = g.dim();
  LinearPart out(d, g.ring());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(i, j) = g[i].coeff_at(j + 1);
  }
  return out;
}

bool map_is_invertible(const FormalMap& g) { return linear_part(g).is_invertible(); }

FormalMap unipotent_inverse(const FormalMap& u, int* iterations) {
  const FormalMap id = FormalMap::identity(u.dim(), u.trunc(), u.ring());
  if (!(linear_part(u) == LinearPart::identity(u.dim(), u.ring()))) {
    raise(Errc::invalid_argument, "unipotent_inverse needs a map with identity linear part");
  }
  const FormalMap h = u - id;
  FormalMap v = id;
  int steps = 0;
  while (true) {
    FormalMap next = id - compose_maps(h, v);
    ++steps;
    if (next == v) break;
    if (steps > u.trunc() + 1) raise(Errc::internal, "unipotent inversion failed to stabilize");
    v = std::move(next);
  }
  if (iterations != nullptr) *iterations = steps;
  return v;
}

FormalMap comp_inverse(const FormalMap& g) {
  const LinearPart lin = linear_part(g);
  const Coeff det = lin.determinant();
  if (!det.is_unit()) {
    raise(Errc::not_invertible, "det L(g) = " + det.to_string() + " is not a unit of " + g.ring().tag());
  }
  const FormalMap h_map = FormalMap::linear(lin.inverse(), g.trunc());
  const FormalMap u = compose_maps(h_map, g);
  const FormalMap inv = compose_maps(unipotent_inverse(u), h_map);
  const FormalMap id = FormalMap::identity(g.dim(), g.trunc(), g.ring());
  if (!(compose_maps(g, inv) == id) || !(compose_maps(inv, g) == id)) {
    raise(Errc::internal, "compositional inverse failed verification");
  }
  return inv;
}

FormalMap comp_power(const FormalMap& g, unsigned r) {
  FormalMap out = FormalMap::identity(g.dim(), g.trunc(), g.ring());
  for (unsigned i = 0; i < r; ++i) out = compose_maps(g, out);
  return out;
}

}  // namespace riordan
