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

#include "riordan/series.hpp"

#include <algorithm>

#include "riordan/error.hpp"

namespace riordan {
namespace {

std::string context_string(std::size_t d, int k, const Ring& r) {
  return "(d=" + std::to_string(d) + ", k=" + std::to_string(k) + ", " + r.tag() + ")";
}

}  // namespace

Series::Series(std::size_t dim, int trunc, Ring ring)
    : dim_(dim), trunc_(trunc), ring_(ring) {
  if (dim == 0) raise(Errc::dimension_mismatch, "series need at least one variable");
  if (trunc < 0) raise(Errc::truncation_exceeded, "negative truncation degree");
  basis_ = MonomialBasis::get(dim, trunc);
}

Series Series::constant(std::size_t dim, int trunc, const Coeff& c) {
  Series out(dim, trunc, c.ring());
  if (!c.is_zero()) out.terms_.push_back({0, c});
  return out;
}

Series Series::one(std::size_t dim, int trunc, Ring ring) { return constant(dim, trunc, ring.one()); }

Series Series::monomial(const Monomial& m, int trunc, const Coeff& c) {
  Series out(m.dim(), trunc, c.ring());
  if (!c.is_zero() && m.degree() <= trunc) out.terms_.push_back({grlex_rank(m), c});
  return out;
}

Series Series::variable(std::size_t dim, std::size_t j, int trunc, Ring ring) {
  return monomial(Monomial::variable(dim, j), trunc, ring.one());
}

Series Series::from_terms(std::size_t dim, int trunc, Ring ring,
                          const std::vector<std::pair<Monomial, Coeff>>& terms) {
  SeriesAccumulator acc(dim, trunc, ring);
  for (const auto& [m, c] : terms) {
    if (m.dim() != dim) raise(Errc::dimension_mismatch, "term " + to_string(m) + " in a " + std::to_string(dim) + "-variable series");
    if (!(c.ring() == ring)) raise(Errc::context_mismatch, "coefficient from " + c.ring().tag() + " in a " + ring.tag() + " series");
    if (m.degree() <= trunc) acc.add(grlex_rank(m), c);
  }
  return std::move(acc).finish();
}

Series Series::from_dense(std::size_t dim, int trunc, Ring ring, std::vector<Coeff> dense) {
  Series out(dim, trunc, ring);
  if (dense.size() != out.basis_->size()) {
    raise(Errc::dimension_mismatch, "dense vector of length " + std::to_string(dense.size()) +
                                        " for a basis of size " + std::to_string(out.basis_->size()));
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!(dense[i].ring() == ring)) raise(Errc::context_mismatch, "dense coefficient ring");
    if (!dense[i].is_zero()) out.terms_.push_back({i, std::move(dense[i])});
  }
  return out;
}

void Series::check_context(const Series& other) const {
  if (dim_ != other.dim_ || trunc_ != other.trunc_ || !(ring_ == other.ring_)) {
    raise(Errc::context_mismatch,
          "series contexts " + context_string(dim_, trunc_, ring_) + " and " +
              context_string(other.dim_, other.trunc_, other.ring_));
  }
}

Coeff Series::coeff(const Monomial& m) const {
  if (m.dim() != dim_) raise(Errc::dimension_mismatch, "monomial " + to_string(m) + " in a " + std::to_string(dim_) + "-variable series");
  if (m.degree() > trunc_) {
    raise(Errc::truncation_exceeded,
          "coefficient of " + to_string(m) + " lies above truncation degree " + std::to_string(trunc_));
  }
  return coeff_at(grlex_rank(m));
}

Coeff Series::coeff_at(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) return it->coeff;
  return ring_.zero();
}

Coeff Series::constant_term() const {
  return (!terms_.empty() && terms_.front().index == 0) ? terms_.front().coeff : ring_.zero();
}

int Series::degree() const noexcept {
  return terms_.empty() ? -1 : basis_->degree(terms_.back().index);
}

std::vector<Coeff> Series::dense() const {
  std::vector<Coeff> out(basis_->size(), ring_.zero());
  for (const auto& t : terms_) out[t.index] = t.coeff;
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <typename Combine>
std::vector<Series::Term> merge_terms(const std::vector<Series::Term>& a, const std::vector<Series::Term>& b,
                                      Combine combine, bool negate_b) {
  std::vector<Series::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, negate_b ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Coeff c = combine(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].index, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Series& Series::operator+=(const Series& rhs) {
  check_context(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const Coeff& x, const Coeff& y) { return x + y; }, false);
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  check_context(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const Coeff& x, const Coeff& y) { return x - y; }, true);
  return *this;
}

Series operator*(const Series& f, const Series& g) {
  f.check_context(g);
  if (f.is_zero() || g.is_zero()) return Series(f.dim_, f.trunc_, f.ring_);
  // Constant-only factors are a scaling.
  if (f.terms_.size() == 1 && f.terms_.front().index == 0) return g.scaled(f.terms_.front().coeff);
  if (g.terms_.size() == 1 && g.terms_.front().index == 0) return f.scaled(g.terms_.front().coeff);
  SeriesAccumulator acc(f.dim_, f.trunc_, f.ring_);
  acc.add_product(f, g);
  return std::move(acc).finish();
}

Series Series::scaled(const Coeff& c) const {
  if (!(c.ring() == ring_)) raise(Errc::context_mismatch, "scalar from " + c.ring().tag() + " on a " + ring_.tag() + " series");
  Series out(dim_, trunc_, ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff p = t.coeff * c;
    if (!p.is_zero()) out.terms_.push_back({t.index, std::move(p)});
  }
  return out;
}

Series Series::shifted(const Monomial& m) const {
  if (m.dim() != dim_) raise(Errc::dimension_mismatch, "shift by " + to_string(m));
  Series out(dim_, trunc_, ring_);
  const auto shift = m.degree();
  for (const auto& t : terms_) {
    if (basis_->degree(t.index) + shift > trunc_) break;
    out.terms_.push_back({grlex_rank(basis_->monomial(t.index) * m), t.coeff});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  return out;
}

Series Series::pow(std::uint64_t e) const {
  Series result = one(dim_, trunc_, ring_);
  if (e == 0) return result;
  if (in_max_ideal() && e > static_cast<std::uint64_t>(trunc_)) return Series(dim_, trunc_, ring_);
  Series base = *this;
  while (true) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

Monomial Series::vertex() const {
  if (is_zero()) raise(Errc::vertex_of_zero, "the zero series has no vertex");
  std::vector<std::int32_t> e(basis_->monomial(terms_.front().index).exponents().begin(),
                              basis_->monomial(terms_.front().index).exponents().end());
  for (const auto& t : terms_) {
    const auto& m = basis_->monomial(t.index);
    for (std::size_t j = 0; j < dim_; ++j) e[j] = std::min(e[j], m[j]);
  }
  return Monomial(std::move(e));
}

std::pair<Monomial, Series> Series::factor_out_vertex() const {
  Monomial v = vertex();
  Series h = div_by_monomial(v);
  return {std::move(v), std::move(h)};
}

Series Series::div_by_monomial(const Monomial& p) const {
  if (p.dim() != dim_) raise(Errc::dimension_mismatch, "divisor " + to_string(p));
  const auto new_trunc = static_cast<std::int64_t>(trunc_) - p.degree();
  for (const auto& t : terms_) {
    if (!divides(p, basis_->monomial(t.index))) {
      raise(Errc::not_a_factor, to_string(p) + " does not divide support monomial " + to_string(basis_->monomial(t.index)));
    }
  }
  if (new_trunc < 0) {
    raise(Errc::truncation_exceeded, "dividing a k=" + std::to_string(trunc_) + " series by " + to_string(p) +
                                         " leaves no representable coefficients");
  }
  Series out(dim_, static_cast<int>(new_trunc), ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({grlex_rank(quotient(basis_->monomial(t.index), p)), t.coeff});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  return out;
}

bool Series::is_unit() const noexcept { return constant_term().is_unit(); }

Series Series::inverse() const {
  Coeff c0 = constant_term();
  if (!c0.is_unit()) {
    raise(Errc::not_a_unit, "constant term " + c0.to_string() + " is not a unit of " + ring_.tag());
  }
  Coeff alpha = c0.inverse();
  // alpha f = 1 + h with h in M; (1 + h)^-1 = 1 - h + h^2 - ... and h^r
  // vanishes modulo M^(k+1) for r > k, so k Horner steps are exact.
  Series h = scaled(alpha) - one(dim_, trunc_, ring_);
  Series s = one(dim_, trunc_, ring_);
  for (int r = 0; r < trunc_; ++r) s = one(dim_, trunc_, ring_) - h * s;
  return s.scaled(alpha);
}

Series Series::lower_truncation(int j) const {
  if (j < 0 || j > trunc_) {
    raise(Errc::truncation_exceeded,
          "cannot lower truncation from " + std::to_string(trunc_) + " to " + std::to_string(j));
  }
  Series out(dim_, j, ring_);
  const std::size_t cut = basis_->prefix_size(j);
  for (const auto& t : terms_) {
    if (t.index >= cut) break;
    out.terms_.push_back(t);
  }
  return out;
}

SeriesAccumulator::SeriesAccumulator(std::size_t dim, int trunc, Ring ring)
    : dim_(dim), trunc_(trunc), ring_(ring), basis_(MonomialBasis::get(dim, trunc)),
      slots_(basis_->size(), ring.zero()) {}

void SeriesAccumulator::add_scaled(const Coeff& c, const Series& f) {
  if (f.dim() != dim_ || f.trunc() != trunc_ || !(f.ring() == ring_)) {
    raise(Errc::context_mismatch, "accumulating a series from another context");
  }
  for (const auto& t : f.terms()) slots_[t.index].add_mul(c, t.coeff);
}

void SeriesAccumulator::add_product(const Series& f, const Series& g) {
  if (f.dim() != dim_ || f.trunc() != trunc_ || !(f.ring() == ring_)) {
    raise(Errc::context_mismatch, "accumulating a product from another context");
  }
  f.check_context(g);
  const auto& basis = *basis_;
  for (const auto& a : f.terms()) {
    const int da = basis.degree(a.index);
    for (const auto& b : g.terms()) {
      if (da + basis.degree(b.index) > trunc_) break;
      slots_[basis.product(a.index, b.index)].add_mul(a.coeff, b.coeff);
    }
  }
}

Series SeriesAccumulator::finish() && {
  return Series::from_dense(dim_, trunc_, ring_, std::move(slots_));
}

}  // namespace riordan
