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

#include "riordan/verde_star.hpp"

#include <algorithm>
#include <map>

#include "riordan/error.hpp"

namespace riordan {
namespace {

struct ExponentLess {
  bool operator()(const SignedMonomial& a, const SignedMonomial& b) const {
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  }
};

// m / v as an unsigned monomial, or nullopt when m is not >= v.
std::optional<Monomial> offset(const SignedMonomial& m, const SignedMonomial& v) {
  std::vector<std::int32_t> e(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::int64_t diff = static_cast<std::int64_t>(m[j]) - v[j];
    if (diff < 0) return std::nullopt;
    e[j] = static_cast<std::int32_t>(diff);
  }
  return Monomial(std::move(e));
}

SignedMonomial signed_variable(std::size_t dim, std::size_t j) { return SignedMonomial::variable(dim, j); }

// (w * body) with w >= 1, re-expressed at truncation `trunc`; the caller
// guarantees trunc <= body.trunc() + degree(w).
Series lift(const Series& body, const Monomial& w, int trunc) {
  const auto shift = static_cast<int>(w.degree());
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (const auto& t : body.terms()) {
    if (body.basis().degree(t.index) + shift > trunc) break;
    terms.emplace_back(body.monomial_of(t) * w, t.coeff);
  }
  return Series::from_terms(body.dim(), trunc, body.ring(), terms);
}

void check_laurent_context(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.dim() != g.dim()) raise(Errc::dimension_mismatch, "Laurent series in different dimensions");
  if (!(f.ring() == g.ring())) raise(Errc::context_mismatch, "Laurent series over " + f.ring().tag() + " and " + g.ring().tag());
}

// prod_j h_j^(e_j) with negative exponents taken through the inverses.
Series signed_power_product(const SignedMonomial& e, const StarTuple& h, const StarTuple& h_inv) {
  Series out = Series::one(h.dim(), h.trunc(), h.ring());
  for (std::size_t j = 0; j < e.dim(); ++j) {
    if (e[j] > 0) out = out * h[j].pow(static_cast<std::uint64_t>(e[j]));
    if (e[j] < 0) out = out * h_inv[j].pow(static_cast<std::uint64_t>(-static_cast<std::int64_t>(e[j])));
  }
  return out;
}

}  // namespace

LaurentSeries LaurentSeries::zero(std::size_t dim, Ring ring, int accuracy) {
  return LaurentSeries(SignedMonomial(dim), Series(dim, accuracy, ring));
}

LaurentSeries LaurentSeries::monomial(const SignedMonomial& m, const Coeff& c, int accuracy) {
  return from_parts(m, Series::constant(m.dim(), accuracy, c));
}

LaurentSeries LaurentSeries::from_parts(SignedMonomial vertex, const Series& body) {
  if (vertex.dim() != body.dim()) raise(Errc::dimension_mismatch, "vertex and body dimensions differ");
  if (body.is_zero()) return LaurentSeries(std::move(vertex), body);
  Monomial w = body.vertex();
  if (w.is_one()) return LaurentSeries(std::move(vertex), body);
  Series h = body.div_by_monomial(w);
  return LaurentSeries(vertex * to_signed(w), std::move(h));
}

LaurentSeries LaurentSeries::normalize(std::size_t dim, Ring ring,
                                       const std::vector<std::pair<SignedMonomial, Coeff>>& terms, int accuracy) {
  if (accuracy < 0) raise(Errc::accuracy_exceeded, "negative accuracy");
  std::map<SignedMonomial, Coeff, ExponentLess> combined;
  for (const auto& [m, c] : terms) {
    if (m.dim() != dim) raise(Errc::dimension_mismatch, "term " + to_string(m));
    if (!(c.ring() == ring)) raise(Errc::context_mismatch, "coefficient ring " + c.ring().tag());
    auto [it, inserted] = combined.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  std::vector<SignedMonomial> support;
  for (const auto& [m, c] : combined) {
    if (!c.is_zero()) support.push_back(m);
  }
  if (support.empty()) return zero(dim, ring, accuracy);
  SignedMonomial v = inf_signed(support);
  std::vector<std::pair<Monomial, Coeff>> body_terms;
  for (const auto& m : support) body_terms.emplace_back(*offset(m, v), combined.at(m));
  return from_parts(std::move(v), Series::from_terms(dim, accuracy, ring, body_terms));
}

std::optional<Coeff> LaurentSeries::try_coeff(const SignedMonomial& m) const {
  if (m.dim() != dim()) raise(Errc::dimension_mismatch, "coefficient index " + to_string(m));
  auto e = offset(m, vertex_);
  if (!e) return ring().zero();
  if (e->degree() > accuracy()) return std::nullopt;
  return body_.coeff_at(grlex_rank(*e));
}

Coeff LaurentSeries::coeff(const SignedMonomial& m) const {
  auto c = try_coeff(m);
  if (!c) {
    raise(Errc::accuracy_exceeded, "coefficient of " + to_string(m) + " lies outside the accuracy window of radius " +
                                       std::to_string(accuracy()) + " above " + to_string(vertex_));
  }
  return *c;
}

bool LaurentSeries::is_unit() const noexcept { return !is_zero() && leading_coeff().is_unit(); }

LaurentSeries LaurentSeries::inverse() const {
  if (!is_unit()) {
    raise(Errc::not_a_unit, "leading coefficient " + leading_coeff().to_string() + " at " + to_string(vertex_) +
                                " is not a unit of " + ring().tag());
  }
  return LaurentSeries(riordan::inverse(vertex_), body_.inverse());
}

LaurentSeries LaurentSeries::with_accuracy(int accuracy) const {
  if (accuracy == this->accuracy()) return *this;
  return from_parts(vertex_, body_.lower_truncation(accuracy));
}

LaurentSeries LaurentSeries::scaled(const Coeff& c) const { return from_parts(vertex_, body_.scaled(c)); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  check_laurent_context(f, g);
  const int acc = std::min(f.accuracy(), g.accuracy());
  return LaurentSeries::from_parts(f.vertex_ * g.vertex_,
                                   f.body_.lower_truncation(acc) * g.body_.lower_truncation(acc));
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  check_laurent_context(f, g);
  const std::vector<SignedMonomial> both{f.vertex_, g.vertex_};
  SignedMonomial v = inf_signed(both);
  const Monomial wf = *offset(f.vertex_, v);
  const Monomial wg = *offset(g.vertex_, v);
  const auto acc = static_cast<int>(std::min(f.accuracy() + wf.degree(), g.accuracy() + wg.degree()));
  return LaurentSeries::from_parts(std::move(v), lift(f.body_, wf, acc) + lift(g.body_, wg, acc));
}

StarTuple StarTuple::identity(std::size_t dim, int trunc, Ring ring) {
  return StarTuple(std::vector<Series>(dim, Series::one(dim, trunc, ring)));
}

StarTuple StarTuple::from_components(std::vector<Series> components) {
  if (components.empty()) raise(Errc::dimension_mismatch, "empty tuple");
  for (const auto& c : components) {
    if (c.dim() != components.size()) raise(Errc::dimension_mismatch, "tuple length differs from series dimension");
    components.front().check_context(c);
  }
  return StarTuple(std::move(components));
}

bool StarTuple::is_unit() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](const Series& s) { return s.is_unit(); });
}

StarTuple StarTuple::inverse() const {
  std::vector<Series> out;
  out.reserve(dim());
  for (const auto& c : components_) out.push_back(c.inverse());
  return StarTuple(std::move(out));
}

StarTuple StarTuple::lower_truncation(int j) const {
  std::vector<Series> out;
  out.reserve(dim());
  for (const auto& c : components_) out.push_back(c.lower_truncation(j));
  return StarTuple(std::move(out));
}

StarTuple star_mul(const StarTuple& f, const StarTuple& g) {
  if (f.dim() != g.dim()) raise(Errc::dimension_mismatch, "tuples of different length");
  std::vector<Series> out;
  out.reserve(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out.push_back(f[i] * g[i]);
  return StarTuple::from_components(std::move(out));
}

FormalMap k_map(const StarTuple& h) {
  if (!h.is_unit()) raise(Errc::not_in_k, "x*h lies in K only when every h_j is a unit");
  std::vector<Series> comps;
  comps.reserve(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) comps.push_back(h[j].shifted(Monomial::variable(h.dim(), j)));
  return FormalMap::from_components(std::move(comps));
}

StarTuple k_extract(const FormalMap& g) {
  std::vector<Series> comps;
  comps.reserve(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    try {
      comps.push_back(g[j].div_by_monomial(Monomial::variable(g.dim(), j)));
    } catch (const Error& e) {
      raise(Errc::not_in_k, "component " + std::to_string(j + 1) + " is not divisible by x" + std::to_string(j + 1));
    }
  }
  StarTuple h = StarTuple::from_components(std::move(comps));
  if (!h.is_unit()) raise(Errc::not_in_k, "quotient tuple has a non-unit component");
  return h;
}

StarTuple k_compose(const StarTuple& outer, const StarTuple& inner) {
  if (outer.dim() != inner.dim()) raise(Errc::dimension_mismatch, "tuples of different length");
  outer[0].check_context(inner[0]);
  MonomialImages images(k_map(inner));
  std::vector<Series> out;
  out.reserve(inner.dim());
  for (std::size_t j = 0; j < inner.dim(); ++j) out.push_back(inner[j] * images.compose(outer[j]));
  return StarTuple::from_components(std::move(out));
}

StarTuple k_inverse(const StarTuple& h) {
  if (!h.is_unit()) raise(Errc::not_in_k, "x*h lies in K only when every h_j is a unit");
  std::vector<Series> start;
  start.reserve(h.dim());
  for (const auto& c : h.components()) start.push_back(Series::constant(h.dim(), h.trunc(), c.constant_term().inverse()));
  StarTuple v = StarTuple::from_components(std::move(start));
  // Degree r of (h o x*v) only reads degrees < r of v, so each pass fixes
  // one more degree.
  for (int step = 0;; ++step) {
    MonomialImages images(k_map(v));
    std::vector<Series> next;
    next.reserve(h.dim());
    for (const auto& c : h.components()) next.push_back(images.compose(c).inverse());
    StarTuple candidate = StarTuple::from_components(std::move(next));
    if (candidate == v) break;
    if (step > h.trunc() + 1) raise(Errc::internal, "K inversion failed to stabilize");
    v = std::move(candidate);
  }
  const StarTuple id = StarTuple::identity(h.dim(), h.trunc(), h.ring());
  if (!(k_compose(h, v) == id) || !(k_compose(v, h) == id)) raise(Errc::internal, "K inverse failed verification");
  return v;
}

LaurentSeries compose_signed(const SignedMonomial& m, const StarTuple& h) {
  if (m.dim() != h.dim()) raise(Errc::dimension_mismatch, "monomial and tuple dimensions differ");
  if (!h.is_unit()) raise(Errc::not_in_k, "x*h lies in K only when every h_j is a unit");
  const bool needs_inverse = std::any_of(m.exponents().begin(), m.exponents().end(), [](auto e) { return e < 0; });
  const StarTuple h_inv = needs_inverse ? h.inverse() : h;
  return LaurentSeries::from_parts(m, signed_power_product(m, h, h_inv));
}

LaurentSeries compose_laurent(const LaurentSeries& f, const StarTuple& h) {
  if (f.dim() != h.dim()) raise(Errc::dimension_mismatch, "series and tuple dimensions differ");
  if (!(f.ring() == h.ring())) raise(Errc::context_mismatch, "series and tuple rings differ");
  if (!h.is_unit()) raise(Errc::not_in_k, "x*h lies in K only when every h_j is a unit");
  const int acc = std::min(f.accuracy(), h.trunc());
  const StarTuple hh = h.lower_truncation(acc);
  const StarTuple hh_inv = hh.inverse();
  const Series body = f.body().lower_truncation(acc);
  // Every term sits at vertex * m', and (vertex * m') o g equals
  // vertex * m' * prod h_j^(vertex * m')_j, so accumulate relative to the vertex.
  SeriesAccumulator acc_body(f.dim(), acc, f.ring());
  for (const auto& t : body.terms()) {
    const Monomial& shift = body.monomial_of(t);
    const SignedMonomial m = f.vertex() * to_signed(shift);
    acc_body.add_scaled(t.coeff, signed_power_product(m, hh, hh_inv).shifted(shift));
  }
  return LaurentSeries::from_parts(f.vertex(), std::move(acc_body).finish());
}

std::string_view convention_name(Convention c) noexcept { return c == Convention::eq4 ? "eq4" : "sec54"; }

Convention parse_convention(std::string_view text) {
  if (text == "eq4") return Convention::eq4;
  if (text == "sec54") return Convention::sec54;
  raise(Errc::invalid_argument, "unknown convention '" + std::string(text) + "'");
}

VSRElement VSRElement::identity(std::size_t dim, int trunc, Ring ring) {
  return {LaurentSeries::monomial(SignedMonomial(dim), ring.one(), trunc), StarTuple::identity(dim, trunc, ring)};
}

VSRElement VSRElement::make(LaurentSeries f, StarTuple h) {
  if (f.dim() != h.dim()) raise(Errc::dimension_mismatch, "f and h dimensions differ");
  if (!(f.ring() == h.ring())) raise(Errc::context_mismatch, "f and h rings differ");
  if (!f.is_unit()) raise(Errc::not_a_unit, "f is not a unit of the Verde-Star algebra");
  if (!h.is_unit()) raise(Errc::not_in_k, "h has a non-unit component");
  return {std::move(f), std::move(h)};
}

bool VSRElement::is_identity() const {
  return f.vertex().is_one() && f.body() == Series::one(f.dim(), f.accuracy(), f.ring()) &&
         h == StarTuple::identity(h.dim(), h.trunc(), h.ring());
}

VSRElement vsr_mul(const VSRElement& a, const VSRElement& b, Convention convention) {
  LaurentSeries f = a.f * compose_laurent(b.f, a.h);
  StarTuple h = convention == Convention::eq4 ? k_compose(b.h, a.h) : k_compose(a.h, b.h);
  return {std::move(f), std::move(h)};
}

VSRElement vsr_inverse(const VSRElement& a) {
  StarTuple h_inv = k_inverse(a.h);
  VSRElement inv{compose_laurent(a.f.inverse(), h_inv), std::move(h_inv)};
  if (!vsr_mul(a, inv).is_identity() || !vsr_mul(inv, a).is_identity()) {
    raise(Errc::internal, "Verde-Star-Riordan inverse failed verification");
  }
  return inv;
}

LaurentSeries vsr_column(const VSRElement& a, const SignedMonomial& n) { return a.f * compose_signed(n, a.h); }

RiordanElement to_classical(const VSRElement& a) {
  if (!a.f.vertex().is_one()) raise(Errc::invalid_argument, "only elements with vertex 1 are classical");
  const int k = std::min(a.f.accuracy(), a.h.trunc());
  return RiordanElement::make(a.f.body().lower_truncation(k), k_map(a.h.lower_truncation(k)));
}

std::vector<SignedMonomial> box_basis(const SignedMonomial& lo, const SignedMonomial& hi) {
  if (lo.dim() != hi.dim()) raise(Errc::dimension_mismatch, "box corners in different dimensions");
  if (!leq(lo, hi)) raise(Errc::invalid_argument, "box corner lo is not <= hi");
  std::vector<Monomial> offsets;
  std::vector<std::int32_t> e(lo.dim(), 0);
  auto fill = [&](auto&& self, std::size_t j) -> void {
    if (j == lo.dim()) {
      offsets.emplace_back(e);
      return;
    }
    for (std::int32_t t = 0; t <= hi[j] - lo[j]; ++t) {
      e[j] = t;
      self(self, j + 1);
    }
  };
  fill(fill, 0);
  std::sort(offsets.begin(), offsets.end(), GrlexLess{});
  std::vector<SignedMonomial> out;
  out.reserve(offsets.size());
  for (const auto& o : offsets) out.push_back(lo * to_signed(o));
  return out;
}

WindowMatrix window_matrix(const VSRElement& a, const SignedMonomial& lo, const SignedMonomial& hi) {
  WindowMatrix out;
  out.rows = box_basis(lo, hi);
  out.cols = out.rows;
  out.entries.reserve(out.rows.size() * out.cols.size());
  std::vector<LaurentSeries> columns;
  columns.reserve(out.cols.size());
  for (const auto& n : out.cols) columns.push_back(vsr_column(a, n));
  for (const auto& m : out.rows) {
    for (const auto& col : columns) out.entries.push_back(col.coeff(m));
  }
  return out;
}

int required_accuracy(const SignedMonomial& lo, const SignedMonomial& hi, const SignedMonomial& va,
                      const SignedMonomial& vb) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < lo.dim(); ++j) {
    total += std::max<std::int64_t>(0, static_cast<std::int64_t>(hi[j]) - lo[j] - va[j] - vb[j]);
  }
  return static_cast<int>(total);
}

ConjectureReport conjecture_trial(const VSRElement& a, const VSRElement& b, const SignedMonomial& lo,
                                  const SignedMonomial& hi, Convention convention) {
  const std::size_t d = lo.dim();
  if (a.dim() != d || b.dim() != d) raise(Errc::dimension_mismatch, "box and elements in different dimensions");
  ConjectureReport report;
  report.convention = convention;
  const VSRElement ab = vsr_mul(a, b, convention);
  const std::vector<SignedMonomial> box = box_basis(lo, hi);
  const SignedMonomial& va = a.f.vertex();
  const SignedMonomial& vb = b.f.vertex();

  std::map<SignedMonomial, LaurentSeries, ExponentLess> a_cols;
  auto a_column = [&](const SignedMonomial& p) -> const LaurentSeries& {
    auto it = a_cols.find(p);
    if (it == a_cols.end()) it = a_cols.emplace(p, vsr_column(a, p)).first;
    return it->second;
  };
  std::vector<LaurentSeries> b_cols;
  std::vector<LaurentSeries> ab_cols;
  for (const auto& n : box) {
    b_cols.push_back(vsr_column(b, n));
    ab_cols.push_back(vsr_column(ab, n));
  }

  std::vector<std::pair<std::size_t, std::size_t>> uncertified;
  for (std::size_t r = 0; r < box.size(); ++r) {
    const SignedMonomial& m = box[r];
    for (std::size_t c = 0; c < box.size(); ++c) {
      const SignedMonomial& n = box[c];
      ++report.total_pairs;
      std::optional<Coeff> lhs = ab_cols[c].try_coeff(m);
      // M(a)_{mp} needs p <= m / va and M(b)_{pn} needs p >= vb * n.
      SignedMonomial p_lo = vb * n;
      SignedMonomial p_hi = m * inverse(va);
      std::optional<Coeff> rhs = a.ring().zero();
      if (lhs && leq(p_lo, p_hi)) {
        for (const auto& p : box_basis(p_lo, p_hi)) {
          auto left = a_column(p).try_coeff(m);
          auto right = b_cols[c].try_coeff(p);
          if (!left || !right) {
            rhs.reset();
            break;
          }
          rhs->add_mul(*left, *right);
        }
      }
      if (!lhs || !rhs) {
        ++report.uncertified_pairs;
        uncertified.emplace_back(r, c);
        continue;
      }
      ++report.certified_pairs;
      if (!(*lhs == *rhs)) {
        ++report.mismatched_pairs;
        report.homomorphism_ok = false;
        if (report.counterexample.empty()) {
          report.counterexample = "(" + to_string(m) + ", " + to_string(n) + "): M(ab)=" + lhs->to_string() +
                                  " M(a)M(b)=" + rhs->to_string();
        }
      }
    }
  }
  if (report.certified_pairs == 0) {
    raise(Errc::accuracy_exceeded, "accuracy too small to certify any pair of the box");
  }

  // Largest box [lo, hi - t] with no uncertified pair.
  std::int32_t radius = 0;
  for (std::size_t j = 0; j < d; ++j) radius = std::max(radius, hi[j] - lo[j]);
  for (std::int32_t t = 0; t <= radius; ++t) {
    std::vector<std::int32_t> e(d);
    bool nonempty = true;
    for (std::size_t j = 0; j < d; ++j) {
      e[j] = hi[j] - t;
      nonempty = nonempty && e[j] >= lo[j];
    }
    if (!nonempty) break;
    SignedMonomial top(std::move(e));
    bool clean = std::none_of(uncertified.begin(), uncertified.end(), [&](const auto& rc) {
      return leq(box[rc.first], top) && leq(box[rc.second], top);
    });
    if (clean) {
      report.certified_hi = std::move(top);
      break;
    }
  }

  // Reconstruction: column 1 of the window is f, column x_j is f * x_j h_j.
  // Both are recomputed by plain Laurent products and compared, and data
  // that differs between a and b must show up as different windows.
  const bool has_one = leq(lo, SignedMonomial(d)) && leq(SignedMonomial(d), hi);
  if (has_one) {
    auto visible = [&](const VSRElement& x) {
      std::vector<std::optional<Coeff>> data;
      std::vector<LaurentSeries> cols{x.f};
      for (std::size_t j = 0; j < d; ++j) {
        cols.push_back(x.f * LaurentSeries::from_parts(signed_variable(d, j), x.h[j]));
      }
      for (const auto& col : cols) {
        for (const auto& m : box) data.push_back(col.try_coeff(m));
      }
      return data;
    };
    auto window_cols = [&](const VSRElement& x) {
      std::vector<std::optional<Coeff>> data;
      std::vector<SignedMonomial> keys{SignedMonomial(d)};
      for (std::size_t j = 0; j < d; ++j) keys.push_back(signed_variable(d, j));
      for (const auto& n : keys) {
        if (!leq(lo, n) || !leq(n, hi)) {
          for (std::size_t i = 0; i < box.size(); ++i) data.emplace_back(std::nullopt);
          continue;
        }
        LaurentSeries col = vsr_column(x, n);
        for (const auto& m : box) data.push_back(col.try_coeff(m));
      }
      return data;
    };
    const auto vis_a = visible(a);
    const auto vis_b = visible(b);
    const auto win_a = window_cols(a);
    const auto win_b = window_cols(b);
    for (std::size_t i = 0; i < vis_a.size(); ++i) {
      if (win_a[i] && vis_a[i] && !(*win_a[i] == *vis_a[i])) report.injectivity_ok = false;
      if (win_b[i] && vis_b[i] && !(*win_b[i] == *vis_b[i])) report.injectivity_ok = false;
    }
    bool data_differs = false;
    for (std::size_t i = 0; i < vis_a.size(); ++i) {
      if (vis_a[i] && vis_b[i] && !(*vis_a[i] == *vis_b[i])) data_differs = true;
    }
    if (data_differs) {
      bool windows_differ = false;
      for (std::size_t i = 0; i < win_a.size(); ++i) {
        if (win_a[i] && win_b[i] && !(*win_a[i] == *win_b[i])) windows_differ = true;
      }
      if (!windows_differ) report.injectivity_ok = false;
    }
  }
  return report;
}

}  // namespace riordan
