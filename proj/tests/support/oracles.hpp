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

// Independent reference implementations used by the tests. Nothing here
// calls into the library's arithmetic: polynomials are plain maps from
// exponent vectors to rationals, multiplied term by term.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/series.hpp"

namespace riordan::oracle {

using Exps = std::vector<int>;

struct Poly {
  std::size_t dim = 1;
  int trunc = 0;
  std::map<Exps, mpq_class> terms;

  static Poly constant(std::size_t dim, int trunc, long c) {
    Poly p{dim, trunc, {}};
    if (c != 0) p.terms[Exps(dim, 0)] = c;
    return p;
  }
  static Poly var(std::size_t dim, int trunc, std::size_t j, long c = 1) {
    Poly p{dim, trunc, {}};
    Exps e(dim, 0);
    e[j] = 1;
    if (trunc >= 1) p.terms[e] = c;
    return p;
  }

  void clean() {
    for (auto it = terms.begin(); it != terms.end();) {
      int deg = 0;
      for (int v : it->first) deg += v;
      if (it->second == 0 || deg > trunc) {
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
  }

  mpq_class at(const Exps& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? mpq_class(0) : it->second;
  }
};

inline Poly add(const Poly& a, const Poly& b, long sign = 1) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.terms[e] += sign * c;
  out.clean();
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out{a.dim, a.trunc, {}};
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exps e(a.dim);
      int deg = 0;
      for (std::size_t j = 0; j < a.dim; ++j) {
        e[j] = ea[j] + eb[j];
        deg += e[j];
      }
      if (deg <= a.trunc) out.terms[e] += ca * cb;
    }
  }
  out.clean();
  return out;
}

inline Poly power(const Poly& a, int n) {
  Poly out = Poly::constant(a.dim, a.trunc, 1);
  for (int i = 0; i < n; ++i) out = mul(out, a);
  return out;
}

/// sum_m f_m * prod_j g_j^(m_j), by repeated multiplication.
inline Poly compose(const Poly& f, const std::vector<Poly>& g) {
  Poly out{f.dim, f.trunc, {}};
  for (const auto& [e, c] : f.terms) {
    Poly term = Poly::constant(f.dim, f.trunc, 1);
    for (std::size_t j = 0; j < e.size(); ++j) term = mul(term, power(g[j], e[j]));
    for (auto& [te, tc] : term.terms) out.terms[te] += c * tc;
  }
  out.clean();
  return out;
}

/// 1 / f for f with constant term 1: sum_r (1 - f)^r, r = 0..trunc.
inline Poly geometric_inverse(const Poly& f) {
  const Poly h = add(Poly::constant(f.dim, f.trunc, 1), f, -1);
  Poly out{f.dim, f.trunc, {}};
  Poly hr = Poly::constant(f.dim, f.trunc, 1);
  for (int r = 0; r <= f.trunc; ++r) {
    out = add(out, hr);
    hr = mul(hr, h);
  }
  return out;
}

/// The value of a rational in the ring (numerator times inverse denominator).
inline Coeff to_ring(const mpq_class& q, const Ring& ring) {
  Coeff num = ring.from_integer(q.get_num());
  Coeff den = ring.from_integer(q.get_den());
  return num * den.inverse();
}

inline Poly from_series(const Series& s) {
  Poly out{s.dim(), s.trunc(), {}};
  for (const auto& t : s.terms()) {
    const auto ex = s.monomial_of(t).exponents();
    out.terms[Exps(ex.begin(), ex.end())] = mpq_class(t.coeff.to_string());
  }
  return out;
}

/// Compares every coefficient of degree <= trunc, mapping the oracle's
/// rationals into the series ring.
inline bool equal(const Series& s, const Poly& p) {
  if (s.dim() != p.dim || s.trunc() != p.trunc) return false;
  for (const auto& m : enumerate_upto(s.dim(), s.trunc())) {
    const auto ex = m.exponents();
    if (!(s.coeff(m) == to_ring(p.at(Exps(ex.begin(), ex.end())), s.ring()))) return false;
  }
  return true;
}

/// Pascal's triangle by the additive recurrence.
inline std::vector<std::vector<mpz_class>> pascal(int n) {
  std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    rows[r].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) rows[r][c] = rows[r - 1][c - 1] + rows[r - 1][c];
  }
  return rows;
}

/// Coefficients c_1..c_k of h with g(h(x)) = x for g = x + x^2, solved
/// one degree at a time: c_n = -[x^n] (h_{<n})^2.
inline std::vector<mpz_class> catalan_inverse(int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  if (k >= 1) c[1] = 1;
  for (int n = 2; n <= k; ++n) {
    mpz_class sq = 0;
    for (int i = 1; i < n; ++i) sq += c[i] * c[n - i];
    c[n] = -sq;
  }
  return c;
}

}  // namespace riordan::oracle
