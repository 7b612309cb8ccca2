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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "property.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"

namespace riordan {
namespace {

using testing::for_each_trial;
using testing::shipped_rings;

const Ring Z = Ring::integers();

Series ser(std::string_view text, std::size_t d, int k, Ring ring = Ring::integers()) {
  return parse_series(text, d, k, ring);
}
Monomial mono(std::string_view text, std::size_t d) { return parse_monomial(text, d); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

TEST(Series, Coefficients) {
  const Series f = ser("1 + 2*x1", 2, 3);
  EXPECT_EQ(f.coeff(mono("x1", 2)), Z.from_int(2));
  EXPECT_EQ(f.coeff(mono("x2", 2)), Z.zero());
  EXPECT_EQ(code_of([&] { (void)f.coeff(mono("x1^4", 2)); }), Errc::truncation_exceeded);
}

TEST(Series, StoresNoZeros) {
  const Series f = ser("x1 - x1 + 3", 1, 2);
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f, Series::constant(1, 2, Z.from_int(3)));
}

TEST(Series, Multiplication) {
  EXPECT_EQ(ser("(1+x1)*(1-x1)", 1, 3), ser("1 - x1^2", 1, 3));
  const Series f = ser("3 - x1*x2 + x2^2", 2, 3);
  EXPECT_EQ(f * Series::one(2, 3, Z), f);
  EXPECT_EQ(ser("(x1+x2)^2", 2, 3), ser("x1^2 + 2*x1*x2 + x2^2", 2, 3));
  EXPECT_EQ(code_of([] { (void)(Series::one(1, 2, Z) * Series::one(1, 3, Z)); }), Errc::context_mismatch);
  EXPECT_EQ(code_of([] { (void)(Series::one(1, 2, Z) * Series::one(1, 2, Ring::rationals())); }),
            Errc::context_mismatch);
}

TEST(Series, Vertex) {
  EXPECT_EQ(ser("x1^2*x2 + x1*x2^3", 2, 5).vertex(), mono("x1*x2", 2));
  EXPECT_EQ(ser("1 + x1", 2, 5).vertex(), mono("1", 2));
  EXPECT_EQ(ser("3*x1^2", 2, 5).vertex(), mono("x1^2", 2));
  EXPECT_EQ(code_of([] { (void)Series(2, 3, Z).vertex(); }), Errc::vertex_of_zero);
}

TEST(Series, FactorOutVertex) {
  auto [v, h] = ser("x1^2*x2 + x1*x2^3", 2, 5).factor_out_vertex();
  EXPECT_EQ(v, mono("x1*x2", 2));
  EXPECT_EQ(h, ser("x1 + x2^2", 2, 3));
  auto [v1, h1] = ser("1 + x1", 2, 5).factor_out_vertex();
  EXPECT_TRUE(v1.is_one());
  EXPECT_EQ(h1, ser("1 + x1", 2, 5));
  auto [v2, h2] = ser("5*x2^3", 2, 5).factor_out_vertex();
  EXPECT_EQ(v2, mono("x2^3", 2));
  EXPECT_EQ(h2, Series::constant(2, 2, Z.from_int(5)));
}

TEST(Series, DivideByMonomial) {
  EXPECT_EQ(ser("x1^2 + x1*x2", 2, 4).div_by_monomial(mono("x1", 2)), ser("x1 + x2", 2, 3));
  const Series f = ser("1 + x2", 2, 4);
  EXPECT_EQ(f.div_by_monomial(mono("1", 2)), f);
  EXPECT_EQ(code_of([] { (void)ser("x1 + x2", 2, 4).div_by_monomial(mono("x1", 2)); }), Errc::not_a_factor);
}

TEST(Series, Units) {
  EXPECT_TRUE(ser("1 + x1", 1, 3).is_unit());
  EXPECT_FALSE(ser("2 + x1", 1, 3).is_unit());
  EXPECT_FALSE(ser("x1 + x2", 2, 3).is_unit());
  EXPECT_TRUE(ser("2 + x1", 1, 3, Ring::rationals()).is_unit());
  EXPECT_EQ(code_of([] { (void)ser("2 + x1", 1, 3).inverse(); }), Errc::not_a_unit);
}

TEST(Series, Inverse) {
  EXPECT_EQ(Series::one(2, 4, Z).inverse(), Series::one(2, 4, Z));
  EXPECT_EQ(ser("1 + x1", 1, 3).inverse(), ser("1 - x1 + x1^2 - x1^3", 1, 3));
  // 1 / (1 - x1 - x2): coefficient of x1^a x2^b is C(a+b, a).
  const Series inv = ser("1 - x1 - x2", 2, 3).inverse();
  for (const auto& m : enumerate_upto(2, 3)) {
    const auto row = oracle::pascal(static_cast<int>(m.degree()));
    EXPECT_EQ(inv.coeff(m), Z.from_integer(row[m.degree()][m[0]])) << to_string(m);
  }
  const oracle::Poly f = oracle::from_series(ser("1 - x1 - x2", 2, 3));
  EXPECT_TRUE(oracle::equal(inv, oracle::geometric_inverse(f)));
}

TEST(Series, LowerTruncation) {
  EXPECT_EQ(ser("1 + x1 + x1^2", 1, 2).lower_truncation(1), ser("1 + x1", 1, 1));
  const Series f = ser("2 + x1 - x1*x2", 2, 3);
  EXPECT_EQ(f.lower_truncation(3), f);
  EXPECT_EQ(f.lower_truncation(0), Series::constant(2, 0, Z.from_int(2)));
  EXPECT_EQ(code_of([&] { (void)f.lower_truncation(4); }), Errc::truncation_exceeded);
}

TEST(Series, PowersAgreeWithRepeatedProducts) {
  const Series f = ser("1 + 2*x1 - x2", 2, 5);
  Series acc = Series::one(2, 5, Z);
  for (std::uint64_t e = 0; e < 7; ++e) {
    EXPECT_EQ(f.pow(e), acc);
    acc = acc * f;
  }
  EXPECT_TRUE(ser("x1 + x2", 2, 3).pow(4).is_zero());
}

Series draw(Rng& rng, std::size_t d, int k, const Ring& ring) {
  return Series::constant(d, k, random_coeff(rng, ring)) + random_sparse(rng, d, k, ring, 1, 6);
}

TEST(SeriesProperty, RingAxiomsUpToTruncation) {
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(60, 31, [&](Rng& rng) {
      const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
      const int k = static_cast<int>(rng.uniform(0, 5));
      const Series f = draw(rng, d, k, ring), g = draw(rng, d, k, ring), h = draw(rng, d, k, ring);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(f - f, Series(d, k, ring));
      EXPECT_TRUE(oracle::equal(f * g, oracle::mul(oracle::from_series(f), oracle::from_series(g))));
      for (int j = 0; j <= k; ++j) {
        EXPECT_EQ((f + g).lower_truncation(j), f.lower_truncation(j) + g.lower_truncation(j));
        EXPECT_EQ((f * g).lower_truncation(j), f.lower_truncation(j) * g.lower_truncation(j));
      }
    });
  }
}

TEST(SeriesProperty, UnitCriterionBothWays) {
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(100, 41, [&](Rng& rng) {
      const Series f = draw(rng, 2, 4, ring);
      EXPECT_EQ(f.is_unit(), f.constant_term().is_unit());
      if (f.is_unit()) {
        EXPECT_EQ(f * f.inverse(), Series::one(2, 4, ring));
      } else {
        EXPECT_THROW((void)f.inverse(), Error);
      }
    });
  }
}

TEST(SeriesProperty, VertexLawAndNoZeroDivisors) {
  for_each_trial(200, 51, [&](Rng& rng) {
    const int k = 8;
    const Series f = random_sparse(rng, 2, 4, Z, 0, 4);
    const Series g = random_sparse(rng, 2, 4, Z, 0, 4);
    if (f.is_zero() || g.is_zero()) return;
    auto lift = [&](const Series& s) {
      std::vector<std::pair<Monomial, Coeff>> terms;
      for (const auto& t : s.terms()) terms.emplace_back(s.monomial_of(t), t.coeff);
      return Series::from_terms(2, k, Z, terms);
    };
    // Polynomials of degree <= 4 multiply exactly at k = 8.
    const Series prod = lift(f) * lift(g);
    ASSERT_FALSE(prod.is_zero());
    EXPECT_TRUE(divides(f.vertex() * g.vertex(), prod.vertex()));
  });
}

TEST(SeriesProperty, FactorRoundTrip) {
  for_each_trial(200, 61, [&](Rng& rng) {
    const Series f = random_sparse(rng, 3, 5, Z, 0, 5);
    if (f.is_zero()) return;
    auto [v, h] = f.factor_out_vertex();
    EXPECT_TRUE(h.is_zero() || h.vertex().is_one());
    EXPECT_EQ(h.trunc(), f.trunc() - v.degree());
    std::vector<std::pair<Monomial, Coeff>> terms;
    for (const auto& t : h.terms()) terms.emplace_back(h.monomial_of(t) * v, t.coeff);
    EXPECT_EQ(Series::from_terms(3, 5, Z, terms), f);
  });
}

}  // namespace
}  // namespace riordan
