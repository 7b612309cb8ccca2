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

#include <gtest/gtest.h>

#include "property.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/monomial_matrix.hpp"

namespace riordan {
namespace {

using testing::for_each_trial;
using testing::shipped_rings;

const Ring Z = Ring::integers();

Series ser(std::string_view text, std::size_t d, int k) { return parse_series(text, d, k, Z); }
StarTuple tuple(std::string_view text, std::size_t d, int k) {
  std::vector<Series> comps;
  for (const auto& e : parse_expr_list(text, d)) comps.push_back(eval_series(e, d, k, Z));
  return StarTuple::from_components(std::move(comps));
}
SignedMonomial sm(std::initializer_list<SignedMonomial::Exponent> e) { return SignedMonomial(e); }

TEST(Laurent, NormalizeShiftsByInfimum) {
  const LaurentSeries a = LaurentSeries::normalize(1, Z, {{sm({-1}), Z.one()}, {sm({0}), Z.one()}}, 3);
  EXPECT_EQ(a.vertex(), sm({-1}));
  EXPECT_EQ(a.body(), ser("1 + x1", 1, 3));
  const LaurentSeries b = LaurentSeries::normalize(1, Z, {{sm({1}), Z.from_int(2)}}, 3);
  EXPECT_EQ(b.vertex(), sm({1}));
  EXPECT_EQ(b.body(), ser("2", 1, 3));
  const LaurentSeries c = LaurentSeries::from_parts(sm({0, 0}), ser("3 + x1*x2", 2, 3));
  EXPECT_EQ(c.vertex(), sm({0, 0}));
}

TEST(Laurent, FromPartsFactorsOutBodyVertex) {
  const LaurentSeries a = LaurentSeries::from_parts(sm({-2, 0}), ser("x1*x2 + x1^2", 2, 4));
  EXPECT_EQ(a.vertex(), sm({-1, 0}));
  EXPECT_EQ(a.body(), ser("x2 + x1", 2, 3).lower_truncation(3));
  EXPECT_EQ(a.accuracy(), 3);
  EXPECT_EQ(a.coeff(sm({-1, 1})), Z.one());
  EXPECT_EQ(a.coeff(sm({-2, 5})), Z.zero());
  EXPECT_FALSE(a.try_coeff(sm({-1, 4})).has_value());
  EXPECT_THROW((void)a.coeff(sm({-1, 4})), Error);
}

TEST(Laurent, Multiplication) {
  const LaurentSeries xinv = LaurentSeries::monomial(sm({-1}), Z.one(), 4);
  const LaurentSeries x = LaurentSeries::monomial(sm({1}), Z.one(), 4);
  EXPECT_EQ(xinv * x, LaurentSeries::monomial(sm({0}), Z.one(), 4));
  const LaurentSeries a = LaurentSeries::from_parts(sm({-1}), ser("1 + x1", 1, 4));
  const LaurentSeries b = LaurentSeries::from_parts(sm({1}), ser("1 - x1", 1, 4));
  EXPECT_EQ(a * b, LaurentSeries::from_parts(sm({0}), ser("1 - x1^2", 1, 4)));
  const LaurentSeries m = LaurentSeries::monomial(sm({2, -3}), Z.one(), 2);
  const LaurentSeries n = LaurentSeries::monomial(sm({-1, 1}), Z.one(), 2);
  EXPECT_EQ((m * n).vertex(), sm({1, -2}));
}

TEST(Laurent, AccuracyIsTheMinimum) {
  const LaurentSeries a = LaurentSeries::from_parts(sm({0}), ser("1 + x1", 1, 5));
  const LaurentSeries b = LaurentSeries::from_parts(sm({0}), ser("1 - x1", 1, 2));
  EXPECT_EQ((a * b).accuracy(), 2);
  EXPECT_EQ((a + b).accuracy(), 2);
}

TEST(Laurent, UnitsAndInverse) {
  const LaurentSeries f = LaurentSeries::from_parts(sm({-2, 0}), ser("1 + x2", 2, 3));
  ASSERT_TRUE(f.is_unit());
  EXPECT_EQ(f.inverse(), LaurentSeries::from_parts(sm({2, 0}), ser("1 - x2 + x2^2 - x2^3", 2, 3)));
  const LaurentSeries s = LaurentSeries::normalize(2, Z, {{sm({1, 0}), Z.one()}, {sm({0, 1}), Z.one()}}, 3);
  EXPECT_FALSE(s.is_unit());
  try {
    (void)s.inverse();
    FAIL() << "x1 + x2 inverted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_unit);
  }
  const LaurentSeries two = LaurentSeries::from_parts(sm({0}), ser("2 + x1", 1, 3));
  EXPECT_FALSE(two.is_unit());
  EXPECT_TRUE(LaurentSeries::from_parts(sm({0}), parse_series("2 + x1", 1, 3, Ring::rationals())).is_unit());
}

TEST(StarTupleOps, CoordinatewiseProduct) {
  const int k = 4;
  const StarTuple x = StarTuple::from_components({ser("x1", 2, k), ser("x2", 2, k)});
  const StarTuple h = tuple("1 + x1 + x2^2, 1 - x2 - x1^2", 2, k);
  EXPECT_EQ(star_mul(x, h), tuple("x1 + x1^2 + x1*x2^2, x2 - x2^2 - x1^2*x2", 2, k));
  EXPECT_EQ(star_mul(h, StarTuple::identity(2, k, Z)), h);
  EXPECT_EQ(star_mul(h, x), star_mul(x, h));
  const StarTuple e1 = tuple("1, 0", 2, k), e2 = tuple("0, 1", 2, k);
  EXPECT_EQ(star_mul(e1, e2), tuple("0, 0", 2, k));
}

TEST(KGroup, KMap) {
  const StarTuple id = StarTuple::identity(2, 3, Z);
  EXPECT_EQ(k_map(id), FormalMap::identity(2, 3, Z));
  const FormalMap g = k_map(tuple("1/(1-x1)", 1, 4));
  EXPECT_EQ(g[0], ser("x1/(1-x1)", 1, 4));
  const StarTuple h = tuple("-1 + x2, 1 + 3*x1", 2, 3);
  const LinearPart l = linear_part(k_map(h));
  EXPECT_EQ(l(0, 0), Z.from_int(-1));
  EXPECT_EQ(l(1, 1), Z.one());
  EXPECT_TRUE(l(0, 1).is_zero());
  EXPECT_TRUE(l(1, 0).is_zero());
  EXPECT_THROW((void)k_map(tuple("x1, 1", 2, 3)), Error);
  EXPECT_THROW((void)k_extract(FormalMap::from_components({ser("x2", 2, 3), ser("x1", 2, 3)})), Error);
}

TEST(KGroup, ComposeSigned) {
  const StarTuple h = tuple("1 + x1, 1", 2, 3);
  EXPECT_EQ(compose_signed(sm({0, 0}), h), LaurentSeries::monomial(sm({0, 0}), Z.one(), 3));
  const LaurentSeries xinv = compose_signed(sm({-1, 0}), h);
  EXPECT_EQ(xinv.vertex(), sm({-1, 0}));
  EXPECT_EQ(xinv.body(), ser("1 - x1 + x1^2 - x1^3", 2, 3));
  const LaurentSeries x2 = compose_signed(sm({0, 1}), h);
  EXPECT_EQ(x2, LaurentSeries::monomial(sm({0, 1}), Z.one(), 3));
}

TEST(KGroup, ComposeLaurentAgreesWithClassicalComposition) {
  // For a vertex >= 1 the Laurent composite is the ordinary f o (x*h).
  for_each_trial(40, 201, [&](Rng& rng) {
    const int k = 4;
    const StarTuple h = random_star_unit(rng, 2, k, Z);
    const Series f = random_sparse(rng, 2, k, Z, 0, 6);
    const LaurentSeries lf = LaurentSeries::from_parts(sm({0, 0}), f);
    const LaurentSeries out = compose_laurent(lf, h);
    const Series expected = compose_series(f, k_map(h));
    for (const auto& m : enumerate_upto(2, k)) {
      const auto c = out.try_coeff(to_signed(m));
      if (c) EXPECT_EQ(*c, expected.coeff(m)) << to_string(m);
    }
  });
}

TEST(KGroup, ComposeLaurentMatchesClosedForm) {
  // f = v * b composes to (v o x*h) * (b o x*h), with b o x*h classical.
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(20, 205, [&](Rng& rng) {
      const int acc = 4;
      const StarTuple h = random_star_unit(rng, 2, acc, ring);
      const LaurentSeries f = random_laurent(rng, 2, acc, ring, true);
      const int k = f.accuracy();
      const StarTuple hk = h.lower_truncation(k);
      const LaurentSeries expected =
          compose_signed(f.vertex(), hk) *
          LaurentSeries::from_parts(SignedMonomial(2), compose_series(f.body(), k_map(hk)));
      const LaurentSeries out = compose_laurent(f, h);
      EXPECT_EQ(out.vertex(), f.vertex());
      for (const auto& m : enumerate_upto(2, k)) {
        const SignedMonomial at = f.vertex() * to_signed(m);
        const auto want = expected.try_coeff(at);
        const auto got = out.try_coeff(at);
        ASSERT_TRUE(want && got) << to_string(at);
        EXPECT_EQ(*got, *want) << to_string(at);
      }
    });
  }
}

TEST(KGroupProperty, CompositionLaws) {
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(20, 211, [&](Rng& rng) {
      const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
      const int acc = 4;
      const StarTuple h = random_star_unit(rng, d, acc, ring);
      const LaurentSeries f = random_laurent(rng, d, acc, ring, rng.coin());
      const LaurentSeries g = random_laurent(rng, d, acc, ring, rng.coin());
      const LaurentSeries fh = compose_laurent(f, h);
      if (!f.is_zero()) EXPECT_EQ(fh.vertex(), f.vertex());
      EXPECT_EQ(compose_laurent(f * g, h), fh * compose_laurent(g, h));
      EXPECT_EQ(compose_laurent(f, StarTuple::identity(d, acc, ring)), f);

      const StarTuple a = random_star_unit(rng, d, acc, ring);
      const StarTuple b = random_star_unit(rng, d, acc, ring);
      const FormalMap composed = compose_maps(k_map(a), k_map(b));
      const StarTuple extracted = k_extract(composed);
      EXPECT_TRUE(extracted.is_unit());
      EXPECT_EQ(k_map(extracted), composed.lower_truncation(acc - 1));
      EXPECT_EQ(extracted, k_compose(a, b).lower_truncation(acc - 1));
      const StarTuple inv = k_inverse(a);
      EXPECT_EQ(k_compose(a, inv), StarTuple::identity(d, acc, ring));
    });
  }
}

TEST(LaurentProperty, UnitCriterionVertexLawAndDomain) {
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(40, 221, [&](Rng& rng) {
      const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
      const int acc = 3;
      const LaurentSeries f = random_laurent(rng, d, acc, ring, rng.coin());
      const LaurentSeries g = random_laurent(rng, d, acc, ring, rng.coin());
      EXPECT_EQ(f.is_unit(), f.leading_coeff().is_unit());
      if (f.is_unit()) {
        EXPECT_EQ(f * f.inverse(), LaurentSeries::monomial(SignedMonomial(d), ring.one(), f.accuracy()));
      } else {
        EXPECT_THROW((void)f.inverse(), Error);
      }
      if (!f.is_zero() && !g.is_zero()) {
        const LaurentSeries fg = f * g;
        // The lowest-degree parts multiply to a nonzero form; it is visible
        // when it lies inside the product's window.
        auto lowest = [](const LaurentSeries& s) { return s.body().basis().degree(s.body().terms().front().index); };
        if (lowest(f) + lowest(g) <= fg.accuracy()) EXPECT_FALSE(fg.is_zero());
        EXPECT_TRUE(leq(f.vertex() * g.vertex(), fg.vertex()));
      }
    });
  }
}

TEST(VerdeStarRiordan, IdentityAppellAndInverse) {
  const int acc = 4;
  const VSRElement id = VSRElement::identity(2, acc, Z);
  EXPECT_TRUE(id.is_identity());
  Rng rng(7);
  const VSRElement a = random_vsr_element(rng, 2, acc, Z);
  EXPECT_EQ(vsr_mul(id, a), a);
  EXPECT_EQ(vsr_mul(a, id), a);
  const VSRElement p{a.f, id.h};
  const VSRElement q{random_laurent(rng, 2, acc, Z, true), id.h};
  EXPECT_EQ(vsr_mul(p, q), (VSRElement{p.f * q.f, id.h}));
  EXPECT_THROW((void)VSRElement::make(random_laurent(rng, 2, acc, Z, false), id.h), Error);
}

TEST(VerdeStarRiordanProperty, InverseRoundTrip) {
  for (const Ring& ring : shipped_rings()) {
    SCOPED_TRACE(ring.tag());
    for_each_trial(20, 231, [&](Rng& rng) {
      const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
      const VSRElement a = random_vsr_element(rng, d, 4, ring);
      const VSRElement inv = vsr_inverse(a);
      EXPECT_TRUE(vsr_mul(a, inv).is_identity());
      EXPECT_TRUE(vsr_mul(inv, a).is_identity());
    });
  }
}

TEST(Window, IdentityAndShift) {
  const SignedMonomial lo = sm({-1, -1}), hi = sm({1, 1});
  const std::vector<SignedMonomial> box = box_basis(lo, hi);
  ASSERT_EQ(box.size(), 9u);
  EXPECT_EQ(box.front(), lo);
  EXPECT_EQ(box.back(), hi);
  const VSRElement id = VSRElement::identity(2, 6, Z);
  const WindowMatrix w = window_matrix(id, lo, hi);
  for (std::size_t r = 0; r < box.size(); ++r) {
    for (std::size_t c = 0; c < box.size(); ++c) EXPECT_EQ(w(r, c).is_one(), r == c);
  }
  const VSRElement shift{LaurentSeries::monomial(sm({1, 0}), Z.one(), 6), id.h};
  const WindowMatrix s = window_matrix(shift, lo, hi);
  for (std::size_t r = 0; r < box.size(); ++r) {
    for (std::size_t c = 0; c < box.size(); ++c) {
      EXPECT_EQ(s(r, c).is_one(), box[r] == sm({1, 0}) * box[c]);
      if (!(box[r] == sm({1, 0}) * box[c])) EXPECT_TRUE(s(r, c).is_zero());
    }
  }
  const VSRElement coarse = VSRElement::identity(2, 1, Z);
  const VSRElement dense{LaurentSeries::from_parts(sm({0, 0}), ser("1 + x1 + x2", 2, 1)), coarse.h};
  EXPECT_THROW((void)window_matrix(dense, lo, hi), Error);
}

TEST(WindowProperty, BandStructure) {
  for_each_trial(20, 241, [&](Rng& rng) {
    const VSRElement a = random_vsr_element(rng, 2, 8, Z, 3);
    const SignedMonomial lo = sm({-1, -1}), hi = sm({1, 1});
    const WindowMatrix w = window_matrix(a, lo, hi);
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
      for (std::size_t c = 0; c < w.cols.size(); ++c) {
        if (!leq(a.f.vertex() * w.cols[c], w.rows[r])) EXPECT_TRUE(w(r, c).is_zero());
      }
    }
  });
}

TEST(Conjecture, IdentityPasses) {
  const SignedMonomial lo = sm({-1, 0}), hi = sm({1, 2});
  const SignedMonomial one(2);
  const int acc = required_accuracy(lo, hi, one, one);
  const VSRElement id = VSRElement::identity(2, acc, Z);
  const ConjectureReport report = conjecture_trial(id, id, lo, hi);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.certified_pairs, report.total_pairs);
  EXPECT_EQ(report.mismatched_pairs, 0u);
  ASSERT_TRUE(report.certified_hi.has_value());
  EXPECT_EQ(*report.certified_hi, hi);
}

TEST(Conjecture, ClassicalEmbeddingAgreesWithRiordanMatrices) {
  for_each_trial(20, 251, [&](Rng& rng) {
    const int r = 2;
    const SignedMonomial lo(2);
    const SignedMonomial hi = sm({r, r});
    const int acc = required_accuracy(lo, hi, lo, lo);
    auto classical = [&] {
      return VSRElement::make(LaurentSeries::from_parts(lo, random_unit_series(rng, 2, acc, Z)),
                              random_star_unit(rng, 2, acc, Z));
    };
    const VSRElement a = classical(), b = classical();
    const ConjectureReport report = conjecture_trial(a, b, lo, hi);
    EXPECT_EQ(report.homomorphism_ok, homomorphism_check(to_classical(a), to_classical(b)));
    EXPECT_TRUE(report.passed());
  });
}

TEST(Conjecture, RandomPairsUnderTheGroupOrder) {
  for_each_trial(10, 261, [&](Rng& rng) {
    const SignedMonomial lo = sm({static_cast<int>(rng.uniform(-1, 0)), static_cast<int>(rng.uniform(-1, 0))});
    const SignedMonomial hi = lo * sm({2, 2});
    const VSRElement a = random_vsr_element(rng, 2, 8, Z, 2);
    const VSRElement b = random_vsr_element(rng, 2, 8, Z, 2);
    const ConjectureReport report = conjecture_trial(a, b, lo, hi, Convention::eq4);
    EXPECT_TRUE(report.passed()) << report.counterexample;
    EXPECT_GT(report.certified_pairs, 0u);
  });
}

TEST(Conventions, ParseAndName) {
  EXPECT_EQ(parse_convention("eq4"), Convention::eq4);
  EXPECT_EQ(parse_convention("sec54"), Convention::sec54);
  EXPECT_EQ(convention_name(Convention::sec54), "sec54");
  EXPECT_THROW((void)parse_convention("other"), Error);
}

}  // namespace
}  // namespace riordan
