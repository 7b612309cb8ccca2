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

#include "riordan/monomial.hpp"

#include <gtest/gtest.h>

#include "property.hpp"
#include "riordan/error.hpp"

namespace riordan {
namespace {

using testing::for_each_trial;

Monomial mono(std::string_view text, std::size_t d = 2) { return parse_monomial(text, d); }

TEST(Monomial, Multiplication) {
  EXPECT_EQ(mono("x1") * mono("x2"), mono("x1*x2"));
  EXPECT_EQ(mono("x1^2*x2") * mono("x1*x2^3"), mono("x1^3*x2^4"));
  const SignedMonomial a = parse_signed_monomial("x1^-1", 2);
  EXPECT_TRUE((a * parse_signed_monomial("x1", 2)).is_one());
  EXPECT_THROW(mono("x1", 2) * mono("x1", 3), Error);
}

TEST(Monomial, DivisibilityAndQuotient) {
  EXPECT_TRUE(divides(mono("x1*x2"), mono("x1^2*x2^3")));
  EXPECT_EQ(quotient(mono("x1^2*x2^3"), mono("x1*x2")), mono("x1*x2^2"));
  EXPECT_FALSE(divides(mono("x1^2"), mono("x1*x2")));
  EXPECT_TRUE(divides(mono("1"), mono("x1^5*x2")));
  try {
    (void)quotient(mono("x1*x2"), mono("x1^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_factor);
  }
}

TEST(Monomial, HcfAndInfimum) {
  EXPECT_EQ(hcf(std::vector{mono("x1^2*x2"), mono("x1*x2^3")}), mono("x1*x2"));
  EXPECT_EQ(hcf(std::vector{mono("x1^2*x2")}), mono("x1^2*x2"));
  EXPECT_EQ(hcf(std::vector{mono("x1"), mono("x2")}), mono("1"));
  EXPECT_THROW(hcf(std::vector<Monomial>{}), Error);
  const std::vector<SignedMonomial> signed_set{parse_signed_monomial("x1^-2*x2", 2),
                                               parse_signed_monomial("x1*x2^-3", 2)};
  EXPECT_EQ(inf_signed(signed_set), parse_signed_monomial("x1^-2*x2^-3", 2));
  EXPECT_THROW(inf_signed(std::vector<SignedMonomial>{}), Error);
}

TEST(Monomial, Degree) {
  EXPECT_EQ(mono("1").degree(), 0);
  EXPECT_EQ(mono("x1*x2^2").degree(), 3);
  EXPECT_EQ(mono("x1^3").degree(), 3);
}

TEST(Monomial, GrlexEnumeration) {
  const auto list = enumerate_upto(2, 2);
  std::vector<std::string> labels;
  for (const auto& m : list) labels.push_back(to_string(m));
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"}));
  EXPECT_EQ(grlex_compare(mono("x2"), mono("x1^2")), std::strong_ordering::less);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 6; ++k) {
      const auto all = enumerate_upto(d, k);
      ASSERT_EQ(all.size(), binomial(d + static_cast<std::size_t>(k), d));
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(grlex_rank(all[i]), i);
        if (i > 0) EXPECT_EQ(grlex_compare(all[i - 1], all[i]), std::strong_ordering::less);
      }
    }
  }
}

TEST(Monomial, TextRoundTrip) {
  EXPECT_EQ(to_string(mono("x1^2*x2")), "x1^2*x2");
  EXPECT_EQ(to_string(mono("1")), "1");
  EXPECT_EQ(to_string(parse_signed_monomial("x1^-2*x2", 2)), "x1^-2*x2");
  EXPECT_THROW(parse_monomial("x3", 2), ParseError);
  EXPECT_THROW(parse_monomial("x1^-1", 2), ParseError);
  EXPECT_THROW(parse_monomial("x1**x2", 2), ParseError);
}

TEST(MonomialProperty, SemigroupLaws) {
  for_each_trial(300, 21, [](Rng& rng) {
    auto draw = [&] {
      std::vector<std::int32_t> e(3);
      for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform(0, 4));
      return Monomial(e);
    };
    const Monomial m = draw(), n = draw(), p = draw();
    EXPECT_EQ(m * n, n * m);
    EXPECT_EQ((m * n) * p, m * (n * p));
    EXPECT_EQ(m * Monomial(3), m);
    EXPECT_TRUE(divides(m, m * n));
    EXPECT_EQ(quotient(m * n, m), n);
    if (m * p == n * p) EXPECT_EQ(m, n);
    const Monomial h = hcf(std::vector{m, n, p});
    EXPECT_TRUE(divides(h, m) && divides(h, n) && divides(h, p));
    const Monomial c = hcf(std::vector{m, n});
    EXPECT_TRUE(divides(hcf(std::vector{c, p}), h));
    // On the signed group, m <= n iff m divides n after a common shift.
    const SignedMonomial shift = inverse(to_signed(p));
    EXPECT_EQ(leq(to_signed(m) * shift, to_signed(n) * shift), divides(m, n));
    EXPECT_EQ(inf_signed(std::vector{to_signed(m), to_signed(n)}), to_signed(hcf(std::vector{m, n})));
  });
}

TEST(MonomialBasis, ProductTable) {
  const auto basis = MonomialBasis::get(2, 3);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    for (std::size_t j = 0; j < basis->size(); ++j) {
      const Monomial prod = basis->monomial(i) * basis->monomial(j);
      if (prod.degree() > 3) {
        EXPECT_EQ(basis->product(i, j), MonomialBasis::npos);
      } else {
        EXPECT_EQ(basis->monomial(basis->product(i, j)), prod);
      }
    }
  }
  EXPECT_EQ(MonomialBasis::get(2, 3).get(), basis.get());
}

}  // namespace
}  // namespace riordan
