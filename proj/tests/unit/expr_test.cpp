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

#include "riordan/expr.hpp"

#include <gtest/gtest.h>

#include "golden.hpp"
#include "oracles.hpp"
#include "property.hpp"
#include "riordan/error.hpp"
#include "riordan/serialize.hpp"

namespace riordan {
namespace {

using testing::for_each_trial;

const Ring Z = Ring::integers();

TEST(ExprGolden, TreesValuesAndErrors) {
  ASSERT_GE(golden::expr_cases().size(), 20u);
  for (const auto& c : golden::expr_cases()) {
    SCOPED_TRACE(std::string(c.text));
    std::string tree, value, error;
    try {
      const Expr e = parse_expr(c.text, 2);
      tree = render(e);
      value = render_series(eval_series(e, 2, 3, Z));
    } catch (const ParseError& e) {
      error = e.what();
    } catch (const Error& e) {
      error = e.what();
    }
    EXPECT_EQ(tree, c.tree);
    EXPECT_EQ(value, c.value);
    EXPECT_EQ(error, c.error);
  }
}

TEST(Expr, AstShape) {
  const Expr e = parse_expr("1/(1-x1)", 1);
  ASSERT_EQ(e.kind, Expr::Kind::div);
  EXPECT_EQ(e.args[0].kind, Expr::Kind::literal);
  EXPECT_EQ(e.args[0].digits, "1");
  ASSERT_EQ(e.args[1].kind, Expr::Kind::sub);
  EXPECT_EQ(e.args[1].args[1].kind, Expr::Kind::variable);
  EXPECT_EQ(e.args[1].args[1].variable, 1u);
}

TEST(Expr, ErrorsCarryOffsetsAndCodes) {
  try {
    (void)parse_expr("1 + x3", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    (void)parse_series("1/(x1+x2)", 2, 3, Z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_unit);
  }
  EXPECT_THROW((void)parse_expr("x1^99999999999", 1), ParseError);
  EXPECT_THROW((void)parse_expr("", 1), ParseError);
  EXPECT_THROW((void)parse_expr("x0", 1), ParseError);
}

TEST(Expr, ListsKeepOffsets) {
  const auto list = parse_expr_list("x1 + x2^2, x2", 2);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(render(list[0]), "(x1 + (x2^2))");
  EXPECT_EQ(list[1].offset, 11u);
  try {
    (void)parse_expr_list("x1, x2 x1", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Expr, RingSpecificValues) {
  EXPECT_EQ(render_series(parse_series("1/2 + x1/3", 1, 2, Ring::rationals())), "1/2 + 1/3*x1");
  EXPECT_EQ(render_series(parse_series("1/2 + 9*x1", 1, 2, Ring::modp(7))), "4 + 2*x1");
  EXPECT_THROW((void)parse_series("1/2", 1, 2, Z), Error);
}

TEST(Expr, TwoVariableGeometricSeriesMatchesOracle) {
  const int k = 5;
  const Series s = parse_series("1/(1-x1-x2)", 2, k, Z);
  const oracle::Poly base = oracle::add(oracle::Poly::var(2, k, 0), oracle::Poly::var(2, k, 1));
  oracle::Poly sum = oracle::Poly::constant(2, k, 0);
  for (int r = 0; r <= k; ++r) sum = oracle::add(sum, oracle::power(base, r));
  EXPECT_EQ(enumerate_upto(2, k).size(), 21u);
  EXPECT_TRUE(oracle::equal(s, sum));
}

Expr random_expr(Rng& rng, int depth) {
  Expr e;
  if (depth == 0 || rng.uniform(0, 3) == 0) {
    if (rng.coin()) {
      e.kind = Expr::Kind::literal;
      e.digits = std::to_string(rng.uniform(0, 9));
    } else {
      e.kind = Expr::Kind::variable;
      e.variable = static_cast<std::size_t>(rng.uniform(1, 2));
    }
    return e;
  }
  static constexpr Expr::Kind kinds[] = {Expr::Kind::neg, Expr::Kind::add, Expr::Kind::sub, Expr::Kind::mul,
                                         Expr::Kind::pow};
  e.kind = kinds[rng.uniform(0, 4)];
  e.args.push_back(random_expr(rng, depth - 1));
  if (e.kind == Expr::Kind::pow) {
    e.exponent = static_cast<std::uint64_t>(rng.uniform(0, 3));
  } else if (e.kind != Expr::Kind::neg) {
    e.args.push_back(random_expr(rng, depth - 1));
  }
  return e;
}

TEST(ExprProperty, RenderRoundTripAndEvaluation) {
  for_each_trial(200, 301, [&](Rng& rng) {
    const Expr a = random_expr(rng, 4);
    const Expr b = random_expr(rng, 4);
    EXPECT_EQ(parse_expr(render(a), 2), a) << render(a);
    const Series va = eval_series(a, 2, 4, Z), vb = eval_series(b, 2, 4, Z);
    const Expr sum = parse_expr("(" + render(a) + ") + (" + render(b) + ")", 2);
    const Expr product = parse_expr(render(a) + " * " + render(b), 2);
    EXPECT_EQ(eval_series(sum, 2, 4, Z), va + vb);
    EXPECT_EQ(eval_series(product, 2, 4, Z), va * vb);
    EXPECT_EQ(parse_series(render_series(va), 2, 4, Z), va);
  });
}

}  // namespace
}  // namespace riordan
