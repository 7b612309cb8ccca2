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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Expression tree for the series front-end.
///
///   expr   := term (("+" | "-") term)*
///   term   := factor (("*" | "/") factor)*
///   factor := atom ("^" uint)?
///   atom   := uint | "x" uint | "(" expr ")" | "-" factor
///
/// Whitespace is insignificant and juxtaposition is a syntax error.
struct Expr {
  enum class Kind { literal, variable, neg, add, sub, mul, div, pow };

  Kind kind = Kind::literal;
  std::string digits;          // literal
  std::size_t variable = 0;    // 1-based index
  std::uint64_t exponent = 0;  // pow
  std::vector<Expr> args;
  std::size_t offset = 0;  // byte offset of the node in the source, not compared

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.digits == b.digits && a.variable == b.variable && a.exponent == b.exponent &&
           a.args == b.args;
  }
};

/// ParseError on bad syntax, variables outside x1..x<dim>, and exponents
/// that are not nonnegative integer literals.
Expr parse_expr(std::string_view text, std::size_t dim);
/// Comma-separated expressions, e.g. the components of a formal map.
std::vector<Expr> parse_expr_list(std::string_view text, std::size_t dim);

/// Fully parenthesized canonical form; parse_expr(render(e)) == e.
std::string render(const Expr& e);

/// Exact value in F / M^(k+1). Division goes through series inversion and
/// raises Errc::not_a_unit naming the offending denominator.
Series eval_series(const Expr& e, std::size_t dim, int trunc, Ring ring);
/// parse_expr followed by eval_series.
Series parse_series(std::string_view text, std::size_t dim, int trunc, Ring ring);

}  // namespace riordan
