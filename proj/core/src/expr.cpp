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

#include <cctype>
#include <limits>

#include "riordan/error.hpp"

namespace riordan {
namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim, std::size_t base)
      : text_(text), dim_(dim), base_(base) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) {
      if (starts_atom()) fail("juxtaposition is not multiplication; insert '*'");
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(base_ + pos_, "byte " + std::to_string(base_ + pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() const {
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr node(Expr::Kind kind, std::size_t at, std::vector<Expr> args) const {
    Expr e;
    e.kind = kind;
    e.offset = base_ + at;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek('+') || peek('-')) {
      const std::size_t at = pos_;
      const auto kind = text_[pos_++] == '+' ? Expr::Kind::add : Expr::Kind::sub;
      Expr rhs = term();
      lhs = node(kind, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek('*') || peek('/')) {
      const std::size_t at = pos_;
      const auto kind = text_[pos_++] == '*' ? Expr::Kind::mul : Expr::Kind::div;
      Expr rhs = factor();
      lhs = node(kind, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (!peek('^')) return base;
    const std::size_t at = pos_++;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponents are not allowed");
      fail("exponent must be a nonnegative integer literal");
    }
    const std::size_t start = pos_;
    const std::string e = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') fail("exponent must be an integer");
    std::uint64_t value = 0;
    for (char c : e) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
    }
    Expr out = node(Expr::Kind::pow, at, {std::move(base)});
    out.exponent = value;
    return out;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::literal, at, {});
      e.digits = digits();
      if (pos_ < text_.size() && text_[pos_] == '.') fail("only integer literals are allowed");
      return e;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a variable index after 'x'");
      }
      const std::string idx = digits();
      std::size_t value = 0;
      for (char ch : idx) {
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        if (value > dim_) break;
      }
      if (value < 1 || value > dim_) {
        pos_ = at;
        fail("variable x" + idx + " is out of range x1..x" + std::to_string(dim_));
      }
      Expr e = node(Expr::Kind::variable, at, {});
      e.variable = value;
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return node(Expr::Kind::neg, at, {factor()});
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dim) { return Parser(text, dim, 0).parse_all(); }

std::vector<Expr> parse_expr_list(std::string_view text, std::size_t dim) {
  std::vector<Expr> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(Parser(text.substr(start, end - start), dim, start).parse_all());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.digits;
    case Expr::Kind::variable:
      return "x" + std::to_string(e.variable);
    case Expr::Kind::neg:
      return "(-" + render(e.args[0]) + ")";
    case Expr::Kind::add:
      return "(" + render(e.args[0]) + " + " + render(e.args[1]) + ")";
    case Expr::Kind::sub:
      return "(" + render(e.args[0]) + " - " + render(e.args[1]) + ")";
    case Expr::Kind::mul:
      return "(" + render(e.args[0]) + " * " + render(e.args[1]) + ")";
    case Expr::Kind::div:
      return "(" + render(e.args[0]) + " / " + render(e.args[1]) + ")";
    case Expr::Kind::pow:
      return "(" + render(e.args[0]) + "^" + std::to_string(e.exponent) + ")";
  }
  raise(Errc::internal, "unknown expression kind");
}

Series eval_series(const Expr& e, std::size_t dim, int trunc, Ring ring) {
  auto sub = [&](std::size_t i) { return eval_series(e.args[i], dim, trunc, ring); };
  switch (e.kind) {
    case Expr::Kind::literal:
      return Series::constant(dim, trunc, ring.from_integer(mpz_class(e.digits)));
    case Expr::Kind::variable:
      return Series::variable(dim, e.variable - 1, trunc, ring);
    case Expr::Kind::neg:
      return -sub(0);
    case Expr::Kind::add:
      return sub(0) + sub(1);
    case Expr::Kind::sub:
      return sub(0) - sub(1);
    case Expr::Kind::mul:
      return sub(0) * sub(1);
    case Expr::Kind::div: {
      Series den = sub(1);
      if (!den.is_unit()) {
        raise(Errc::not_a_unit, "division by " + render(e.args[1]) + " at byte " + std::to_string(e.offset) +
                                    ": constant term " + den.constant_term().to_string() + " is not a unit of " +
                                    ring.tag());
      }
      return sub(0) * den.inverse();
    }
    case Expr::Kind::pow:
      return sub(0).pow(e.exponent);
  }
  raise(Errc::internal, "unknown expression kind");
}

Series parse_series(std::string_view text, std::size_t dim, int trunc, Ring ring) {
  return eval_series(parse_expr(text, dim), dim, trunc, ring);
}

}  // namespace riordan
