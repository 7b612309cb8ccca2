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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

/// A monic monomial x^e. With `Signed = false` this is an element of the
/// semigroup S (all exponents >= 0); with `Signed = true` it lives in the
/// group completion, exponents in Z^d.
template <bool Signed>
class BasicMonomial {
 public:
  using Exponent = std::int32_t;

  BasicMonomial() = default;
  /// The identity monomial 1 in d variables.
  explicit BasicMonomial(std::size_t dim) : exps_(dim, 0) {}
  explicit BasicMonomial(std::vector<Exponent> exps);
  BasicMonomial(std::initializer_list<Exponent> exps)
      : BasicMonomial(std::vector<Exponent>(exps)) {}

  /// x_j (0-based j) in d variables.
  static BasicMonomial variable(std::size_t dim, std::size_t j);

  std::size_t dim() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// Total degree |e|. For signed monomials this is the signed sum.
  std::int64_t degree() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

using Monomial = BasicMonomial<false>;
using SignedMonomial = BasicMonomial<true>;

/// Componentwise exponent sum. Errc::dimension_mismatch, Errc::overflow.
Monomial operator*(const Monomial& m, const Monomial& n);
SignedMonomial operator*(const SignedMonomial& m, const SignedMonomial& n);
/// Group inverse in Z^d.
SignedMonomial inverse(const SignedMonomial& m);

/// m | p, i.e. m's exponents are componentwise <= p's.
bool divides(const Monomial& m, const Monomial& p);
/// p / m. Errc::not_a_factor unless divides(m, p).
Monomial quotient(const Monomial& p, const Monomial& m);
/// Componentwise minimum. Errc::empty_set on empty input.
Monomial hcf(std::span<const Monomial> set);
/// Greatest lower bound in the componentwise partial order.
SignedMonomial inf_signed(std::span<const SignedMonomial> set);
/// Partial order of the signed group: m <= n componentwise.
bool leq(const SignedMonomial& m, const SignedMonomial& n);

SignedMonomial to_signed(const Monomial& m);
/// Errc::invalid_argument when some exponent is negative.
Monomial to_unsigned(const SignedMonomial& m);

/// Graded lexicographic order: degree first, then higher powers of earlier
/// variables first. With d = 2 this lists 1, x1, x2, x1^2, x1*x2, x2^2.
std::strong_ordering grlex_compare(const Monomial& m, const Monomial& n);

struct GrlexLess {
  bool operator()(const Monomial& m, const Monomial& n) const {
    return grlex_compare(m, n) < 0;
  }
};

/// All monomials of degree <= k in d variables, in grlex order.
std::vector<Monomial> enumerate_upto(std::size_t dim, int k);

/// C(n, r) as a size; callers keep arguments at desk scale.
std::size_t binomial(std::size_t n, std::size_t r);
/// Number of monomials of degree <= k in d variables, C(d + k, d).
std::size_t count_upto(std::size_t dim, int k);
/// Position of m in enumerate_upto(d, k) for any k >= degree(m).
std::size_t grlex_rank(const Monomial& m);

/// "1", or factors "x<i>^<e>" joined by "*" with 1-based i.
template <bool Signed>
std::string to_string(const BasicMonomial<Signed>& m);
/// Inverse of to_string. ParseError on malformed text, wrong dimension,
/// or a negative exponent when parsing an unsigned monomial.
Monomial parse_monomial(std::string_view text, std::size_t dim);
SignedMonomial parse_signed_monomial(std::string_view text, std::size_t dim);

/// The grlex basis of monomials of degree <= k with a product index table.
/// Instances are immutable and shared through MonomialBasis::get.
class MonomialBasis {
 public:
  static std::shared_ptr<const MonomialBasis> get(std::size_t dim, int k);

  MonomialBasis(std::size_t dim, int k);

  std::size_t dim() const noexcept { return dim_; }
  int trunc() const noexcept { return trunc_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& monomial(std::size_t index) const { return monomials_[index]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  int degree(std::size_t index) const { return degrees_[index]; }
  /// Number of basis elements of degree <= j (a prefix of the basis).
  std::size_t prefix_size(int j) const;

  /// Index of monomial(i) * monomial(j), or npos when its degree exceeds k.
  std::size_t product(std::size_t i, std::size_t j) const;
  /// Index of monomial(i) / x_var, or npos when x_var does not divide it.
  std::size_t divide_by_variable(std::size_t i, std::size_t var) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t dim_;
  int trunc_;
  std::vector<Monomial> monomials_;
  std::vector<int> degrees_;
  std::vector<std::uint32_t> product_;  // size()^2 entries, empty when too large
};

}  // namespace riordan
