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

#include "riordan/coeff.hpp"

#include <charconv>

#include "riordan/error.hpp"

namespace riordan {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

// Inverse of a nonzero residue by the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  i128 t = 0, new_t = 1;
  i128 r = p, new_r = a;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw ParseError(0, "malformed coefficient '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError(i, "malformed coefficient '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Ring Ring::modp(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    raise(Errc::invalid_argument, "modulus " + std::to_string(p) + " out of range [2, 2^62)");
  }
  mpz_class value;
  mpz_import(value.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(value.get_mpz_t(), 30) == 0) {
    raise(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not prime");
  }
  return Ring(RingKind::modp, p);
}

Ring Ring::parse(std::string_view tag) {
  if (tag == "int") return integers();
  if (tag == "rational") return rationals();
  constexpr std::string_view prefix = "modp:";
  if (tag.substr(0, prefix.size()) == prefix) {
    std::string_view digits = tag.substr(prefix.size());
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return modp(p);
    }
  }
  raise(Errc::invalid_argument, "unknown ring tag '" + std::string(tag) + "'");
}

std::string Ring::tag() const {
  switch (kind_) {
    case RingKind::integers: return "int";
    case RingKind::rationals: return "rational";
    case RingKind::modp: return "modp:" + std::to_string(modulus_);
  }
  return {};
}

Coeff Ring::zero() const { return from_int(0); }

Coeff Ring::one() const { return from_int(1); }

Coeff Ring::from_int(std::int64_t value) const {
  switch (kind_) {
    case RingKind::integers: return Coeff(*this, mpz_class(static_cast<long>(value)));
    case RingKind::rationals: return Coeff(*this, mpq_class(static_cast<long>(value)));
    case RingKind::modp: {
      auto m = static_cast<std::int64_t>(modulus_);
      std::int64_t r = value % m;
      if (r < 0) r += m;
      return Coeff(*this, static_cast<std::uint64_t>(r));
    }
  }
  return {};
}

Coeff Ring::from_integer(const mpz_class& value) const {
  switch (kind_) {
    case RingKind::integers: return Coeff(*this, value);
    case RingKind::rationals: return Coeff(*this, mpq_class(value));
    case RingKind::modp: return Coeff(*this, reduce_mod(value, modulus_));
  }
  return {};
}

Coeff Ring::parse_coeff(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_integer(text, text));
  if (kind_ != RingKind::rationals) {
    throw ParseError(slash, "fraction '" + std::string(text) + "' outside the rational ring");
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError(slash + 1, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(*this, std::move(q));
}

void Coeff::check_ring(const Coeff& other) const {
  if (!(ring_ == other.ring_)) {
    raise(Errc::context_mismatch, "coefficients from rings " + ring_.tag() + " and " + other.ring_.tag());
  }
}

bool Coeff::is_zero() const noexcept {
  switch (ring_.kind()) {
    case RingKind::integers: return sgn(std::get<mpz_class>(value_)) == 0;
    case RingKind::rationals: return sgn(std::get<mpq_class>(value_)) == 0;
    case RingKind::modp: return std::get<std::uint64_t>(value_) == 0;
  }
  return false;
}

bool Coeff::is_one() const noexcept {
  switch (ring_.kind()) {
    case RingKind::integers: return std::get<mpz_class>(value_) == 1;
    case RingKind::rationals: return std::get<mpq_class>(value_) == 1;
    case RingKind::modp: return std::get<std::uint64_t>(value_) == 1;
  }
  return false;
}

bool Coeff::is_unit() const noexcept {
  if (ring_.kind() == RingKind::integers) {
    const auto& z = std::get<mpz_class>(value_);
    return z == 1 || z == -1;
  }
  return !is_zero();
}

Coeff Coeff::inverse() const {
  if (!is_unit()) raise(Errc::not_a_unit, to_string() + " is not a unit of " + ring_.tag());
  switch (ring_.kind()) {
    case RingKind::integers: return *this;
    case RingKind::rationals: return Coeff(ring_, mpq_class(1 / std::get<mpq_class>(value_)));
    case RingKind::modp:
      return Coeff(ring_, inverse_mod(std::get<std::uint64_t>(value_), ring_.modulus()));
  }
  return {};
}

Coeff Coeff::exact_div(const Coeff& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) raise(Errc::not_a_unit, "division by zero");
  if (ring_.kind() == RingKind::integers) {
    const auto& n = std::get<mpz_class>(value_);
    const auto& d = std::get<mpz_class>(divisor.value_);
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      raise(Errc::not_a_factor, d.get_str() + " does not divide " + n.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return Coeff(ring_, std::move(q));
  }
  return *this * divisor.inverse();
}

Coeff Coeff::operator-() const {
  switch (ring_.kind()) {
    case RingKind::integers: return Coeff(ring_, mpz_class(-std::get<mpz_class>(value_)));
    case RingKind::rationals: return Coeff(ring_, mpq_class(-std::get<mpq_class>(value_)));
    case RingKind::modp: {
      auto v = std::get<std::uint64_t>(value_);
      return Coeff(ring_, v == 0 ? v : ring_.modulus() - v);
    }
  }
  return {};
}

Coeff& Coeff::operator+=(const Coeff& rhs) {
  check_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers: std::get<mpz_class>(value_) += std::get<mpz_class>(rhs.value_); break;
    case RingKind::rationals: std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_); break;
    case RingKind::modp: {
      auto& v = std::get<std::uint64_t>(value_);
      v = add_mod(v, std::get<std::uint64_t>(rhs.value_), ring_.modulus());
      break;
    }
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& rhs) {
  check_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers: std::get<mpz_class>(value_) -= std::get<mpz_class>(rhs.value_); break;
    case RingKind::rationals: std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_); break;
    case RingKind::modp: {
      auto& v = std::get<std::uint64_t>(value_);
      v = sub_mod(v, std::get<std::uint64_t>(rhs.value_), ring_.modulus());
      break;
    }
  }
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& rhs) {
  check_ring(rhs);
  switch (ring_.kind()) {
    case RingKind::integers: std::get<mpz_class>(value_) *= std::get<mpz_class>(rhs.value_); break;
    case RingKind::rationals: std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_); break;
    case RingKind::modp: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mul_mod(v, std::get<std::uint64_t>(rhs.value_), ring_.modulus());
      break;
    }
  }
  return *this;
}

void Coeff::add_mul(const Coeff& a, const Coeff& b) {
  check_ring(a);
  check_ring(b);
  switch (ring_.kind()) {
    case RingKind::integers: {
      auto& v = std::get<mpz_class>(value_);
      mpz_addmul(v.get_mpz_t(), std::get<mpz_class>(a.value_).get_mpz_t(),
                 std::get<mpz_class>(b.value_).get_mpz_t());
      break;
    }
    case RingKind::rationals:
      std::get<mpq_class>(value_) += std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
      break;
    case RingKind::modp: {
      auto p = ring_.modulus();
      auto& v = std::get<std::uint64_t>(value_);
      v = add_mod(v, mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), p), p);
      break;
    }
  }
}

bool operator==(const Coeff& a, const Coeff& b) noexcept {
  if (!(a.ring_ == b.ring_)) return false;
  switch (a.ring_.kind()) {
    case RingKind::integers: return std::get<mpz_class>(a.value_) == std::get<mpz_class>(b.value_);
    case RingKind::rationals: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case RingKind::modp: return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  }
  return false;
}

std::string Coeff::to_string() const {
  switch (ring_.kind()) {
    case RingKind::integers: return std::get<mpz_class>(value_).get_str();
    case RingKind::rationals: return std::get<mpq_class>(value_).get_str();
    case RingKind::modp: return std::to_string(std::get<std::uint64_t>(value_));
  }
  return {};
}

const mpz_class* Coeff::integer_value() const noexcept {
  if (ring_.kind() == RingKind::integers) return &std::get<mpz_class>(value_);
  if (ring_.kind() == RingKind::rationals) {
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return &q.get_num();
  }
  return nullptr;
}

}  // namespace riordan
