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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace riordan {

enum class RingKind : std::uint8_t { integers, rationals, modp };

class Coeff;

/// The coefficient ring K. A ring is a small value: a kind plus, for Z/p,
/// the modulus. All shipped instances are integral domains.
class Ring {
 public:
  Ring() noexcept = default;

  static Ring integers() noexcept { return Ring(RingKind::integers, 0); }
  static Ring rationals() noexcept { return Ring(RingKind::rationals, 0); }
  /// Rejects composite (and too large) moduli with Errc::invalid_argument.
  static Ring modp(std::uint64_t p);
  /// Accepts "int", "rational" and "modp:<p>".
  static Ring parse(std::string_view tag);

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != RingKind::integers; }
  std::string tag() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(std::int64_t value) const;
  Coeff from_integer(const mpz_class& value) const;
  /// Decimal integer, or "a/b" for rationals. Residues are reduced mod p.
  Coeff parse_coeff(std::string_view text) const;

  friend bool operator==(const Ring&, const Ring&) noexcept = default;

 private:
  Ring(RingKind kind, std::uint64_t modulus) noexcept
      : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::integers;
  std::uint64_t modulus_ = 0;
};

/// An element of a Ring. Arithmetic between elements of different rings
/// raises Errc::context_mismatch; equality between them is simply false.
class Coeff {
 public:
  Coeff() = default;

  const Ring& ring() const noexcept { return ring_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_unit() const noexcept;

  /// Two-sided inverse; Errc::not_a_unit unless is_unit().
  Coeff inverse() const;
  /// The unique q with q * divisor == *this. Errc::not_a_factor when no
  /// such q exists (only possible over the integers), Errc::not_a_unit on
  /// division by zero.
  Coeff exact_div(const Coeff& divisor) const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& rhs);
  Coeff& operator-=(const Coeff& rhs);
  Coeff& operator*=(const Coeff& rhs);
  /// *this += a * b without an intermediate temporary where possible.
  void add_mul(const Coeff& a, const Coeff& b);

  friend Coeff operator+(Coeff lhs, const Coeff& rhs) { return lhs += rhs; }
  friend Coeff operator-(Coeff lhs, const Coeff& rhs) { return lhs -= rhs; }
  friend Coeff operator*(Coeff lhs, const Coeff& rhs) { return lhs *= rhs; }
  friend bool operator==(const Coeff& a, const Coeff& b) noexcept;

  /// Canonical text: decimal integer, "a/b" in lowest terms (plain "a"
  /// when b = 1), or the residue in [0, p).
  std::string to_string() const;

  /// Value as an integer when the ring is Z (or Q with denominator 1).
  const mpz_class* integer_value() const noexcept;

 private:
  friend class Ring;

  using Storage = std::variant<mpz_class, mpq_class, std::uint64_t>;

  Coeff(Ring ring, Storage value) : ring_(ring), value_(std::move(value)) {}
  void check_ring(const Coeff& other) const;

  Ring ring_;
  Storage value_;
};

}  // namespace riordan
