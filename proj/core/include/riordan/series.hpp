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
#include <memory>
#include <utility>
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/monomial.hpp"

namespace riordan {

/// An element of K[[x1..xd]] / M^(k+1): a formal power series known
/// exactly up to total degree k (the truncation degree).
///
/// Terms are stored sparsely as (grlex index, nonzero coefficient) pairs
/// sorted by index, so two series are equal exactly when their contexts
/// and term lists are equal. Arithmetic between series with different
/// (d, k, ring) raises Errc::context_mismatch; the only way to change k is
/// lower_truncation.
class Series {
 public:
  struct Term {
    std::size_t index;  // position in the grlex basis of degree <= trunc
    Coeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Zero series in one variable over Z with k = 0.
  Series() : Series(1, 0, Ring::integers()) {}
  /// The zero series in context (d, k, ring).
  Series(std::size_t dim, int trunc, Ring ring);

  static Series constant(std::size_t dim, int trunc, const Coeff& c);
  static Series one(std::size_t dim, int trunc, Ring ring);
  /// c * m; zero when degree(m) > k.
  static Series monomial(const Monomial& m, int trunc, const Coeff& c);
  /// x_j with a 0-based j.
  static Series variable(std::size_t dim, std::size_t j, int trunc, Ring ring);
  /// Sums duplicate monomials and drops terms above degree k.
  static Series from_terms(std::size_t dim, int trunc, Ring ring,
                           const std::vector<std::pair<Monomial, Coeff>>& terms);
  /// Dense coefficient vector over the degree <= k basis.
  static Series from_dense(std::size_t dim, int trunc, Ring ring, std::vector<Coeff> dense);

  std::size_t dim() const noexcept { return dim_; }
  int trunc() const noexcept { return trunc_; }
  const Ring& ring() const noexcept { return ring_; }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Monomial& monomial_of(const Term& t) const { return basis_->monomial(t.index); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of m. Errc::truncation_exceeded when degree(m) > k.
  Coeff coeff(const Monomial& m) const;
  Coeff coeff_at(std::size_t index) const;
  Coeff constant_term() const;
  /// Membership in the maximal ideal M: zero constant term.
  bool in_max_ideal() const noexcept { return terms_.empty() || terms_.front().index != 0; }
  /// Largest degree present (-1 for zero).
  int degree() const noexcept;
  std::vector<Coeff> dense() const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs) { return *this = *this * rhs; }
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  /// Truncated convolution: (fg)_m = sum over p | m of f_p g_{m/p}.
  friend Series operator*(const Series& f, const Series& g);
  Series scaled(const Coeff& c) const;
  /// m * f, dropping terms pushed above degree k.
  Series shifted(const Monomial& m) const;
  /// f^e by repeated squaring.
  Series pow(std::uint64_t e) const;

  /// Vertex v(f) = hcf of the support. Errc::vertex_of_zero on zero.
  Monomial vertex() const;
  /// (v(f), f / v(f)); the quotient has truncation k - degree(v(f)).
  std::pair<Monomial, Series> factor_out_vertex() const;
  /// h with h_m = f_{m p}. Errc::not_a_factor unless p divides every
  /// support monomial; h.trunc() = k - degree(p).
  Series div_by_monomial(const Monomial& p) const;

  bool is_unit() const noexcept;
  /// Multiplicative inverse via the alternating geometric series.
  /// Errc::not_a_unit when the constant term is not a unit of K.
  Series inverse() const;

  /// pi_j: drop every term of degree > j and set trunc = j.
  Series lower_truncation(int j) const;

  void check_context(const Series& other) const;

  friend bool operator==(const Series& a, const Series& b) noexcept {
    return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  int trunc_;
  Ring ring_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Term> terms_;
};

/// Free-function aliases matching the operation names of the algebra.
inline Series ser_mul(const Series& f, const Series& g) { return f * g; }
inline bool ser_is_unit(const Series& f) { return f.is_unit(); }
inline Series ser_inverse(const Series& f) { return f.inverse(); }
inline Series lower_truncation(const Series& f, int j) { return f.lower_truncation(j); }

/// Dense accumulator over one (d, k) basis, used to build series term by
/// term without re-sorting.
class SeriesAccumulator {
 public:
  SeriesAccumulator(std::size_t dim, int trunc, Ring ring);

  void add(std::size_t index, const Coeff& c) { slots_[index] += c; }
  void add_mul(std::size_t index, const Coeff& a, const Coeff& b) { slots_[index].add_mul(a, b); }
  /// += c * f, where f shares the accumulator's context.
  void add_scaled(const Coeff& c, const Series& f);
  /// += f * g, truncated.
  void add_product(const Series& f, const Series& g);
  Series finish() &&;

 private:
  std::size_t dim_;
  int trunc_;
  Ring ring_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Coeff> slots_;
};

}  // namespace riordan
