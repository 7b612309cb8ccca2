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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/formal_map.hpp"
#include "riordan/monomial.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// A formal Laurent series with support bounded below, stored as
/// vertex * body with body in F.
///
/// `accuracy` is the total-degree radius above the vertex inside which
/// coefficients are exact: the coefficient at vertex * m is known for
/// degree(m) <= accuracy, and every position not >= vertex is exactly
/// zero. The body is kept at trunc() == accuracy. A nonzero body always
/// has vertex 1; a body that vanishes inside the window is an explicit
/// zero and keeps its vertex.
class LaurentSeries {
 public:
  /// The zero series with vertex 1.
  static LaurentSeries zero(std::size_t dim, Ring ring, int accuracy);
  /// A single monomial c * m.
  static LaurentSeries monomial(const SignedMonomial& m, const Coeff& c, int accuracy);
  /// vertex * body, renormalized so the stored body has vertex 1; the
  /// accuracy starts at body.trunc() and drops by the degree of any
  /// factored-out body vertex.
  static LaurentSeries from_parts(SignedMonomial vertex, const Series& body);
  /// Shifts a finite term set by the infimum of its support. `accuracy`
  /// is measured from that infimum; terms beyond it are dropped.
  static LaurentSeries normalize(std::size_t dim, Ring ring,
                                 const std::vector<std::pair<SignedMonomial, Coeff>>& terms, int accuracy);

  std::size_t dim() const noexcept { return vertex_.dim(); }
  const Ring& ring() const noexcept { return body_.ring(); }
  /// The stored vertex exponent; equals inf spt(f) for nonzero values.
  const SignedMonomial& vertex() const noexcept { return vertex_; }
  const Series& body() const noexcept { return body_; }
  int accuracy() const noexcept { return body_.trunc(); }
  bool is_zero() const noexcept { return body_.is_zero(); }

  /// Zero below the vertex; Errc::accuracy_exceeded above the window.
  Coeff coeff(const SignedMonomial& m) const;
  /// As coeff, but std::nullopt where the coefficient is unknown.
  std::optional<Coeff> try_coeff(const SignedMonomial& m) const;
  /// f_{v(f)}, the body's constant term.
  Coeff leading_coeff() const { return body_.constant_term(); }

  /// Units are exactly the series whose leading coefficient is a unit of K.
  bool is_unit() const noexcept;
  /// vertex^-1 * body^-1. Errc::not_a_unit otherwise.
  LaurentSeries inverse() const;
  LaurentSeries with_accuracy(int accuracy) const;
  LaurentSeries scaled(const Coeff& c) const;

  LaurentSeries operator-() const { return scaled(-ring().one()); }
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  LaurentSeries(SignedMonomial vertex, Series body) : vertex_(std::move(vertex)), body_(std::move(body)) {}

  SignedMonomial vertex_;
  Series body_;
};

inline LaurentSeries laurent_mul(const LaurentSeries& f, const LaurentSeries& g) { return f * g; }
inline bool laurent_is_unit(const LaurentSeries& f) { return f.is_unit(); }
inline LaurentSeries laurent_inverse(const LaurentSeries& f) { return f.inverse(); }

/// An element of F^d under the coordinatewise product *.
class StarTuple {
 public:
  /// (1, ..., 1).
  static StarTuple identity(std::size_t dim, int trunc, Ring ring);
  static StarTuple from_components(std::vector<Series> components);

  std::size_t dim() const noexcept { return components_.size(); }
  int trunc() const noexcept { return components_.front().trunc(); }
  const Ring& ring() const noexcept { return components_.front().ring(); }
  const std::vector<Series>& components() const noexcept { return components_; }
  const Series& operator[](std::size_t i) const { return components_[i]; }

  /// Every component is a unit of F, i.e. x*h lies in K.
  bool is_unit() const noexcept;
  StarTuple inverse() const;
  StarTuple lower_truncation(int j) const;

  friend bool operator==(const StarTuple&, const StarTuple&) = default;

 private:
  explicit StarTuple(std::vector<Series> components) : components_(std::move(components)) {}

  std::vector<Series> components_;
};

/// (f1 f'1, ..., fd f'd).
StarTuple star_mul(const StarTuple& f, const StarTuple& g);

/// The formal map x*h = (x1 h1, ..., xd hd), truncated at h.trunc().
/// Errc::not_in_k unless every component of h is a unit.
FormalMap k_map(const StarTuple& h);
/// h with g = x*h. The result is truncated at g.trunc() - 1.
/// Errc::not_in_k when some g_i is not x_i times a unit.
StarTuple k_extract(const FormalMap& g);
/// The K-element (x*outer) o (x*inner), as a tuple: inner * (outer o x*inner).
StarTuple k_compose(const StarTuple& outer, const StarTuple& inner);
/// The tuple of (x*h)^-1, from the fixed point h' <- 1 / (h o x*h').
StarTuple k_inverse(const StarTuple& h);

/// m o (x*h) = m * prod_j h_j^(m_j), negative powers through unit inverses.
LaurentSeries compose_signed(const SignedMonomial& m, const StarTuple& h);
/// f o (x*h) = sum of f_m (m o x*h); accuracy min(f.accuracy, h.trunc).
LaurentSeries compose_laurent(const LaurentSeries& f, const StarTuple& h);

/// Which order the second slot of the product uses.
///   eq4:   (f, g)(f', g') second slot g' o g (the Riordan-group convention)
///   sec54: (f, g)(f', g') second slot g o g'
enum class Convention { eq4, sec54 };

std::string_view convention_name(Convention c) noexcept;
Convention parse_convention(std::string_view text);

/// An element of the Verde-Star-Riordan group: a unit Laurent series f and
/// g = x*h in K.
struct VSRElement {
  LaurentSeries f;
  StarTuple h;

  static VSRElement identity(std::size_t dim, int trunc, Ring ring);
  /// Errc::not_a_unit unless f is a unit, Errc::not_in_k unless h is.
  static VSRElement make(LaurentSeries f, StarTuple h);

  std::size_t dim() const noexcept { return h.dim(); }
  const Ring& ring() const noexcept { return h.ring(); }
  bool is_identity() const;

  friend bool operator==(const VSRElement&, const VSRElement&) = default;
};

VSRElement vsr_mul(const VSRElement& a, const VSRElement& b, Convention convention = Convention::eq4);
/// Inverse under the eq4 product, verified by multiplying back.
VSRElement vsr_inverse(const VSRElement& a);
/// The series f * (n o g), i.e. column n of M(f, g).
LaurentSeries vsr_column(const VSRElement& a, const SignedMonomial& n);
/// Elements with vertex 1 are classical Riordan elements (f, x*h).
RiordanElement to_classical(const VSRElement& a);

/// The box {m : lo <= m <= hi} ordered by grlex of m / lo.
std::vector<SignedMonomial> box_basis(const SignedMonomial& lo, const SignedMonomial& hi);

/// A finite window of a matrix indexed by the signed monomial group.
struct WindowMatrix {
  std::vector<SignedMonomial> rows;
  std::vector<SignedMonomial> cols;
  std::vector<Coeff> entries;  // row-major

  const Coeff& operator()(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  friend bool operator==(const WindowMatrix&, const WindowMatrix&) = default;
};

/// M(f, g) restricted to the box [lo, hi] on both sides.
/// Errc::accuracy_exceeded when some entry lies outside the accuracy window.
WindowMatrix window_matrix(const VSRElement& a, const SignedMonomial& lo, const SignedMonomial& hi);

/// Accuracy that makes every entry needed by a conjecture trial on
/// [lo, hi] exact, given the vertices of the two factors.
int required_accuracy(const SignedMonomial& lo, const SignedMonomial& hi, const SignedMonomial& va,
                      const SignedMonomial& vb);

struct ConjectureReport {
  Convention convention = Convention::eq4;
  bool homomorphism_ok = true;
  bool injectivity_ok = true;
  std::size_t total_pairs = 0;
  std::size_t certified_pairs = 0;
  std::size_t uncertified_pairs = 0;
  std::size_t mismatched_pairs = 0;
  /// Largest box [lo, certified_hi] whose pairs are all certified.
  std::optional<SignedMonomial> certified_hi;
  /// First mismatching pair "(m, n)" with both values, if any.
  std::string counterexample;

  bool passed() const noexcept { return homomorphism_ok && injectivity_ok; }
};

/// Compares the window of M(ab) with the product of the windows of M(a)
/// and M(b) on the box [lo, hi]. Inner sums run over the full finite range
/// b-vertex * n <= p <= m / a-vertex forced by the band structure, so a
/// pair is certified exactly when every entry it touches lies inside the
/// accuracy windows. Uncertified pairs are counted, never failed.
/// Errc::accuracy_exceeded if no pair at all can be certified.
ConjectureReport conjecture_trial(const VSRElement& a, const VSRElement& b, const SignedMonomial& lo,
                                  const SignedMonomial& hi, Convention convention = Convention::eq4);

}  // namespace riordan
