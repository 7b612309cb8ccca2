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
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// A square matrix over K; the linear part L(g) of a formal map lives here.
class LinearPart {
 public:
  LinearPart(std::size_t n, Ring ring);
  static LinearPart identity(std::size_t n, Ring ring);

  std::size_t size() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  const Coeff& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Coeff& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// Cofactor expansion for n <= 4, fraction-free Bareiss elimination above.
  Coeff determinant() const;
  LinearPart adjugate() const;
  bool is_invertible() const { return determinant().is_unit(); }
  /// adj(T) * det(T)^-1. Errc::not_invertible when det(T) is not a unit.
  LinearPart inverse() const;

  friend LinearPart operator*(const LinearPart& a, const LinearPart& b);
  friend bool operator==(const LinearPart&, const LinearPart&) = default;

 private:
  std::size_t n_;
  Ring ring_;
  std::vector<Coeff> entries_;
};

/// An element of M^d: a d-tuple of series with zero constant terms, read
/// as a formal self-map of K^d fixing 0. All components share (d, k, ring).
class FormalMap {
 public:
  /// The identity map (x1, ..., xd).
  static FormalMap identity(std::size_t dim, int trunc, Ring ring);
  /// Errc::not_in_max_ideal when a component has a nonzero constant term,
  /// Errc::context_mismatch on mixed contexts, Errc::dimension_mismatch
  /// unless there are exactly d components.
  static FormalMap from_components(std::vector<Series> components);
  /// The linear map x -> T x.
  static FormalMap linear(const LinearPart& t, int trunc);

  std::size_t dim() const noexcept { return components_.size(); }
  int trunc() const noexcept { return components_.front().trunc(); }
  const Ring& ring() const noexcept { return components_.front().ring(); }
  const std::vector<Series>& components() const noexcept { return components_; }
  const Series& operator[](std::size_t i) const { return components_[i]; }

  FormalMap lower_truncation(int j) const;
  void check_context(const FormalMap& other) const;

  friend FormalMap operator+(const FormalMap& a, const FormalMap& b);
  friend FormalMap operator-(const FormalMap& a, const FormalMap& b);
  friend bool operator==(const FormalMap&, const FormalMap&) = default;

 private:
  explicit FormalMap(std::vector<Series> components) : components_(std::move(components)) {}

  std::vector<Series> components_;
};

/// Memoized images m o g of basis monomials under a fixed map g. Each image
/// is built from the image of m / x_j times g_j, so composing many series
/// with the same g shares the work.
class MonomialImages {
 public:
  explicit MonomialImages(const FormalMap& g);

  const FormalMap& map() const noexcept { return g_; }
  /// m o g for the basis monomial at `index`.
  const Series& image(std::size_t index);
  /// f o g = sum of f_m (m o g).
  Series compose(const Series& f);

 private:
  FormalMap g_;
  std::vector<std::optional<Series>> images_;
};

/// m o g = g1^i1 ... gd^id.
Series compose_monomial(const Monomial& m, const FormalMap& g);
/// f o g; f and g must share (d, k, ring).
Series compose_series(const Series& f, const FormalMap& g);
/// (f1 o g, ..., fd o g).
FormalMap compose_maps(const FormalMap& f, const FormalMap& g);

/// L(g)_ij = coefficient of x_j in g_i. Errc::truncation_exceeded if k < 1.
LinearPart linear_part(const FormalMap& g);
/// g is invertible under composition iff det L(g) is a unit of K.
bool map_is_invertible(const FormalMap& g);

/// Inverse of a unipotent map u = 1 + h (L(h) = 0) by the fixed point
/// v <- 1 - h o v, which fixes one more degree per step. `iterations`
/// receives the number of steps taken (at most k).
FormalMap unipotent_inverse(const FormalMap& u, int* iterations = nullptr);
/// Two-sided compositional inverse, verified by composing back.
/// Errc::not_invertible when L(g) is not invertible over K.
FormalMap comp_inverse(const FormalMap& g);
/// g composed with itself r times; g^<0> is the identity.
FormalMap comp_power(const FormalMap& g, unsigned r);

}  // namespace riordan
