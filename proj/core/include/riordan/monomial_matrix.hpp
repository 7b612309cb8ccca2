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
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/monomial.hpp"
#include "riordan/riordan.hpp"

namespace riordan {

/// A dense square matrix whose rows and columns are both indexed by the
/// grlex basis of monomials of degree <= k.
///
/// This is a finite window on an infinite monomial-indexed matrix. For the
/// matrices M(f, g) the window is faithful: entry (m, n) vanishes whenever
/// deg n > deg m, so every inner sum sum_p A_mp B_pn with deg m, deg n <= k
/// only involves p with deg n <= deg p <= deg m, all inside the window.
class MonomialMatrix {
 public:
  MonomialMatrix(std::size_t dim, int trunc, Ring ring);
  static MonomialMatrix identity(std::size_t dim, int trunc, Ring ring);

  std::size_t dim() const noexcept { return basis_->dim(); }
  int trunc() const noexcept { return basis_->trunc(); }
  const Ring& ring() const noexcept { return ring_; }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  std::size_t size() const noexcept { return basis_->size(); }

  const Coeff& operator()(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }
  Coeff& operator()(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
  const Coeff& at(const Monomial& row, const Monomial& col) const;

  std::vector<Coeff> column(std::size_t col) const;
  /// Matrix-vector product against a coefficient vector over the basis.
  std::vector<Coeff> apply(const std::vector<Coeff>& v) const;
  /// Entry (m, n) is zero whenever deg n > deg m.
  bool is_graded_triangular() const;

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.dim() == b.dim() && a.trunc() == b.trunc() && a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  Ring ring_;
  std::vector<Coeff> entries_;
};

/// M(f, g)_{mn} = coefficient of m in f * (n o g). Works for every element
/// of the Riordan semigroup, invertible or not.
MonomialMatrix riordan_matrix(const RiordanElement& a);
/// Exact product; Errc::context_mismatch unless bases and rings agree.
MonomialMatrix mat_mul(const MonomialMatrix& a, const MonomialMatrix& b);
/// M(ab) == M(a) M(b) on the whole degree <= k window.
bool homomorphism_check(const RiordanElement& a, const RiordanElement& b);

/// Recovers (f, g) from M(f, g) for a unit f: f is the column of 1, and g_j
/// is the column of x_j in M(f^-1, 1) M(f, g) = M(1, g).
RiordanElement reconstruct(const MonomialMatrix& m);
/// True iff M(a) != M(b) and both matrices reconstruct their elements.
/// Needs invertible a, b and k >= 1.
bool injectivity_probe(const RiordanElement& a, const RiordanElement& b);

}  // namespace riordan
