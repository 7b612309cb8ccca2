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

#include "riordan/monomial_matrix.hpp"

#include "riordan/error.hpp"

namespace riordan {

MonomialMatrix::MonomialMatrix(std::size_t dim, int trunc, Ring ring)
    : basis_(MonomialBasis::get(dim, trunc)), ring_(ring), entries_(basis_->size() * basis_->size(), ring.zero()) {}

MonomialMatrix MonomialMatrix::identity(std::size_t dim, int trunc, Ring ring) {
  MonomialMatrix out(dim, trunc, ring);
  for (std::size_t i = 0; i < out.size(); ++i) out(i, i) = ring.one();
  return out;
}

const Coeff& MonomialMatrix::at(const Monomial& row, const Monomial& col) const {
  if (row.dim() != dim() || col.dim() != dim()) raise(Errc::dimension_mismatch, "matrix index dimension");
  if (row.degree() > trunc() || col.degree() > trunc()) {
    raise(Errc::truncation_exceeded, "index outside the degree <= " + std::to_string(trunc()) + " window");
  }
  return (*this)(grlex_rank(row), grlex_rank(col));
}

std::vector<Coeff> MonomialMatrix::column(std::size_t col) const {
  std::vector<Coeff> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)(i, col));
  return out;
}

std::vector<Coeff> MonomialMatrix::apply(const std::vector<Coeff>& v) const {
  if (v.size() != size()) raise(Errc::dimension_mismatch, "vector length does not match the basis");
  std::vector<Coeff> out(size(), ring_.zero());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const Coeff& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i].add_mul(a, v[j]);
    }
  }
  return out;
}

bool MonomialMatrix::is_graded_triangular() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (basis_->degree(j) > basis_->degree(i) && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

MonomialMatrix riordan_matrix(const RiordanElement& a) {
  MonomialMatrix out(a.dim(), a.trunc(), a.ring());
  MonomialImages images(a.g);
  for (std::size_t n = 0; n < out.size(); ++n) {
    Series col = a.f * images.image(n);
    for (const auto& t : col.terms()) out(t.index, n) = t.coeff;
  }
  return out;
}

MonomialMatrix mat_mul(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim() || a.trunc() != b.trunc() || !(a.ring() == b.ring())) {
    raise(Errc::context_mismatch, "matrices over different monomial bases or rings");
  }
  const std::size_t n = a.size();
  MonomialMatrix out(a.dim(), a.trunc(), a.ring());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      const Coeff& aip = a(i, p);
      if (aip.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Coeff& bpj = b(p, j);
        if (!bpj.is_zero()) out(i, j).add_mul(aip, bpj);
      }
    }
  }
  return out;
}

bool homomorphism_check(const RiordanElement& a, const RiordanElement& b) {
  return riordan_matrix(riordan_mul(a, b)) == mat_mul(riordan_matrix(a), riordan_matrix(b));
}

RiordanElement reconstruct(const MonomialMatrix& m) {
  const std::size_t d = m.dim();
  const int k = m.trunc();
  Series f = Series::from_dense(d, k, m.ring(), m.column(0));
  if (!f.is_unit()) raise(Errc::not_invertible, "column of 1 is not a unit series");
  const RiordanElement appell_inv{f.inverse(), FormalMap::identity(d, k, m.ring())};
  const MonomialMatrix lagrange = mat_mul(riordan_matrix(appell_inv), m);
  std::vector<Series> comps;
  comps.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    comps.push_back(Series::from_dense(d, k, m.ring(), lagrange.column(j + 1)));
  }
  return {std::move(f), FormalMap::from_components(std::move(comps))};
}

bool injectivity_probe(const RiordanElement& a, const RiordanElement& b) {
  if (a.trunc() < 1) raise(Errc::truncation_exceeded, "injectivity probe needs k >= 1");
  const MonomialMatrix ma = riordan_matrix(a);
  const MonomialMatrix mb = riordan_matrix(b);
  return !(ma == mb) && reconstruct(ma) == a && reconstruct(mb) == b;
}

}  // namespace riordan
