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

#include "riordan/projective.hpp"

#include "riordan/error.hpp"

namespace riordan {

TruncatedPoly pk_action(const RiordanElement& a, const TruncatedPoly& p) {
  if (p.trunc() > a.trunc()) {
    raise(Errc::truncation_exceeded, "level " + std::to_string(p.trunc()) + " exceeds the element's truncation " +
                                         std::to_string(a.trunc()));
  }
  return ftra_apply(a.lower_truncation(p.trunc()), p);
}

MonomialMatrix level_matrix(const RiordanElement& a, int k) {
  if (k < 0 || k > a.trunc()) {
    raise(Errc::truncation_exceeded, "level " + std::to_string(k) + " outside 0.." + std::to_string(a.trunc()));
  }
  const RiordanElement at_level = a.lower_truncation(k);
  MonomialMatrix out(a.dim(), k, a.ring());
  const auto& basis = out.basis();
  for (std::size_t n = 0; n < out.size(); ++n) {
    TruncatedPoly image = pk_action(at_level, Series::monomial(basis.monomial(n), k, a.ring().one()));
    for (const auto& t : image.terms()) out(t.index, n) = t.coeff;
  }
  return out;
}

MonomialMatrix leading_block(const MonomialMatrix& m, int k) {
  if (k < 0 || k > m.trunc()) raise(Errc::truncation_exceeded, "block level outside the matrix window");
  MonomialMatrix out(m.dim(), k, m.ring());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

}  // namespace riordan
