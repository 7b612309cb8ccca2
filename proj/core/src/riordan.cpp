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

#include "riordan/riordan.hpp"

#include "riordan/error.hpp"

namespace riordan {

RiordanElement RiordanElement::identity(std::size_t dim, int trunc, Ring ring) {
  return {Series::one(dim, trunc, ring), FormalMap::identity(dim, trunc, ring)};
}

RiordanElement RiordanElement::make(Series f, FormalMap g) {
  if (f.dim() != g.dim()) raise(Errc::dimension_mismatch, "f and g live in different dimensions");
  f.check_context(g[0]);
  return {std::move(f), std::move(g)};
}

bool RiordanElement::is_appell() const { return g == FormalMap::identity(dim(), trunc(), ring()); }

bool RiordanElement::is_lagrange() const { return f == Series::one(dim(), trunc(), ring()); }

RiordanElement RiordanElement::lower_truncation(int j) const {
  return {f.lower_truncation(j), g.lower_truncation(j)};
}

RiordanElement riordan_mul(const RiordanElement& a, const RiordanElement& b) {
  a.f.check_context(b.f);
  MonomialImages images(a.g);
  Series f = a.f * images.compose(b.f);
  std::vector<Series> comps;
  comps.reserve(b.g.dim());
  for (const auto& c : b.g.components()) comps.push_back(images.compose(c));
  return {std::move(f), FormalMap::from_components(std::move(comps))};
}

bool riordan_is_invertible(const RiordanElement& a) {
  return a.f.is_unit() && map_is_invertible(a.g);
}

RiordanElement riordan_inverse(const RiordanElement& a) {
  if (!a.f.is_unit()) {
    raise(Errc::not_invertible, "f has constant term " + a.f.constant_term().to_string() + ", not a unit");
  }
  FormalMap g_inv = comp_inverse(a.g);
  RiordanElement inv{compose_series(a.f.inverse(), g_inv), std::move(g_inv)};
  const auto id = RiordanElement::identity(a.dim(), a.trunc(), a.ring());
  if (!(riordan_mul(a, inv) == id) || !(riordan_mul(inv, a) == id)) {
    raise(Errc::internal, "Riordan inverse failed verification");
  }
  return inv;
}

Series ftra_apply(const RiordanElement& a, const Series& u) {
  return a.f * compose_series(u, a.g);
}

}  // namespace riordan
