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

#include "riordan/formal_map.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// A pair (f, g) in F x M^d. Elements of the Riordan group and of the
/// larger Riordan semigroup share this type; invertibility is a runtime
/// predicate. The pair acts on series by u -> f * (u o g).
struct RiordanElement {
  Series f;
  FormalMap g;

  /// (1, identity).
  static RiordanElement identity(std::size_t dim, int trunc, Ring ring);
  /// Errc::context_mismatch unless f and g share (d, k, ring).
  static RiordanElement make(Series f, FormalMap g);

  std::size_t dim() const noexcept { return f.dim(); }
  int trunc() const noexcept { return f.trunc(); }
  const Ring& ring() const noexcept { return f.ring(); }

  bool is_appell() const;
  bool is_lagrange() const;
  RiordanElement lower_truncation(int j) const;

  friend bool operator==(const RiordanElement&, const RiordanElement&) = default;
};

/// (f, g)(f', g') = (f * (f' o g), g' o g).
RiordanElement riordan_mul(const RiordanElement& a, const RiordanElement& b);
/// f a unit of F and g invertible under composition.
bool riordan_is_invertible(const RiordanElement& a);
/// ((f^-1) o g^-1, g^-1), checked by multiplying back on both sides.
/// Errc::not_invertible for elements outside the group.
RiordanElement riordan_inverse(const RiordanElement& a);
/// f * (u o g).
Series ftra_apply(const RiordanElement& a, const Series& u);

}  // namespace riordan
