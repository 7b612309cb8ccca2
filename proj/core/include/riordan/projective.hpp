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

#include "riordan/monomial_matrix.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

// The truncated polynomial algebra K[x]_k and the quotient F / M^(k+1)
// share one storage type: a Series with trunc() == k. The isomorphism i_k
// and the projection pi_k are therefore the identity plus
// Series::lower_truncation.
using TruncatedPoly = Series;

/// P_k(f, g)(p) = pi_k(f * (p o g)), computed at level k = p.trunc().
/// The element is cut down to level k first, so the result depends only on
/// pi_k(f) and the pi_k(g_j). Errc::truncation_exceeded if k > a.trunc().
TruncatedPoly pk_action(const RiordanElement& a, const TruncatedPoly& p);
/// M_k(f, g): the matrix of P_k(f, g) in the monomial basis of degree <= k.
MonomialMatrix level_matrix(const RiordanElement& a, int k);
/// Leading principal block of m on the basis of degree <= k.
MonomialMatrix leading_block(const MonomialMatrix& m, int k);

}  // namespace riordan
