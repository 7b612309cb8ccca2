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

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "riordan/formal_map.hpp"
#include "riordan/monomial_matrix.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"
#include "riordan/verde_star.hpp"

namespace riordan {

using Json = nlohmann::ordered_json;

// Wire formats. Every *_from_json accepts exactly what the matching
// *_to_json emits (terms in grlex order, no explicit zeros), so a parse
// followed by a dump reproduces the input byte for byte. Structural
// problems raise ParseError; algebraic ones (a constant term in g) raise
// Error from the constructors.

Json series_to_json(const Series& f);
Series series_from_json(const Json& j);

Json map_to_json(const FormalMap& g);
FormalMap map_from_json(const Json& j);

Json riordan_to_json(const RiordanElement& a);
RiordanElement riordan_from_json(const Json& j);

Json laurent_to_json(const LaurentSeries& f);
LaurentSeries laurent_from_json(const Json& j);

Json matrix_to_json(const MonomialMatrix& m);
MonomialMatrix matrix_from_json(const Json& j);

/// Header row "m\n,<labels>", then one row per monomial. Rows end in "\n".
std::string matrix_to_csv(const MonomialMatrix& m);
/// `dim` is needed because the labels of a d = 1, k = 0 matrix do not
/// determine it.
MonomialMatrix matrix_from_csv(std::string_view text, std::size_t dim, Ring ring);

/// Compact dump; ParseError carries nlohmann's byte offset.
std::string dump(const Json& j);
Json parse_json(std::string_view text);

/// Human-readable sum such as "1 - x1 + 2*x1^2", grlex order, "0" for the
/// zero series. The output is valid expression syntax.
std::string render_series(const Series& f);

}  // namespace riordan
