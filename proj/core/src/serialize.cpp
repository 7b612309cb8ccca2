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

#include "riordan/serialize.hpp"

#include <sstream>

#include "riordan/error.hpp"

namespace riordan {
namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

void expect_keys(const Json& j, std::size_t n) {
  if (j.size() != n) bad("unexpected keys in object " + j.dump());
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Coeff parse_canonical(const Ring& ring, const std::string& text) {
  Coeff c = ring.parse_coeff(text);
  if (c.to_string() != text) bad("coefficient \"" + text + "\" is not in canonical form");
  return c;
}

std::vector<std::int32_t> exponent_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::int32_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad(std::string(what) + " entries must be integers");
    out.push_back(e.get<std::int32_t>());
  }
  return out;
}

Json exponents_json(std::span<const std::int32_t> e) {
  Json out = Json::array();
  for (auto v : e) out.push_back(v);
  return out;
}

}  // namespace

Json series_to_json(const Series& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term;
    term["e"] = exponents_json(f.monomial_of(t).exponents());
    term["c"] = t.coeff.to_string();
    terms.push_back(std::move(term));
  }
  Json out;
  out["d"] = f.dim();
  out["trunc"] = f.trunc();
  out["ring"] = f.ring().tag();
  out["terms"] = std::move(terms);
  return out;
}

Series series_from_json(const Json& j) {
  expect_keys(j, 4);
  const int d = as_int(field(j, "d"), "d");
  const int k = as_int(field(j, "trunc"), "trunc");
  if (d < 1 || k < 0) bad("series needs d >= 1 and trunc >= 0");
  const Json& tag = field(j, "ring");
  if (!tag.is_string()) bad("ring must be a string");
  const Ring ring = Ring::parse(tag.get<std::string>());
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  std::vector<std::pair<Monomial, Coeff>> out;
  std::int64_t last_rank = -1;
  for (const auto& t : terms) {
    expect_keys(t, 2);
    auto e = exponent_list(field(t, "e"), "e");
    if (e.size() != static_cast<std::size_t>(d)) bad("exponent vector length differs from d");
    for (auto v : e) {
      if (v < 0) bad("negative exponent in a series term");
    }
    Monomial m(std::move(e));
    if (m.degree() > k) bad("term " + to_string(m) + " exceeds the truncation degree");
    const auto rank = static_cast<std::int64_t>(grlex_rank(m));
    if (rank <= last_rank) bad("terms are not in strictly increasing grlex order");
    last_rank = rank;
    const Json& c = field(t, "c");
    if (!c.is_string()) bad("coefficient must be a string");
    Coeff value = parse_canonical(ring, c.get<std::string>());
    if (value.is_zero()) bad("explicit zero coefficient");
    out.emplace_back(std::move(m), std::move(value));
  }
  return Series::from_terms(static_cast<std::size_t>(d), k, ring, out);
}

Json map_to_json(const FormalMap& g) {
  Json comps = Json::array();
  for (const auto& c : g.components()) comps.push_back(series_to_json(c));
  Json out;
  out["components"] = std::move(comps);
  return out;
}

FormalMap map_from_json(const Json& j) {
  expect_keys(j, 1);
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.empty()) bad("components must be a nonempty array");
  std::vector<Series> out;
  for (const auto& c : comps) out.push_back(series_from_json(c));
  return FormalMap::from_components(std::move(out));
}

Json riordan_to_json(const RiordanElement& a) {
  Json out;
  out["f"] = series_to_json(a.f);
  out["g"] = map_to_json(a.g);
  return out;
}

RiordanElement riordan_from_json(const Json& j) {
  expect_keys(j, 2);
  return RiordanElement::make(series_from_json(field(j, "f")), map_from_json(field(j, "g")));
}

Json laurent_to_json(const LaurentSeries& f) {
  Json out;
  out["vertex"] = exponents_json(f.vertex().exponents());
  out["body"] = series_to_json(f.body());
  out["accuracy"] = f.accuracy();
  return out;
}

LaurentSeries laurent_from_json(const Json& j) {
  expect_keys(j, 3);
  SignedMonomial vertex(exponent_list(field(j, "vertex"), "vertex"));
  Series body = series_from_json(field(j, "body"));
  if (as_int(field(j, "accuracy"), "accuracy") != body.trunc()) bad("accuracy differs from the body truncation");
  if (vertex.dim() != body.dim()) bad("vertex length differs from the body dimension");
  if (!body.is_zero() && !body.vertex().is_one()) bad("body is not normalized to vertex 1");
  return LaurentSeries::from_parts(std::move(vertex), body);
}

Json matrix_to_json(const MonomialMatrix& m) {
  Json basis = Json::array();
  for (const auto& mono : m.basis().monomials()) basis.push_back(to_string(mono));
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  Json out;
  out["d"] = m.dim();
  out["trunc"] = m.trunc();
  out["ring"] = m.ring().tag();
  out["basis"] = std::move(basis);
  out["rows"] = std::move(rows);
  return out;
}

MonomialMatrix matrix_from_json(const Json& j) {
  expect_keys(j, 5);
  const int d = as_int(field(j, "d"), "d");
  const int k = as_int(field(j, "trunc"), "trunc");
  if (d < 1 || k < 0) bad("matrix needs d >= 1 and trunc >= 0");
  const Json& tag = field(j, "ring");
  if (!tag.is_string()) bad("ring must be a string");
  MonomialMatrix out(static_cast<std::size_t>(d), k, Ring::parse(tag.get<std::string>()));
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != out.size()) bad("basis length differs from the monomial count");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!basis[i].is_string() || basis[i].get<std::string>() != to_string(out.basis().monomial(i))) {
      bad("basis entry " + std::to_string(i) + " is not the grlex monomial " + to_string(out.basis().monomial(i)));
    }
  }
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != out.size()) bad("row count differs from the monomial count");
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != out.size()) bad("row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (!rows[r][c].is_string()) bad("matrix entries must be strings");
      out(r, c) = parse_canonical(out.ring(), rows[r][c].get<std::string>());
    }
  }
  return out;
}

std::string matrix_to_csv(const MonomialMatrix& m) {
  std::string out = "m\\n";
  for (const auto& mono : m.basis().monomials()) out += "," + to_string(mono);
  out += "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += to_string(m.basis().monomial(r));
    for (std::size_t c = 0; c < m.size(); ++c) out += "," + m(r, c).to_string();
    out += "\n";
  }
  return out;
}

MonomialMatrix matrix_from_csv(std::string_view text, std::size_t dim, Ring ring) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> line_offsets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) throw ParseError(text.size(), "missing final newline");
    line_offsets.push_back(pos);
    std::vector<std::string> row;
    std::size_t start = pos;
    for (std::size_t i = pos; i <= end; ++i) {
      if (i == end || text[i] == ',') {
        row.emplace_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    cells.push_back(std::move(row));
    pos = end + 1;
  }
  if (cells.empty() || cells[0].empty() || cells[0][0] != "m\\n") throw ParseError(0, "header must start with m\\n");
  const std::size_t n = cells[0].size() - 1;
  int k = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    k = std::max<int>(k, static_cast<int>(parse_monomial(cells[0][i], dim).degree()));
  }
  MonomialMatrix out(dim, k, ring);
  if (out.size() != n) throw ParseError(0, "header does not list every monomial of degree <= " + std::to_string(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[0][i + 1] != to_string(out.basis().monomial(i))) {
      throw ParseError(0, "header label " + cells[0][i + 1] + " out of grlex order");
    }
  }
  if (cells.size() != n + 1) throw ParseError(text.size(), "expected " + std::to_string(n) + " data rows");
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = cells[r + 1];
    const std::size_t at = line_offsets[r + 1];
    if (row.size() != n + 1) throw ParseError(at, "row has " + std::to_string(row.size()) + " cells");
    if (row[0] != to_string(out.basis().monomial(r))) throw ParseError(at, "row label " + row[0] + " out of order");
    for (std::size_t c = 0; c < n; ++c) {
      try {
        out(r, c) = parse_canonical(ring, row[c + 1]);
      } catch (const ParseError& e) {
        throw ParseError(at, e.what());
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    }
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
}

std::string render_series(const Series& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = t.coeff.to_string();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Monomial& m = f.monomial_of(t);
    if (m.is_one()) {
      out += c;
    } else if (c == "1") {
      out += to_string(m);
    } else {
      out += c + "*" + to_string(m);
    }
  }
  return out;
}

}  // namespace riordan
