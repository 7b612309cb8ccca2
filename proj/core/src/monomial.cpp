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

#include "riordan/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>

#include "riordan/error.hpp"

namespace riordan {
namespace {

template <bool Signed>
void check_dims(const BasicMonomial<Signed>& m, const BasicMonomial<Signed>& n) {
  if (m.dim() != n.dim()) {
    raise(Errc::dimension_mismatch,
          "monomials in " + std::to_string(m.dim()) + " and " + std::to_string(n.dim()) + " variables");
  }
}

template <bool Signed>
BasicMonomial<Signed> multiply(const BasicMonomial<Signed>& m, const BasicMonomial<Signed>& n) {
  check_dims(m, n);
  std::vector<std::int32_t> out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (__builtin_add_overflow(m[j], n[j], &out[j])) {
      raise(Errc::overflow, "exponent overflow in " + to_string(m) + " * " + to_string(n));
    }
  }
  return BasicMonomial<Signed>(std::move(out));
}

template <bool Signed>
BasicMonomial<Signed> parse_impl(std::string_view text, std::size_t dim) {
  auto fail = [&](std::size_t at, const std::string& why) -> ParseError {
    return ParseError(at, "monomial '" + std::string(text) + "': " + why);
  };
  std::vector<std::int32_t> exps(dim, 0);
  if (text == "1") return BasicMonomial<Signed>(std::move(exps));
  std::size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> std::int64_t {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (digits == pos) throw fail(start, "expected an integer");
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || value > std::numeric_limits<std::int32_t>::max() ||
        value < std::numeric_limits<std::int32_t>::min()) {
      throw fail(start, "integer out of range");
    }
    return value;
  };
  while (true) {
    if (pos >= text.size() || text[pos] != 'x') throw fail(pos, "expected 'x<i>'");
    ++pos;
    std::size_t var_at = pos;
    std::int64_t var = read_int(false);
    if (var < 1 || static_cast<std::size_t>(var) > dim) {
      throw fail(var_at, "variable index out of range 1.." + std::to_string(dim));
    }
    std::int64_t e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_at = pos;
      e = read_int(true);
      if (!Signed && e < 0) throw fail(exp_at, "negative exponent");
    }
    auto& slot = exps[static_cast<std::size_t>(var - 1)];
    std::int64_t total = slot + e;
    if (total > std::numeric_limits<std::int32_t>::max() || total < std::numeric_limits<std::int32_t>::min()) {
      throw fail(var_at, "exponent out of range");
    }
    slot = static_cast<std::int32_t>(total);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail(pos, "expected '*'");
    ++pos;
  }
  return BasicMonomial<Signed>(std::move(exps));
}

}  // namespace

template <bool Signed>
BasicMonomial<Signed>::BasicMonomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  if constexpr (!Signed) {
    for (auto e : exps_) {
      if (e < 0) raise(Errc::invalid_argument, "negative exponent in a monic monomial of S");
    }
  }
}

template <bool Signed>
BasicMonomial<Signed> BasicMonomial<Signed>::variable(std::size_t dim, std::size_t j) {
  if (j >= dim) raise(Errc::dimension_mismatch, "variable index out of range");
  std::vector<Exponent> e(dim, 0);
  e[j] = 1;
  return BasicMonomial(std::move(e));
}

template <bool Signed>
std::int64_t BasicMonomial<Signed>::degree() const noexcept {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

template <bool Signed>
bool BasicMonomial<Signed>::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

template class BasicMonomial<false>;
template class BasicMonomial<true>;

Monomial operator*(const Monomial& m, const Monomial& n) { return multiply(m, n); }

SignedMonomial operator*(const SignedMonomial& m, const SignedMonomial& n) { return multiply(m, n); }

SignedMonomial inverse(const SignedMonomial& m) {
  std::vector<std::int32_t> out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] == std::numeric_limits<std::int32_t>::min()) raise(Errc::overflow, "exponent overflow");
    out[j] = -m[j];
  }
  return SignedMonomial(std::move(out));
}

bool divides(const Monomial& m, const Monomial& p) {
  check_dims(m, p);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] > p[j]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& p, const Monomial& m) {
  if (!divides(m, p)) raise(Errc::not_a_factor, to_string(m) + " does not divide " + to_string(p));
  std::vector<std::int32_t> out(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) out[j] = p[j] - m[j];
  return Monomial(std::move(out));
}

namespace {
template <bool Signed>
BasicMonomial<Signed> componentwise_min(std::span<const BasicMonomial<Signed>> set) {
  if (set.empty()) raise(Errc::empty_set, "infimum of an empty set of monomials");
  std::vector<std::int32_t> out(set.front().exponents().begin(), set.front().exponents().end());
  for (const auto& m : set.subspan(1)) {
    check_dims(set.front(), m);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::min(out[j], m[j]);
  }
  return BasicMonomial<Signed>(std::move(out));
}
}  // namespace

Monomial hcf(std::span<const Monomial> set) { return componentwise_min(set); }

SignedMonomial inf_signed(std::span<const SignedMonomial> set) { return componentwise_min(set); }

bool leq(const SignedMonomial& m, const SignedMonomial& n) {
  check_dims(m, n);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] > n[j]) return false;
  }
  return true;
}

SignedMonomial to_signed(const Monomial& m) {
  auto e = m.exponents();
  return SignedMonomial(std::vector<std::int32_t>(e.begin(), e.end()));
}

Monomial to_unsigned(const SignedMonomial& m) {
  auto e = m.exponents();
  return Monomial(std::vector<std::int32_t>(e.begin(), e.end()));
}

std::strong_ordering grlex_compare(const Monomial& m, const Monomial& n) {
  check_dims(m, n);
  if (auto c = m.degree() <=> n.degree(); c != 0) return c;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] != n[j]) return n[j] <=> m[j];
  }
  return std::strong_ordering::equal;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::size_t count_upto(std::size_t dim, int k) {
  if (k < 0) return 0;
  return binomial(dim + static_cast<std::size_t>(k), dim);
}

std::size_t grlex_rank(const Monomial& m) {
  const std::size_t d = m.dim();
  const auto deg = static_cast<std::size_t>(m.degree());
  if (deg == 0 || d == 0) return 0;
  std::size_t rank = binomial(d + deg - 1, d);
  std::size_t remaining = deg;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const auto e = static_cast<std::size_t>(m[i]);
    const std::size_t rest_vars = d - i - 1;
    // Monomials sharing the prefix but with a larger exponent at i come first.
    for (std::size_t t = e + 1; t <= remaining; ++t) {
      rank += binomial(remaining - t + rest_vars - 1, rest_vars - 1);
    }
    remaining -= e;
  }
  return rank;
}

std::vector<Monomial> enumerate_upto(std::size_t dim, int k) {
  std::vector<Monomial> out;
  out.reserve(count_upto(dim, k));
  std::vector<std::int32_t> e(dim, 0);
  // Exponent vectors of degree `deg`, x1 exponent descending, recursively.
  auto emit = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == dim) {
      e[var] = left;
      out.emplace_back(e);
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[var] = t;
      self(self, var + 1, left - t);
    }
  };
  if (dim == 0) {
    if (k >= 0) out.emplace_back(std::vector<std::int32_t>{});
    return out;
  }
  for (int deg = 0; deg <= k; ++deg) emit(emit, 0, deg);
  return out;
}

template <bool Signed>
std::string to_string(const BasicMonomial<Signed>& m) {
  std::string out;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(j + 1);
    if (m[j] != 1) {
      out += '^';
      out += std::to_string(m[j]);
    }
  }
  return out.empty() ? "1" : out;
}

template std::string to_string(const BasicMonomial<false>&);
template std::string to_string(const BasicMonomial<true>&);

Monomial parse_monomial(std::string_view text, std::size_t dim) { return parse_impl<false>(text, dim); }

SignedMonomial parse_signed_monomial(std::string_view text, std::size_t dim) {
  return parse_impl<true>(text, dim);
}

namespace {
constexpr std::size_t kMaxProductTable = 1024;
}

MonomialBasis::MonomialBasis(std::size_t dim, int k)
    : dim_(dim), trunc_(k), monomials_(enumerate_upto(dim, k)) {
  degrees_.reserve(monomials_.size());
  for (const auto& m : monomials_) degrees_.push_back(static_cast<int>(m.degree()));
  const std::size_t n = monomials_.size();
  if (n <= kMaxProductTable) {
    product_.assign(n * n, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (degrees_[i] + degrees_[j] > k) break;
        auto r = static_cast<std::uint32_t>(grlex_rank(monomials_[i] * monomials_[j]));
        product_[i * n + j] = r;
        product_[j * n + i] = r;
      }
    }
  }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(std::size_t dim, int k) {
  if (k < 0) raise(Errc::truncation_exceeded, "negative truncation degree");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, k}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(dim, k);
  return slot;
}

std::size_t MonomialBasis::prefix_size(int j) const {
  if (j < 0) return 0;
  return j >= trunc_ ? monomials_.size() : count_upto(dim_, j);
}

std::size_t MonomialBasis::product(std::size_t i, std::size_t j) const {
  if (degrees_[i] + degrees_[j] > trunc_) return npos;
  if (!product_.empty()) return product_[i * monomials_.size() + j];
  return grlex_rank(monomials_[i] * monomials_[j]);
}

std::size_t MonomialBasis::divide_by_variable(std::size_t i, std::size_t var) const {
  const auto& m = monomials_[i];
  if (m[var] == 0) return npos;
  std::vector<std::int32_t> e(m.exponents().begin(), m.exponents().end());
  --e[var];
  return grlex_rank(Monomial(std::move(e)));
}

}  // namespace riordan
