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

#include "campaign.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "riordan/error.hpp"
#include "riordan/monomial_matrix.hpp"
#include "riordan/projective.hpp"
#include "riordan/random.hpp"
#include "riordan/serialize.hpp"

namespace riordan::tools {
namespace {

struct Cell {
  std::size_t dim;
  int trunc;
  Ring ring;
};

Json render_map(const FormalMap& g) {
  Json out = Json::array();
  for (const auto& c : g.components()) out.push_back(render_series(c));
  return out;
}

Json render_element(const RiordanElement& a) {
  Json out;
  out["f"] = render_series(a.f);
  out["g"] = render_map(a.g);
  return out;
}

Json render_laurent(const LaurentSeries& f) {
  Json out;
  out["vertex"] = Json::array();
  for (auto e : f.vertex().exponents()) out["vertex"].push_back(e);
  out["body"] = render_series(f.body());
  out["accuracy"] = f.accuracy();
  return out;
}

Json render_vsr(const VSRElement& a) {
  Json out;
  out["f"] = render_laurent(a.f);
  out["h"] = Json::array();
  for (const auto& c : a.h.components()) out["h"].push_back(render_series(c));
  return out;
}

Json exponents(const SignedMonomial& m) {
  Json out = Json::array();
  for (auto e : m.exponents()) out.push_back(e);
  return out;
}

bool all_true(const Json& checks) {
  for (const auto& [key, value] : checks.items()) {
    if (!value.get<bool>()) return false;
  }
  return true;
}

RiordanElement draw(Rng& rng, const Cell& c, ElementKind kind) {
  return kind == ElementKind::invertible ? random_invertible_element(rng, c.dim, c.trunc, c.ring)
                                         : random_semigroup_element(rng, c.dim, c.trunc, c.ring);
}

// Each trial fills `out` with "inputs" and "checks" (or "results") and
// returns whether it passed.
bool group_trial(Rng& rng, const Cell& c, Json& out) {
  const RiordanElement a = random_invertible_element(rng, c.dim, c.trunc, c.ring);
  const RiordanElement b = random_invertible_element(rng, c.dim, c.trunc, c.ring);
  const RiordanElement e = random_invertible_element(rng, c.dim, c.trunc, c.ring);
  out["inputs"] = Json{{"a", render_element(a)}, {"b", render_element(b)}, {"c", render_element(e)}};
  const RiordanElement id = RiordanElement::identity(c.dim, c.trunc, c.ring);
  const RiordanElement ab = riordan_mul(a, b);
  Json checks;
  checks["associativity"] = riordan_mul(ab, e) == riordan_mul(a, riordan_mul(b, e));
  checks["identity"] = riordan_mul(a, id) == a && riordan_mul(id, a) == a;
  const RiordanElement inv = riordan_inverse(a);
  checks["inverse"] = riordan_mul(a, inv) == id && riordan_mul(inv, a) == id;
  checks["closure"] = riordan_is_invertible(ab);
  out["checks"] = checks;
  return all_true(checks);
}

bool homomorphism_trial(Rng& rng, const Cell& c, ElementKind kind, Json& out) {
  const RiordanElement a = draw(rng, c, kind);
  const RiordanElement b = draw(rng, c, kind);
  out["inputs"] = Json{{"a", render_element(a)}, {"b", render_element(b)}};
  Json checks;
  checks["homomorphism"] = homomorphism_check(a, b);
  if (kind == ElementKind::invertible && c.trunc >= 1) checks["injectivity"] = a == b || injectivity_probe(a, b);
  out["checks"] = checks;
  return all_true(checks);
}

bool ftra_trial(Rng& rng, const Cell& c, Json& out) {
  const RiordanElement a = random_invertible_element(rng, c.dim, c.trunc, c.ring);
  const Series u = random_sparse(rng, c.dim, c.trunc, c.ring, 0, 8);
  out["inputs"] = Json{{"a", render_element(a)}, {"u", render_series(u)}};
  Json checks;
  checks["ftra"] = ftra_apply(a, u).dense() == riordan_matrix(a).apply(u.dense());
  out["checks"] = checks;
  return all_true(checks);
}

bool projective_trial(Rng& rng, const Cell& c, Json& out) {
  const RiordanElement a = random_invertible_element(rng, c.dim, c.trunc, c.ring);
  const Series p = random_sparse(rng, c.dim, c.trunc, c.ring, 0, 8);
  out["inputs"] = Json{{"a", render_element(a)}, {"p", render_series(p)}};
  const MonomialMatrix full = riordan_matrix(a);
  const Series image = pk_action(a, p);
  bool shared = true;
  bool consistent = true;
  for (int level = 0; level < c.trunc; ++level) {
    const MonomialMatrix m = level_matrix(a, level);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) shared = shared && m(i, j) == full(i, j);
    }
    consistent = consistent && image.lower_truncation(level) == pk_action(a, p.lower_truncation(level));
  }
  Json checks;
  checks["shared_entries"] = shared;
  checks["truncation_consistency"] = consistent;
  out["checks"] = checks;
  return all_true(checks);
}

// Trial verdicts per convention, in config order.
std::vector<bool> verdestar_trial(Rng& rng, const Cell& c, const CampaignConfig& config, Json& out) {
  std::vector<std::int32_t> lo(c.dim), hi(c.dim);
  for (std::size_t j = 0; j < c.dim; ++j) {
    lo[j] = static_cast<std::int32_t>(rng.uniform(-1, 0));
    hi[j] = lo[j] + config.box_radius;
  }
  // Vertices lie in [-1, 1]^d, so this covers every entry the box needs.
  const int accuracy = static_cast<int>(c.dim) * (config.box_radius + 2);
  const VSRElement a = random_vsr_element(rng, c.dim, accuracy, c.ring, config.box_radius);
  const VSRElement b = random_vsr_element(rng, c.dim, accuracy, c.ring, config.box_radius);
  const SignedMonomial box_lo(lo), box_hi(hi);
  out["inputs"] = Json{{"a", render_vsr(a)}, {"b", render_vsr(b)}};
  out["box"] = Json{{"lo", exponents(box_lo)}, {"hi", exponents(box_hi)}};
  Json results = Json::array();
  std::vector<bool> verdicts;
  for (Convention conv : config.conventions) {
    const ConjectureReport r = conjecture_trial(a, b, box_lo, box_hi, conv);
    Json j;
    j["convention"] = convention_name(conv);
    j["homomorphism_ok"] = r.homomorphism_ok;
    j["injectivity_ok"] = r.injectivity_ok;
    j["certified_pairs"] = r.certified_pairs;
    j["uncertified_pairs"] = r.uncertified_pairs;
    j["mismatched_pairs"] = r.mismatched_pairs;
    j["certified_hi"] = r.certified_hi ? exponents(*r.certified_hi) : Json();
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    results.push_back(std::move(j));
    verdicts.push_back(r.passed());
  }
  out["results"] = std::move(results);
  return verdicts;
}

struct TrialOutcome {
  Json line;
  std::vector<bool> verdicts;
};

TrialOutcome run_trial(const CampaignConfig& config, const Cell& c, std::size_t index) {
  const std::uint64_t seed = splitmix64(config.seed + index);
  Rng rng(seed);
  TrialOutcome t;
  t.line["trial"] = index;
  t.line["seed"] = seed;
  t.line["suite"] = suite_name(config.suite);
  t.line["d"] = c.dim;
  if (config.suite != Suite::verdestar) t.line["trunc"] = c.trunc;
  t.line["ring"] = c.ring.tag();
  try {
    switch (config.suite) {
      case Suite::group:
        t.verdicts = {group_trial(rng, c, t.line)};
        break;
      case Suite::homomorphism:
        t.verdicts = {homomorphism_trial(rng, c, config.elements, t.line)};
        break;
      case Suite::ftra:
        t.verdicts = {ftra_trial(rng, c, t.line)};
        break;
      case Suite::projective:
        t.verdicts = {projective_trial(rng, c, t.line)};
        break;
      case Suite::verdestar:
        t.verdicts = verdestar_trial(rng, c, config, t.line);
        break;
    }
  } catch (const std::exception& e) {
    t.line["error"] = e.what();
    t.verdicts.assign(config.suite == Suite::verdestar ? config.conventions.size() : 1, false);
  }
  if (config.suite == Suite::verdestar) {
    Json v;
    for (std::size_t i = 0; i < config.conventions.size(); ++i) {
      v[std::string(convention_name(config.conventions[i]))] = t.verdicts[i] ? "pass" : "fail";
    }
    t.line["verdict"] = std::move(v);
  } else {
    t.line["verdict"] = t.verdicts[0] ? "pass" : "fail";
  }
  return t;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  static const std::map<std::string_view, Suite> names{{"group", Suite::group},
                                                       {"homomorphism", Suite::homomorphism},
                                                       {"ftra", Suite::ftra},
                                                       {"projective", Suite::projective},
                                                       {"verdestar", Suite::verdestar}};
  auto it = names.find(name);
  if (it == names.end()) raise(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
  return it->second;
}

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::group:
      return "group";
    case Suite::homomorphism:
      return "homomorphism";
    case Suite::ftra:
      return "ftra";
    case Suite::projective:
      return "projective";
    case Suite::verdestar:
      return "verdestar";
  }
  return "";
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials == 0) raise(Errc::invalid_argument, "trials must be at least 1");
  if (config.conventions.empty()) raise(Errc::invalid_argument, "no convention selected");
  std::vector<Cell> cells;
  for (const Ring& ring : config.rings) {
    for (std::size_t d : config.dims) {
      if (d == 0) raise(Errc::invalid_argument, "dimension must be at least 1");
      if (config.suite == Suite::verdestar) {
        cells.push_back({d, 0, ring});
        continue;
      }
      for (int k : config.truncs) {
        if (k < 0) raise(Errc::invalid_argument, "truncation degree must be nonnegative");
        cells.push_back({d, k, ring});
      }
    }
  }
  const std::size_t total = cells.size() * config.trials;
  std::vector<TrialOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) outcomes[i] = run_trial(config, cells[i / config.trials], i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CampaignResult result;
  const std::size_t n_verdicts = config.suite == Suite::verdestar ? config.conventions.size() : 1;
  std::vector<std::size_t> passed(n_verdicts, 0);
  for (auto& o : outcomes) {
    for (std::size_t i = 0; i < n_verdicts; ++i) passed[i] += o.verdicts[i] ? 1 : 0;
    result.lines.push_back(dump(o.line));
  }
  Json summary;
  summary["summary"] = true;
  summary["suite"] = suite_name(config.suite);
  summary["trials"] = total;
  if (config.suite == Suite::verdestar) {
    Json per = Json::object();
    Json passing = Json::array();
    for (std::size_t i = 0; i < n_verdicts; ++i) {
      const auto name = std::string(convention_name(config.conventions[i]));
      per[name] = passed[i];
      if (passed[i] == total) {
        passing.push_back(name);
        result.passed = true;
      }
    }
    summary["passed"] = std::move(per);
    summary["passing_conventions"] = std::move(passing);
  } else {
    summary["passed"] = passed[0];
    summary["failed"] = total - passed[0];
    result.passed = passed[0] == total;
  }
  summary["verdict"] = result.passed ? "pass" : "fail";
  result.lines.push_back(dump(summary));
  return result;
}

}  // namespace riordan::tools
