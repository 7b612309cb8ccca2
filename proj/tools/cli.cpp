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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include "campaign.hpp"
#include "riordan/error.hpp"
#include "riordan/expr.hpp"
#include "riordan/formal_map.hpp"
#include "riordan/monomial_matrix.hpp"
#include "riordan/projective.hpp"
#include "riordan/riordan.hpp"
#include "riordan/serialize.hpp"

namespace riordan::tools {
namespace {

// Context flags shared by the commands that read expressions.
struct Context {
  std::size_t vars = 1;
  int trunc = 4;
  std::string ring = "int";

  Ring parsed_ring() const {
    try {
      return Ring::parse(ring);
    } catch (const Error& e) {
      throw ParseError(0, std::string("--ring: ") + e.what());
    }
  }
};

void add_context(CLI::App* cmd, Context& ctx) {
  cmd->add_option("--vars,-d", ctx.vars, "Number of variables")->check(CLI::Range(1, 64));
  cmd->add_option("--trunc,-k", ctx.trunc, "Truncation degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--ring", ctx.ring, "Coefficient ring: int, rational or modp:<p>");
}

// Re-throws failures with the name of the argument that caused them.
template <typename F>
auto named(const std::string& arg, F&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), arg + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), arg + ": " + e.what());
  }
}

Series series_arg(const std::string& arg, const std::string& text, const Context& ctx, const Ring& ring) {
  return named(arg, [&] { return parse_series(text, ctx.vars, ctx.trunc, ring); });
}

FormalMap map_arg(const std::string& arg, const std::string& text, const Context& ctx, const Ring& ring) {
  const auto exprs = named(arg, [&] { return parse_expr_list(text, ctx.vars); });
  if (exprs.size() != ctx.vars) {
    throw ParseError(0, arg + ": expected " + std::to_string(ctx.vars) + " comma-separated components, got " +
                            std::to_string(exprs.size()));
  }
  std::vector<Series> comps;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    comps.push_back(named(arg + " component " + std::to_string(i + 1),
                          [&] { return eval_series(exprs[i], ctx.vars, ctx.trunc, ring); }));
  }
  return named(arg, [&] { return FormalMap::from_components(std::move(comps)); });
}

std::string identity_map_text(std::size_t d) {
  std::string out;
  for (std::size_t j = 1; j <= d; ++j) out += (j > 1 ? "," : "") + ("x" + std::to_string(j));
  return out;
}

std::string render_map(const FormalMap& g) {
  std::string out;
  for (std::size_t j = 0; j < g.dim(); ++j) out += (j ? ", " : "") + render_series(g[j]);
  return out;
}

std::string emit_matrix(const MonomialMatrix& m, const std::string& format) {
  return format == "json" ? dump(matrix_to_json(m)) + "\n" : matrix_to_csv(m);
}

std::string triangle_text(const MonomialMatrix& m) {
  std::string out;
  for (std::size_t n = 0; n < m.size(); ++n) {
    out += "[";
    for (std::size_t j = 0; j <= n; ++j) out += (j ? "," : "") + m(n, j).to_string();
    out += "]\n";
  }
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("RIORDAN_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw ParseError(0, std::string("RIORDAN_SEED: not an unsigned integer: ") + env);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact several-variable Riordan group computations", "riordan"};
  app.require_subcommand(1);

  std::string result;  // written to `out` only on success
  int status = kOk;

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Print the Riordan matrix M(f, g) on monomials of degree <= k");
  Context matrix_ctx;
  std::string matrix_f = "1";
  std::string matrix_g;
  std::string matrix_format = "csv";
  add_context(matrix, matrix_ctx);
  matrix->add_option("--f", matrix_f, "Series expression for f");
  matrix->add_option("--g", matrix_g, "Comma-separated components of g (default: the identity map)");
  matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"csv", "json"}));
  matrix->callback([&] {
    const Ring ring = matrix_ctx.parsed_ring();
    Series f = series_arg("--f", matrix_f, matrix_ctx, ring);
    const std::string g_text = matrix_g.empty() ? identity_map_text(matrix_ctx.vars) : matrix_g;
    FormalMap g = map_arg("--g", g_text, matrix_ctx, ring);
    result = emit_matrix(riordan_matrix(RiordanElement::make(std::move(f), std::move(g))), matrix_format);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a seeded property campaign; prints JSON lines");
  std::string suite = "homomorphism";
  std::vector<std::size_t> dims{2};
  std::vector<int> truncs{4};
  std::vector<std::string> rings{"int"};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string convention = "eq4";
  std::string elements = "invertible";
  int box_radius = 3;
  verify->add_option("--suite", suite)->check(
      CLI::IsMember({"group", "homomorphism", "ftra", "projective", "verdestar"}));
  verify->add_option("--dims", dims, "Dimensions, comma-separated")->delimiter(',')->check(CLI::Range(1, 16));
  verify->add_option("--truncs", truncs, "Truncation degrees, comma-separated")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--ring", rings, "Rings, comma-separated")->delimiter(',');
  verify->add_option("--trials", trials, "Trials per (dimension, degree, ring) cell")->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", seed, "Base seed (default: $RIORDAN_SEED, else 0)");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--convention", convention, "Verde-Star product order")
      ->check(CLI::IsMember({"eq4", "sec54", "both"}));
  verify->add_option("--elements", elements, "Homomorphism suite: group elements or semigroup elements")
      ->check(CLI::IsMember({"invertible", "semigroup"}));
  verify->add_option("--box-radius", box_radius, "Verde-Star window radius")->check(CLI::Range(0, 8));
  verify->callback([&] {
    CampaignConfig config;
    config.suite = parse_suite(suite);
    config.dims = dims;
    config.truncs = truncs;
    config.rings.clear();
    for (const auto& tag : rings) {
      Context c;
      c.ring = tag;
      config.rings.push_back(c.parsed_ring());
    }
    config.trials = trials;
    config.seed = seed_opt->count() > 0 ? seed : default_seed();
    config.threads = threads;
    if (convention == "both") {
      config.conventions = {Convention::eq4, Convention::sec54};
    } else {
      config.conventions = {parse_convention(convention)};
    }
    config.elements = elements == "semigroup" ? ElementKind::semigroup : ElementKind::invertible;
    config.box_radius = box_radius;
    const CampaignResult r = run_campaign(config);
    for (const auto& line : r.lines) result += line + "\n";
    status = r.passed ? kOk : kVerifyFailed;
  });

  // invert
  auto* invert = app.add_subcommand("invert", "Invert a series, a formal map or a Riordan element");
  Context inv_ctx;
  std::string what = "series";
  std::string inv_expr;
  std::string inv_f = "1";
  std::string inv_g;
  std::string inv_format = "json";
  add_context(invert, inv_ctx);
  invert->add_option("--what", what)->check(CLI::IsMember({"series", "map", "riordan"}));
  invert->add_option("--expr", inv_expr, "Series (or comma-separated map) to invert");
  invert->add_option("--f", inv_f, "f of the Riordan element");
  invert->add_option("--g", inv_g, "g of the Riordan element");
  invert->add_option("--format", inv_format)->check(CLI::IsMember({"json", "text"}));
  invert->callback([&] {
    const Ring ring = inv_ctx.parsed_ring();
    const bool json = inv_format == "json";
    if (what == "series") {
      if (inv_expr.empty()) throw ParseError(0, "--expr is required for --what series");
      const Series s = series_arg("--expr", inv_expr, inv_ctx, ring);
      const Series inv = named("--expr", [&] { return s.inverse(); });
      if (!(inv * s == Series::one(s.dim(), s.trunc(), ring))) raise(Errc::internal, "series inverse check failed");
      result = (json ? dump(series_to_json(inv)) : render_series(inv)) + "\n";
    } else if (what == "map") {
      if (inv_expr.empty()) throw ParseError(0, "--expr is required for --what map");
      const FormalMap g = map_arg("--expr", inv_expr, inv_ctx, ring);
      const FormalMap inv = named("--expr", [&] { return comp_inverse(g); });
      const FormalMap id = FormalMap::identity(g.dim(), g.trunc(), ring);
      if (!(compose_maps(g, inv) == id) || !(compose_maps(inv, g) == id)) {
        raise(Errc::internal, "map inverse check failed");
      }
      result = (json ? dump(map_to_json(inv)) : render_map(inv)) + "\n";
    } else {
      const Series f = series_arg("--f", inv_f, inv_ctx, ring);
      const std::string g_text = inv_g.empty() ? identity_map_text(inv_ctx.vars) : inv_g;
      const FormalMap g = map_arg("--g", g_text, inv_ctx, ring);
      const RiordanElement a = RiordanElement::make(f, g);
      const RiordanElement inv = riordan_inverse(a);
      const RiordanElement id = RiordanElement::identity(a.dim(), a.trunc(), ring);
      if (!(riordan_mul(a, inv) == id) || !(riordan_mul(inv, a) == id)) {
        raise(Errc::internal, "Riordan inverse check failed");
      }
      result = (json ? dump(riordan_to_json(inv)) : "f: " + render_series(inv.f) + "\ng: " + render_map(inv.g)) + "\n";
    }
  });

  // classic
  auto* classic = app.add_subcommand("classic", "Print a classical one-variable Riordan triangle");
  std::string name;
  int classic_k = 4;
  std::string classic_format = "text";
  classic->add_option("name", name)->required()->check(CLI::IsMember({"pascal", "catalan-inverse"}));
  classic->add_option("--trunc,-k", classic_k)->check(CLI::NonNegativeNumber);
  classic->add_option("--format", classic_format)->check(CLI::IsMember({"text", "csv", "json"}));
  classic->callback([&] {
    // Built at degree >= 1 so the inverse is defined, then cut to k.
    const int k = std::max(classic_k, 1);
    const Ring ring = Ring::integers();
    RiordanElement a = RiordanElement::identity(1, k, ring);
    if (name == "pascal") {
      a = RiordanElement::make(parse_series("1/(1-x1)", 1, k, ring),
                               FormalMap::from_components({parse_series("x1/(1-x1)", 1, k, ring)}));
    } else {
      a = RiordanElement::make(Series::one(1, k, ring),
                               comp_inverse(FormalMap::from_components({parse_series("x1+x1^2", 1, k, ring)})));
    }
    const MonomialMatrix m = leading_block(riordan_matrix(a), classic_k);
    result = classic_format == "text" ? triangle_text(m) : emit_matrix(m, classic_format);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "riordan: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "riordan: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument) {
      err << "riordan: " << e.what() << "\n";
      return kUsage;
    }
    err << "riordan: algebra error: " << e.what() << "\n";
    return kAlgebra;
  }
  out << result;
  return status;
}

}  // namespace riordan::tools
