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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/verde_star.hpp"

namespace riordan::tools {

enum class Suite { group, homomorphism, ftra, projective, verdestar };
enum class ElementKind { invertible, semigroup };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s) noexcept;

struct CampaignConfig {
  Suite suite = Suite::homomorphism;
  std::vector<std::size_t> dims{2};
  std::vector<int> truncs{4};
  std::vector<Ring> rings{Ring::integers()};
  std::size_t trials = 100;  // per (dim, trunc, ring) cell
  std::uint64_t seed = 0;
  std::vector<Convention> conventions{Convention::eq4};
  ElementKind elements = ElementKind::invertible;
  int box_radius = 3;
  unsigned threads = 1;
};

struct CampaignResult {
  std::vector<std::string> lines;  // one JSON object per trial, then the summary
  bool passed = false;
};

/// Runs every trial, in parallel when config.threads > 1, and emits the
/// lines in trial order. The output depends only on the config minus
/// `threads`.
CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace riordan::tools
