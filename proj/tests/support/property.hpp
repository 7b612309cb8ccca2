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

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "riordan/coeff.hpp"
#include "riordan/random.hpp"

namespace riordan::testing {

inline std::vector<Ring> shipped_rings() { return {Ring::integers(), Ring::rationals(), Ring::modp(7)}; }

/// Runs `body(rng)` for `trials` seeds derived from `base`; the seed is in
/// the failure trace so a trial can be replayed alone.
template <typename Body>
void for_each_trial(std::size_t trials, std::uint64_t base, Body&& body) {
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = splitmix64(base + i);
    SCOPED_TRACE("trial " + std::to_string(i) + " seed " + std::to_string(seed));
    Rng rng(seed);
    body(rng);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace riordan::testing
