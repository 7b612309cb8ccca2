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

#include "riordan/error.hpp"

namespace riordan {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::context_mismatch: return "context-mismatch";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::not_a_unit: return "not-a-unit";
    case Errc::not_a_factor: return "not-a-factor";
    case Errc::empty_set: return "empty-set";
    case Errc::overflow: return "overflow";
    case Errc::truncation_exceeded: return "truncation-exceeded";
    case Errc::vertex_of_zero: return "vertex-of-zero";
    case Errc::not_in_max_ideal: return "not-in-max-ideal";
    case Errc::not_invertible: return "not-invertible";
    case Errc::not_in_k: return "not-in-K";
    case Errc::accuracy_exceeded: return "accuracy-exceeded";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace riordan
