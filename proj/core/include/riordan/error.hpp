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
#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

/// Failure categories raised by the algebra. The CLI maps every one of
/// these except `internal` to exit code 3.
enum class Errc {
  context_mismatch,
  dimension_mismatch,
  not_a_unit,
  not_a_factor,
  empty_set,
  overflow,
  truncation_exceeded,
  vertex_of_zero,
  not_in_max_ideal,
  not_invertible,
  not_in_k,
  accuracy_exceeded,
  invalid_argument,
  internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed textual input: expressions, monomial labels, JSON, CSV.
/// `offset` is a byte offset into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace riordan
