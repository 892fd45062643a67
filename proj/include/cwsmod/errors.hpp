// Copyright 2026 The cwsmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace cwsmod {

/// Operand shapes or moduli disagree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or dense construction would exceed its configured size.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator set is not a stabilizer group (non-abelian or it contains a
/// nontrivial multiple of the identity).
class InvalidGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A CWS code description violates one of its structural invariants.
class InvalidCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No phase inside <q_d> makes the extended group free of identity multiples.
class PhaseUnrealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or document syntax error. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cwsmod
