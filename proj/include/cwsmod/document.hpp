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

// JSON code documents:
//
//   {
//     "d": 3, "n": 3,
//     "stabilizers": ["X1.Z1.I", {"phase": 0, "z": [1,0,1], "x": [0,1,0]}, ...],
//     "codewords":   [...],   // optional
//     "errors":      [...]    // optional
//   }
//
// Each operator is either a string in the Pauli text grammar or a structured
// {phase, z, x} object. Unknown top-level keys are ignored.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cwsmod/pauli.hpp"
#include "cwsmod/zmod.hpp"

namespace cwsmod {

struct CodeDocument {
  Modulus modulus;
  std::size_t num_qudits;
  std::vector<PauliOperator> stabilizers;
  std::optional<std::vector<PauliOperator>> codewords;
  std::optional<std::vector<PauliOperator>> errors;
};

/// Throws ParseError; the message names the line/column for JSON syntax
/// errors and the JSON path for schema errors.
CodeDocument parse_document(std::string_view json_text, bool strict = true);

/// Accepts a bare array of operator specs or an object with an "errors" array.
std::vector<PauliOperator> parse_error_list(std::string_view json_text, Modulus modulus,
                                            std::size_t num_qudits, bool strict = true);

/// Operators are written in canonical text form.
nlohmann::json to_json(const CodeDocument& doc);
nlohmann::json to_json(const PauliOperator& p);

}  // namespace cwsmod
