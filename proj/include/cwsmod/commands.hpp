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

// The analyses behind the `cwsmod` command line, as plain functions over a
// parsed CodeDocument. Exit codes: 0 the property holds, 1 it fails,
// 2 the input is unusable.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cwsmod/document.hpp"
#include "cwsmod/pauli.hpp"

namespace cwsmod {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

struct CommandOptions {
  std::size_t limit = kDefaultEnumerationLimit;
  /// Overrides the document's own "errors" list.
  std::optional<std::vector<PauliOperator>> errors;
  /// Enumerate every phase-0 error of weight 1..all_weight.
  std::optional<std::size_t> all_weight;
};

struct CommandResult {
  int exit_code = kExitHolds;
  nlohmann::json report;
  /// Set by commands whose product is a new code document (extend, to-cws).
  std::optional<nlohmann::json> document;
};

/// Every phase-0 Pauli operator of weight 1..max_weight, ordered by weight,
/// then support (lexicographic), then per-qudit (z, x).
std::vector<PauliOperator> errors_up_to_weight(const Modulus& modulus, std::size_t num_qudits,
                                               std::size_t max_weight);

CommandResult run_validate(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_analyze(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_is_stabilizer(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_detect(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_extend(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_to_cws(const CodeDocument& doc, const CommandOptions& options);
CommandResult run_oracle(const CodeDocument& doc, const CommandOptions& options);

/// Dispatches on the subcommand name; unknown names yield exit code 2.
CommandResult run_command(std::string_view name, const CodeDocument& doc,
                          const CommandOptions& options);

/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace cwsmod
