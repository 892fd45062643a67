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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cwsmod/commands.hpp"
#include "cwsmod/document.hpp"
#include "cwsmod/errors.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_all(in);
}

int emit_error(const std::string& command, const std::string& message) {
  std::cerr << "cwsmod " << command << ": " << message << "\n";
  return cwsmod::kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit CWS code analysis over Z_d"};
  app.require_subcommand(1);

  std::string input;
  std::string errors_file;
  std::size_t all_weight = 0;
  std::string format = "text";
  std::size_t limit = cwsmod::kDefaultEnumerationLimit;
  bool lenient = false;

  const char* names[][2] = {
      {"validate", "Check that the stabilizers form a valid stabilizer group"},
      {"analyze", "Report group order, parity matrices and the stabilizer certificate"},
      {"is-stabilizer", "Decide whether the CWS code is a stabilizer code"},
      {"detect", "Decide which errors the CWS code detects"},
      {"extend", "Extend the stabilizers to a maximal stabilizer group"},
      {"to-cws", "Convert a stabilizer code to CWS form"},
      {"oracle", "Cross-check symbolic results against dense matrices"},
  };
  for (const auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", input, "Code document (JSON); stdin when absent");
    sub->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--limit", limit, "Enumeration limit")->check(CLI::PositiveNumber);
    sub->add_flag("--lenient", lenient, "Reduce out-of-range exponents mod d");
    if (std::string(name) == "detect" || std::string(name) == "oracle") {
      sub->add_option("--errors,-e", errors_file, "Error list (JSON)");
      sub->add_option("--all-weight,-w", all_weight, "Add every error of weight 1..W");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cwsmod::kExitInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  cwsmod::CommandResult result;
  try {
    const std::string text = input.empty() ? read_all(std::cin) : read_file(input);
    const cwsmod::CodeDocument doc = cwsmod::parse_document(text, !lenient);
    cwsmod::CommandOptions options;
    options.limit = limit;
    if (!errors_file.empty()) {
      options.errors =
          cwsmod::parse_error_list(read_file(errors_file), doc.modulus, doc.num_qudits, !lenient);
    }
    if (all_weight > 0) options.all_weight = all_weight;
    result = cwsmod::run_command(command, doc, options);
  } catch (const cwsmod::ParseError& e) {
    return emit_error(command, std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    return emit_error(command, e.what());
  }

  // Documents stay JSON in either format so they can be fed back in.
  if (result.document) {
    std::cout << result.document->dump(2) << "\n";
  } else if (format == "text") {
    std::cout << cwsmod::render_text(result.report);
  } else {
    std::cout << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
