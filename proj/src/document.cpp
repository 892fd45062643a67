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

#include "cwsmod/document.hpp"

#include "cwsmod/errors.hpp"

namespace cwsmod {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON at " + line_column(text, byte) + ": " + e.what(), byte);
  }
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0);
}

std::int64_t integer_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

PauliOperator operator_from_json(const json& spec, const Modulus& m, std::size_t n, bool strict,
                                 const std::string& path) {
  if (spec.is_string()) {
    const auto text = spec.get<std::string>();
    PauliOperator p = [&] {
      try {
        return parse_pauli(text, m, strict);
      } catch (const ParseError& e) {
        throw ParseError(path + ": \"" + text + "\": " + e.what(), e.position());
      }
    }();
    if (p.num_qudits() != n) {
      schema_error(path, "\"" + text + "\" has " + std::to_string(p.num_qudits()) +
                             " qudits, expected n = " + std::to_string(n));
    }
    return p;
  }
  if (!spec.is_object()) schema_error(path, "expected a Pauli string or {phase, z, x} object");
  auto exponents = [&](const char* key) {
    const std::string sub = path + "." + key;
    if (!spec.contains(key) || !spec[key].is_array()) schema_error(sub, "expected an array");
    const json& arr = spec[key];
    if (arr.size() != n) {
      schema_error(sub, "has length " + std::to_string(arr.size()) + ", expected n = " +
                            std::to_string(n));
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::int64_t v = integer_field(arr[i], sub + "[" + std::to_string(i) + "]");
      if (strict && (v < 0 || v >= m.value())) {
        schema_error(sub + "[" + std::to_string(i) + "]", "exponent " + std::to_string(v) +
                                                              " outside [0, d-1]");
      }
      out.push_back(v);
    }
    return ZdVector(m, std::span<const std::int64_t>(out));
  };
  std::int64_t phase = 0;
  if (spec.contains("phase")) {
    phase = integer_field(spec["phase"], path + ".phase");
    if (strict && (phase < 0 || phase >= m.value())) {
      schema_error(path + ".phase", "exponent " + std::to_string(phase) + " outside [0, d-1]");
    }
  }
  return PauliOperator(phase, exponents("z"), exponents("x"));
}

std::vector<PauliOperator> operator_list(const json& arr, const Modulus& m, std::size_t n,
                                         bool strict, const std::string& path) {
  if (!arr.is_array()) schema_error(path, "expected an array of operators");
  std::vector<PauliOperator> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(operator_from_json(arr[i], m, n, strict, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

CodeDocument parse_document(std::string_view json_text, bool strict) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) schema_error("$", "expected a JSON object");
  if (!doc.contains("d")) schema_error("$.d", "missing");
  if (!doc.contains("n")) schema_error("$.n", "missing");
  const std::int64_t d = integer_field(doc["d"], "$.d");
  const std::int64_t n = integer_field(doc["n"], "$.n");
  if (d < 2) schema_error("$.d", "must be at least 2");
  if (n < 1) schema_error("$.n", "must be at least 1");
  const Modulus m(d);
  const auto qudits = static_cast<std::size_t>(n);

  if (!doc.contains("stabilizers")) schema_error("$.stabilizers", "missing");
  CodeDocument out{m, qudits, operator_list(doc["stabilizers"], m, qudits, strict, "$.stabilizers"),
                   std::nullopt, std::nullopt};
  if (out.stabilizers.empty()) schema_error("$.stabilizers", "needs at least one generator");
  if (doc.contains("codewords")) {
    out.codewords = operator_list(doc["codewords"], m, qudits, strict, "$.codewords");
  }
  if (doc.contains("errors")) {
    out.errors = operator_list(doc["errors"], m, qudits, strict, "$.errors");
  }
  return out;
}

std::vector<PauliOperator> parse_error_list(std::string_view json_text, Modulus modulus,
                                            std::size_t num_qudits, bool strict) {
  const json doc = parse_json(json_text);
  if (doc.is_array()) return operator_list(doc, modulus, num_qudits, strict, "$");
  if (doc.is_object() && doc.contains("errors")) {
    return operator_list(doc["errors"], modulus, num_qudits, strict, "$.errors");
  }
  schema_error("$", "expected an array of operators or an object with \"errors\"");
}

json to_json(const PauliOperator& p) { return format_pauli(p); }

json to_json(const CodeDocument& doc) {
  json out;
  out["d"] = doc.modulus.value();
  out["n"] = doc.num_qudits;
  auto list = [](const std::vector<PauliOperator>& ops) {
    json arr = json::array();
    for (const auto& p : ops) arr.push_back(to_json(p));
    return arr;
  };
  out["stabilizers"] = list(doc.stabilizers);
  if (doc.codewords) out["codewords"] = list(*doc.codewords);
  if (doc.errors) out["errors"] = list(*doc.errors);
  return out;
}

}  // namespace cwsmod
