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

#include "cwsmod/commands.hpp"

#include <functional>
#include <sstream>

#include "cwsmod/cws.hpp"
#include "cwsmod/errors.hpp"
#include "cwsmod/oracle.hpp"
#include "cwsmod/stabilizer.hpp"

namespace cwsmod {

using nlohmann::json;

namespace {

json certificate_json(const StabilizerCertificate& c) {
  return {{"card_RW", c.card_rw},
          {"card_intersection", c.card_intersection},
          {"ratio", c.ratio},
          {"K", c.k},
          {"is_stabilizer", c.is_stabilizer},
          {"centralizer_order", c.centralizer_order}};
}

json validation_json(const GeneratorSet& g, const ValidationReport& v) {
  json out{{"r", g.size()},
           {"abelian", v.abelian},
           {"identity_multiples_trivial", v.identity_multiples_trivial},
           {"order", v.order},
           {"order_from_enumeration", v.order_from_enumeration},
           {"module_order", v.module_order},
           {"r_in_bounds", v.r_in_bounds},
           {"valid", v.valid()}};
  json pairs = json::array();
  for (const auto& [i, j] : v.noncommuting) pairs.push_back({i + 1, j + 1});
  out["noncommuting_pairs"] = pairs;
  if (v.identity_multiple) out["identity_multiple"] = format_pauli(*v.identity_multiple);
  if (v.valid()) out["stabilized_dimension"] = stabilized_dimension(g);
  return out;
}

json witness_json(const DetectionWitness& w) {
  return {{"kind", w.kind == DetectionWitness::Kind::kCollision ? "collision" : "noncommuting"},
          {"i", w.i + 1},
          {"j", w.j + 1}};
}

void add_warnings(json& report, const std::vector<std::string>& warnings) {
  json& arr = report["warnings"];
  if (!arr.is_array()) arr = json::array();
  for (const auto& w : warnings) arr.push_back(w);
}

CommandResult input_error(std::string_view command, const std::string& message) {
  return {kExitInputError, {{"command", command}, {"error", message}}, std::nullopt};
}

CWSCode require_code(const CodeDocument& doc) {
  if (!doc.codewords) throw InvalidCode("document has no \"codewords\"");
  return CWSCode(GeneratorSet(doc.stabilizers), *doc.codewords);
}

std::vector<PauliOperator> error_set(const CodeDocument& doc, const CommandOptions& options,
                                     std::vector<std::string>& warnings) {
  std::vector<PauliOperator> errors;
  if (options.errors) {
    errors = *options.errors;
  } else if (doc.errors) {
    errors = *doc.errors;
  }
  if (options.all_weight) {
    const auto extra = errors_up_to_weight(doc.modulus, doc.num_qudits, *options.all_weight);
    errors.insert(errors.end(), extra.begin(), extra.end());
  }
  if (errors.empty()) warnings.push_back("no errors supplied");
  return errors;
}

// Maps library exceptions onto exit code 2 for commands that need a
// well-formed code.
CommandResult guarded(std::string_view command, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const InvalidCode& e) {
    return input_error(command, std::string("invalid CWS code: ") + e.what());
  } catch (const InvalidGroup& e) {
    return input_error(command, std::string("invalid stabilizer group: ") + e.what());
  } catch (const LimitExceeded& e) {
    return input_error(command, std::string("limit exceeded: ") + e.what());
  } catch (const DimensionMismatch& e) {
    return input_error(command, std::string("dimension mismatch: ") + e.what());
  }
}

}  // namespace

std::vector<PauliOperator> errors_up_to_weight(const Modulus& modulus, std::size_t num_qudits,
                                               std::size_t max_weight) {
  const std::int64_t d = modulus.value();
  std::vector<PauliOperator> out;
  for (std::size_t w = 1; w <= std::min(max_weight, num_qudits); ++w) {
    // Supports as increasing index tuples.
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    for (;;) {
      // Per-qudit labels 1..d^2-1 encode (z, x) = (label / d, label % d).
      std::vector<std::int64_t> label(w, 1);
      for (;;) {
        ZdVector z(modulus, num_qudits), x(modulus, num_qudits);
        for (std::size_t i = 0; i < w; ++i) {
          z.set(support[i], label[i] / d);
          x.set(support[i], label[i] % d);
        }
        out.emplace_back(0, z, x);
        std::size_t k = w;
        while (k > 0 && label[k - 1] == d * d - 1) label[--k] = 1;
        if (k == 0) break;
        ++label[k - 1];
      }
      std::size_t k = w;
      while (k > 0 && support[k - 1] == num_qudits - w + (k - 1)) --k;
      if (k == 0) break;
      ++support[k - 1];
      for (std::size_t i = k; i < w; ++i) support[i] = support[i - 1] + 1;
    }
  }
  return out;
}

CommandResult run_validate(const CodeDocument& doc, const CommandOptions& options) {
  return guarded("validate", [&] {
    const GeneratorSet g(doc.stabilizers);
    const ValidationReport v = validate(g, options.limit);
    json report{{"command", "validate"}, {"d", doc.modulus.value()}, {"n", doc.num_qudits}};
    report["stabilizer"] = validation_json(g, v);
    add_warnings(report, v.warnings);
    bool ok = v.valid();
    if (doc.codewords) {
      json cw{{"K", doc.codewords->size()}};
      try {
        CWSCode code(g, *doc.codewords);
        cw["valid"] = true;
      } catch (const InvalidCode& e) {
        cw["valid"] = false;
        cw["problem"] = e.what();
        ok = false;
      }
      report["codewords"] = cw;
    }
    report["valid"] = ok;
    return CommandResult{ok ? kExitHolds : kExitFails, report, std::nullopt};
  });
}

CommandResult run_analyze(const CodeDocument& doc, const CommandOptions& options) {
  return guarded("analyze", [&] {
    const GeneratorSet g(doc.stabilizers);
    const ValidationReport v = validate(g, options.limit);
    json report{{"command", "analyze"}, {"d", doc.modulus.value()}, {"n", doc.num_qudits}};
    report["stabilizer"] = validation_json(g, v);
    report["parity_matrix"] = format_matrix(parity_matrix(g));
    add_warnings(report, v.warnings);
    bool ok = v.valid();
    if (doc.codewords && ok) {
      try {
        const CWSCode code(g, *doc.codewords);
        json words = json::array();
        for (const auto& w : classical_code(code)) words.push_back(to_string(w));
        report["classical_code"] = words;
        report["codeword_parity_matrix"] = format_matrix(parity_matrix(code.codewords()));
        report["certificate"] = certificate_json(is_stabilizer_code(code));
        report["w_is_group"] = w_is_group(code);
        report["cls_w_is_group"] = cls_w_is_group(code);
        report["w_is_operator_group"] = w_is_operator_group(code);
      } catch (const InvalidCode& e) {
        report["codeword_problem"] = e.what();
        ok = false;
      }
    }
    report["valid"] = ok;
    return CommandResult{ok ? kExitHolds : kExitFails, report, std::nullopt};
  });
}

CommandResult run_is_stabilizer(const CodeDocument& doc, const CommandOptions&) {
  return guarded("is-stabilizer", [&] {
    const CWSCode code = require_code(doc);
    const StabilizerCertificate cert = is_stabilizer_code(code);
    json report{{"command", "is-stabilizer"}, {"certificate", certificate_json(cert)}};
    report["w_is_group"] = w_is_group(code);
    report["cls_w_is_group"] = cls_w_is_group(code);
    return CommandResult{cert.is_stabilizer ? kExitHolds : kExitFails, report, std::nullopt};
  });
}

CommandResult run_detect(const CodeDocument& doc, const CommandOptions& options) {
  return guarded("detect", [&] {
    const CWSCode code = require_code(doc);
    std::vector<std::string> warnings;
    const auto errors = error_set(doc, options, warnings);
    const DetectionReport det = detects_errors(code, errors);
    json verdicts = json::array();
    std::size_t undetected = 0;
    for (const auto& v : det.verdicts) {
      json item{{"error", format_pauli(v.error)},
                {"classical_word", to_string(v.word)},
                {"detected", v.detected}};
      json ws = json::array();
      for (const auto& w : v.witnesses) ws.push_back(witness_json(w));
      item["witnesses"] = ws;
      verdicts.push_back(item);
      undetected += !v.detected;
    }
    json report{{"command", "detect"},
                {"errors_checked", det.verdicts.size()},
                {"undetected", undetected},
                {"all_detected", det.all_detected()},
                {"verdicts", verdicts}};
    add_warnings(report, warnings);
    add_warnings(report, det.warnings);
    return CommandResult{det.all_detected() ? kExitHolds : kExitFails, report, std::nullopt};
  });
}

CommandResult run_extend(const CodeDocument& doc, const CommandOptions&) {
  return guarded("extend", [&] {
    const GeneratorSet g(doc.stabilizers);
    try {
      const GeneratorSet full = extend_to_maximal(g);
      CodeDocument out{doc.modulus, doc.num_qudits,
                       std::vector<PauliOperator>(full.generators().begin(), full.generators().end()),
                       std::nullopt, std::nullopt};
      json report{{"command", "extend"},
                  {"input_generators", g.size()},
                  {"added_generators", full.size() - g.size()},
                  {"order", group_order(full)}};
      json document = to_json(out);
      document["report"] = report;
      return CommandResult{kExitHolds, report, document};
    } catch (const PhaseUnrealizable& e) {
      return CommandResult{kExitFails, {{"command", "extend"}, {"error", e.what()}}, std::nullopt};
    } catch (const InvalidGroup& e) {
      return CommandResult{kExitFails, {{"command", "extend"}, {"error", e.what()}}, std::nullopt};
    }
  });
}

CommandResult run_to_cws(const CodeDocument& doc, const CommandOptions& options) {
  return guarded("to-cws", [&] {
    const GeneratorSet g(doc.stabilizers);
    try {
      const CWSCode code = stabilizer_to_cws(g, options.limit);
      const StabilizerCertificate cert = is_stabilizer_code(code);
      CodeDocument out{doc.modulus, doc.num_qudits,
                       std::vector<PauliOperator>(code.stabilizer().generators().begin(),
                                                  code.stabilizer().generators().end()),
                       code.codewords(), std::nullopt};
      json report{{"command", "to-cws"},
                  {"K", code.dimension()},
                  {"input_generators", g.size()},
                  {"certificate", certificate_json(cert)}};
      json document = to_json(out);
      document["report"] = report;
      return CommandResult{cert.is_stabilizer ? kExitHolds : kExitFails, report, document};
    } catch (const PhaseUnrealizable& e) {
      return CommandResult{kExitFails, {{"command", "to-cws"}, {"error", e.what()}}, std::nullopt};
    } catch (const InvalidGroup& e) {
      return CommandResult{kExitFails, {{"command", "to-cws"}, {"error", e.what()}}, std::nullopt};
    }
  });
}

CommandResult run_oracle(const CodeDocument& doc, const CommandOptions& options) {
  return guarded("oracle", [&] {
    const GeneratorSet g(doc.stabilizers);
    json checks = json::array();
    bool all_agree = true;
    auto record = [&](const std::string& name, json symbolic, json oracle_value) {
      const bool agree = symbolic == oracle_value;
      all_agree = all_agree && agree;
      checks.push_back({{"check", name}, {"symbolic", symbolic}, {"oracle", oracle_value},
                        {"agree", agree}});
    };

    const ValidationReport v = validate(g, options.limit);
    if (!v.valid()) {
      return input_error("oracle", "stabilizer generators do not form a valid stabilizer group");
    }
    record("stabilized_dimension", true, oracle::verify_stabilized_dimension(g));

    std::vector<std::string> warnings;
    if (doc.codewords) {
      const CWSCode code(g, *doc.codewords);
      const auto basis = oracle::code_basis(code);
      record("code_basis_rank", code.dimension(), oracle::numerical_rank(basis));
      record("is_stabilizer", is_stabilizer_code(code).is_stabilizer,
             oracle::oracle_is_stabilizer(code));

      const EnumeratedGroup group = enumerate_group(g, options.limit);
      Cardinality centralizer = 0;
      for (const auto& s : group.elements) {
        bool central = true;
        for (const auto& w : code.codewords()) central = central && commutes(s, w);
        centralizer += central;
      }
      record("centralizer_order", is_stabilizer_code(code).centralizer_order, centralizer);

      if (doc.errors || options.errors || options.all_weight) {
        const auto errors = error_set(doc, options, warnings);
        const DetectionReport det = detects_errors(code, errors);
        const auto kl = oracle::oracle_detects(code, errors);
        std::size_t disagreements = 0;
        for (std::size_t i = 0; i < errors.size(); ++i) disagreements += det.verdicts[i].detected != kl[i];
        record("detection_disagreements", 0, disagreements);
      }
    }
    json report{{"command", "oracle"}, {"checks", checks}, {"all_agree", all_agree}};
    add_warnings(report, warnings);
    return CommandResult{all_agree ? kExitHolds : kExitFails, report, std::nullopt};
  });
}

CommandResult run_command(std::string_view name, const CodeDocument& doc,
                          const CommandOptions& options) {
  if (name == "validate") return run_validate(doc, options);
  if (name == "analyze") return run_analyze(doc, options);
  if (name == "is-stabilizer") return run_is_stabilizer(doc, options);
  if (name == "detect") return run_detect(doc, options);
  if (name == "extend") return run_extend(doc, options);
  if (name == "to-cws") return run_to_cws(doc, options);
  if (name == "oracle") return run_oracle(doc, options);
  return input_error(name, "unknown command");
}

namespace {

void render(std::ostringstream& os, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto scalar_array = [](const json& v) {
    for (const auto& e : v) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render(os, v, indent + 1);
    } else if (v.is_array() && scalar_array(v)) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
      os << "]\n";
    } else if (v.is_array()) {
      os << pad << key << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << pad << "  -\n";
          render(os, e, indent + 2);
        } else {
          os << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << pad << key << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
    } else {
      os << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace cwsmod
