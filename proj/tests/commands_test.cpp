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

#include <gtest/gtest.h>

using namespace cwsmod;

namespace {

const char* kQutritCode = R"({"d": 3, "n": 3,
  "stabilizers": ["X1.Z1.I", "Z1.X1.Z1", "I.Z1.X1"],
  "codewords": ["I.I.I", "X1Z1.Z1.Z2", "X1Z2.Z1.Z1"]})";

}  // namespace

TEST(errors_up_to_weight, counts) {
  const Modulus m(3);
  const auto w1 = errors_up_to_weight(m, 3, 1);
  EXPECT_EQ(w1.size(), 24u);
  for (const auto& e : w1) EXPECT_EQ(e.weight(), 1u);
  EXPECT_EQ(errors_up_to_weight(m, 3, 3).size(), 728u);
  EXPECT_EQ(errors_up_to_weight(m, 3, 9).size(), 728u);
  const auto w2 = errors_up_to_weight(Modulus(2), 2, 2);
  EXPECT_EQ(w2.size(), 15u);
  EXPECT_TRUE(std::is_sorted(w2.begin(), w2.end(),
                             [](const auto& a, const auto& b) { return a.weight() < b.weight(); }));
  std::set<PauliOperator> unique(w2.begin(), w2.end());
  EXPECT_EQ(unique.size(), w2.size());
}

TEST(run_command, qutrit_code) {
  const CodeDocument doc = parse_document(kQutritCode);
  const CommandOptions options;
  const CommandResult v = run_command("validate", doc, options);
  EXPECT_EQ(v.exit_code, kExitHolds);
  EXPECT_EQ(v.report["stabilizer"]["order"], 27);

  const CommandResult s = run_command("is-stabilizer", doc, options);
  EXPECT_EQ(s.exit_code, kExitHolds);
  const auto& c = s.report["certificate"];
  EXPECT_EQ(c["card_RW"], 9);
  EXPECT_EQ(c["card_intersection"], 3);
  EXPECT_EQ(c["ratio"], 3);
  EXPECT_EQ(c["K"], 3);
  EXPECT_EQ(c["is_stabilizer"], true);
  EXPECT_EQ(c["centralizer_order"], 9);

  CommandOptions weight1;
  weight1.all_weight = 1;
  const CommandResult det = run_command("detect", doc, weight1);
  EXPECT_EQ(det.exit_code, kExitHolds);
  EXPECT_EQ(det.report["errors_checked"], 24);

  const CommandResult o = run_command("oracle", doc, weight1);
  EXPECT_EQ(o.exit_code, kExitHolds);
  EXPECT_EQ(o.report["all_agree"], true);
}

TEST(run_command, detect_reports_witnesses_one_based) {
  CodeDocument doc = parse_document(kQutritCode);
  doc.errors = std::vector<PauliOperator>{parse_pauli("X1Z1.Z1.Z2", Modulus(3))};
  const CommandResult det = run_detect(doc, {});
  EXPECT_EQ(det.exit_code, kExitFails);
  const auto& w = det.report["verdicts"][0]["witnesses"][0];
  EXPECT_EQ(w["i"], 1);
  EXPECT_EQ(w["j"], 2);

  doc.errors.reset();
  const CommandResult empty = run_detect(doc, {});
  EXPECT_EQ(empty.exit_code, kExitHolds);
  EXPECT_FALSE(empty.report["warnings"].empty());
}

TEST(run_command, exit_code_contract) {
  const CodeDocument nonabelian =
      parse_document(R"({"d": 3, "n": 1, "stabilizers": ["Z1", "X1"], "codewords": ["I"]})");
  const CommandResult v = run_validate(nonabelian, {});
  EXPECT_EQ(v.exit_code, kExitFails);
  EXPECT_EQ(v.report["stabilizer"]["noncommuting_pairs"][0], nlohmann::json({1, 2}));
  EXPECT_EQ(run_is_stabilizer(nonabelian, {}).exit_code, kExitInputError);

  const CodeDocument no_words = parse_document(R"({"d": 2, "n": 1, "stabilizers": ["Z1"]})");
  EXPECT_EQ(run_is_stabilizer(no_words, {}).exit_code, kExitInputError);
  EXPECT_EQ(run_command("bogus", no_words, {}).exit_code, kExitInputError);

  const CodeDocument non = parse_document(
      R"({"d": 2, "n": 2, "stabilizers": ["Z1.I", "I.Z1"], "codewords": ["I.I", "X1.I", "I.X1"]})");
  const CommandResult ns = run_is_stabilizer(non, {});
  EXPECT_EQ(ns.exit_code, kExitFails);
  EXPECT_EQ(ns.report["certificate"]["is_stabilizer"], false);

  const CodeDocument single = parse_document(R"({"d": 2, "n": 1, "stabilizers": ["Z1"], "codewords": ["I"]})");
  EXPECT_EQ(run_is_stabilizer(single, {}).exit_code, kExitHolds);
}

TEST(run_command, extend_and_to_cws_documents_reparse) {
  const CodeDocument zz = parse_document(R"({"d": 2, "n": 2, "stabilizers": ["Z1.Z1"]})");
  const CommandResult e = run_extend(zz, {});
  EXPECT_EQ(e.exit_code, kExitHolds);
  ASSERT_TRUE(e.document.has_value());
  const CodeDocument extended = parse_document(e.document->dump());
  EXPECT_EQ(extended.stabilizers.size(), 2u);
  EXPECT_EQ(e.report["order"], 4);
  EXPECT_EQ(run_validate(extended, {}).exit_code, kExitHolds);

  const CodeDocument s_prime =
      parse_document(R"({"d": 3, "n": 3, "stabilizers": ["Z1.X1.Z1", "X1.Z2.X1"]})");
  const CommandResult t = run_to_cws(s_prime, {});
  EXPECT_EQ(t.exit_code, kExitHolds);
  ASSERT_TRUE(t.document.has_value());
  const CodeDocument cws = parse_document(t.document->dump());
  EXPECT_EQ(cws.codewords->size(), 3u);
  EXPECT_EQ(run_is_stabilizer(cws, {}).exit_code, kExitHolds);
  // Re-running on the produced document gives an identical document.
  EXPECT_EQ(run_to_cws(s_prime, {}).document->dump(), t.document->dump());
}

TEST(run_command, reports_are_deterministic) {
  const CodeDocument doc = parse_document(kQutritCode);
  CommandOptions options;
  options.all_weight = 2;
  EXPECT_EQ(run_detect(doc, options).report.dump(), run_detect(doc, options).report.dump());
  EXPECT_EQ(run_analyze(doc, options).report.dump(), run_analyze(doc, options).report.dump());
}

TEST(render_text, nested_layout) {
  const nlohmann::json report{{"a", 1}, {"b", {{"c", "x"}}}, {"l", {1, 2}}, {"m", "p\nq"}};
  EXPECT_EQ(render_text(report), "a: 1\nb:\n  c: x\nl: [1, 2]\nm:\n  p\n  q\n");
}
