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

#include "cwsmod/cws.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cwsmod/errors.hpp"

namespace cwsmod {

namespace {

template <typename T>
bool additively_closed(const std::vector<T>& items) {
  const std::set<T> members(items.begin(), items.end());
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!members.contains(a + b)) return false;
    }
  }
  return true;
}

}  // namespace

CWSCode::CWSCode(GeneratorSet stabilizer, std::vector<PauliOperator> codewords)
    : stabilizer_(std::move(stabilizer)), codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw InvalidCode("a CWS code needs at least one codeword (K >= 1)");
  for (const auto& w : codewords_) {
    if (!(w.modulus() == modulus()) || w.num_qudits() != num_qudits()) {
      throw InvalidCode("codeword " + format_pauli(w) + " acts on a different space");
    }
  }
  if (!codewords_.front().is_identity()) {
    throw InvalidCode("the first codeword must be the identity, got " +
                      format_pauli(codewords_.front()));
  }
  Cardinality order = 0;
  try {
    order = group_order(stabilizer_);
  } catch (const InvalidGroup& e) {
    throw InvalidCode(std::string("invalid stabilizer: ") + e.what());
  }
  const Cardinality full = modulus().pow(num_qudits());
  if (order != full) {
    throw InvalidCode("stabilizer order " + std::to_string(order) +
                      " differs from d^n = " + std::to_string(full) +
                      "; it does not fix a unique state");
  }
  classical_code(stabilizer_, codewords_);
}

ClassicalWord cl_s(const GeneratorSet& stabilizer, const PauliOperator& p) {
  if (!(p.modulus() == stabilizer.modulus()) || p.num_qudits() != stabilizer.num_qudits()) {
    throw DimensionMismatch("operator acts on a different space than the stabilizer");
  }
  const ZdVector rp = r_map(p);
  ClassicalWord word(stabilizer.modulus(), stabilizer.size());
  for (std::size_t i = 0; i < stabilizer.size(); ++i) {
    word.set(i, symplectic_product(r_map(stabilizer[i]), rp));
  }
  return word;
}

std::vector<ClassicalWord> classical_code(const GeneratorSet& stabilizer,
                                          const std::vector<PauliOperator>& codewords) {
  std::vector<ClassicalWord> words;
  words.reserve(codewords.size());
  std::map<ClassicalWord, std::size_t> first_seen;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    words.push_back(cl_s(stabilizer, codewords[i]));
    const auto [it, inserted] = first_seen.emplace(words.back(), i);
    if (!inserted) {
      throw InvalidCode("codewords " + std::to_string(it->second + 1) + " and " +
                        std::to_string(i + 1) + " share the classical word " +
                        to_string(words.back()));
    }
  }
  return words;
}

bool DetectionReport::all_detected() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.detected; });
}

DetectionReport detects_errors(const CWSCode& code, const std::vector<PauliOperator>& errors) {
  DetectionReport report;
  if (errors.empty()) report.warnings.push_back("empty error set; nothing to check");
  const auto words = classical_code(code);
  std::map<ClassicalWord, std::size_t> index_of;
  for (std::size_t i = 0; i < words.size(); ++i) index_of.emplace(words[i], i);

  for (std::size_t e = 0; e < errors.size(); ++e) {
    const PauliOperator& error = errors[e];
    ErrorVerdict verdict{error, cl_s(code, error), true, {}};
    if (error.is_identity_multiple()) {
      report.warnings.push_back("error " + std::to_string(e + 1) +
                                " is a multiple of the identity and is detected vacuously");
    }
    if (!verdict.word.is_zero()) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto hit = index_of.find(words[i] + verdict.word);
        if (hit != index_of.end()) {
          verdict.witnesses.push_back({DetectionWitness::Kind::kCollision, i, hit->second});
        }
      }
    } else {
      for (std::size_t i = 0; i < code.codewords().size(); ++i) {
        if (!commutes(error, code.codewords()[i])) {
          verdict.witnesses.push_back({DetectionWitness::Kind::kNoncommuting, i, i});
        }
      }
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end());
    verdict.detected = verdict.witnesses.empty();
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

StabilizerCertificate is_stabilizer_code(const CWSCode& code) {
  const Modulus& m = code.modulus();
  const ZdMatrix rs = parity_matrix(code.stabilizer());
  const ZdMatrix rw = parity_matrix(code.codewords());

  StabilizerCertificate cert;
  cert.k = code.dimension();
  cert.card_rw = row_module_cardinality(rw);
  cert.card_intersection = intersection_cardinality(rw, rs);
  if (cert.card_intersection == 0 || cert.card_rw % cert.card_intersection != 0) {
    throw std::logic_error("#<R(W)> is not a multiple of its intersection with <R(S)>");
  }
  cert.ratio = cert.card_rw / cert.card_intersection;
  cert.is_stabilizer = cert.ratio == cert.k;
  // Lambda is invertible, so #Ker([R(S); R(W)] Lambda) = d^{2n} / #<[R(S); R(W)]>.
  cert.centralizer_order = m.pow(2 * code.num_qudits()) / row_module_cardinality(stack(rs, rw));
  return cert;
}

bool w_is_group(const CWSCode& code) {
  std::vector<ZdVector> images;
  for (const auto& w : code.codewords()) images.push_back(r_map(w));
  return additively_closed(images);
}

bool cls_w_is_group(const CWSCode& code) { return additively_closed(classical_code(code)); }

bool w_is_operator_group(const CWSCode& code) {
  const std::set<PauliOperator> members(code.codewords().begin(), code.codewords().end());
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!members.contains(multiply(a, b))) return false;
    }
  }
  return true;
}

CWSCode stabilizer_to_cws(const GeneratorSet& generators, std::size_t limit) {
  const Modulus& m = generators.modulus();
  const std::size_t n = generators.num_qudits();
  const std::size_t original = generators.size();
  const Cardinality k = stabilized_dimension(generators);

  const GeneratorSet full = extend_to_maximal(generators);
  // Cl_S(P) = T R(P)^T with T = R(S) Lambda; its image is the row-module of T^T.
  const ZdMatrix t = parity_matrix(full) * symplectic_form(m, n);
  const ZdMatrix tt = transpose(t);

  std::vector<PauliOperator> codewords{PauliOperator::identity(m, n)};
  for (const ZdVector& x : enumerate_row_module(tt, limit)) {
    bool in_code = true;
    for (std::size_t i = 0; i < original && in_code; ++i) in_code = x[i] == 0;
    if (!in_code || x.is_zero()) continue;
    const auto v = solve_row(tt, x);
    if (!v) throw std::logic_error("target word " + to_string(x) + " lies in Im(T) but has no preimage");
    codewords.push_back(PauliOperator::from_symplectic(*v));
  }
  if (codewords.size() != k) {
    throw std::logic_error("found " + std::to_string(codewords.size()) +
                           " codewords for a code of dimension " + std::to_string(k));
  }
  return CWSCode(full, std::move(codewords));
}

}  // namespace cwsmod
