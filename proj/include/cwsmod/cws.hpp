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

// Codeword stabilized (CWS) codes: a maximal stabilizer group S fixing one
// state |psi>, and codeword operators W = {w_1 = I, ..., w_K} spanning the
// code as {w_i |psi>}.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cwsmod/pauli.hpp"
#include "cwsmod/stabilizer.hpp"
#include "cwsmod/zmod.hpp"

namespace cwsmod {

/// One residue per stabilizer generator.
using ClassicalWord = ZdVector;

class CWSCode {
 public:
  /// Throws InvalidCode unless: the stabilizer is valid with order d^n, W is
  /// nonempty, w_1 is exactly the identity, every codeword shares (d, n), and
  /// the classical words Cl_S(w_i) are pairwise distinct.
  CWSCode(GeneratorSet stabilizer, std::vector<PauliOperator> codewords);

  const Modulus& modulus() const noexcept { return stabilizer_.modulus(); }
  std::size_t num_qudits() const noexcept { return stabilizer_.num_qudits(); }
  const GeneratorSet& stabilizer() const noexcept { return stabilizer_; }
  const std::vector<PauliOperator>& codewords() const noexcept { return codewords_; }
  std::size_t dimension() const noexcept { return codewords_.size(); }

 private:
  GeneratorSet stabilizer_;
  std::vector<PauliOperator> codewords_;
};

/// Cl_S(P) = R(S) Lambda R(P)^T, component i = symplectic_product(R(s_i), R(P)).
ClassicalWord cl_s(const GeneratorSet& stabilizer, const PauliOperator& p);
inline ClassicalWord cl_s(const CWSCode& code, const PauliOperator& p) {
  return cl_s(code.stabilizer(), p);
}

/// Cl_S(w_i) in codeword order. Throws InvalidCode on duplicate words.
std::vector<ClassicalWord> classical_code(const GeneratorSet& stabilizer,
                                          const std::vector<PauliOperator>& codewords);
inline std::vector<ClassicalWord> classical_code(const CWSCode& code) {
  return classical_code(code.stabilizer(), code.codewords());
}

struct DetectionWitness {
  enum class Kind {
    /// Cl(w_i) + Cl(E) = Cl(w_j).
    kCollision,
    /// Cl(E) = 0 but E does not commute with w_i (j == i).
    kNoncommuting,
  };
  Kind kind;
  std::size_t i;  // 0-based codeword indices
  std::size_t j;

  friend auto operator<=>(const DetectionWitness&, const DetectionWitness&) = default;
};

struct ErrorVerdict {
  PauliOperator error;
  ClassicalWord word;
  bool detected;
  /// Sorted ascending.
  std::vector<DetectionWitness> witnesses;
};

struct DetectionReport {
  std::vector<ErrorVerdict> verdicts;
  std::vector<std::string> warnings;

  bool all_detected() const noexcept;
};

/// Error detection through the classical image: E with Cl(E) != 0 is
/// detected iff no translate Cl(w_i) + Cl(E) hits a codeword word; E with
/// Cl(E) = 0 is detected iff it commutes with every w_i.
DetectionReport detects_errors(const CWSCode& code, const std::vector<PauliOperator>& errors);

struct StabilizerCertificate {
  Cardinality card_rw = 0;            // #<R(W)>
  Cardinality card_intersection = 0;  // #(<R(W)> ∩ <R(S)>)
  Cardinality ratio = 0;              // card_rw / card_intersection
  std::size_t k = 0;
  bool is_stabilizer = false;  // ratio == K
  /// #C_S(W) = d^{2n} / #<[R(S); R(W)]>.
  Cardinality centralizer_order = 0;
};

/// The code is a stabilizer code iff #<R(W)> / #(<R(W)> ∩ <R(S)>) = K.
StabilizerCertificate is_stabilizer_code(const CWSCode& code);

/// {R(w_i)} closed under addition mod d.
bool w_is_group(const CWSCode& code);
/// Cl_S(W) closed under addition mod d.
bool cls_w_is_group(const CWSCode& code);
/// W closed under operator multiplication, phases included. Informational:
/// stricter than w_is_group.
bool w_is_operator_group(const CWSCode& code);

/// Every stabilizer code as a CWS code. Extends `generators` to a maximal
/// group S and picks one codeword operator per target word x in
/// Im(R(S) Lambda) that vanishes on the original generators' coordinates,
/// so each w_i |psi> lies in the original code space. Targets are taken in
/// lexicographic order (x = 0 first, giving w_1 = I).
CWSCode stabilizer_to_cws(const GeneratorSet& generators,
                          std::size_t limit = kDefaultEnumerationLimit);

}  // namespace cwsmod
