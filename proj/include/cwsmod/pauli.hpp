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

// Qudit Pauli operators q_d^k Z^z X^x with exact phase tracking.
//
// Every operator is kept in normal order: on each qudit the Z power stands
// left of the X power. Phases live in <q_d>, q_d = exp(2 pi i / d), and are
// stored as the exponent k mod d. Qudit 0 is the leftmost tensor factor.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cwsmod/zmod.hpp"

namespace cwsmod {

class PauliOperator {
 public:
  PauliOperator(Residue phase_exponent, ZdVector z, ZdVector x);

  static PauliOperator identity(Modulus modulus, std::size_t num_qudits);
  /// Operator with symplectic image (z | x), given as one vector of length 2n.
  static PauliOperator from_symplectic(const ZdVector& zx, Residue phase_exponent = 0);

  const Modulus& modulus() const noexcept { return z_.modulus(); }
  std::size_t num_qudits() const noexcept { return z_.size(); }
  Residue phase_exponent() const noexcept { return phase_; }
  const ZdVector& z() const noexcept { return z_; }
  const ZdVector& x() const noexcept { return x_; }

  /// z = x = 0 (any phase).
  bool is_identity_multiple() const noexcept { return z_.is_zero() && x_.is_zero(); }
  bool is_identity() const noexcept { return phase_ == 0 && is_identity_multiple(); }
  /// Number of qudits acted on nontrivially.
  std::size_t weight() const noexcept;

  PauliOperator with_phase(Residue phase_exponent) const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
  /// Orders by (z, x, phase); used for canonical set ordering.
  friend std::strong_ordering operator<=>(const PauliOperator& a, const PauliOperator& b);

 private:
  Residue phase_;
  ZdVector z_;
  ZdVector x_;
};

/// P Q, normal-ordered: X^k Z^j = q_d^{-kj} Z^j X^k on each qudit.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return multiply(p, q);
}

PauliOperator adjoint(const PauliOperator& p);

/// P^k by repeated squaring.
PauliOperator power(const PauliOperator& p, std::uint64_t k);

struct PauliOrder {
  /// Least o >= 1 with P^o a multiple of the identity.
  std::uint64_t order;
  /// P^order = q_d^{residual_phase} I.
  Residue residual_phase;
};

PauliOrder order(const PauliOperator& p);

/// R(P) = (z | x), the phase discarded.
ZdVector r_map(const PauliOperator& p);

/// u Lambda v^T = <a, e> - <b, c> for u = (a | b), v = (c | e).
/// Throws DimensionMismatch on odd or unequal lengths.
Residue symplectic_product(const ZdVector& u, const ZdVector& v);

/// P Q = Q P, i.e. symplectic_product(R(P), R(Q)) == 0.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Parses  [ "w" digits ":" ] token ( "." token )*  where
/// token := "I" | zpart xpart? | xpart,  zpart := "Z" digits?,
/// xpart := "X" digits?  (omitted exponent = 1).
///
/// A token written X-first ("X1Z2") is read as the product X^1 Z^2 and
/// normal-ordered, so it contributes a phase q_d^{-xz}. In strict mode an
/// exponent >= d is a ParseError; otherwise exponents are reduced mod d.
PauliOperator parse_pauli(std::string_view text, Modulus modulus, bool strict = true);

/// Canonical text: phase prefix only when nonzero, Z before X, explicit
/// exponents, "I" for trivial qudits. E.g. "w2:Z1X1.Z1.I".
std::string format_pauli(const PauliOperator& p);

}  // namespace cwsmod
