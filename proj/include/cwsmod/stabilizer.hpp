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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwsmod/pauli.hpp"
#include "cwsmod/zmod.hpp"

namespace cwsmod {

/// Ordered generator list s_1..s_r of a Pauli subgroup. Generators need not
/// be independent.
class GeneratorSet {
 public:
  /// Throws std::invalid_argument for an empty list and DimensionMismatch when
  /// the generators disagree on (d, n).
  explicit GeneratorSet(std::vector<PauliOperator> generators);

  const Modulus& modulus() const noexcept { return generators_.front().modulus(); }
  std::size_t num_qudits() const noexcept { return generators_.front().num_qudits(); }
  std::size_t size() const noexcept { return generators_.size(); }
  const PauliOperator& operator[](std::size_t i) const { return generators_[i]; }
  std::span<const PauliOperator> generators() const noexcept { return generators_; }

  GeneratorSet with_generator(PauliOperator p) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<PauliOperator> generators_;
};

struct EnumeratedGroup {
  /// Sorted ascending (PauliOperator ordering); contains the identity.
  std::vector<PauliOperator> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const PauliOperator& p) const;
};

/// Closure of the generators under multiplication. Throws LimitExceeded when
/// the group has more than `limit` elements.
EnumeratedGroup enumerate_group(const GeneratorSet& g, std::size_t limit = kDefaultEnumerationLimit);

/// prod_i s_i^{c_i} with exponents taken as integers in [0, d-1].
PauliOperator group_element(const GeneratorSet& g, const ZdVector& exponents);

/// A nontrivial multiple of the identity inside <g>, or nullopt when there is
/// none. Works from the relation module of R(S) instead of enumerating: the
/// identity multiples of an abelian <g> are the images of the integer
/// exponent vectors c with c R(S) = 0, and it suffices to check a generating
/// set of that lattice. For non-abelian input a commutator is returned.
std::optional<PauliOperator> find_identity_multiple(const GeneratorSet& g);

/// First pair (i, j), i < j, of non-commuting generators.
std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const GeneratorSet& g);

struct ValidationReport {
  bool abelian = false;
  bool identity_multiples_trivial = false;
  /// Group order; from enumeration when `order_from_enumeration`.
  Cardinality order = 0;
  bool order_from_enumeration = false;
  /// #<R(S)>; equals `order` whenever identity multiples are trivial.
  Cardinality module_order = 0;
  /// n <= r <= 2n. Advisory only.
  bool r_in_bounds = false;
  std::vector<std::pair<std::size_t, std::size_t>> noncommuting;
  std::optional<PauliOperator> identity_multiple;
  std::vector<std::string> warnings;

  bool valid() const noexcept { return abelian && identity_multiples_trivial; }
};

/// Enumerates the group when it fits within `limit`; otherwise falls back to
/// the algebraic checks and records a warning.
ValidationReport validate(const GeneratorSet& g, std::size_t limit = kDefaultEnumerationLimit);

/// The r x 2n matrix whose i-th row is R(s_i).
ZdMatrix parity_matrix(std::span<const PauliOperator> operators);
inline ZdMatrix parity_matrix(const GeneratorSet& g) { return parity_matrix(g.generators()); }

/// |S| = #<R(S)>. Throws InvalidGroup unless the group is abelian with only
/// the trivial identity multiple.
Cardinality group_order(const GeneratorSet& g);

/// d^n / |S|, the dimension of the joint +1 eigenspace.
Cardinality stabilized_dimension(const GeneratorSet& g);

/// The element of <g> whose symplectic image is `image`, or nullopt if
/// `image` is not in <R(S)>. Unique for valid groups.
std::optional<PauliOperator> element_with_image(const GeneratorSet& g, const ZdVector& image);

/// Extends a valid group to order d^n. Candidates are scanned in lexicographic
/// order over Z_d^{2n}; a candidate v must commute with every generator and
/// lie outside <R(S)>, and is added with the first phase exponent in [0, d-1]
/// that keeps the extended group free of nontrivial identity multiples.
/// Throws InvalidGroup for invalid input and PhaseUnrealizable when no
/// candidate admits such a phase.
GeneratorSet extend_to_maximal(const GeneratorSet& g);

}  // namespace cwsmod
