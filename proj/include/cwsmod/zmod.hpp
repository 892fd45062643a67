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

// Exact linear algebra over the ring Z_d (d >= 2, prime or composite).
//
// A ZdMatrix is read two ways: as a list of generators for its row-module
// <T> and as the module homomorphism x -> T x acting on column vectors, whose
// image Im(T) is the column-module. Cardinalities of both are computed from a
// diagonal form reached by elementary operations (row/column swaps and adding
// a Z_d multiple of one row/column to another), which preserve both.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwsmod {

using Residue = std::int64_t;
using Cardinality = std::uint64_t;

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

class Modulus {
 public:
  /// Throws std::invalid_argument unless 2 <= d <= 2^31.
  explicit Modulus(std::int64_t d);

  std::int64_t value() const noexcept { return d_; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % d_;
    return r < 0 ? r + d_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }

  /// Size of the cyclic submodule <a> of Z_d, i.e. d / gcd(a, d).
  Cardinality cyclic_order(Residue a) const noexcept;

  /// d^exponent; throws std::overflow_error past 64 bits.
  Cardinality pow(std::size_t exponent) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t d_;
};

class ZdVector {
 public:
  /// Zero vector.
  ZdVector(Modulus modulus, std::size_t length);
  /// Entries are reduced into [0, d-1].
  ZdVector(Modulus modulus, std::span<const std::int64_t> values);
  ZdVector(Modulus modulus, std::initializer_list<std::int64_t> values);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, std::int64_t value) { entries_[i] = modulus_.reduce(value); }
  std::span<const Residue> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  ZdVector& operator+=(const ZdVector& other);
  ZdVector& operator-=(const ZdVector& other);
  friend ZdVector operator+(ZdVector a, const ZdVector& b) { return a += b; }
  friend ZdVector operator-(ZdVector a, const ZdVector& b) { return a -= b; }
  ZdVector operator-() const;
  ZdVector scaled(std::int64_t factor) const;

  friend bool operator==(const ZdVector& a, const ZdVector& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on entries; only meaningful for equal moduli.
  friend std::strong_ordering operator<=>(const ZdVector& a, const ZdVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Modulus modulus_;
  std::vector<Residue> entries_;
};

/// Sum of products mod d. Throws DimensionMismatch on length/modulus mismatch.
Residue dot(const ZdVector& a, const ZdVector& b);
ZdVector concat(const ZdVector& a, const ZdVector& b);
ZdVector slice(const ZdVector& v, std::size_t begin, std::size_t count);
/// Space-separated residues, e.g. "1 0 2".
std::string to_string(const ZdVector& v);
/// Concatenated digits, e.g. "102"; only unambiguous for d <= 10.
std::string to_compact_string(const ZdVector& v);

class ZdMatrix {
 public:
  ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols);
  ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols,
           std::span<const std::int64_t> row_major);
  ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols,
           std::initializer_list<std::int64_t> row_major);

  static ZdMatrix from_rows(Modulus modulus, std::size_t cols, std::span<const ZdVector> rows);
  static ZdMatrix identity(Modulus modulus, std::size_t n);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value) {
    entries_[i * cols_ + j] = modulus_.reduce(value);
  }
  ZdVector row(std::size_t i) const;
  ZdVector column(std::size_t j) const;
  std::vector<ZdVector> row_list() const;
  bool is_zero() const noexcept;

  friend bool operator==(const ZdMatrix&, const ZdMatrix&) = default;

 private:
  Modulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

ZdMatrix transpose(const ZdMatrix& a);
ZdMatrix operator*(const ZdMatrix& a, const ZdMatrix& b);
/// Row vector times matrix: x A.
ZdVector operator*(const ZdVector& x, const ZdMatrix& a);
/// Matrix times column vector: A x.
ZdVector operator*(const ZdMatrix& a, const ZdVector& x);

/// The 2n x 2n symplectic form [[0, I], [-I, 0]].
ZdMatrix symplectic_form(Modulus modulus, std::size_t n);

/// Rows of `a` followed by rows of `b`. Throws DimensionMismatch if the
/// column counts or moduli differ.
ZdMatrix stack(const ZdMatrix& a, const ZdMatrix& b);

/// Rows as space-separated residues, one row per line, no trailing newline.
std::string format_matrix(const ZdMatrix& a);

// ---------------------------------------------------------------------------
// Elementary operations

struct EuclidStep {
  Residue quotient;
  Residue remainder;
};

/// Returns (q, r) with r = (a q + b) mod d and 0 <= r < a. Throws
/// std::invalid_argument when a == 0 or an operand lies outside [0, d-1].
EuclidStep euclid_step(const Modulus& modulus, Residue a, Residue b);

enum class OpKind { kSwap, kAddMultiple };

/// kSwap exchanges `target` and `source`; kAddMultiple performs
/// target <- target + factor * source.
struct ElementaryOp {
  OpKind kind;
  std::size_t target;
  std::size_t source;
  Residue factor = 0;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

void apply_entry_op(ZdVector& v, const ElementaryOp& op);
void apply_row_op(ZdMatrix& m, const ElementaryOp& op);
void apply_column_op(ZdMatrix& m, const ElementaryOp& op);

struct VectorReduction {
  ZdVector reduced;
  std::vector<ElementaryOp> ops;
};

/// Moves all of v's content into its first entry with entry-wise elementary
/// operations. Each round swaps the smallest nonzero entry (lowest index on
/// ties) to the front and replaces every other entry with its remainder
/// against it, so the leading value strictly decreases until the tail is
/// zero. Throws std::invalid_argument for the zero vector.
VectorReduction reduce_vector(const ZdVector& v);

ZdVector replay(ZdVector v, std::span<const ElementaryOp> ops);

struct Diagonalization {
  ZdMatrix diagonal;
  std::vector<ElementaryOp> row_ops;
  std::vector<ElementaryOp> column_ops;
};

/// Reduces T to a matrix whose nonzero entries all sit on positions (i, i).
/// Not a Smith form: the diagonal carries no divisibility chain.
Diagonalization diagonalize(const ZdMatrix& t);

/// Applies the row operations then the column operations. Row and column
/// operations commute, so this reproduces `diagonalize` exactly.
ZdMatrix replay(ZdMatrix m, std::span<const ElementaryOp> row_ops,
                std::span<const ElementaryOp> column_ops);

/// Left multiplier U (rows x rows) with U T V = D, built from the row log.
ZdMatrix row_transform(const Modulus& modulus, std::size_t rows,
                       std::span<const ElementaryOp> row_ops);
/// Right multiplier V (cols x cols) with U T V = D, built from the column log.
ZdMatrix column_transform(const Modulus& modulus, std::size_t cols,
                          std::span<const ElementaryOp> column_ops);

// ---------------------------------------------------------------------------
// Cardinalities

/// #<T>, the product of d / gcd(a, d) over the diagonal of diagonalize(T).
Cardinality row_module_cardinality(const ZdMatrix& t);
/// #Im(T) for T acting on column vectors; always equals #<T>.
Cardinality image_cardinality(const ZdMatrix& t);
/// #Ker(T) = d^cols / #Im(T).
Cardinality kernel_cardinality(const ZdMatrix& t);
/// #(<A> ∩ <B>) = #<A> #<B> / #<[A; B]>.
Cardinality intersection_cardinality(const ZdMatrix& a, const ZdMatrix& b);

/// Some x with x A = b, or nullopt when b is not in <A>.
std::optional<ZdVector> solve_row(const ZdMatrix& a, const ZdVector& b);

/// The exact row-module <T>, sorted lexicographically. Throws LimitExceeded
/// once more than `limit` elements have been produced.
std::vector<ZdVector> enumerate_row_module(const ZdMatrix& t,
                                           std::size_t limit = kDefaultEnumerationLimit);

}  // namespace cwsmod
