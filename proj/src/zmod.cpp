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

#include "cwsmod/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cwsmod/errors.hpp"

namespace cwsmod {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw DimensionMismatch("operands use different moduli (" + std::to_string(a.value()) +
                            " vs " + std::to_string(b.value()) + ")");
  }
}

Cardinality checked_mul(Cardinality a, Cardinality b) {
  Cardinality out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("cardinality exceeds 64 bits");
  }
  return out;
}

// Hash for dense residue vectors used during module closure.
struct ResidueVectorHash {
  std::size_t operator()(const std::vector<Residue>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Residue r : v) {
      h ^= static_cast<std::size_t>(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Modulus

Modulus::Modulus(std::int64_t d) : d_(d) {
  if (d < 2 || d > kMaxModulus) {
    throw std::invalid_argument("modulus must satisfy 2 <= d <= 2^31, got " + std::to_string(d));
  }
}

Cardinality Modulus::cyclic_order(Residue a) const noexcept {
  return static_cast<Cardinality>(d_ / std::gcd(reduce(a), d_));
}

Cardinality Modulus::pow(std::size_t exponent) const {
  Cardinality out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out = checked_mul(out, static_cast<Cardinality>(d_));
  return out;
}

// ---------------------------------------------------------------------------
// ZdVector

ZdVector::ZdVector(Modulus modulus, std::size_t length)
    : modulus_(modulus), entries_(length, 0) {}

ZdVector::ZdVector(Modulus modulus, std::span<const std::int64_t> values)
    : modulus_(modulus), entries_(values.size()) {
  for (std::size_t i = 0; i < values.size(); ++i) entries_[i] = modulus_.reduce(values[i]);
}

ZdVector::ZdVector(Modulus modulus, std::initializer_list<std::int64_t> values)
    : ZdVector(modulus, std::span<const std::int64_t>(values.begin(), values.size())) {}

bool ZdVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue r) { return r == 0; });
}

ZdVector& ZdVector::operator+=(const ZdVector& other) {
  require_same(modulus_, other.modulus_);
  if (size() != other.size()) throw DimensionMismatch("vector lengths differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = modulus_.add(entries_[i], other.entries_[i]);
  }
  return *this;
}

ZdVector& ZdVector::operator-=(const ZdVector& other) {
  require_same(modulus_, other.modulus_);
  if (size() != other.size()) throw DimensionMismatch("vector lengths differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = modulus_.sub(entries_[i], other.entries_[i]);
  }
  return *this;
}

ZdVector ZdVector::operator-() const { return scaled(-1); }

ZdVector ZdVector::scaled(std::int64_t factor) const {
  ZdVector out = *this;
  const Residue f = modulus_.reduce(factor);
  for (auto& e : out.entries_) e = modulus_.mul(e, f);
  return out;
}

Residue dot(const ZdVector& a, const ZdVector& b) {
  require_same(a.modulus(), b.modulus());
  if (a.size() != b.size()) throw DimensionMismatch("dot product of unequal lengths");
  const Modulus& m = a.modulus();
  Residue acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = m.add(acc, m.mul(a[i], b[i]));
  return acc;
}

ZdVector concat(const ZdVector& a, const ZdVector& b) {
  require_same(a.modulus(), b.modulus());
  ZdVector out(a.modulus(), a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b[i]);
  return out;
}

ZdVector slice(const ZdVector& v, std::size_t begin, std::size_t count) {
  if (begin + count > v.size()) throw DimensionMismatch("slice out of range");
  ZdVector out(v.modulus(), count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, v[begin + i]);
  return out;
}

std::string to_string(const ZdVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

std::string to_compact_string(const ZdVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << v[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// ZdMatrix

ZdMatrix::ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

ZdMatrix::ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols,
                   std::span<const std::int64_t> row_major)
    : ZdMatrix(modulus, rows, cols) {
  if (row_major.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = modulus_.reduce(row_major[i]);
}

ZdMatrix::ZdMatrix(Modulus modulus, std::size_t rows, std::size_t cols,
                   std::initializer_list<std::int64_t> row_major)
    : ZdMatrix(modulus, rows, cols,
               std::span<const std::int64_t>(row_major.begin(), row_major.size())) {}

ZdMatrix ZdMatrix::from_rows(Modulus modulus, std::size_t cols, std::span<const ZdVector> rows) {
  ZdMatrix out(modulus, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same(modulus, rows[i].modulus());
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) out.entries_[i * cols + j] = rows[i][j];
  }
  return out;
}

ZdMatrix ZdMatrix::identity(Modulus modulus, std::size_t n) {
  ZdMatrix out(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1;
  return out;
}

ZdVector ZdMatrix::row(std::size_t i) const {
  ZdVector out(modulus_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.set(j, at(i, j));
  return out;
}

ZdVector ZdMatrix::column(std::size_t j) const {
  ZdVector out(modulus_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, at(i, j));
  return out;
}

std::vector<ZdVector> ZdMatrix::row_list() const {
  std::vector<ZdVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

bool ZdMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue r) { return r == 0; });
}

ZdMatrix transpose(const ZdMatrix& a) {
  ZdMatrix out(a.modulus(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
  }
  return out;
}

ZdMatrix operator*(const ZdMatrix& a, const ZdMatrix& b) {
  require_same(a.modulus(), b.modulus());
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes do not chain");
  const Modulus& m = a.modulus();
  ZdMatrix out(m, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Residue acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = m.add(acc, m.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, acc);
    }
  }
  return out;
}

ZdVector operator*(const ZdVector& x, const ZdMatrix& a) {
  require_same(x.modulus(), a.modulus());
  if (x.size() != a.rows()) throw DimensionMismatch("row vector length differs from row count");
  const Modulus& m = a.modulus();
  ZdVector out(m, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Residue acc = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) acc = m.add(acc, m.mul(x[i], a.at(i, j)));
    out.set(j, acc);
  }
  return out;
}

ZdVector operator*(const ZdMatrix& a, const ZdVector& x) {
  require_same(x.modulus(), a.modulus());
  if (x.size() != a.cols()) throw DimensionMismatch("column vector length differs from column count");
  const Modulus& m = a.modulus();
  ZdVector out(m, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Residue acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = m.add(acc, m.mul(a.at(i, j), x[j]));
    out.set(i, acc);
  }
  return out;
}

ZdMatrix symplectic_form(Modulus modulus, std::size_t n) {
  ZdMatrix out(modulus, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, n + i, 1);
    out.set(n + i, i, -1);
  }
  return out;
}

ZdMatrix stack(const ZdMatrix& a, const ZdMatrix& b) {
  require_same(a.modulus(), b.modulus());
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("cannot stack matrices with " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.cols()) + " columns");
  }
  ZdMatrix out(a.modulus(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  }
  return out;
}

std::string format_matrix(const ZdMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << '\n';
    os << to_string(a.row(i));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Elementary operations

EuclidStep euclid_step(const Modulus& modulus, Residue a, Residue b) {
  const std::int64_t d = modulus.value();
  if (a <= 0 || a >= d) throw std::invalid_argument("euclid_step: a must lie in [1, d-1]");
  if (b < 0 || b >= d) throw std::invalid_argument("euclid_step: b must lie in [0, d-1]");
  // b = a q' + r over the integers, hence r = a (d - q') + b mod d.
  const std::int64_t q_prime = b / a;
  const std::int64_t r = b % a;
  return {modulus.reduce(d - q_prime), r};
}

void apply_entry_op(ZdVector& v, const ElementaryOp& op) {
  if (op.target >= v.size() || op.source >= v.size()) throw DimensionMismatch("op index out of range");
  if (op.kind == OpKind::kSwap) {
    const Residue t = v[op.target];
    v.set(op.target, v[op.source]);
    v.set(op.source, t);
  } else {
    const Modulus& m = v.modulus();
    v.set(op.target, m.add(v[op.target], m.mul(op.factor, v[op.source])));
  }
}

void apply_row_op(ZdMatrix& mat, const ElementaryOp& op) {
  if (op.target >= mat.rows() || op.source >= mat.rows()) throw DimensionMismatch("row op out of range");
  const Modulus& m = mat.modulus();
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    if (op.kind == OpKind::kSwap) {
      const Residue t = mat.at(op.target, j);
      mat.set(op.target, j, mat.at(op.source, j));
      mat.set(op.source, j, t);
    } else {
      mat.set(op.target, j, m.add(mat.at(op.target, j), m.mul(op.factor, mat.at(op.source, j))));
    }
  }
}

void apply_column_op(ZdMatrix& mat, const ElementaryOp& op) {
  if (op.target >= mat.cols() || op.source >= mat.cols()) {
    throw DimensionMismatch("column op out of range");
  }
  const Modulus& m = mat.modulus();
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    if (op.kind == OpKind::kSwap) {
      const Residue t = mat.at(i, op.target);
      mat.set(i, op.target, mat.at(i, op.source));
      mat.set(i, op.source, t);
    } else {
      mat.set(i, op.target, m.add(mat.at(i, op.target), m.mul(op.factor, mat.at(i, op.source))));
    }
  }
}

VectorReduction reduce_vector(const ZdVector& v) {
  if (v.is_zero()) throw std::invalid_argument("reduce_vector: zero vector has no pivot");
  VectorReduction out{v, {}};
  ZdVector& w = out.reduced;
  const Modulus& m = w.modulus();
  for (;;) {
    std::size_t pivot = 0;
    Residue least = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0 && (least == 0 || w[i] < least)) {
        least = w[i];
        pivot = i;
      }
    }
    if (pivot != 0) {
      const ElementaryOp swap{OpKind::kSwap, 0, pivot, 0};
      apply_entry_op(w, swap);
      out.ops.push_back(swap);
    }
    bool tail_zero = true;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      const EuclidStep step = euclid_step(m, w[0], w[i]);
      const ElementaryOp add{OpKind::kAddMultiple, i, 0, step.quotient};
      apply_entry_op(w, add);
      out.ops.push_back(add);
      if (w[i] != 0) tail_zero = false;
    }
    if (tail_zero) return out;
  }
}

ZdVector replay(ZdVector v, std::span<const ElementaryOp> ops) {
  for (const auto& op : ops) apply_entry_op(v, op);
  return v;
}

Diagonalization diagonalize(const ZdMatrix& t) {
  Diagonalization out{t, {}, {}};
  ZdMatrix& a = out.diagonal;
  const Modulus& m = a.modulus();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  auto row_op = [&](ElementaryOp op) {
    apply_row_op(a, op);
    out.row_ops.push_back(op);
  };
  auto col_op = [&](ElementaryOp op) {
    apply_column_op(a, op);
    out.column_ops.push_back(op);
  };

  for (std::size_t p = 0; p < std::min(rows, cols); ++p) {
    // If row p and column p (within the trailing block) are entirely zero,
    // bring the smallest nonzero entry of the block to (p, p).
    bool cross_empty = true;
    for (std::size_t j = p; j < cols && cross_empty; ++j) cross_empty = a.at(p, j) == 0;
    for (std::size_t i = p; i < rows && cross_empty; ++i) cross_empty = a.at(i, p) == 0;
    if (cross_empty) {
      std::size_t bi = rows, bj = cols;
      Residue least = 0;
      for (std::size_t i = p; i < rows; ++i) {
        for (std::size_t j = p; j < cols; ++j) {
          const Residue v = a.at(i, j);
          if (v != 0 && (least == 0 || v < least)) {
            least = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (least == 0) break;  // trailing block is zero
      if (bi != p) row_op({OpKind::kSwap, p, bi, 0});
      if (bj != p) col_op({OpKind::kSwap, p, bj, 0});
    }

    for (;;) {
      // Smallest nonzero value across row p and column p, lowest index first
      // (row entries are scanned before column entries).
      Residue least = 0;
      bool in_row = true;
      std::size_t where = p;
      for (std::size_t j = p; j < cols; ++j) {
        const Residue v = a.at(p, j);
        if (v != 0 && (least == 0 || v < least)) {
          least = v;
          in_row = true;
          where = j;
        }
      }
      for (std::size_t i = p + 1; i < rows; ++i) {
        const Residue v = a.at(i, p);
        if (v != 0 && (least == 0 || v < least)) {
          least = v;
          in_row = false;
          where = i;
        }
      }
      if (where != p) {
        if (in_row) {
          col_op({OpKind::kSwap, p, where, 0});
        } else {
          row_op({OpKind::kSwap, p, where, 0});
        }
      }

      const Residue pivot = a.at(p, p);
      bool clear = true;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (a.at(p, j) == 0) continue;
        const EuclidStep step = euclid_step(m, pivot, a.at(p, j));
        col_op({OpKind::kAddMultiple, j, p, step.quotient});
        if (a.at(p, j) != 0) clear = false;
      }
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a.at(i, p) == 0) continue;
        const EuclidStep step = euclid_step(m, pivot, a.at(i, p));
        row_op({OpKind::kAddMultiple, i, p, step.quotient});
        if (a.at(i, p) != 0) clear = false;
      }
      if (clear) break;
    }
  }
  return out;
}

ZdMatrix replay(ZdMatrix m, std::span<const ElementaryOp> row_ops,
                std::span<const ElementaryOp> column_ops) {
  for (const auto& op : row_ops) apply_row_op(m, op);
  for (const auto& op : column_ops) apply_column_op(m, op);
  return m;
}

ZdMatrix row_transform(const Modulus& modulus, std::size_t rows,
                       std::span<const ElementaryOp> row_ops) {
  ZdMatrix u = ZdMatrix::identity(modulus, rows);
  for (const auto& op : row_ops) apply_row_op(u, op);
  return u;
}

ZdMatrix column_transform(const Modulus& modulus, std::size_t cols,
                          std::span<const ElementaryOp> column_ops) {
  ZdMatrix v = ZdMatrix::identity(modulus, cols);
  for (const auto& op : column_ops) apply_column_op(v, op);
  return v;
}

// ---------------------------------------------------------------------------
// Cardinalities

Cardinality row_module_cardinality(const ZdMatrix& t) {
  const ZdMatrix d = diagonalize(t).diagonal;
  Cardinality out = 1;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    out = checked_mul(out, d.modulus().cyclic_order(d.at(i, i)));
  }
  return out;
}

Cardinality image_cardinality(const ZdMatrix& t) { return row_module_cardinality(transpose(t)); }

Cardinality kernel_cardinality(const ZdMatrix& t) {
  return t.modulus().pow(t.cols()) / image_cardinality(t);
}

Cardinality intersection_cardinality(const ZdMatrix& a, const ZdMatrix& b) {
  const Cardinality sum = row_module_cardinality(stack(a, b));
  // #<A> #<B> can overflow even when the quotient fits; divide first.
  const Cardinality ca = row_module_cardinality(a);
  const Cardinality cb = row_module_cardinality(b);
  const Cardinality g = std::gcd(ca, sum);
  return (ca / g) * (cb / (sum / g));
}

std::optional<ZdVector> solve_row(const ZdMatrix& a, const ZdVector& b) {
  if (!(a.modulus() == b.modulus())) throw DimensionMismatch("solve_row: moduli differ");
  if (b.size() != a.cols()) throw DimensionMismatch("solve_row: rhs length differs from column count");
  const Modulus& m = a.modulus();
  const std::int64_t d = m.value();
  const Diagonalization diag = diagonalize(a);
  // x A = b  <=>  (x U^{-1}) D = b V  with D = U A V.
  const ZdMatrix u = row_transform(m, a.rows(), diag.row_ops);
  const ZdMatrix v = column_transform(m, a.cols(), diag.column_ops);
  const ZdVector target = b * v;

  ZdVector y(m, a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Residue c = target[j];
    const Residue pivot = j < a.rows() ? diag.diagonal.at(j, j) : 0;
    if (pivot == 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    // Solve y_j * pivot = c (mod d).
    const std::int64_t g = std::gcd(pivot, d);
    if (c % g != 0) return std::nullopt;
    const std::int64_t reduced_mod = d / g;
    const std::int64_t a_red = (pivot / g) % reduced_mod;
    const std::int64_t c_red = (c / g) % reduced_mod;
    std::int64_t inverse = 0;
    if (reduced_mod > 1) {
      // Extended Euclid for a_red^{-1} mod reduced_mod.
      std::int64_t r0 = reduced_mod, r1 = a_red, s0 = 0, s1 = 1;
      while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      }
      inverse = ((s0 % reduced_mod) + reduced_mod) % reduced_mod;
    }
    const std::int64_t sol = reduced_mod > 1 ? (c_red * inverse) % reduced_mod : 0;
    y.set(j, sol);
  }
  ZdVector x = y * u;
  if (!(x * a == b)) return std::nullopt;
  return x;
}

std::vector<ZdVector> enumerate_row_module(const ZdMatrix& t, std::size_t limit) {
  const Modulus& m = t.modulus();
  const std::size_t cols = t.cols();
  // <T> = sum of the cyclic modules <row_i>; fold them in one at a time.
  std::vector<std::vector<Residue>> elements{std::vector<Residue>(cols, 0)};
  std::unordered_set<std::vector<Residue>, ResidueVectorHash> seen(elements.begin(), elements.end());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const ZdVector g = t.row(i);
    if (g.is_zero()) continue;
    const std::size_t base = elements.size();
    for (std::size_t e = 0; e < base; ++e) {
      std::vector<Residue> cur = elements[e];
      for (;;) {
        for (std::size_t j = 0; j < cols; ++j) cur[j] = m.add(cur[j], g[j]);
        if (!seen.insert(cur).second) break;
        elements.push_back(cur);
        if (elements.size() > limit) {
          throw LimitExceeded("row-module enumeration exceeded limit of " + std::to_string(limit));
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  std::vector<ZdVector> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.emplace_back(m, std::span<const std::int64_t>(e));
  return out;
}

}  // namespace cwsmod
