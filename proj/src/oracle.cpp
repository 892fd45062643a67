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

#include "cwsmod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cwsmod/errors.hpp"
#include "cwsmod/kernels.hpp"

namespace cwsmod::oracle {

namespace {

std::size_t hilbert_dimension(const Modulus& m, std::size_t n, std::size_t limit) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(m.value());
    if (dim > limit) {
      throw LimitExceeded("Hilbert space dimension exceeds oracle limit " + std::to_string(limit));
    }
  }
  return dim;
}

Complex root_of_unity(std::int64_t k, std::int64_t d) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(((k % d) + d) % d) /
                       static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("dense operators of different dimension");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex factor) {
  for (auto& v : data_) v *= factor;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("dense operators of different dimension");
  DenseOperator out(a.dim_);
  kernels::matmul(a.data_, b.data_, out.data_, a.dim_);
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex DenseOperator::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("dense operators of different dimension");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

StateVector apply_operator(const DenseOperator& a, const StateVector& v) {
  if (v.size() != a.dim()) throw DimensionMismatch("state and operator dimensions differ");
  StateVector out(v.size());
  kernels::matvec(a.data(), v, out, a.dim());
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("state dimensions differ");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const StateVector& v) { return std::sqrt(std::abs(inner(v, v))); }

std::size_t numerical_rank(const std::vector<StateVector>& vectors, double tolerance) {
  std::vector<StateVector> basis;
  for (StateVector v : vectors) {
    for (const auto& b : basis) {
      const Complex c = inner(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    const double len = norm(v);
    if (len <= tolerance) continue;
    for (auto& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  return basis.size();
}

double subspace_residual(const DenseOperator& projector, const std::vector<StateVector>& vectors) {
  double worst = 0.0;
  for (const auto& v : vectors) {
    StateVector pv = apply_operator(projector, v);
    for (std::size_t i = 0; i < v.size(); ++i) pv[i] -= v[i];
    worst = std::max(worst, norm(pv));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Pauli matrices and projectors

DenseOperator pauli_matrix(const PauliOperator& p, std::size_t limit) {
  const std::int64_t d = p.modulus().value();
  const std::size_t n = p.num_qudits();
  const std::size_t dim = hilbert_dimension(p.modulus(), n, limit);
  DenseOperator out(dim);
  std::vector<std::int64_t> digits(n);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rest = col;
    for (std::size_t q = n; q-- > 0;) {
      digits[q] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    // Z^z X^x |k> = q^{z (k + x)} |k + x>
    std::int64_t exponent = p.phase_exponent();
    std::size_t row = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::int64_t shifted = (digits[q] + p.x()[q]) % d;
      exponent += p.z()[q] * shifted;
      row = row * static_cast<std::size_t>(d) + static_cast<std::size_t>(shifted);
    }
    out(row, col) = root_of_unity(exponent, d);
  }
  return out;
}

DenseOperator joint_projector(const GeneratorSet& g, const ZdVector& eigen_exponents,
                              std::size_t limit) {
  if (eigen_exponents.size() != g.size()) {
    throw DimensionMismatch("one eigenvalue exponent per generator expected");
  }
  const std::int64_t d = g.modulus().value();
  const std::size_t dim = hilbert_dimension(g.modulus(), g.num_qudits(), limit);
  const DenseOperator id = DenseOperator::identity(dim);
  DenseOperator result = id;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::uint64_t o = order(g[i]).order;
    DenseOperator shifted = pauli_matrix(g[i], limit);
    shifted *= root_of_unity(-eigen_exponents[i], d);
    DenseOperator sum = id;
    DenseOperator term = id;
    for (std::uint64_t t = 1; t < o; ++t) {
      term = term * shifted;
      sum += term;
    }
    // (q^{-alpha} s)^o must be I for q^alpha to be an eigenvalue.
    if ((term * shifted).max_abs_diff(id) > kVerdictTolerance) return DenseOperator(dim);
    sum *= 1.0 / static_cast<double>(o);
    result = result * sum;
  }
  return result;
}

DenseOperator group_projector(std::span<const PauliOperator> elements, std::size_t limit) {
  if (elements.empty()) throw std::invalid_argument("group_projector of an empty group");
  const std::size_t dim =
      hilbert_dimension(elements.front().modulus(), elements.front().num_qudits(), limit);
  DenseOperator sum(dim);
  for (const auto& h : elements) sum += pauli_matrix(h, limit);
  sum *= 1.0 / static_cast<double>(elements.size());
  return sum;
}

bool verify_stabilized_dimension(const GeneratorSet& g, std::size_t limit) {
  const DenseOperator p = joint_projector(g, ZdVector(g.modulus(), g.size()), limit);
  const double expected = static_cast<double>(stabilized_dimension(g));
  return std::abs(p.trace() - Complex(expected, 0.0)) < kTraceTolerance;
}

StateVector stabilized_state(const GeneratorSet& g, std::size_t limit) {
  const DenseOperator p = joint_projector(g, ZdVector(g.modulus(), g.size()), limit);
  const Complex tr = p.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw InvalidGroup("fixed space has dimension " + std::to_string(tr.real()) + ", not 1");
  }
  // Pivot column: the one with the largest norm.
  const std::size_t dim = p.dim();
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < dim; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < dim; ++i) col += std::norm(p(i, j));
    if (col > best) {
      best = col;
      pivot = j;
    }
  }
  StateVector psi(dim);
  for (std::size_t i = 0; i < dim; ++i) psi[i] = p(i, pivot);
  const double len = norm(psi);
  for (auto& a : psi) a /= len;
  for (const auto& a : psi) {
    if (std::abs(a) > kVerdictTolerance) {
      const Complex phase = std::conj(a) / std::abs(a);
      for (auto& b : psi) b *= phase;
      break;
    }
  }
  return psi;
}

std::vector<StateVector> code_basis(const CWSCode& code, std::size_t limit) {
  const StateVector psi = stabilized_state(code.stabilizer(), limit);
  std::vector<StateVector> basis;
  basis.reserve(code.dimension());
  for (const auto& w : code.codewords()) basis.push_back(apply_operator(pauli_matrix(w, limit), psi));
  if (numerical_rank(basis) < code.dimension()) {
    throw InvalidCode("codeword states are linearly dependent");
  }
  return basis;
}

bool oracle_is_stabilizer(const CWSCode& code, std::size_t limit) {
  const std::vector<StateVector> basis = code_basis(code, limit);
  std::vector<DenseOperator> w_mats;
  for (const auto& w : code.codewords()) w_mats.push_back(pauli_matrix(w, limit));

  const EnumeratedGroup group = enumerate_group(code.stabilizer());
  std::vector<PauliOperator> centralizer;
  for (const auto& g : group.elements) {
    const DenseOperator gm = pauli_matrix(g, limit);
    const bool central = std::all_of(w_mats.begin(), w_mats.end(), [&](const DenseOperator& wm) {
      return (gm * wm).max_abs_diff(wm * gm) < kVerdictTolerance;
    });
    if (central) centralizer.push_back(g);
  }
  const DenseOperator proj = group_projector(centralizer, limit);
  const double fixed_dim = proj.trace().real();
  return std::abs(fixed_dim - static_cast<double>(code.dimension())) < kTraceTolerance &&
         subspace_residual(proj, basis) < kVerdictTolerance;
}

std::vector<bool> oracle_detects(const CWSCode& code, const std::vector<PauliOperator>& errors,
                                 std::size_t limit) {
  const std::vector<StateVector> basis = code_basis(code, limit);
  std::vector<bool> out;
  out.reserve(errors.size());
  for (const auto& e : errors) {
    const DenseOperator em = pauli_matrix(e, limit);
    std::vector<StateVector> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(apply_operator(em, b));
    const Complex c = inner(basis[0], images[0]);
    bool detected = true;
    for (std::size_t i = 0; i < basis.size() && detected; ++i) {
      for (std::size_t j = 0; j < basis.size() && detected; ++j) {
        const Complex expected = i == j ? c : Complex(0.0, 0.0);
        detected = std::abs(inner(basis[i], images[j]) - expected) < kVerdictTolerance;
      }
    }
    out.push_back(detected);
  }
  return out;
}

}  // namespace cwsmod::oracle
