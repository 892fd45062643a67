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

// Brute-force ground truth on the d^n-dimensional Hilbert space.
//
// Pauli operators become explicit complex matrices built from
// Z|k> = q_d^k |k>, X|k> = |k+1 mod d>; every verdict here is reached with
// dense linear algebra and never through the module calculus. Intended for
// d^n up to about a thousand.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cwsmod/cws.hpp"
#include "cwsmod/pauli.hpp"
#include "cwsmod/stabilizer.hpp"

namespace cwsmod::oracle {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr std::size_t kDefaultDimensionLimit = 1024;
/// Verdict-level checks (residuals, Knill-Laflamme entries).
inline constexpr double kVerdictTolerance = 1e-9;
/// Traces compared against integers.
inline constexpr double kTraceTolerance = 1e-6;
/// Algebraic identities between exactly generated matrices.
inline constexpr double kIdentityTolerance = 1e-12;

/// Row-major square complex matrix.
class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim);
  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator*=(Complex factor);
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

  DenseOperator adjoint() const;
  Complex trace() const;
  /// max |a_ij - b_ij|
  double max_abs_diff(const DenseOperator& other) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

StateVector apply_operator(const DenseOperator& a, const StateVector& v);
/// <a|b>
Complex inner(const StateVector& a, const StateVector& b);
double norm(const StateVector& v);

/// Number of vectors kept by modified Gram-Schmidt at the given tolerance.
std::size_t numerical_rank(const std::vector<StateVector>& vectors,
                           double tolerance = kVerdictTolerance);

/// max_v |P v - v|, i.e. how far the vectors are from the range of P.
double subspace_residual(const DenseOperator& projector, const std::vector<StateVector>& vectors);

/// q_d^k (Z^{z_0} X^{x_0}) ⊗ ... ⊗ (Z^{z_{n-1}} X^{x_{n-1}}); qudit 0 is the
/// most significant digit of the basis index. Throws LimitExceeded when
/// d^n > limit.
DenseOperator pauli_matrix(const PauliOperator& p, std::size_t limit = kDefaultDimensionLimit);

/// Projector onto the joint eigenspace where s_i has eigenvalue
/// q_d^{eigen_exponents[i]}: the product over generators of
/// (1/o_i) sum_{t < o_i} (q_d^{-alpha_i} s_i)^t with o_i the order of s_i.
/// A factor whose eigenvalue is not attainable contributes the zero matrix.
DenseOperator joint_projector(const GeneratorSet& g, const ZdVector& eigen_exponents,
                              std::size_t limit = kDefaultDimensionLimit);

/// (1/|H|) sum_{h in H} h for a listed group H without identity multiples.
DenseOperator group_projector(std::span<const PauliOperator> elements,
                              std::size_t limit = kDefaultDimensionLimit);

/// trace(joint +1 projector) agrees with d^n / |S| within kTraceTolerance.
bool verify_stabilized_dimension(const GeneratorSet& g, std::size_t limit = kDefaultDimensionLimit);

/// The unit vector fixed by a maximal group, with its first nonzero amplitude
/// made real positive. Throws InvalidGroup when the fixed space is not
/// one-dimensional.
StateVector stabilized_state(const GeneratorSet& g, std::size_t limit = kDefaultDimensionLimit);

/// {w_i |psi>}. Throws InvalidCode when the vectors have rank below K.
std::vector<StateVector> code_basis(const CWSCode& code,
                                    std::size_t limit = kDefaultDimensionLimit);

/// Builds C_S(W) from the enumerated group using matrix commutators, then
/// checks that its +1 eigenspace has dimension K and contains every basis
/// vector.
bool oracle_is_stabilizer(const CWSCode& code, std::size_t limit = kDefaultDimensionLimit);

/// Knill-Laflamme: E is detected iff [<w_i psi| E |w_j psi>] = c_E I.
std::vector<bool> oracle_detects(const CWSCode& code, const std::vector<PauliOperator>& errors,
                                 std::size_t limit = kDefaultDimensionLimit);

}  // namespace cwsmod::oracle
