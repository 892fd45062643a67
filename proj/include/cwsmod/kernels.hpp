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

// Data-parallel brute-force kernels. Each has an OpenMP implementation in
// `cwsmod::kernels` and a plain loop in `cwsmod::kernels::serial` that the
// tests hold it to and the benchmarks compare it against.

#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "cwsmod/zmod.hpp"

namespace cwsmod::kernels {

using Complex = std::complex<double>;

/// #{T x : x in Z_d^cols} by visiting every input. Throws LimitExceeded when
/// d^cols or d^rows exceeds `limit`.
Cardinality count_image(const ZdMatrix& t, std::size_t limit = kDefaultEnumerationLimit);

/// #{x in Z_d^cols : T x = 0} by visiting every input.
Cardinality count_kernel(const ZdMatrix& t, std::size_t limit = kDefaultEnumerationLimit);

/// out = a * b for row-major dim x dim complex matrices. `out` must not alias.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t dim);

/// y = a x for a row-major dim x dim matrix.
void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y,
            std::size_t dim);

namespace serial {

Cardinality count_image(const ZdMatrix& t, std::size_t limit = kDefaultEnumerationLimit);
Cardinality count_kernel(const ZdMatrix& t, std::size_t limit = kDefaultEnumerationLimit);
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t dim);
void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y,
            std::size_t dim);

}  // namespace serial

}  // namespace cwsmod::kernels
