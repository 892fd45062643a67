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

#include "cwsmod/kernels.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "cwsmod/errors.hpp"

namespace cwsmod::kernels {

namespace {

std::int64_t checked_space(const Modulus& m, std::size_t exponent, std::size_t limit,
                           const char* what) {
  Cardinality size = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    size *= static_cast<Cardinality>(m.value());
    if (size > limit) {
      throw LimitExceeded(std::string(what) + " has more than " + std::to_string(limit) +
                          " points");
    }
  }
  return static_cast<std::int64_t>(size);
}

// Image of the input with base-d index `x` (little-endian digits), encoded as
// a base-d index over the rows.
std::int64_t image_index(const ZdMatrix& t, std::int64_t x, std::vector<Residue>& digits) {
  const std::int64_t d = t.modulus().value();
  for (std::size_t j = 0; j < t.cols(); ++j) {
    digits[j] = x % d;
    x /= d;
  }
  std::int64_t index = 0;
  for (std::size_t i = t.rows(); i-- > 0;) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < t.cols(); ++j) acc = (acc + t.at(i, j) * digits[j]) % d;
    index = index * d + acc;
  }
  return index;
}

}  // namespace

Cardinality count_image(const ZdMatrix& t, std::size_t limit) {
  const std::int64_t inputs = checked_space(t.modulus(), t.cols(), limit, "input space");
  const std::int64_t outputs = checked_space(t.modulus(), t.rows(), limit, "output space");
  std::vector<unsigned char> hit(static_cast<std::size_t>(outputs), 0);

#pragma omp parallel
  {
    std::vector<Residue> digits(t.cols());
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < inputs; ++x) {
      std::atomic_ref<unsigned char>(hit[image_index(t, x, digits)])
          .store(1, std::memory_order_relaxed);
    }
  }

  std::int64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t y = 0; y < outputs; ++y) count += hit[y];
  return static_cast<Cardinality>(count);
}

Cardinality count_kernel(const ZdMatrix& t, std::size_t limit) {
  const std::int64_t inputs = checked_space(t.modulus(), t.cols(), limit, "input space");
  std::int64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<Residue> digits(t.cols());
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < inputs; ++x) {
      if (image_index(t, x, digits) == 0) ++count;
    }
  }
  return static_cast<Cardinality>(count);
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t dim) {
  const auto n = static_cast<std::int64_t>(dim);
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  Complex* po = out.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::int64_t k = 0; k < n; ++k) acc += pa[i * n + k] * pb[k * n + j];
      po[i * n + j] = acc;
    }
  }
}

void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y,
            std::size_t dim) {
  const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::int64_t k = 0; k < n; ++k) acc += a[i * n + k] * x[k];
    y[i] = acc;
  }
}

namespace serial {

Cardinality count_image(const ZdMatrix& t, std::size_t limit) {
  const std::int64_t inputs = checked_space(t.modulus(), t.cols(), limit, "input space");
  const std::int64_t outputs = checked_space(t.modulus(), t.rows(), limit, "output space");
  std::vector<bool> hit(static_cast<std::size_t>(outputs), false);
  std::vector<Residue> digits(t.cols());
  Cardinality count = 0;
  for (std::int64_t x = 0; x < inputs; ++x) {
    auto slot = hit[image_index(t, x, digits)];
    if (!slot) {
      slot = true;
      ++count;
    }
  }
  return count;
}

Cardinality count_kernel(const ZdMatrix& t, std::size_t limit) {
  const std::int64_t inputs = checked_space(t.modulus(), t.cols(), limit, "input space");
  std::vector<Residue> digits(t.cols());
  Cardinality count = 0;
  for (std::int64_t x = 0; x < inputs; ++x) {
    if (image_index(t, x, digits) == 0) ++count;
  }
  return count;
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * b[k * dim + j];
      out[i * dim + j] = acc;
    }
  }
}

void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y,
            std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) acc += a[i * dim + k] * x[k];
    y[i] = acc;
  }
}

}  // namespace serial

}  // namespace cwsmod::kernels
