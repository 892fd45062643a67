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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "cwsmod/kernels.hpp"

using namespace cwsmod;

namespace {

ZdMatrix random_matrix(std::int64_t d, std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> entry(0, d - 1);
  ZdMatrix m(Modulus(d), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entry(rng));
  }
  return m;
}

std::vector<kernels::Complex> random_dense(std::size_t count) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  std::vector<kernels::Complex> out(count);
  for (auto& v : out) v = {g(rng), g(rng)};
  return out;
}

template <Cardinality (*F)(const ZdMatrix&, std::size_t)>
void bm_count(benchmark::State& state) {
  const ZdMatrix t = random_matrix(state.range(0), 6, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(F(t, 100'000'000));
}

template <void (*F)(std::span<const kernels::Complex>, std::span<const kernels::Complex>,
                    std::span<kernels::Complex>, std::size_t)>
void bm_matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(dim * dim);
  const auto b = random_dense(dim * dim);
  std::vector<kernels::Complex> out(dim * dim);
  for (auto _ : state) {
    F(a, b, out, dim);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(bm_count<kernels::serial::count_image>)->Name("count_image/serial")->Args({3, 9})->Args({5, 7});
BENCHMARK(bm_count<kernels::count_image>)->Name("count_image/omp")->Args({3, 9})->Args({5, 7});
BENCHMARK(bm_count<kernels::serial::count_kernel>)->Name("count_kernel/serial")->Args({3, 9})->Args({5, 7});
BENCHMARK(bm_count<kernels::count_kernel>)->Name("count_kernel/omp")->Args({3, 9})->Args({5, 7});
BENCHMARK(bm_matmul<kernels::serial::matmul>)->Name("matmul/serial")->Arg(27)->Arg(81)->Arg(243);
BENCHMARK(bm_matmul<kernels::matmul>)->Name("matmul/omp")->Arg(27)->Arg(81)->Arg(243);

BENCHMARK_MAIN();
