/*
 * Copyright 2026 The qcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "qcat/hankel.hpp"
#include "qcat/kernels.hpp"
#include "qcat/sequences.hpp"
#include "qcat/verify.hpp"

using namespace qcat;

namespace {

kernels::Matrix hankel_matrix(HankelFamily family, int shift, int n) {
  const auto seq =
      family_sequence(family, static_cast<std::size_t>(2 * n + shift + 1), Poly::var(Var::a), Poly::var(Var::b));
  kernels::Matrix m(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)].push_back(seq[static_cast<std::size_t>(i + j + shift)]);
  }
  return m;
}

void BM_MultiplySerial(benchmark::State& state) {
  const Poly x = sequences::cstar(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(x, x));
  state.counters["terms"] = static_cast<double>(x.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const Poly x = sequences::cstar(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(x, x));
  state.counters["threads"] = kernels::max_threads();
}

void BM_BareissSerial(benchmark::State& state) {
  const auto m = hankel_matrix(HankelFamily::narayana, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bareiss_determinant_serial(m));
}

void BM_BareissParallel(benchmark::State& state) {
  const auto m = hankel_matrix(HankelFamily::narayana, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bareiss_determinant(m));
  state.counters["threads"] = kernels::max_threads();
}

void BM_RunAllSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_all_serial(static_cast<int>(state.range(0))));
}

void BM_RunAllParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_all(static_cast<int>(state.range(0))));
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunAllSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunAllParallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
