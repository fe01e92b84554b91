// Copyright 2026 The zorbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "zorbit/dynamics.hpp"
#include "zorbit/transform.hpp"

namespace {

void BM_ZTransformSmall(benchmark::State& state) {
  const auto params = zorbit::Params::create(137, 11);
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zorbit::z_transform(n, params));
    n = n * 6364136223846793005ull + 1442695040888963407ull;
  }
}
BENCHMARK(BM_ZTransformSmall);

void BM_ZTransformBig(benchmark::State& state) {
  const auto params = zorbit::Params::create(137, 11);
  const zorbit::BigNat n =
      boost::multiprecision::pow(zorbit::BigNat(137), state.range(0)) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zorbit::z_transform(n, params));
  }
}
BENCHMARK(BM_ZTransformBig)->Arg(16)->Arg(256)->Arg(2048);

void BM_Orbit(benchmark::State& state) {
  const auto params = zorbit::Params::create(137, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zorbit::orbit(123789, params));
  }
}
BENCHMARK(BM_Orbit);

void BM_Census(benchmark::State& state) {
  const auto params = zorbit::Params::create(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zorbit::cycle_census(params, 100'000));
  }
}
BENCHMARK(BM_Census)->Args({137, 11})->Args({507, 13})->Args({1000, 2});

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zorbit::sweep({5, 60}, {3, 8}, 10'000, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
