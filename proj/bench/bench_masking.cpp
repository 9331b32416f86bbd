// bench/bench_masking.cpp

// Copyright 2026  The psyfe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP masking kernel on spectrogram-sized inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "psyfe/masking.hpp"

namespace {

using namespace psyfe;

ComplexMatrix RandomSpec(std::size_t bins, std::size_t frames) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(bins, frames);
  for (auto &v : m.values()) v = Complex(n(gen), n(gen));
  return m;
}

void BM_Process(benchmark::State &state, Exec exec) {
  const auto bins = static_cast<std::size_t>(state.range(0));
  const auto frames = static_cast<std::size_t>(state.range(1));
  const ComplexMatrix spec = RandomSpec(bins, frames);
  std::vector<std::uint8_t> speech(frames);
  for (std::size_t t = 0; t < frames; ++t) speech[t] = (t / 40) % 2;
  const EngineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(Process(spec, speech, cfg, exec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * bins * frames));
}

void Sizes(benchmark::internal::Benchmark *b) {
  b->Args({129, 100})->Args({129, 1000})->Args({257, 3000})->Unit(benchmark::kMillisecond);
}

BENCHMARK_CAPTURE(BM_Process, serial, Exec::kSerial)->Apply(Sizes);
BENCHMARK_CAPTURE(BM_Process, parallel, Exec::kParallel)->Apply(Sizes);

}  // namespace

BENCHMARK_MAIN();
