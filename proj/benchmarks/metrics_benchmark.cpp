// Copyright 2026 The lexidyn Authors
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

#include <random>
#include <string>
#include <vector>

#include "lexidyn/metrics.hpp"
#include "lexidyn/store.hpp"

namespace {

const lexidyn::FrequencyStore& store() {
  static const lexidyn::FrequencyStore s = [] {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> len(1, 12), letter('a', 'z');
    std::uniform_int_distribution<lexidyn::Count> count(0, 100000);
    lexidyn::StoreBuilder b({1800, 2008}, "bench");
    for (int w = 0; w < 20000; ++w) {
      std::string token;
      for (int i = len(rng); i > 0; --i) token.push_back(static_cast<char>(letter(rng)));
      const auto id = b.intern(token);
      for (int y = 1800; y <= 2008; y += 2) b.add(id, y, count(rng));
    }
    return std::move(b).seal();
  }();
  return s;
}

std::vector<int> years() {
  const auto y = store().years();
  return {y.begin(), y.end()};
}

void BM_LengthSeries(benchmark::State& state) {
  const auto ys = years();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexidyn::length_series(store(), ys, 5, lexidyn::WordFilter::all(),
                                                    static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_LengthSeries)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IntervalContributions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexidyn::interval_contributions(
        store(), 1900, 1950, lexidyn::WordFilter::all(), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_IntervalContributions)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Vocabulary(benchmark::State& state) {
  const auto ys = years();
  for (auto _ : state) benchmark::DoNotOptimize(lexidyn::vocabulary_series(store(), ys));
}
BENCHMARK(BM_Vocabulary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
