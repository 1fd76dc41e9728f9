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

#include "lexidyn/ingest.hpp"
#include "lexidyn/store.hpp"

namespace {

std::vector<std::string> make_lines(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 12), letter('a', 'z'), year(1800, 2008);
  std::uniform_int_distribution<int> count(1, 100000);
  std::vector<std::string> vocab(5000);
  for (auto& w : vocab) {
    for (int i = len(rng); i > 0; --i) w.push_back(static_cast<char>(letter(rng)));
  }
  std::vector<std::string> lines;
  lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lines.push_back(vocab[i % vocab.size()] + "\t" + std::to_string(year(rng)) + "\t" +
                    std::to_string(count(rng)) + "\t1");
  }
  return lines;
}

void BM_ParseLine(benchmark::State& state) {
  const auto lines = make_lines(10000);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexidyn::try_parse_ngram_line(lines[i++ % lines.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseLine);

void BM_IngestStream(benchmark::State& state) {
  const auto lines = make_lines(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexidyn::ingest_stream(lines, lexidyn::IngestOptions{}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IngestStream)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_IsWord(benchmark::State& state) {
  const lexidyn::TokenFilterConfig filter;
  const std::vector<std::string> tokens{"the", "don't", "3.14", "development", "run_VERB"};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lexidyn::is_word(tokens[i++ % 5], filter));
}
BENCHMARK(BM_IsWord);

void BM_CacheRoundTrip(benchmark::State& state) {
  const auto store = lexidyn::ingest_stream(make_lines(200000), lexidyn::IngestOptions{}).store;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexidyn::decode_cache(lexidyn::encode_cache(store)));
  }
}
BENCHMARK(BM_CacheRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
