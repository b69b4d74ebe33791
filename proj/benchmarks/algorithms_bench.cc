// Copyright 2026 The Authors.
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

#include <memory>

#include "submod/graph_gen.h"
#include "submod/greedy.h"
#include "submod/interlace.h"
#include "submod/local_search.h"
#include "submod/matroid.h"
#include "submod/oracle.h"
#include "submod/random.h"

namespace {

std::shared_ptr<const submod::MaxCutInstance> Graph(std::size_t n) {
  return std::make_shared<submod::MaxCutInstance>(submod::GenerateGraph(
      submod::GraphModel::kErdosRenyi,
      {.n = n, .p = 10.0 / static_cast<double>(n - 1)}, 7));
}

void BM_StandardGreedy(benchmark::State& state) {
  const auto g = Graph(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    submod::CountedOracle oracle(g, k);
    benchmark::DoNotOptimize(submod::StandardGreedy(oracle, k));
    state.counters["queries"] = static_cast<double>(oracle.value_queries());
  }
}
BENCHMARK(BM_StandardGreedy)->Args({500, 20})->Args({1000, 40});

void BM_RandomGreedy(benchmark::State& state) {
  const auto g = Graph(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  submod::Rng rng(1);
  for (auto _ : state) {
    submod::CountedOracle oracle(g, k);
    benchmark::DoNotOptimize(
        submod::RandomGreedy(oracle, submod::SizeConstraint{k}, rng));
  }
}
BENCHMARK(BM_RandomGreedy)->Args({500, 20})->Args({1000, 40});

void BM_FastLocalSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto g = Graph(n);
  for (auto _ : state) {
    state.PauseTiming();
    submod::CountedOracle oracle(g, k);
    submod::ExtendedMatroid m(std::make_shared<submod::UniformMatroid>(n, k));
    const submod::ElementSet z0 = submod::StandardGreedy(oracle, k);
    state.ResumeTiming();
    benchmark::DoNotOptimize(submod::FastLocalSearch(
        oracle, m, submod::FullSet(n), z0, 0.1));
  }
}
BENCHMARK(BM_FastLocalSearch)->Args({300, 10})->Args({600, 20});

void BM_ThreshGuidedInterlace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto g = Graph(n);
  const std::size_t ell = 3;
  const std::size_t budget = submod::SplitBudget(k, ell).front();
  for (auto _ : state) {
    submod::CountedOracle oracle(g, k);
    benchmark::DoNotOptimize(
        submod::ThreshGuidedInterlace(oracle, k, {}, {}, ell, 0.2, budget));
    state.counters["queries"] = static_cast<double>(oracle.value_queries());
  }
}
BENCHMARK(BM_ThreshGuidedInterlace)->Args({2000, 64})->Args({4000, 64});

}  // namespace
