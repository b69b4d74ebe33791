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
#include <vector>

#include "submod/graph_gen.h"
#include "submod/objectives.h"
#include "submod/oracle.h"
#include "submod/random.h"

namespace {

using submod::ElementId;
using submod::ElementSet;

ElementSet HalfSet(std::size_t n, std::uint64_t seed) {
  submod::Rng rng(seed);
  ElementSet s;
  for (ElementId i = 0; i < n; ++i) {
    if (submod::UniformUnit(rng) < 0.5) s.insert(i);
  }
  return s;
}

void BM_MaxCutValue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = std::make_shared<submod::MaxCutInstance>(submod::GenerateGraph(
      submod::GraphModel::kErdosRenyi,
      {.n = n, .p = 10.0 / static_cast<double>(n)}, 1));
  submod::CountedOracle oracle(g, 0);
  const ElementSet s = HalfSet(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.Value(s));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MaxCutValue)->Arg(1000)->Arg(10000);

void BM_MaxCutGain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = std::make_shared<submod::MaxCutInstance>(submod::GenerateGraph(
      submod::GraphModel::kErdosRenyi,
      {.n = n, .p = 10.0 / static_cast<double>(n)}, 1));
  submod::CountedOracle oracle(g, 0);
  ElementSet s = HalfSet(n, 3);
  oracle.Evaluate(s);
  ElementId x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Gain(x, s));
    x = static_cast<ElementId>((x + 1) % n);
  }
}
BENCHMARK(BM_MaxCutGain)->Arg(1000)->Arg(10000);

void BM_LogDetValue(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 200;
  const std::size_t p = 20;
  submod::Rng rng(4);
  std::vector<double> features(n * p);
  for (double& v : features) v = submod::UniformUnit(rng) - 0.5;
  auto f = std::make_shared<submod::GramInstance>(
      submod::GramInstance::FromFeatures(n, p, features));
  submod::CountedOracle oracle(f, 0);
  ElementSet s;
  for (ElementId i = 0; i < size; ++i) s.insert(i);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.Value(s));
}
BENCHMARK(BM_LogDetValue)->Arg(10)->Arg(40);

}  // namespace
