// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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

#include "erag/correlation.hpp"
#include "erag/downstream_metrics.hpp"
#include "erag/generation.hpp"
#include "erag/mock_backend.hpp"
#include "erag/ranking_metrics.hpp"

namespace {

std::vector<double> RandomLabels(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng() % 2);
  return v;
}

void BM_EvaluateList(benchmark::State& state) {
  const erag::RelevanceVector v{"q", RandomLabels(state.range(0), 1),
                                erag::AnnotationScheme::kErag,
                                erag::LabelKind::kBinary};
  const auto metrics =
      erag::ParseMetricList("precision,recall,map,mrr,ndcg,hit_ratio");
  for (auto _ : state) {
    benchmark::DoNotOptimize(erag::EvaluateList(v, metrics));
  }
  state.SetItemsProcessed(state.iterations() * 6);
}
BENCHMARK(BM_EvaluateList)->Arg(10)->Arg(50)->Arg(1000);

void BM_KendallTauB(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(2);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(rng() % 100);
    y[i] = static_cast<double>(rng() % 2);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(erag::KendallTauB(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KendallTauB)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_SpearmanRho(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(3);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(rng() % 100);
    y[i] = static_cast<double>(rng() % 2);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(erag::SpearmanRho(x, y));
  }
}
BENCHMARK(BM_SpearmanRho)->Arg(1000)->Arg(65536);

void BM_UnigramF1(benchmark::State& state) {
  const std::string generated =
      "The Eiffel Tower, located in Paris, was completed in 1889 for the "
      "World's Fair.";
  const std::vector<std::string> golds = {"Eiffel Tower", "the tower in paris"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(erag::UnigramF1(generated, golds));
  }
}
BENCHMARK(BM_UnigramF1);

void BM_GenerateBatch(benchmark::State& state) {
  erag::MockBackend backend("bench", [](const erag::BackendRequest& r) {
    return "answer " + r.doc_ids.front();
  });
  std::vector<erag::GenerationRequest> requests;
  for (int i = 0; i < 200; ++i) {
    requests.push_back({"q", "question",
                        {{"d" + std::to_string(i), "", "passage text", std::nullopt}}});
  }
  const auto prompt = erag::DefaultGenerationTemplate();
  for (auto _ : state) {
    erag::Generator gen(backend, nullptr,
                        {.max_parallel = static_cast<std::size_t>(state.range(0))});
    benchmark::DoNotOptimize(gen.GenerateBatch(prompt, requests));
  }
  state.SetItemsProcessed(state.iterations() * requests.size());
}
BENCHMARK(BM_GenerateBatch)->Arg(1)->Arg(8)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
