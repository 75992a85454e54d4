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

#include "erag/e2e.hpp"

#include "erag/error.hpp"

namespace erag {

E2EPlan PlanE2E(const DownstreamExample& example, const RankedList& list,
                const DocumentStore& docs, const GenerationBackend& backend,
                const PromptTemplate& prompt, std::size_t k) {
  if (k == 0 || k > list.entries.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "query " + example.query_id + ": k=" + std::to_string(k) +
                    " outside [1, " + std::to_string(list.entries.size()) +
                    "]");
  }
  E2EPlan plan;
  plan.k_requested = k;
  plan.request.query_id = example.query_id;
  plan.request.query = example.query_text;
  plan.request.documents.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Document* doc = docs.Find(list.entries[i].doc_id);
    if (doc == nullptr) {
      throw Error(ErrorCode::kNotFound, "query " + example.query_id +
                                            ": document '" +
                                            list.entries[i].doc_id +
                                            "' not in corpus");
    }
    plan.request.documents.push_back(*doc);
  }

  const auto limit = backend.context_limit();
  if (!limit) return plan;
  auto fits = [&](std::size_t n) {
    GenerationRequest probe{plan.request.query_id, plan.request.query,
                            {plan.request.documents.begin(),
                             plan.request.documents.begin() +
                                 static_cast<std::ptrdiff_t>(n)}};
    return backend.EstimatePromptTokens(BuildBackendRequest(prompt, probe)) <=
           *limit;
  };
  if (fits(k)) return plan;
  // Prompt length is monotone in the number of documents.
  std::size_t lo = 0;
  std::size_t hi = k;  // fits(lo) unknown for lo=0, fits(hi) false
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) {
    throw Error(ErrorCode::kContextOverflow,
                "query " + example.query_id +
                    ": a single document exceeds the context limit");
  }
  plan.request.documents.resize(lo);
  plan.truncated = true;
  return plan;
}

E2EResult ScoreE2E(const DownstreamExample& example, const E2EPlan& plan,
                   const GenerationResult& generation,
                   const DownstreamMetric& metric) {
  E2EResult result;
  result.query_id = example.query_id;
  result.generated = generation.text;
  result.downstream_score = metric.Score(generation.text, example.gold_outputs);
  result.k_used = plan.request.documents.size();
  result.truncated = plan.truncated;
  result.cost = generation.cost;
  return result;
}

E2EResult EvaluateE2E(const DownstreamExample& example, const RankedList& list,
                      const DocumentStore& docs, Generator& generator,
                      const PromptTemplate& prompt,
                      const DownstreamMetric& metric, std::size_t k) {
  const E2EPlan plan =
      PlanE2E(example, list, docs, generator.backend(), prompt, k);
  return ScoreE2E(example, plan, generator.Generate(prompt, plan.request),
                  metric);
}

}  // namespace erag
