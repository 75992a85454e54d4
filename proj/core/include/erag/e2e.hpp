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

#ifndef ERAG_E2E_HPP_
#define ERAG_E2E_HPP_

#include <cstddef>
#include <string>

#include "erag/downstream_metrics.hpp"
#include "erag/generation.hpp"
#include "erag/ingestion.hpp"
#include "erag/types.hpp"

namespace erag {

// Downstream score of the generator given the whole top-k list in one prompt.
struct E2EResult {
  std::string query_id;
  std::string generated;
  double downstream_score = 0.0;
  std::size_t k_used = 0;
  bool truncated = false;  // k_used < requested k because of context limits
  CostRecord cost;
};

struct E2EPlan {
  GenerationRequest request;
  std::size_t k_requested = 0;
  bool truncated = false;
};

// Selects the top-k documents in rank order and drops trailing documents
// until the prompt fits the backend's context limit. Throws
// kContextOverflow when not even one document fits.
E2EPlan PlanE2E(const DownstreamExample& example, const RankedList& list,
                const DocumentStore& docs, const GenerationBackend& backend,
                const PromptTemplate& prompt, std::size_t k);

E2EResult ScoreE2E(const DownstreamExample& example, const E2EPlan& plan,
                   const GenerationResult& generation,
                   const DownstreamMetric& metric);

E2EResult EvaluateE2E(const DownstreamExample& example, const RankedList& list,
                      const DocumentStore& docs, Generator& generator,
                      const PromptTemplate& prompt,
                      const DownstreamMetric& metric, std::size_t k);

}  // namespace erag

#endif  // ERAG_E2E_HPP_
