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

#ifndef ERAG_ANNOTATORS_HPP_
#define ERAG_ANNOTATORS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erag/backend.hpp"
#include "erag/downstream_metrics.hpp"
#include "erag/generation.hpp"
#include "erag/ingestion.hpp"
#include "erag/prompt.hpp"
#include "erag/ranking_metrics.hpp"
#include "erag/types.hpp"

namespace erag {

// Labels for one ranked list under one scheme. A label is empty when the
// backend failed for that document; such lists are excluded downstream.
struct AnnotationResult {
  std::string query_id;
  AnnotationScheme scheme = AnnotationScheme::kErag;
  LabelKind label_kind = LabelKind::kBinary;
  std::vector<std::string> doc_ids;
  std::vector<std::optional<double>> labels;
  std::string backend_id;   // empty for backend-free schemes
  std::string template_id;  // empty for backend-free schemes
  std::size_t parse_failures = 0;
  CostRecord cost;  // summed over the per-document generations
  std::vector<std::string> warnings;

  bool complete() const;
  // Throws kInvalidArgument when a label is missing.
  RelevanceVector ToRelevanceVector() const;
};

// Which inputs each scheme needs; Validate() enforces the pairing.
struct AnnotationRun {
  AnnotationScheme scheme = AnnotationScheme::kErag;
  GenerationBackend* backend = nullptr;
  std::optional<DownstreamMetric> downstream_metric;
  std::optional<PromptTemplate> judge_template;

  void Validate() const;
};

// One single-document request per list entry, in list order.
std::vector<GenerationRequest> SingleDocumentRequests(
    const DownstreamExample& example, const RankedList& list,
    const DocumentStore& docs);

AnnotationResult AssembleErag(const DownstreamExample& example,
                              const RankedList& list,
                              std::span<const GenerationOutcome> outcomes,
                              const DownstreamMetric& metric,
                              const std::string& backend_id,
                              const std::string& template_id);

AnnotationResult AssembleJudge(const DownstreamExample& example,
                               const RankedList& list,
                               std::span<const GenerationOutcome> outcomes,
                               const std::string& backend_id,
                               const std::string& template_id);

// Label of document d = metric(generate(query, [d]), gold outputs).
AnnotationResult AnnotateErag(const DownstreamExample& example,
                              const RankedList& list, const DocumentStore& docs,
                              Generator& generator,
                              const PromptTemplate& prompt,
                              const DownstreamMetric& metric);

// 1 iff a normalized gold occurs as a contiguous token run of the normalized
// document. Only defined for extractive QA.
AnnotationResult AnnotateContainment(const DownstreamExample& example,
                                     const RankedList& list,
                                     const DocumentStore& docs,
                                     const NormalizationPolicy& policy = {});

// 1 iff the passage's source article is a provenance article.
AnnotationResult AnnotateProvenance(const DownstreamExample& example,
                                    const RankedList& list,
                                    const DocumentStore& docs);

AnnotationResult AnnotateLlmJudge(const DownstreamExample& example,
                                  const RankedList& list,
                                  const DocumentStore& docs,
                                  Generator& generator,
                                  const PromptTemplate& judge_template);

enum class JudgeVerdict { kRelevant, kNotRelevant, kUnparseable };

// Prefix match on the normalized judge output.
JudgeVerdict ParseJudgeOutput(std::string_view output);

bool ContainsTokenRun(std::span<const std::string> haystack,
                      std::span<const std::string> needle);

}  // namespace erag

#endif  // ERAG_ANNOTATORS_HPP_
