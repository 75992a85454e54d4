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

#include "erag/annotators.hpp"

#include <algorithm>

#include "erag/error.hpp"

namespace erag {
namespace {

const Document& Resolve(const DocumentStore& docs, const std::string& doc_id,
                        const std::string& query_id) {
  const Document* doc = docs.Find(doc_id);
  if (doc == nullptr) {
    throw Error(ErrorCode::kNotFound, "query " + query_id + ": document '" +
                                          doc_id + "' not in corpus");
  }
  return *doc;
}

AnnotationResult Skeleton(const DownstreamExample& example,
                          const RankedList& list, AnnotationScheme scheme) {
  AnnotationResult result;
  result.query_id = example.query_id;
  result.scheme = scheme;
  result.doc_ids = list.doc_ids();
  result.labels.reserve(list.entries.size());
  return result;
}

void RequireAligned(const RankedList& list,
                    std::span<const GenerationOutcome> outcomes) {
  if (outcomes.size() != list.entries.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "outcome count does not match list length for query " +
                    list.query_id);
  }
}

}  // namespace

bool AnnotationResult::complete() const {
  return std::all_of(labels.begin(), labels.end(),
                     [](const auto& l) { return l.has_value(); });
}

RelevanceVector AnnotationResult::ToRelevanceVector() const {
  if (!complete()) {
    throw Error(ErrorCode::kInvalidArgument,
                "annotation for query " + query_id + " has missing labels");
  }
  RelevanceVector v;
  v.query_id = query_id;
  v.scheme = scheme;
  v.label_kind = label_kind;
  v.labels.reserve(labels.size());
  for (const auto& l : labels) v.labels.push_back(*l);
  ValidateRelevanceVector(v);
  return v;
}

void AnnotationRun::Validate() const {
  switch (scheme) {
    case AnnotationScheme::kErag:
      if (backend == nullptr || !downstream_metric) {
        throw Error(ErrorCode::kInvalidArgument,
                    "erag annotation needs a backend and a downstream metric");
      }
      break;
    case AnnotationScheme::kLlmJudge:
      if (backend == nullptr || !judge_template) {
        throw Error(ErrorCode::kInvalidArgument,
                    "llm_judge annotation needs a backend and a judge template");
      }
      break;
    case AnnotationScheme::kContainment:
    case AnnotationScheme::kProvenance:
      if (backend != nullptr || downstream_metric || judge_template) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(SchemeName(scheme)) +
                        " annotation takes no backend, metric or template");
      }
      break;
  }
}

std::vector<GenerationRequest> SingleDocumentRequests(
    const DownstreamExample& example, const RankedList& list,
    const DocumentStore& docs) {
  std::vector<GenerationRequest> requests;
  requests.reserve(list.entries.size());
  for (const auto& entry : list.entries) {
    requests.push_back({example.query_id, example.query_text,
                        {Resolve(docs, entry.doc_id, example.query_id)}});
  }
  return requests;
}

AnnotationResult AssembleErag(const DownstreamExample& example,
                              const RankedList& list,
                              std::span<const GenerationOutcome> outcomes,
                              const DownstreamMetric& metric,
                              const std::string& backend_id,
                              const std::string& template_id) {
  RequireAligned(list, outcomes);
  AnnotationResult result = Skeleton(example, list, AnnotationScheme::kErag);
  result.label_kind = metric.is_binary() ? LabelKind::kBinary : LabelKind::kGraded;
  result.backend_id = backend_id;
  result.template_id = template_id;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].ok()) {
      result.labels.push_back(std::nullopt);
      result.warnings.push_back("query " + example.query_id + ", document " +
                                result.doc_ids[i] +
                                ": generation failed: " +
                                outcomes[i].error_message);
      continue;
    }
    result.cost += outcomes[i].result->cost;
    result.labels.push_back(
        metric.Score(outcomes[i].result->text, example.gold_outputs));
  }
  return result;
}

AnnotationResult AnnotateErag(const DownstreamExample& example,
                              const RankedList& list, const DocumentStore& docs,
                              Generator& generator,
                              const PromptTemplate& prompt,
                              const DownstreamMetric& metric) {
  const auto requests = SingleDocumentRequests(example, list, docs);
  const auto outcomes = generator.GenerateBatch(prompt, requests);
  return AssembleErag(example, list, outcomes, metric,
                      generator.backend().backend_id(), prompt.template_id);
}

bool ContainsTokenRun(std::span<const std::string> haystack,
                      std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

AnnotationResult AnnotateContainment(const DownstreamExample& example,
                                     const RankedList& list,
                                     const DocumentStore& docs,
                                     const NormalizationPolicy& policy) {
  if (example.task != TaskType::kExtractiveQa) {
    throw Error(ErrorCode::kUnsupportedTask,
                "containment labels need extractive QA; query " +
                    example.query_id + " is " +
                    std::string(TaskTypeName(example.task)));
  }
  AnnotationResult result =
      Skeleton(example, list, AnnotationScheme::kContainment);
  std::vector<std::vector<std::string>> golds;
  for (const auto& gold : example.gold_outputs) {
    golds.push_back(NormalizedTokens(gold, policy));
  }
  for (const auto& entry : list.entries) {
    const auto tokens =
        NormalizedTokens(Resolve(docs, entry.doc_id, example.query_id).text,
                         policy);
    const bool hit = std::any_of(golds.begin(), golds.end(), [&](const auto& g) {
      return ContainsTokenRun(tokens, g);
    });
    result.labels.push_back(hit ? 1.0 : 0.0);
  }
  return result;
}

AnnotationResult AnnotateProvenance(const DownstreamExample& example,
                                    const RankedList& list,
                                    const DocumentStore& docs) {
  AnnotationResult result =
      Skeleton(example, list, AnnotationScheme::kProvenance);
  const auto& gold = example.provenance_doc_ids;
  for (const auto& entry : list.entries) {
    const Document* doc = docs.Find(entry.doc_id);
    if (doc == nullptr || !doc->source_article_id) {
      result.warnings.push_back("query " + example.query_id + ": document " +
                                entry.doc_id +
                                " has no known source article; labelled 0");
      result.labels.push_back(0.0);
      continue;
    }
    const bool positive =
        std::find(gold.begin(), gold.end(), *doc->source_article_id) !=
        gold.end();
    result.labels.push_back(positive ? 1.0 : 0.0);
  }
  return result;
}

JudgeVerdict ParseJudgeOutput(std::string_view output) {
  const auto tokens = NormalizedTokens(output, NormalizationPolicy{});
  if (tokens.empty()) return JudgeVerdict::kUnparseable;
  if (tokens[0] == "relevant") return JudgeVerdict::kRelevant;
  if (tokens[0] == "irrelevant") return JudgeVerdict::kNotRelevant;
  if (tokens[0] == "not" && tokens.size() > 1 && tokens[1] == "relevant") {
    return JudgeVerdict::kNotRelevant;
  }
  return JudgeVerdict::kUnparseable;
}

AnnotationResult AssembleJudge(const DownstreamExample& example,
                               const RankedList& list,
                               std::span<const GenerationOutcome> outcomes,
                               const std::string& backend_id,
                               const std::string& template_id) {
  RequireAligned(list, outcomes);
  AnnotationResult result = Skeleton(example, list, AnnotationScheme::kLlmJudge);
  result.backend_id = backend_id;
  result.template_id = template_id;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].ok()) {
      result.labels.push_back(std::nullopt);
      result.warnings.push_back("query " + example.query_id + ", document " +
                                result.doc_ids[i] + ": judge call failed: " +
                                outcomes[i].error_message);
      continue;
    }
    result.cost += outcomes[i].result->cost;
    switch (ParseJudgeOutput(outcomes[i].result->text)) {
      case JudgeVerdict::kRelevant:
        result.labels.push_back(1.0);
        break;
      case JudgeVerdict::kNotRelevant:
        result.labels.push_back(0.0);
        break;
      case JudgeVerdict::kUnparseable:
        ++result.parse_failures;
        result.labels.push_back(0.0);
        break;
    }
  }
  return result;
}

AnnotationResult AnnotateLlmJudge(const DownstreamExample& example,
                                  const RankedList& list,
                                  const DocumentStore& docs,
                                  Generator& generator,
                                  const PromptTemplate& judge_template) {
  const auto requests = SingleDocumentRequests(example, list, docs);
  const auto outcomes = generator.GenerateBatch(judge_template, requests);
  return AssembleJudge(example, list, outcomes,
                       generator.backend().backend_id(),
                       judge_template.template_id);
}

}  // namespace erag
