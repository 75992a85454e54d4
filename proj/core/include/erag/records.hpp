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

#ifndef ERAG_RECORDS_HPP_
#define ERAG_RECORDS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erag/annotators.hpp"
#include "erag/e2e.hpp"
#include "erag/ranking_metrics.hpp"

namespace erag {

// JSONL line formats for the on-disk intermediates. Each serializer emits a
// single line without the trailing newline; field order is fixed.

std::string AnnotationToJson(const AnnotationResult& annotation);
AnnotationResult AnnotationFromJson(std::string_view line);

std::string E2EToJson(const E2EResult& result, std::string_view backend_id,
                      std::string_view template_id);
E2EResult E2EFromJson(std::string_view line);

// Per-query retrieval scores for one scheme. Skipped cells keep the reason.
struct RetrievalScoreRow {
  std::string query_id;
  AnnotationScheme scheme = AnnotationScheme::kErag;
  LabelKind label_kind = LabelKind::kBinary;
  std::vector<MetricCell> cells;
};

std::string RetrievalScoreToJson(const RetrievalScoreRow& row);
RetrievalScoreRow RetrievalScoreFromJson(std::string_view line);

// Reads every non-blank line through `parse`, rethrowing failures as
// ParseError with the line number.
template <typename T>
std::vector<T> ReadJsonl(const std::filesystem::path& path,
                         T (*parse)(std::string_view));

extern template std::vector<AnnotationResult> ReadJsonl(
    const std::filesystem::path&, AnnotationResult (*)(std::string_view));
extern template std::vector<E2EResult> ReadJsonl(
    const std::filesystem::path&, E2EResult (*)(std::string_view));
extern template std::vector<RetrievalScoreRow> ReadJsonl(
    const std::filesystem::path&, RetrievalScoreRow (*)(std::string_view));

}  // namespace erag

#endif  // ERAG_RECORDS_HPP_
