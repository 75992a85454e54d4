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

#ifndef ERAG_TYPES_HPP_
#define ERAG_TYPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace erag {

enum class TaskType { kExtractiveQa, kClassification, kLongForm };

std::string_view TaskTypeName(TaskType task);
TaskType ParseTaskType(std::string_view name);

// One query with its acceptable outputs; the unit of evaluation.
struct DownstreamExample {
  std::string query_id;
  std::string query_text;
  std::vector<std::string> gold_outputs;  // never empty
  TaskType task = TaskType::kExtractiveQa;
  std::vector<std::string> provenance_doc_ids;  // article-level ids
};

struct Document {
  std::string doc_id;
  std::string title;
  std::string text;  // title + separator + passage
  std::optional<std::string> source_article_id;
};

struct RankedEntry {
  std::string doc_id;
  double retrieval_score = 0.0;
};

// Retrieved documents for one query, best first.
struct RankedList {
  std::string query_id;
  std::vector<RankedEntry> entries;
  std::string retriever_name;

  std::vector<std::string> doc_ids() const;
};

}  // namespace erag

#endif  // ERAG_TYPES_HPP_
