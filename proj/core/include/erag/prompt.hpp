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

#ifndef ERAG_PROMPT_HPP_
#define ERAG_PROMPT_HPP_

#include <span>
#include <string>
#include <string_view>

#include "erag/types.hpp"

namespace erag {

// Prompt layout shared by single-document and full-list generation.
//
// `body` may reference {query} and {documents}. Each document is rendered
// through `document_format` ({index} is 1-based, plus {doc_id}, {title},
// {text}) and the blocks are joined with `document_separator`. The
// instruction header travels separately as the system message.
struct PromptTemplate {
  std::string template_id;
  std::string instruction_header;
  std::string body;
  std::string document_format = "{text}";
  std::string document_separator = "\n\n";

  std::string Render(std::string_view query,
                     std::span<const Document> documents) const;
};

// Built-in QA template used for both per-document and end-to-end runs.
PromptTemplate DefaultGenerationTemplate();

// Built-in binary relevance judge; the expected answers are "relevant" and
// "not relevant".
PromptTemplate DefaultJudgeTemplate();

// Replaces "{name}" occurrences for the given names in a single pass, so
// substituted values are never re-expanded.
std::string SubstitutePlaceholders(
    std::string_view pattern,
    std::span<const std::pair<std::string_view, std::string_view>> values);

}  // namespace erag

#endif  // ERAG_PROMPT_HPP_
